#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "pdgenus/toolkit.hpp"

using namespace pdgenus;

namespace {

// Smallest text among every shift, reversal and sign placement of b.
std::string orbit_min(const Bouquet& b) {
  std::string best;
  const std::size_t n = b.edge_count();
  std::vector<std::size_t> twisted;
  for (std::size_t e = 0; e < n; ++e)
    if (b.twisted(e)) twisted.push_back(e);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << twisted.size()); ++s) {
    std::vector<HalfEdge> w = b.word();
    for (std::size_t i = 0; i < twisted.size(); ++i) {
      const EdgeEnds& ends = b.edge(twisted[i]);
      const bool on_first = ((s >> i) & 1) != 0;
      w[ends.first].negative = on_first;
      w[ends.second].negative = !on_first;
    }
    const Bouquet placed(std::move(w));
    for (const Bouquet& dir : {placed, oracle::reverse(placed)}) {
      for (std::size_t k = 0; k < dir.size(); ++k) {
        const std::string t = oracle::rotate(dir, k).to_string();
        if (best.empty() || t < best) best = t;
      }
    }
  }
  return best;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("enumeration counts", "[toolkit]") {
  CHECK(all_bouquets(0, false).size() == 1);
  CHECK(all_bouquets(0, true).size() == 1);
  CHECK(all_bouquets(1, false).size() == 2);
  CHECK(all_bouquets(1, true).size() == 2);
  std::size_t double_factorial = 1;
  for (std::size_t n = 1; n <= 5; ++n) {
    double_factorial *= 2 * n - 1;
    CHECK(all_bouquets(n, false).size() == double_factorial * (std::size_t{1} << n));
  }
  CHECK(all_bouquets(2, false).size() == 12);
  const auto one = all_bouquets(1, true);
  CHECK(one[0] == parse_rotation("(1,-1)"));
  CHECK(one[1] == parse_rotation("(1,1)"));
}

TEST_CASE("classes match an independent orbit count", "[toolkit]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::string> mins;
    for (const Bouquet& b : all_bouquets(n, false)) mins.insert(orbit_min(b));
    const auto classes = all_bouquets(n, true);
    CHECK(classes.size() == mins.size());
    std::set<std::string> seen;
    for (const Bouquet& b : classes) CHECK(seen.insert(orbit_min(b)).second);
  }
}

TEST_CASE("random bouquets", "[toolkit]") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = i % 9;
    const Bouquet b = random_bouquet(rng, n, "x");
    CHECK(b.edge_count() == n);
    for (const auto& l : b.labels()) CHECK(l.rfind("x", 0) == 0);
  }
  std::mt19937_64 a(9), b(9);
  CHECK(random_bouquet(a, 6) == random_bouquet(b, 6));
  Limits lim = default_limits();
  lim.max_enumerate_edges = 2;
  CHECK_THROWS_AS(all_bouquets(3, true, lim), CapExceeded);
}

TEST_CASE("theorem names", "[toolkit]") {
  for (const char* name : {"main1", "mutantEquiv", "constantTerm", "oneTerm", "btForm", "joinLaw"}) {
    CHECK(std::string(to_string(parse_theorem(name))) == name);
  }
  CHECK_THROWS_AS(parse_theorem("main3"), ParseError);
}

TEST_CASE("verification passes on small sizes", "[toolkit]") {
  for (Theorem t : {Theorem::main1, Theorem::mutant_equiv, Theorem::constant_term, Theorem::one_term}) {
    const VerificationReport r = verify(t, 3);
    INFO(to_string(t));
    CHECK(r.passed());
    CHECK(r.instances == 1 + 2 + 8 + all_bouquets(3, true).size());
  }
  const VerificationReport bt = verify(Theorem::bt_form, 8);
  CHECK(bt.passed());
  CHECK(bt.instances == 8);
  const VerificationReport join = verify(Theorem::join_law, 10);
  CHECK(join.passed());
  CHECK(join.instances == 200);
  CHECK(verify(Theorem::one_term, 4).passed());
}

TEST_CASE("verification caps", "[toolkit]") {
  CHECK_THROWS_AS(verify(Theorem::main1, 5), CapExceeded);
  CHECK_THROWS_AS(verify(Theorem::bt_form, 9), CapExceeded);
  VerifyCaps caps;
  caps.bt_form = 10;
  CHECK(verify(Theorem::bt_form, 10, caps).passed());
}

TEST_CASE("report JSON", "[toolkit]") {
  VerificationReport r;
  r.theorem = Theorem::one_term;
  r.n = 2;
  r.instances = 3;
  r.counterexamples.push_back({"(1, 1)", "2z^0", "1+z"});
  const nlohmann::json j = r.to_json();
  CHECK(j["theorem"] == "oneTerm");
  CHECK(j["pass"] == false);
  CHECK(j["counterexamples"][0]["word"] == "(1, 1)");
  CHECK(j["counterexamples"][0]["expected"] == "2z^0");
  CHECK(j["counterexamples"][0]["actual"] == "1+z");
}

TEST_CASE("b6 closed form", "[toolkit]") {
  GenusPolynomial expected;
  expected.add_term(4, 32);
  expected.add_term(6, 32);
  CHECK(bt_closed_form(6) == expected);
  CHECK(partial_dual_euler_polynomial(complete_bouquet(6)) == expected);
}

TEST_CASE("census records", "[toolkit]") {
  const auto zero = census_records(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].polynomial == GenusPolynomial::constant(1));
  CHECK(zero[0].word == "()");

  const auto one = census_records(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].word == "(1, -1)");
  CHECK(one[0].polynomial.to_string() == "2z");
  CHECK_FALSE(one[0].orientable);
  CHECK(one[1].polynomial.to_string() == "2");

  const auto three = census_records(3);
  bool found = false;
  for (const auto& r : three) {
    if (r.word != "(1, 2, 3, 1, 2, 3)") continue;
    found = true;
    CHECK(r.polynomial.to_string() == "8z^2");
    CHECK(r.one_term);
    CHECK(r.prime);
    CHECK_FALSE(r.bipartite);
  }
  CHECK(found);

  // equal orbit ids exactly when the graphs agree
  for (std::size_t i = 0; i < three.size(); ++i)
    for (std::size_t j = 0; j < three.size(); ++j)
      REQUIRE((three[i].orbit_id == three[j].orbit_id) == (three[i].si_graph == three[j].si_graph));

  const nlohmann::json j = three.front().to_json();
  for (const char* key : {"word", "n", "polynomial", "si_graph", "sequences", "flags", "orbit_id"}) {
    CHECK(j.contains(key));
  }
}

TEST_CASE("census files are reproducible", "[toolkit]") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string a = (dir / "pdgenus_census_a.jsonl").string();
  const std::string b = (dir / "pdgenus_census_b.jsonl").string();
  CHECK(census(3, a) == census(3, b));
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());

  const std::string c = (dir / "pdgenus_census.csv").string();
  const std::size_t rows = census(2, c, CatalogFormat::csv);
  const std::string text = slurp(c);
  CHECK(text.rfind("word,n,polynomial,orientable,prime,bipartite,one_term,orbit_id\n", 0) == 0);
  CHECK(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) == rows + 1);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  std::filesystem::remove(c);
  CHECK_THROWS(census(1, (dir / "no_such_dir" / "x.jsonl").string()));
}
