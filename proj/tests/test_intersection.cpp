#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "pdgenus/genuspoly.hpp"
#include "pdgenus/intersection.hpp"
#include "pdgenus/toolkit.hpp"

using namespace pdgenus;

namespace {

SignedGraph si(const char* w) { return signed_intersection_graph(parse_rotation(w)); }

}  // namespace

TEST_CASE("interlacement", "[intersection]") {
  CHECK(interlaced(parse_rotation("(e,f,e,f)"), "e", "f"));
  CHECK_FALSE(interlaced(parse_rotation("(e,e,f,f)"), "e", "f"));
  const Bouquet fig1 = parse_rotation("(a,c,-a,d,b,d,c,-b)");
  CHECK(interlaced(fig1, "a", "c"));
  CHECK_FALSE(interlaced(fig1, "a", "d"));
  CHECK_THROWS_AS(interlaced(fig1, "a", "z"), PreconditionError);
}

TEST_CASE("a four-edge word has a path as its graph", "[intersection]") {
  const SignedGraph g = si("(a,c,-a,d,b,d,c,-b)");
  SignedGraph path;
  path.add_vertex("a", true);
  path.add_vertex("c", false);
  path.add_vertex("b", true);
  path.add_vertex("d", false);
  path.add_edge("a", "c");
  path.add_edge("c", "b");
  path.add_edge("b", "d");
  CHECK(g == path);
  CHECK_FALSE(is_positive(g));
  CHECK(is_bipartite(g));
  CHECK(is_prime(parse_rotation("(a,c,-a,d,b,d,c,-b)")));
}

TEST_CASE("complete bouquets give positive complete graphs", "[intersection]") {
  for (std::size_t t = 1; t <= 8; ++t) CHECK(signed_intersection_graph(complete_bouquet(t)) == positive_complete(t));
  const SignedGraph g = si("(e,-e)");
  REQUIRE(g.vertex_count() == 1);
  CHECK(g.negative(0));
  CHECK(g.degree(0) == 0);
}

TEST_CASE("SI graph matches the pairwise alternation oracle", "[intersection]") {
  std::mt19937 rng(43);
  for (int i = 0; i < 500; ++i) {
    const Bouquet b = oracle::random_word(rng, rng() % 9);
    const SignedGraph g = signed_intersection_graph(b);
    REQUIRE(g.vertex_count() == b.edge_count());
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
      CHECK(g.negative(u) == b.twisted(u));
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (u == v) continue;
        REQUIRE(g.adjacent(u, v) == oracle::alternate(b, g.label(u), g.label(v)));
        REQUIRE(interlaced(b, g.label(u), g.label(v)) == g.adjacent(u, v));
      }
    }
    CHECK(signed_intersection_graph(oracle::rotate(b, b.empty() ? 0 : rng() % b.size())) == g);
    CHECK(signed_intersection_graph(oracle::reverse(b)) == g);
    CHECK(signed_intersection_graph(oracle::flip_signs(b)) == g);
  }
}

TEST_CASE("interlace sequences", "[intersection]") {
  const InterlaceSequences s1 = interlace_sequences(parse_rotation("(a,b,a,c,b,d,e,f,d,e,c,f)"));
  const InterlaceSequences s2 = interlace_sequences(parse_rotation("(a,b,a,c,d,e,c,f,e,d,b,f)"));
  const std::vector<int> cyclic{1, 2, 1, 2, 2, 2, 2, 3, 2, 2, 2, 3};
  CHECK(s1.cyclic_sequence == cyclic);
  CHECK(s2.cyclic_sequence == cyclic);
  // equal sequences, different graphs
  CHECK_FALSE(si("(a,b,a,c,b,d,e,f,d,e,c,f)") == si("(a,b,a,c,d,e,c,f,e,d,b,f)"));

  CHECK(interlace_sequences(parse_rotation("(e,-e)")).signed_sequence == std::vector<int>{0});
  CHECK(interlace_sequences(parse_rotation("(e,f,e,f)")).signed_sequence == std::vector<int>{1, 1});
  CHECK(interlace_sequences(parse_rotation("(a,c,-a,d,b,d,c,-b)")).signed_sequence ==
        std::vector<int>{-2, -1, 1, 2});
}

TEST_CASE("degree sequence equals the unsigned interlace sequence", "[intersection]") {
  std::mt19937 rng(47);
  for (int i = 0; i < 300; ++i) {
    const Bouquet b = oracle::random_word(rng, rng() % 9);
    const SignedGraph g = signed_intersection_graph(b);
    const InterlaceSequences s = interlace_sequences(b);
    REQUIRE(s.cyclic_sequence.size() == b.size());
    std::vector<int> degrees, unsigned_seq;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) degrees.push_back(static_cast<int>(g.degree(v)));
    for (int x : s.signed_sequence) unsigned_seq.push_back(std::abs(x));
    std::sort(degrees.begin(), degrees.end());
    std::sort(unsigned_seq.begin(), unsigned_seq.end());
    CHECK(degrees == unsigned_seq);
    CHECK(std::is_sorted(s.signed_sequence.begin(), s.signed_sequence.end()));
  }
}

TEST_CASE("structural predicates", "[intersection]") {
  const SignedGraph k2 = si("(e,f,e,f)");
  CHECK(is_positive(k2));
  CHECK(is_bipartite(k2));
  CHECK(is_prime(parse_rotation("(e,f,e,f)")));

  const SignedGraph k3 = signed_intersection_graph(complete_bouquet(3));
  CHECK(is_positive(k3));
  CHECK_FALSE(is_bipartite(k3));
  CHECK(is_prime(complete_bouquet(3)));

  const SignedGraph empty;
  CHECK(is_positive(empty));
  CHECK(is_bipartite(empty));
  CHECK(components(empty).empty());
  CHECK_FALSE(is_prime(Bouquet{}));

  CHECK_FALSE(is_prime(parse_rotation("(a,b,b,a)")));
  CHECK(components(si("(a,b,b,a,c,d,c,d)")).size() == 3);
}

TEST_CASE("prime iff the word has no closed proper block", "[intersection]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Bouquet& b : all_bouquets(n, true)) {
      INFO(b);
      REQUIRE(is_prime(b) == !oracle::splits_into_blocks(b));
    }
  }
}

TEST_CASE("one-term classification", "[intersection]") {
  const OneTermClassification k5 = classify_one_term(positive_complete(5));
  CHECK(k5.one_term);
  CHECK(k5.components == 1);
  CHECK(k5.negative_isolated == 0);
  CHECK(k5.exponent == 4);

  const OneTermClassification iso = classify_one_term(isolated_vertices(4, 1));
  CHECK(iso.one_term);
  CHECK(iso.components == 5);
  CHECK(iso.negative_isolated == 4);
  CHECK(iso.exponent == 4);

  CHECK_FALSE(classify_one_term(positive_complete(2)).one_term);
  CHECK_FALSE(classify_one_term(positive_path(3)).one_term);
  CHECK_FALSE(classify_one_term(si("(e,f,-e,f)")).one_term);
  CHECK(classify_one_term(SignedGraph{}).one_term);
}

TEST_CASE("constant-term prediction", "[intersection]") {
  CHECK(predict_constant_term(si("(e,f,e,f)")));
  CHECK(partial_dual_euler_polynomial(parse_rotation("(e,f,e,f)")).coefficient(0) == 2);
  CHECK_FALSE(predict_constant_term(signed_intersection_graph(complete_bouquet(3))));
  CHECK_FALSE(predict_constant_term(si("(e,-e)")));
}

TEST_CASE("graph JSON and DOT", "[intersection]") {
  const SignedGraph g = si("(a,c,-a,d,b,d,c,-b)");
  const nlohmann::json j = g.to_json();
  CHECK(j["vertices"][0] == nlohmann::json{{"label", "a"}, {"sign", "-"}});
  CHECK(j["edges"].size() == 3);
  CHECK(SignedGraph::from_json(j) == g);
  CHECK(g.to_dot().find("\"a\" [label=\"a-\"];") != std::string::npos);
  CHECK(g.to_dot().find("\"a\" -- \"c\";") != std::string::npos);

  CHECK_THROWS_AS(SignedGraph::from_json(nlohmann::json::parse(R"({"vertices":[{"label":"a","sign":"?"}],"edges":[]})")),
                  ParseError);
  CHECK_THROWS_AS(SignedGraph::from_json(nlohmann::json::parse(R"({"vertices":[{"label":"a","sign":"+"}],"edges":[["a","b"]]})")),
                  ParseError);
  CHECK_THROWS_AS(SignedGraph::from_json(nlohmann::json::parse(R"({"vertices":[{"label":"a","sign":"+"}],"edges":[["a","a"]]})")),
                  ParseError);
  CHECK_THROWS_AS(SignedGraph::from_json(nlohmann::json::parse(R"({"vertices":[{"label":"a","sign":"+"},{"label":"a","sign":"+"}],"edges":[]})")),
                  ParseError);
}

TEST_CASE("labeled equality ignores vertex order but not labels", "[intersection]") {
  SignedGraph a, b, c;
  a.add_vertex("x");
  a.add_vertex("y", true);
  a.add_edge("x", "y");
  b.add_vertex("y", true);
  b.add_vertex("x");
  b.add_edge("y", "x");
  c.add_vertex("x");
  c.add_vertex("z", true);
  c.add_edge("x", "z");
  CHECK(a == b);
  CHECK(a.key() == b.key());
  CHECK_FALSE(a == c);
  CHECK(isomorphic(a, c));
  CHECK_FALSE(isomorphic(positive_path(4), positive_star(3)));
  CHECK(isomorphic(positive_path(3), positive_star(2)));
  CHECK_THROWS_AS(isomorphic(positive_path(9), positive_path(9)), CapExceeded);
}
