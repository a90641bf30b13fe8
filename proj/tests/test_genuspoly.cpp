#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "pdgenus/genuspoly.hpp"
#include "pdgenus/intersection.hpp"
#include "pdgenus/toolkit.hpp"

using namespace pdgenus;

namespace {

GenusPolynomial euler(const char* w) { return partial_dual_euler_polynomial(parse_rotation(w)); }
GenusPolynomial orient(const char* w) { return partial_dual_orientable_polynomial(parse_rotation(w)); }

GenusPolynomial poly(std::initializer_list<std::pair<std::size_t, int>> terms, PolyKind kind = PolyKind::euler) {
  GenusPolynomial p(kind);
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("polynomial text and JSON forms", "[genuspoly]") {
  CHECK(GenusPolynomial().to_string() == "0");
  CHECK(GenusPolynomial::constant(1).to_string() == "1");
  CHECK(poly({{0, 2}, {1, 18}, {2, 36}, {3, 8}}).to_string() == "2+18z+36z^2+8z^3");
  CHECK(poly({{1, 1}, {2, 1}}).to_string() == "z+z^2");
  CHECK(poly({{2, 0}}).is_zero());

  const GenusPolynomial p = poly({{0, 2}, {2, 14}});
  CHECK(p.to_json().dump() == R"({"coeffs":{"0":"2","2":"14"},"kind":"euler"})");
  CHECK(GenusPolynomial::from_json(p.to_json()) == p);
  CHECK_THROWS_AS(GenusPolynomial::from_json(nlohmann::json{{"kind", "x"}, {"coeffs", {}}}), ParseError);
  CHECK_THROWS_AS(GenusPolynomial::from_json(nlohmann::json{{"kind", "euler"}}), ParseError);

  GenusPolynomial big = GenusPolynomial::monomial(BigInt(1) << 100, 3);
  CHECK(GenusPolynomial::from_json(big.to_json()) == big);
  CHECK(big.to_string() == "1267650600228229401496703205376z^3");
}

TEST_CASE("partial-dual Euler polynomials from the examples", "[genuspoly]") {
  CHECK(euler("(1,2,-1,2)") == poly({{1, 2}, {2, 2}}));
  CHECK(euler("(1,2,-1,-2)") == poly({{1, 2}, {2, 2}}));
  CHECK(euler("(e,-e)") == poly({{1, 2}}));
  CHECK(euler("()") == GenusPolynomial::constant(1));
  CHECK(euler("(e,f,e,f)") == poly({{0, 2}, {2, 2}}));
}

TEST_CASE("partial-dual orientable polynomials from the examples", "[genuspoly]") {
  CHECK(orient("(a,b,a,c,b,d,e,f,d,e,c,f)") == poly({{1, 12}, {2, 44}, {3, 8}}, PolyKind::orientable));
  CHECK(orient("(a,b,a,c,d,e,c,f,e,d,b,f)") == poly({{0, 2}, {1, 18}, {2, 36}, {3, 8}}, PolyKind::orientable));
  CHECK(orient("(e,f,e,f)") == poly({{0, 2}, {1, 2}}, PolyKind::orientable));
  CHECK_THROWS_AS(orient("(e,-e)"), PreconditionError);
}

TEST_CASE("closed form for (1..t,1..t)", "[genuspoly]") {
  CHECK(bt_closed_form(3) == poly({{2, 8}}));
  CHECK(bt_closed_form(2) == poly({{0, 2}, {2, 2}}));
  CHECK(bt_closed_form(1) == poly({{0, 2}}));
  CHECK_THROWS_AS(bt_closed_form(0), PreconditionError);
  for (std::size_t t = 1; t <= 8; ++t) {
    INFO("t = " << t);
    CHECK(partial_dual_euler_polynomial(complete_bouquet(t)) == bt_closed_form(t));
  }
}

TEST_CASE("multiplication", "[genuspoly]") {
  CHECK(poly_multiply(poly({{1, 2}}), poly({{1, 2}})) == poly({{2, 4}}));
  const GenusPolynomial p = poly({{0, 2}, {2, 14}});
  CHECK(p * GenusPolynomial::constant(1) == p);
  CHECK(bt_closed_form(3) * poly({{1, 2}}) * poly({{1, 2}}) * poly({{0, 2}}) == poly({{4, 64}}));
  CHECK_THROWS_AS(p * p.halved(), PreconditionError);
}

TEST_CASE("join by concatenation", "[genuspoly]") {
  const Bouquet j = join_concat(parse_rotation("(e,e)"), parse_rotation("(f,-f)"));
  CHECK(j.to_string() == "(e, e, f, -f)");
  CHECK(partial_dual_euler_polynomial(j) == poly({{1, 4}}));

  const Bouquet x = parse_rotation("(a,b,-a,b)");
  CHECK(partial_dual_euler_polynomial(join_concat(x, Bouquet{})) == partial_dual_euler_polynomial(x));

  const Bouquet bb = join_concat(parse_rotation("(1,2,3,1,2,3)"), parse_rotation("(4,5,6,4,5,6)"));
  CHECK(partial_dual_euler_polynomial(bb) == poly({{4, 64}}));

  // B3 v B1bar v B1bar v B1: e=6, k=4, k2=2, b=4
  Bouquet chain = parse_rotation("(1,2,3,1,2,3)");
  chain = join_concat(chain, parse_rotation("(4,-4)"));
  chain = join_concat(chain, parse_rotation("(5,-5)"));
  chain = join_concat(chain, parse_rotation("(6,6)"));
  CHECK(partial_dual_euler_polynomial(chain) == poly({{4, 64}}));

  CHECK_THROWS_AS(join_concat(x, parse_rotation("(a,a)")), PreconditionError);
}

TEST_CASE("polynomial agrees with the face-walk oracle", "[genuspoly]") {
  std::mt19937 rng(31);
  for (int i = 0; i < 150; ++i) {
    const Bouquet b = oracle::random_word(rng, rng() % 8);
    const auto expected = oracle::euler_polynomial_by_walk(b);
    GenusPolynomial want(PolyKind::euler);
    for (auto [e, c] : expected) want.add_term(e, BigInt(c));
    REQUIRE(partial_dual_euler_polynomial(b) == want);
  }
}

TEST_CASE("polynomial invariants", "[genuspoly]") {
  std::mt19937 rng(37);
  for (int i = 0; i < 300; ++i) {
    const Bouquet b = oracle::random_word(rng, rng() % 10);
    const GenusPolynomial p = partial_dual_euler_polynomial(b);
    CHECK(p.coefficient_sum() == (BigInt(1) << b.edge_count()));
    if (is_orientable(b)) {
      for (const auto& [e, c] : p.terms()) CHECK(e % 2 == 0);
    }
    CHECK((p.coefficient(0) != 0) == predict_constant_term(signed_intersection_graph(b)));
    CHECK(partial_dual_euler_polynomial(oracle::rotate(b, b.empty() ? 0 : rng() % b.size())) == p);
    CHECK(partial_dual_euler_polynomial(oracle::reverse(b)) == p);
    CHECK(partial_dual_euler_polynomial(oracle::flip_signs(b)) == p);
    CHECK(partial_dual_euler_polynomial(relabel_first_occurrence(b)) == p);
  }
}

TEST_CASE("join law on all small factor pairs", "[genuspoly]") {
  auto prefixed = [](const Bouquet& b, const std::string& prefix) {
    std::vector<HalfEdge> w = b.word();
    for (auto& h : w) h.label = prefix + h.label;
    return Bouquet(std::move(w));
  };
  std::size_t pairs = 0;
  for (std::size_t n1 = 0; n1 <= 4; ++n1) {
    for (std::size_t n2 = 0; n1 + n2 <= 4; ++n2) {
      for (const Bouquet& x : all_bouquets(n1, true)) {
        const Bouquet a = prefixed(x, "a");
        const GenusPolynomial pa = partial_dual_euler_polynomial(a);
        for (const Bouquet& y : all_bouquets(n2, true)) {
          const Bouquet b = prefixed(y, "b");
          ++pairs;
          REQUIRE(partial_dual_euler_polynomial(join_concat(a, b)) == pa * partial_dual_euler_polynomial(b));
        }
      }
    }
  }
  CHECK(pairs > 1000);
}

TEST_CASE("edge cap", "[genuspoly]") {
  Limits small;
  small.max_edges = 3;
  CHECK_THROWS_AS(partial_dual_euler_polynomial(complete_bouquet(4), small), CapExceeded);
  CHECK_NOTHROW(partial_dual_euler_polynomial(complete_bouquet(3), small));
}
