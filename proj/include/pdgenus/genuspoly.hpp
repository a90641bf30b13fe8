#pragma once

// Partial-dual Euler and orientable genus polynomials of bouquets.
//
// For a bouquet B and A a subset of its edges, the partial dual B^A has
// Euler genus eps(A) + eps(A^c), where eps(S) is the Euler genus of the
// sub-bouquet induced by S. The genus of every induced sub-bouquet is
// tabulated once and each subset is paired with its complement.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pdgenus/config.hpp"
#include "pdgenus/core.hpp"
#include "pdgenus/polynomial.hpp"
#include "pdgenus/surface.hpp"

namespace pdgenus {

// eps of the sub-bouquet induced by every edge subset, indexed by bitmask.
inline std::vector<std::uint8_t> subset_euler_genera(const Bouquet& b, const Limits& limits = default_limits()) {
  const std::size_t n = b.edge_count();
  if (n > limits.max_edges || n > EdgeSubset::kMaxWidth) {
    throw CapExceeded("bouquet has " + std::to_string(n) + " edges, cap is " + std::to_string(limits.max_edges));
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint8_t> genus(count);
  BoundaryCounter counter(b);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    genus[mask] = static_cast<std::uint8_t>(counter.euler_genus(mask));
  }
  return genus;
}

inline GenusPolynomial partial_dual_euler_polynomial(const Bouquet& b, const Limits& limits = default_limits()) {
  const std::vector<std::uint8_t> genus = subset_euler_genera(b, limits);
  const std::uint64_t full = genus.size() - 1;
  std::vector<std::uint64_t> tally(2 * b.edge_count() + 1, 0);
  for (std::uint64_t a = 0; a <= full; ++a) ++tally[genus[a] + genus[full & ~a]];
  GenusPolynomial p(PolyKind::euler);
  for (std::size_t e = 0; e < tally.size(); ++e) p.add_term(e, BigInt(tally[e]));
  return p;
}

inline GenusPolynomial partial_dual_orientable_polynomial(const Bouquet& b,
                                                          const Limits& limits = default_limits()) {
  if (!is_orientable(b)) throw PreconditionError("orientable genus polynomial needs an orientable bouquet");
  return partial_dual_euler_polynomial(b, limits).halved();
}

// The bouquet (1, 2, ..., t, 1, 2, ..., t).
inline Bouquet complete_bouquet(std::size_t t) {
  std::vector<HalfEdge> word;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 1; i <= t; ++i) word.push_back({std::to_string(i), false});
  }
  return Bouquet(std::move(word));
}

// The single twisted loop (label, -label).
inline Bouquet twisted_loop(const std::string& label = "1") {
  return Bouquet({{label, false}, {label, true}});
}

// Closed form of the Euler polynomial of complete_bouquet(t).
inline GenusPolynomial bt_closed_form(std::size_t t) {
  if (t == 0) throw PreconditionError("closed form needs t >= 1");
  const BigInt half = BigInt(1) << (t - 1);
  GenusPolynomial p(PolyKind::euler);
  if (t % 2 == 1) {
    p.add_term(t - 1, half * 2);
  } else {
    p.add_term(t, half);
    p.add_term(t - 2, half);
  }
  return p;
}

// Ribbon join of two bouquets at one point: their words concatenated.
inline Bouquet join_concat(const Bouquet& a, const Bouquet& b) {
  std::set<std::string> labels;
  for (const auto& e : a.edges()) labels.insert(e.label);
  for (const auto& e : b.edges()) {
    if (labels.count(e.label) != 0) throw PreconditionError("join operands share label '" + e.label + "'");
  }
  std::vector<HalfEdge> word = a.word();
  word.insert(word.end(), b.word().begin(), b.word().end());
  return Bouquet(std::move(word));
}

}  // namespace pdgenus
