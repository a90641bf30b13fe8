#pragma once

// Intersection polynomials of signed graphs. IP(SG) is the partial-dual
// Euler genus polynomial of any bouquet whose signed intersection graph is
// SG; bouquets with equal signed intersection graphs have equal polynomials,
// so any witness will do.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pdgenus/config.hpp"
#include "pdgenus/core.hpp"
#include "pdgenus/error.hpp"
#include "pdgenus/genuspoly.hpp"
#include "pdgenus/intersection.hpp"
#include "pdgenus/polynomial.hpp"

namespace pdgenus {

struct RealizationResult {
  bool realizable = false;
  std::optional<Bouquet> witness;
};

namespace detail {

// Chords are inserted one vertex at a time in label order into a linear
// word whose position 0 holds the first vertex. Interlacement among placed
// chords never changes afterwards, so each insertion is checked against the
// adjacency of the vertices placed so far. Candidates are tried in
// lexicographic gap order. `emit` returns false to stop the search.
class RealizationSearch {
 public:
  RealizationSearch(const SignedGraph& g, std::function<bool(const Bouquet&)> emit)
      : g_(g), emit_(std::move(emit)), order_(g.vertex_count()) {
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(),
              [&](std::size_t x, std::size_t y) { return g_.label(x) < g_.label(y); });
  }

  void run() {
    if (g_.vertex_count() == 0) {
      emit_(Bouquet{});
      return;
    }
    word_ = {order_[0], order_[0]};
    extend(1);
  }

 private:
  bool extend(std::size_t placed) {
    if (placed == order_.size()) return emit_(materialize());
    const std::size_t v = order_[placed];
    const std::size_t len = word_.size();
    // Gaps 1..len; gap len is cyclically the same as gap 0.
    for (std::size_t g1 = 1; g1 <= len; ++g1) {
      for (std::size_t g2 = g1; g2 <= len; ++g2) {
        word_.insert(word_.begin() + static_cast<std::ptrdiff_t>(g2), v);
        word_.insert(word_.begin() + static_cast<std::ptrdiff_t>(g1), v);
        if (consistent(placed, g1, g2 + 1) && !extend(placed + 1)) return false;
        word_.erase(word_.begin() + static_cast<std::ptrdiff_t>(g2 + 1));
        word_.erase(word_.begin() + static_cast<std::ptrdiff_t>(g1));
      }
    }
    return true;
  }

  // The new chord occupies positions i < j.
  bool consistent(std::size_t placed, std::size_t i, std::size_t j) const {
    const std::size_t v = order_[placed];
    for (std::size_t k = 0; k < placed; ++k) {
      const std::size_t u = order_[k];
      std::size_t inside = 0;
      for (std::size_t p = i + 1; p < j; ++p) inside += word_[p] == u ? 1 : 0;
      if ((inside == 1) != g_.adjacent(u, v)) return false;
    }
    return true;
  }

  Bouquet materialize() const {
    std::vector<HalfEdge> w;
    std::vector<char> opened(g_.vertex_count(), 0);
    for (std::size_t v : word_) {
      const bool second = opened[v] != 0;
      opened[v] = 1;
      w.push_back({g_.label(v), second && g_.negative(v)});
    }
    return Bouquet(std::move(w));
  }

  const SignedGraph& g_;
  std::function<bool(const Bouquet&)> emit_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> word_;
};

inline void check_realize_cap(const SignedGraph& g, const Limits& limits) {
  if (g.vertex_count() > limits.max_realize_vertices) {
    throw CapExceeded("realization search is limited to " + std::to_string(limits.max_realize_vertices) +
                      " vertices, graph has " + std::to_string(g.vertex_count()));
  }
}

}  // namespace detail

// First bouquet (in search order) whose signed intersection graph is `g`.
inline RealizationResult realize(const SignedGraph& g, const Limits& limits = default_limits()) {
  detail::check_realize_cap(g, limits);
  RealizationResult r;
  detail::RealizationSearch search(g, [&](const Bouquet& b) {
    r.realizable = true;
    r.witness = b;
    return false;
  });
  search.run();
  return r;
}

// Every realizing bouquet up to cyclic shift, reversal and sign placement,
// in canonical form, sorted by rotation text.
inline std::vector<Bouquet> all_realizations(const SignedGraph& g, const Limits& limits = default_limits()) {
  detail::check_realize_cap(g, limits);
  std::set<std::string> seen;
  std::vector<Bouquet> out;
  detail::RealizationSearch search(g, [&](const Bouquet& b) {
    Bouquet c = canonical_form(b, {false, true});
    if (seen.insert(c.to_string()).second) out.push_back(std::move(c));
    return true;
  });
  search.run();
  std::sort(out.begin(), out.end(), [](const Bouquet& x, const Bouquet& y) { return x.to_string() < y.to_string(); });
  return out;
}

// (SG - v1, SG - v1 - v2) for a positive degree-one vertex v1 whose
// neighbour is v2. IP(SG) = IP(SG - v1) + 2z^2 IP(SG - v1 - v2).
inline std::pair<SignedGraph, SignedGraph> pendant_recursion_step(const SignedGraph& g, const std::string& v1,
                                                                  const std::string& v2) {
  const std::size_t a = g.index(v1);
  const std::size_t b = g.index(v2);
  if (g.negative(a)) throw PreconditionError("pendant vertex '" + v1 + "' is negative");
  if (g.degree(a) != 1) throw PreconditionError("vertex '" + v1 + "' does not have degree 1");
  if (!g.adjacent(a, b)) throw PreconditionError("'" + v1 + "' and '" + v2 + "' are not adjacent");
  const std::uint64_t all = g.all_mask();
  const std::uint64_t bit_a = std::uint64_t{1} << a;
  const std::uint64_t bit_b = std::uint64_t{1} << b;
  return {g.induced(all & ~bit_a), g.induced(all & ~bit_a & ~bit_b)};
}

// IP through a realizing bouquet, with no reduction.
inline GenusPolynomial intersection_polynomial_direct(const SignedGraph& g, const Limits& limits = default_limits()) {
  RealizationResult r = realize(g, limits);
  if (!r.realizable) throw NotRealizable("signed graph is not the signed intersection graph of any bouquet");
  return partial_dual_euler_polynomial(*r.witness, limits);
}

// Components are multiplied, positive pendant vertices are peeled off with
// the recursion, and whatever remains is realized.
inline GenusPolynomial intersection_polynomial(const SignedGraph& g, const Limits& limits = default_limits()) {
  if (g.empty()) return GenusPolynomial::constant(1);
  const auto comps = components(g);
  if (comps.size() > 1) {
    GenusPolynomial p = GenusPolynomial::constant(1);
    for (const auto& comp : comps) p = p * intersection_polynomial(g.induced(vertex_mask(comp)), limits);
    return p;
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.negative(v) || g.degree(v) != 1) continue;
    const auto u = static_cast<std::size_t>(std::countr_zero(g.neighbours(v)));
    auto [minus_one, minus_two] = pendant_recursion_step(g, g.label(v), g.label(u));
    return intersection_polynomial(minus_one, limits) + intersection_polynomial(minus_two, limits).scaled(2, 2);
  }
  return intersection_polynomial_direct(g, limits);
}

}  // namespace pdgenus
