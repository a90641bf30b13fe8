#pragma once

// Mutations of bouquets. Writing the rotation as (M P N Q) where every edge
// has both ends in M and N or both ends in P and Q, a mutation replaces it
// by (M^-1 P N^-1 Q) or by (N P M Q). Half-edges keep their signs.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pdgenus/config.hpp"
#include "pdgenus/core.hpp"
#include "pdgenus/error.hpp"

namespace pdgenus {

// Four consecutive cyclic blocks M, P, N, Q of the word, M starting at
// `start`. Any block may be empty.
struct ShareDecomposition {
  std::size_t start = 0;
  std::size_t m = 0, p = 0, n = 0, q = 0;

  std::size_t length() const { return m + p + n + q; }

  // Word positions of each block, in word order from the block start.
  std::vector<std::size_t> block(std::size_t offset, std::size_t len) const {
    std::vector<std::size_t> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back((start + offset + i) % length());
    return out;
  }
  std::vector<std::size_t> m_positions() const { return block(0, m); }
  std::vector<std::size_t> p_positions() const { return block(m, p); }
  std::vector<std::size_t> n_positions() const { return block(m + p, n); }
  std::vector<std::size_t> q_positions() const { return block(m + p + n, q); }

  friend bool operator==(const ShareDecomposition&, const ShareDecomposition&) = default;
  friend auto operator<=>(const ShareDecomposition&, const ShareDecomposition&) = default;
};

enum class MutationMove { reverse, swap };

inline bool is_share(const Bouquet& b, const ShareDecomposition& d) {
  const std::size_t len = b.size();
  if (len == 0 || d.length() != len || d.start >= len) return false;
  std::vector<char> in_mn(len, 0);
  for (std::size_t pos : d.m_positions()) in_mn[pos] = 1;
  for (std::size_t pos : d.n_positions()) in_mn[pos] = 1;
  for (const auto& e : b.edges()) {
    if (in_mn[e.first] != in_mn[e.second]) return false;
  }
  return true;
}

// Every cut of the cyclic word into M, P, N, Q satisfying the share condition.
inline std::vector<ShareDecomposition> share_decompositions(const Bouquet& b) {
  std::vector<ShareDecomposition> out;
  const std::size_t len = b.size();
  std::vector<char> in_mn(len);
  for (std::size_t start = 0; start < len; ++start) {
    for (std::size_t m = 0; m <= len; ++m) {
      for (std::size_t p = 0; m + p <= len; ++p) {
        for (std::size_t n = 0; m + p + n <= len; ++n) {
          std::fill(in_mn.begin(), in_mn.end(), 0);
          for (std::size_t i = 0; i < m; ++i) in_mn[(start + i) % len] = 1;
          for (std::size_t i = 0; i < n; ++i) in_mn[(start + m + p + i) % len] = 1;
          bool ok = true;
          for (const auto& e : b.edges()) {
            if (in_mn[e.first] != in_mn[e.second]) {
              ok = false;
              break;
            }
          }
          if (ok) out.push_back({start, m, p, n, len - m - p - n});
        }
      }
    }
  }
  return out;
}

inline Bouquet mutate(const Bouquet& b, const ShareDecomposition& d, MutationMove move) {
  if (!is_share(b, d)) throw PreconditionError("not a share decomposition of " + b.to_string());
  const auto& w = b.word();
  std::vector<HalfEdge> out;
  out.reserve(b.size());
  auto append = [&](std::vector<std::size_t> pos, bool reversed) {
    if (reversed) std::reverse(pos.begin(), pos.end());
    for (std::size_t i : pos) out.push_back(w[i]);
  };
  if (move == MutationMove::reverse) {
    append(d.m_positions(), true);
    append(d.p_positions(), false);
    append(d.n_positions(), true);
    append(d.q_positions(), false);
  } else {
    append(d.n_positions(), false);
    append(d.p_positions(), false);
    append(d.m_positions(), false);
    append(d.q_positions(), false);
  }
  return Bouquet(std::move(out));
}

class OrbitCapExceeded : public CapExceeded {
 public:
  OrbitCapExceeded(std::size_t cap, std::vector<Bouquet> partial)
      : CapExceeded("mutation orbit exceeds " + std::to_string(cap) + " states"), partial_(std::move(partial)) {}

  const std::vector<Bouquet>& partial_orbit() const { return partial_; }

 private:
  std::vector<Bouquet> partial_;
};

// Breadth-first closure under all mutations, states keyed by canonical form
// without relabeling. Returned sorted by rotation text.
inline std::vector<Bouquet> mutation_orbit(const Bouquet& b, const Limits& limits = default_limits()) {
  const CanonicalOptions key_opt{false, true};
  std::unordered_set<std::string> seen;
  std::vector<Bouquet> states;
  std::deque<std::size_t> frontier;

  auto visit = [&](const Bouquet& x) {
    Bouquet c = canonical_form(x, key_opt);
    if (!seen.insert(c.to_string()).second) return;
    states.push_back(std::move(c));
    frontier.push_back(states.size() - 1);
  };

  visit(b);
  while (!frontier.empty()) {
    const Bouquet current = states[frontier.front()];
    frontier.pop_front();
    for (const ShareDecomposition& d : share_decompositions(current)) {
      for (MutationMove move : {MutationMove::reverse, MutationMove::swap}) {
        visit(mutate(current, d, move));
        if (states.size() > limits.max_orbit_states) {
          throw OrbitCapExceeded(limits.max_orbit_states, std::move(states));
        }
      }
    }
  }
  std::sort(states.begin(), states.end(),
            [](const Bouquet& x, const Bouquet& y) { return x.to_string() < y.to_string(); });
  return states;
}

enum class Mutant { no, yes, indeterminate };

inline const char* to_string(Mutant m) {
  switch (m) {
    case Mutant::yes: return "yes";
    case Mutant::no: return "no";
    default: return "indeterminate";
  }
}

inline Mutant are_mutant(const Bouquet& a, const Bouquet& b, const Limits& limits = default_limits()) {
  auto label_set = [](const Bouquet& x) {
    auto l = x.labels();
    return std::set<std::string>(l.begin(), l.end());
  };
  if (label_set(a) != label_set(b)) throw PreconditionError("mutant test needs identical edge labels");
  const Bouquet target = canonical_form(b, {false, true});
  try {
    for (const Bouquet& s : mutation_orbit(a, limits)) {
      if (s == target) return Mutant::yes;
    }
    return Mutant::no;
  } catch (const OrbitCapExceeded& ex) {
    for (const Bouquet& s : ex.partial_orbit()) {
      if (s == target) return Mutant::yes;
    }
    return Mutant::indeterminate;
  }
}

}  // namespace pdgenus
