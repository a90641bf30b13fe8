#pragma once

// Boundary components and Euler genus of a bouquet.
//
// Every word position p contributes two boundary points: p- where the
// half-edge is entered in word order and p+ where it is left. The vertex
// boundary joins p+ to (p+1)- and each ribbon joins the sides of its two
// ends: {p-, q+}, {p+, q-} for an untwisted loop and {p-, q-}, {p+, q+} for
// a twisted one. The boundary components are the cycles of the union of
// these two perfect matchings.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "pdgenus/core.hpp"

namespace pdgenus {

struct BoundaryPairing {
  // Point 2p is p-, point 2p+1 is p+.
  static constexpr std::size_t entering(std::size_t p) { return 2 * p; }
  static constexpr std::size_t leaving(std::size_t p) { return 2 * p + 1; }

  std::size_t point_count() const { return arc.size(); }

  std::vector<std::size_t> arc;     // vertex-boundary arcs
  std::vector<std::size_t> ribbon;  // ribbon sides
};

struct SurfaceSummary {
  std::size_t edges = 0;
  std::size_t boundaries = 1;
  std::size_t euler_genus = 0;
  bool orientable = true;
};

namespace detail {

inline void fill_pairing(const std::vector<std::size_t>& partner, const std::vector<char>& twisted,
                         std::vector<std::size_t>& arc, std::vector<std::size_t>& ribbon) {
  const std::size_t len = partner.size();
  arc.resize(2 * len);
  ribbon.resize(2 * len);
  for (std::size_t p = 0; p < len; ++p) {
    const std::size_t next = (p + 1) % len;
    arc[BoundaryPairing::leaving(p)] = BoundaryPairing::entering(next);
    arc[BoundaryPairing::entering(next)] = BoundaryPairing::leaving(p);
    const std::size_t q = partner[p];
    if (twisted[p]) {
      ribbon[BoundaryPairing::entering(p)] = BoundaryPairing::entering(q);
      ribbon[BoundaryPairing::leaving(p)] = BoundaryPairing::leaving(q);
    } else {
      ribbon[BoundaryPairing::entering(p)] = BoundaryPairing::leaving(q);
      ribbon[BoundaryPairing::leaving(p)] = BoundaryPairing::entering(q);
    }
  }
}

inline std::size_t count_cycles(const std::vector<std::size_t>& arc, const std::vector<std::size_t>& ribbon,
                                std::vector<char>& seen) {
  seen.assign(arc.size(), 0);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < arc.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    std::size_t x = start;
    do {
      seen[x] = 1;
      const std::size_t y = arc[x];
      seen[y] = 1;
      x = ribbon[y];
    } while (x != start);
  }
  return cycles;
}

}  // namespace detail

// Counts boundary components of induced sub-bouquets without materializing
// them. Holds scratch buffers, so one instance per thread.
class BoundaryCounter {
 public:
  explicit BoundaryCounter(const Bouquet& b) : bouquet_(&b) {}

  // f of the sub-bouquet on the edges in `mask` (bit i = edge i).
  std::size_t count(std::uint64_t mask) {
    const Bouquet& b = *bouquet_;
    compact_.assign(b.size(), kAbsent);
    std::size_t len = 0;
    for (std::size_t p = 0; p < b.size(); ++p) {
      if ((mask >> b.edge_at(p)) & 1U) compact_[p] = len++;
    }
    if (len == 0) return 1;
    partner_.resize(len);
    twisted_.resize(len);
    for (std::size_t p = 0; p < b.size(); ++p) {
      if (compact_[p] == kAbsent) continue;
      partner_[compact_[p]] = compact_[b.partner(p)];
      twisted_[compact_[p]] = b.twisted(b.edge_at(p)) ? 1 : 0;
    }
    detail::fill_pairing(partner_, twisted_, arc_, ribbon_);
    return detail::count_cycles(arc_, ribbon_, seen_);
  }

  std::size_t euler_genus(std::uint64_t mask) {
    const auto e = static_cast<std::size_t>(std::popcount(mask));
    return e == 0 ? 0 : 1 + e - count(mask);
  }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  const Bouquet* bouquet_;
  std::vector<std::size_t> compact_, partner_, arc_, ribbon_;
  std::vector<char> twisted_, seen_;
};

inline BoundaryPairing boundary_pairing(const Bouquet& b) {
  if (b.empty()) throw PreconditionError("boundary pairing of the empty bouquet is undefined");
  std::vector<std::size_t> partner(b.size());
  std::vector<char> twisted(b.size());
  for (std::size_t p = 0; p < b.size(); ++p) {
    partner[p] = b.partner(p);
    twisted[p] = b.twisted(b.edge_at(p)) ? 1 : 0;
  }
  BoundaryPairing out;
  detail::fill_pairing(partner, twisted, out.arc, out.ribbon);
  return out;
}

inline std::size_t count_boundary_components(const Bouquet& b) {
  if (b.empty()) return 1;
  BoundaryPairing pairing = boundary_pairing(b);
  std::vector<char> seen;
  return detail::count_cycles(pairing.arc, pairing.ribbon, seen);
}

// 1 + e - f, and 0 for the empty bouquet.
inline std::size_t euler_genus(const Bouquet& b) {
  if (b.empty()) return 0;
  return 1 + b.edge_count() - count_boundary_components(b);
}

inline bool is_orientable(const Bouquet& b) {
  for (const auto& e : b.edges()) {
    if (e.twisted) return false;
  }
  return true;
}

inline SurfaceSummary summarize_surface(const Bouquet& b) {
  SurfaceSummary s;
  s.edges = b.edge_count();
  s.boundaries = count_boundary_components(b);
  s.euler_genus = b.empty() ? 0 : 1 + s.edges - s.boundaries;
  s.orientable = is_orientable(b);
  return s;
}

}  // namespace pdgenus
