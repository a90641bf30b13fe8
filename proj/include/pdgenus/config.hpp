#pragma once

#include <cstddef>

namespace pdgenus {

// Resource caps. All of them are configuration; exceeding one raises
// CapExceeded.
struct Limits {
  // 2^n subset tabulation.
  std::size_t max_edges = 24;
  // Breadth-first mutation orbit states.
  std::size_t max_orbit_states = 1'000'000;
  // Brute-force realization of signed graphs.
  std::size_t max_realize_vertices = 7;
  // Exhaustive enumeration of all bouquets with n edges.
  std::size_t max_enumerate_edges = 7;
  // Brute-force isomorphism search.
  std::size_t max_isomorphism_vertices = 8;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace pdgenus
