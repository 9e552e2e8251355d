#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "scramblelab/errors.hpp"

namespace scramblelab {

// Vertex subsets as 64-bit masks. Every search in this library runs at desk
// scale; ops that need masks enforce n <= 64 up front.
using mask_t = std::uint64_t;

inline int popcount(mask_t m) { return std::popcount(m); }
inline int lowest_bit(mask_t m) { return std::countr_zero(m); }
inline mask_t bit(int i) { return mask_t{1} << i; }
inline bool has_bit(mask_t m, int i) { return (m >> i) & 1; }
inline mask_t full_mask(int n) { return n == 64 ? ~mask_t{0} : (mask_t{1} << n) - 1; }

inline void require_mask_width(int n, const char* where) {
  require(n <= 64, errc::feasibility_cap_exceeded,
          std::string(where) + ": subset search limited to 64 vertices");
}

inline std::vector<int> mask_to_vertices(mask_t m) {
  std::vector<int> out;
  while (m) {
    int v = lowest_bit(m);
    out.push_back(v);
    m &= m - 1;
  }
  return out;
}

inline mask_t vertices_to_mask(const std::vector<int>& vs) {
  mask_t m = 0;
  for (int v : vs) m |= bit(v);
  return m;
}

// Visits every nonempty subset of `universe` (excluding universe itself when
// proper=true) in decreasing numeric order.
template <typename Fn>
void for_each_subset(mask_t universe, bool proper, Fn&& fn) {
  mask_t s = universe;
  if (proper) s = (s - 1) & universe;
  for (; s; s = (s - 1) & universe) fn(s);
}

}  // namespace scramblelab
