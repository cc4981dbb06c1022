#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace xpineq {

// Exact binomial coefficient; safe for the n <= 64 range this library uses.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / i;
  return c;
}

// First k-subset of {0..n-1} in colexicographic order (== ascending numeric
// order on characteristic bitmasks).
inline std::uint32_t first_subset(int k) {
  return k == 0 ? 0u : (std::uint32_t{1} << k) - 1u;
}

// Successor of a k-subset bitmask in colex order (Gosper's hack).
// Returns 0 when v was the last subset below the 2^n bound checked by callers.
inline std::uint32_t next_subset(std::uint32_t v) {
  const std::uint32_t u = v & (~v + 1u);
  const std::uint32_t w = v + u;
  return w | (((v ^ w) >> 2) / u);
}

// rank-th k-subset of {0..n-1} in colex order, rank in [0, binomial(n,k)).
inline std::uint32_t unrank_subset_colex(std::uint64_t rank, int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("unrank_subset_colex: bad k");
  std::uint32_t mask = 0;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    // largest element e with binomial(e, i) <= rank
    for (int e = i - 1; e < n; ++e) {
      if (binomial(e, i) <= rank) c = e; else break;
    }
    mask |= std::uint32_t{1} << c;
    rank -= binomial(c, i);
    n = c;
  }
  return mask;
}

// Positions of set bits, ascending.
inline std::vector<int> subset_positions(std::uint32_t mask) {
  std::vector<int> pos;
  pos.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    const int b = std::countr_zero(mask);
    pos.push_back(b);
    mask &= mask - 1u;
  }
  return pos;
}

}  // namespace xpineq
