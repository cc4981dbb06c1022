#pragma once

#include <cstdint>
#include <cmath>
#include <random>

namespace xpineq {

// splitmix64 finalizer; used to derive engine seeds from (master seed, stream id).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(~stream));
}

// Deterministic random stream. Wraps mt19937_64 (its sequence is fixed by the
// standard) and draws doubles by hand: std::uniform_real_distribution et al.
// are implementation-defined, which would break reproducible reports.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : eng_(seed) {}
  RngStream(std::uint64_t seed, std::uint64_t stream) : eng_(mix_seed(seed, stream)) {}

  std::uint64_t next_u64() { return eng_(); }

  // uniform in [0, 1), 53 random bits
  double next_double() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // uniform in [-1, 1)
  double next_signed() { return 2.0 * next_double() - 1.0; }

  // uniform in [lo, hi)
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // uniform integer in [0, bound); rejection sampling, bound > 0
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v = eng_();
    while (v >= limit) v = eng_();
    return v % bound;
  }

  // standard normal via Box-Muller
  double next_gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = next_double();
    while (u == 0.0) u = next_double();
    const double v = next_double();
    const double mag = std::sqrt(-2.0 * std::log(u));
    const double two_pi = 6.283185307179586476925286766559;
    spare_ = mag * std::sin(two_pi * v);
    has_spare_ = true;
    return mag * std::cos(two_pi * v);
  }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace xpineq
