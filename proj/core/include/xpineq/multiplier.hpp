#pragma once

#include <cstdint>
#include <variant>

#include "xpineq/cube.hpp"

namespace xpineq {

// Fourier multiplier families acting coefficientwise on a WalshSpectrum.

/// Projection onto frequencies with |A| == level.
struct RademacherProjection {
  int level;
};

/// coeff(A) -> |A & subset|^exponent * coeff(A) when A meets subset, else 0.
/// The empty intersection maps to 0 for every exponent, including negative ones.
struct FractionalLaplacian {
  std::uint32_t subset;
  double exponent;
};

/// Heat semigroup e^{-time * Delta}: coeff(A) -> e^{-time |A|} coeff(A); time >= 0.
struct Heat {
  double time;
};

/// Riesz symbol: coeff(A) -> coeff(A)/sqrt(|A|) when coordinate is in A, else 0.
struct Riesz {
  int coordinate;
};

/// Averaging symbol of E_S: keeps coeff(A) iff A does not meet subset.
struct Average {
  std::uint32_t subset;
};

/// I - Rad_0: zeroes the empty coefficient only.
struct IdentityMinusRad0 {};

using Multiplier = std::variant<RademacherProjection, FractionalLaplacian, Heat, Riesz, Average,
                                IdentityMinusRad0>;

/// Scalar symbol of the multiplier at frequency bitmask A (dimension n).
double multiplier_symbol(const Multiplier& m, std::uint32_t freq, int n);

WalshSpectrum apply_multiplier(const WalshSpectrum& spectrum, const Multiplier& m);

/// Convenience: transform, apply, transform back.
CubeFunction apply_multiplier(const CubeFunction& h, const Multiplier& m);

}  // namespace xpineq
