#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace xpineq {

/// Real-valued function on the discrete hypercube {-1,1}^n, stored pointwise.
///
/// Points are indexed by bitmask: bit j of the index is set iff the j-th sign
/// equals -1 (coordinates are 0-based). Frequencies (subsets) share the same
/// encoding, which is what lets the transform run as an in-place butterfly.
class CubeFunction {
 public:
  static constexpr int kMaxDimension = 24;

  CubeFunction(int n, std::vector<double> values);

  static CubeFunction constant(int n, double c);
  /// Walsh character W_A for the subset bitmask A.
  static CubeFunction walsh_character(int n, std::uint32_t subset);
  /// i.i.d. uniform values in [-1, 1).
  static CubeFunction random_uniform(int n, std::uint64_t seed);
  /// i.i.d. standard normal values.
  static CubeFunction random_gaussian(int n, std::uint64_t seed);
  /// Degree-one chaos eps -> sum_j a_j eps_j.
  static CubeFunction degree_one(std::span<const double> coefficients);

  int n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t idx) const { return values_[idx]; }
  double& operator[](std::size_t idx) { return values_[idx]; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  /// Sign of coordinate j at point index idx: -1 if the bit is set, else +1.
  static double sign(std::uint32_t idx, int j) { return (idx >> j) & 1u ? -1.0 : 1.0; }

 private:
  int n_;
  std::vector<double> values_;
};

/// Fourier-Walsh coefficients of a CubeFunction, indexed by subset bitmask.
/// Convention: coeff(A) = 2^-n sum_eps h(eps) W_A(eps), h = sum_A coeff(A) W_A.
class WalshSpectrum {
 public:
  WalshSpectrum(int n, std::vector<double> coeffs);

  int n() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  double operator[](std::size_t idx) const { return coeffs_[idx]; }
  double& operator[](std::size_t idx) { return coeffs_[idx]; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  std::vector<double>& coeffs() { return coeffs_; }

 private:
  int n_;
  std::vector<double> coeffs_;
};

/// In-place unnormalized Walsh-Hadamard butterfly:
/// out[A] = sum_b in[b] * (-1)^popcount(A & b).  O(n 2^n).
void fwht_inplace(std::span<double> data);

WalshSpectrum walsh_transform(const CubeFunction& h);
CubeFunction inverse_walsh_transform(const WalshSpectrum& spectrum);

/// Direct O(4^n) summation route for cross-checking the butterfly; n <= 10.
WalshSpectrum walsh_transform_direct(const CubeFunction& h);

/// L_p norm with respect to the normalized counting measure, p >= 1.
double p_norm(const CubeFunction& h, double p);

/// Mean of h, i.e. its empty Walsh coefficient.
double mean_value(const CubeFunction& h);

/// True if the mean is zero up to tol * max(1, ||h||_inf).
bool is_mean_zero(const CubeFunction& h, double tol = 1e-12);

/// Undivided difference in coordinate j (0-based):
/// (d_j h)(eps) = h(eps) - h(eps with sign j flipped).
CubeFunction partial_derivative(const CubeFunction& h, int j);

/// Conditional expectation E_S: average over the coordinates in the bitmask S.
/// Kills every Walsh coefficient with A meeting S; output depends only on
/// coordinates outside S.
CubeFunction average_over(const CubeFunction& h, std::uint32_t subset);

/// j-th hypercube Riesz transform: coeff(A) -> coeff(A)/sqrt(|A|) when j in A,
/// 0 otherwise. Satisfies R_j = (1/2) d_j Delta^{-1/2} on mean-zero inputs.
CubeFunction riesz_transform(const CubeFunction& h, int j);

/// Pointwise (sum_j (R_j h)^2)^{1/2}; requires mean-zero input.
CubeFunction riesz_square_function(const CubeFunction& h);

/// |x|^p with fast paths for small integer p.
double abs_pow(double x, double p);

/// x^{1/p} for x >= 0, exact-scaling paths for p in {1,2,4}.
double root_p(double x, double p);

}  // namespace xpineq
