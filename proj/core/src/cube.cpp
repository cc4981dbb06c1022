#include "xpineq/cube.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "xpineq/rng.hpp"

namespace xpineq {

namespace {

void check_dimension(int n) {
  if (n < 1 || n > CubeFunction::kMaxDimension)
    throw std::invalid_argument("cube dimension out of range [1, 24]");
}

void check_all_finite(const std::vector<double>& v, const char* what) {
  for (double x : v)
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

}  // namespace

CubeFunction::CubeFunction(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  check_dimension(n_);
  if (values_.size() != (std::size_t{1} << n_))
    throw std::invalid_argument("CubeFunction: value count must be 2^n");
  check_all_finite(values_, "CubeFunction");
}

CubeFunction CubeFunction::constant(int n, double c) {
  check_dimension(n);
  return CubeFunction(n, std::vector<double>(std::size_t{1} << n, c));
}

CubeFunction CubeFunction::walsh_character(int n, std::uint32_t subset) {
  check_dimension(n);
  if (subset >> n) throw std::invalid_argument("walsh_character: subset outside {0..n-1}");
  std::vector<double> v(std::size_t{1} << n);
  for (std::uint32_t b = 0; b < v.size(); ++b)
    v[b] = std::popcount(b & subset) % 2 == 0 ? 1.0 : -1.0;
  return CubeFunction(n, std::move(v));
}

CubeFunction CubeFunction::random_uniform(int n, std::uint64_t seed) {
  check_dimension(n);
  RngStream rng(seed);
  std::vector<double> v(std::size_t{1} << n);
  for (double& x : v) x = rng.next_signed();
  return CubeFunction(n, std::move(v));
}

CubeFunction CubeFunction::random_gaussian(int n, std::uint64_t seed) {
  check_dimension(n);
  RngStream rng(seed);
  std::vector<double> v(std::size_t{1} << n);
  for (double& x : v) x = rng.next_gaussian();
  return CubeFunction(n, std::move(v));
}

CubeFunction CubeFunction::degree_one(std::span<const double> coefficients) {
  const int n = static_cast<int>(coefficients.size());
  check_dimension(n);
  std::vector<double> v(std::size_t{1} << n, 0.0);
  for (std::uint32_t b = 0; b < v.size(); ++b) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += sign(b, j) * coefficients[j];
    v[b] = s;
  }
  return CubeFunction(n, std::move(v));
}

WalshSpectrum::WalshSpectrum(int n, std::vector<double> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  check_dimension(n_);
  if (coeffs_.size() != (std::size_t{1} << n_))
    throw std::invalid_argument("WalshSpectrum: coefficient count must be 2^n");
  check_all_finite(coeffs_, "WalshSpectrum");
}

void fwht_inplace(std::span<double> data) {
  const std::size_t size = data.size();
  for (std::size_t len = 1; len < size; len <<= 1) {
    for (std::size_t i = 0; i < size; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const double a = data[j];
        const double b = data[j + len];
        data[j] = a + b;
        data[j + len] = a - b;
      }
    }
  }
}

WalshSpectrum walsh_transform(const CubeFunction& h) {
  std::vector<double> c = h.values();
  fwht_inplace(c);
  const double scale = std::ldexp(1.0, -h.n());
  for (double& x : c) x *= scale;
  return WalshSpectrum(h.n(), std::move(c));
}

CubeFunction inverse_walsh_transform(const WalshSpectrum& spectrum) {
  std::vector<double> v = spectrum.coeffs();
  fwht_inplace(v);
  return CubeFunction(spectrum.n(), std::move(v));
}

WalshSpectrum walsh_transform_direct(const CubeFunction& h) {
  if (h.n() > 10) throw std::invalid_argument("walsh_transform_direct: n <= 10 required");
  const std::uint32_t size = std::uint32_t{1} << h.n();
  std::vector<double> c(size, 0.0);
  const double scale = std::ldexp(1.0, -h.n());
  for (std::uint32_t freq = 0; freq < size; ++freq) {
    double acc = 0.0;
    for (std::uint32_t b = 0; b < size; ++b)
      acc += std::popcount(freq & b) % 2 == 0 ? h[b] : -h[b];
    c[freq] = acc * scale;
  }
  return WalshSpectrum(h.n(), std::move(c));
}

double abs_pow(double x, double p) {
  const double a = std::abs(x);
  if (p == 2.0) return a * a;
  if (p == 1.0) return a;
  if (p == 4.0) {
    const double s = a * a;
    return s * s;
  }
  if (p == 3.0) return a * a * a;
  if (p == 6.0) {
    const double c = a * a * a;
    return c * c;
  }
  return std::pow(a, p);
}

double root_p(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return std::sqrt(x);
  if (p == 4.0) return std::sqrt(std::sqrt(x));
  return std::pow(x, 1.0 / p);
}

double p_norm(const CubeFunction& h, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("p_norm: p >= 1 required");
  double acc = 0.0;
  for (std::size_t b = 0; b < h.size(); ++b) acc += abs_pow(h[b], p);
  return root_p(std::ldexp(acc, -h.n()), p);
}

double mean_value(const CubeFunction& h) {
  double acc = 0.0;
  for (std::size_t b = 0; b < h.size(); ++b) acc += h[b];
  return std::ldexp(acc, -h.n());
}

bool is_mean_zero(const CubeFunction& h, double tol) {
  double scale = 1.0;
  for (std::size_t b = 0; b < h.size(); ++b) scale = std::max(scale, std::abs(h[b]));
  return std::abs(mean_value(h)) <= tol * scale;
}

CubeFunction partial_derivative(const CubeFunction& h, int j) {
  if (j < 0 || j >= h.n()) throw std::invalid_argument("partial_derivative: coordinate out of range");
  const std::uint32_t bit = std::uint32_t{1} << j;
  std::vector<double> v(h.size());
  for (std::uint32_t b = 0; b < h.size(); ++b) v[b] = h[b] - h[b ^ bit];
  return CubeFunction(h.n(), std::move(v));
}

CubeFunction average_over(const CubeFunction& h, std::uint32_t subset) {
  if (subset >> h.n()) throw std::invalid_argument("average_over: subset outside {0..n-1}");
  std::vector<double> v = h.values();
  for (int j = 0; j < h.n(); ++j) {
    if (!((subset >> j) & 1u)) continue;
    const std::uint32_t bit = std::uint32_t{1} << j;
    for (std::uint32_t b = 0; b < v.size(); ++b) {
      if (b & bit) continue;
      const double avg = 0.5 * (v[b] + v[b | bit]);
      v[b] = avg;
      v[b | bit] = avg;
    }
  }
  return CubeFunction(h.n(), std::move(v));
}

CubeFunction riesz_transform(const CubeFunction& h, int j) {
  if (j < 0 || j >= h.n()) throw std::invalid_argument("riesz_transform: coordinate out of range");
  WalshSpectrum spec = walsh_transform(h);
  const std::uint32_t bit = std::uint32_t{1} << j;
  for (std::uint32_t freq = 0; freq < spec.size(); ++freq) {
    if (freq & bit)
      spec[freq] /= std::sqrt(static_cast<double>(std::popcount(freq)));
    else
      spec[freq] = 0.0;
  }
  return inverse_walsh_transform(spec);
}

CubeFunction riesz_square_function(const CubeFunction& h) {
  if (!is_mean_zero(h)) throw std::invalid_argument("riesz_square_function: mean-zero input required");
  const WalshSpectrum spec = walsh_transform(h);
  std::vector<double> acc(h.size(), 0.0);
  std::vector<double> buf(h.size());
  for (int j = 0; j < h.n(); ++j) {
    const std::uint32_t bit = std::uint32_t{1} << j;
    for (std::uint32_t freq = 0; freq < spec.size(); ++freq)
      buf[freq] = (freq & bit) ? spec[freq] / std::sqrt(static_cast<double>(std::popcount(freq))) : 0.0;
    fwht_inplace(buf);
    for (std::size_t b = 0; b < acc.size(); ++b) acc[b] += buf[b] * buf[b];
  }
  for (double& x : acc) x = std::sqrt(x);
  return CubeFunction(h.n(), std::move(acc));
}

}  // namespace xpineq
