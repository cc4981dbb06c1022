#include "xpineq/multiplier.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace xpineq {

namespace {

struct SymbolVisitor {
  std::uint32_t freq;
  int n;

  double operator()(const RademacherProjection& m) const {
    if (m.level < 0 || m.level > n) throw std::invalid_argument("rademacher projection: level outside {0..n}");
    return std::popcount(freq) == m.level ? 1.0 : 0.0;
  }
  double operator()(const FractionalLaplacian& m) const {
    if (m.subset >> n) throw std::invalid_argument("fractional laplacian: subset outside {0..n-1}");
    const int meet = std::popcount(freq & m.subset);
    if (meet == 0) return 0.0;
    return std::pow(static_cast<double>(meet), m.exponent);
  }
  double operator()(const Heat& m) const {
    if (!(m.time >= 0.0)) throw std::invalid_argument("heat: time >= 0 required");
    return std::exp(-m.time * std::popcount(freq));
  }
  double operator()(const Riesz& m) const {
    if (m.coordinate < 0 || m.coordinate >= n) throw std::invalid_argument("riesz: coordinate out of range");
    if (!((freq >> m.coordinate) & 1u)) return 0.0;
    return 1.0 / std::sqrt(static_cast<double>(std::popcount(freq)));
  }
  double operator()(const Average& m) const {
    if (m.subset >> n) throw std::invalid_argument("average: subset outside {0..n-1}");
    return (freq & m.subset) == 0 ? 1.0 : 0.0;
  }
  double operator()(const IdentityMinusRad0&) const { return freq == 0 ? 0.0 : 1.0; }
};

}  // namespace

double multiplier_symbol(const Multiplier& m, std::uint32_t freq, int n) {
  return std::visit(SymbolVisitor{freq, n}, m);
}

WalshSpectrum apply_multiplier(const WalshSpectrum& spectrum, const Multiplier& m) {
  std::vector<double> c(spectrum.size());
  for (std::uint32_t freq = 0; freq < spectrum.size(); ++freq) {
    const double s = multiplier_symbol(m, freq, spectrum.n());
    c[freq] = s == 0.0 ? 0.0 : s * spectrum[freq];
  }
  return WalshSpectrum(spectrum.n(), std::move(c));
}

CubeFunction apply_multiplier(const CubeFunction& h, const Multiplier& m) {
  return inverse_walsh_transform(apply_multiplier(walsh_transform(h), m));
}

}  // namespace xpineq
