#include "xpineq/torus.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "xpineq/rng.hpp"
#include "xpineq/subsets.hpp"

namespace xpineq {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr std::uint64_t kMcBlockSize = 4096;

void check_group(int r, int n) {
  if (r < 1) throw std::invalid_argument("TorusFunction: half-period r >= 1 required");
  if (n < 1) throw std::invalid_argument("TorusFunction: dimension n >= 1 required");
}

std::size_t checked_point_count(int r, int n) {
  check_group(r, n);
  std::size_t count = 1;
  const std::size_t period = static_cast<std::size_t>(2 * r);
  for (int j = 0; j < n; ++j) {
    if (count > TorusFunction::kMaxDenseSize / period)
      throw std::invalid_argument("TorusFunction: (2r)^n exceeds the dense size cap");
    count *= period;
  }
  return count;
}

int wrap(long long value, int period) {
  long long m = value % period;
  if (m < 0) m += period;
  return static_cast<int>(m);
}

// Per-coordinate index offsets for a cyclic shift by `amount`: entry x_j holds
// ((x_j + amount) mod 2r - x_j) * stride_j.
std::vector<std::ptrdiff_t> shift_deltas(int period, std::ptrdiff_t stride, int amount) {
  std::vector<std::ptrdiff_t> d(static_cast<std::size_t>(period));
  for (int x = 0; x < period; ++x) d[static_cast<std::size_t>(x)] = (wrap(x + amount, period) - x) * stride;
  return d;
}

struct DenseGrid {
  int period;
  int n;
  std::vector<std::ptrdiff_t> strides;

  DenseGrid(int r, int n_) : period(2 * r), n(n_), strides(static_cast<std::size_t>(n_)) {
    std::ptrdiff_t s = 1;
    for (int j = 0; j < n; ++j) {
      strides[static_cast<std::size_t>(j)] = s;
      s *= period;
    }
  }

  // Odometer step; returns false after the last point.
  bool advance(std::span<int> coords) const {
    for (int j = 0; j < n; ++j) {
      if (++coords[static_cast<std::size_t>(j)] < period) return true;
      coords[static_cast<std::size_t>(j)] = 0;
    }
    return false;
  }
};

}  // namespace

TorusFunction::TorusFunction(int r, int n) : r_(r), n_(n), point_count_(checked_point_count(r, n)) {}

TorusFunction TorusFunction::dense(int r, int n, std::vector<double> values) {
  TorusFunction f(r, n);
  if (values.size() != f.point_count_)
    throw std::invalid_argument("TorusFunction::dense: value count must be (2r)^n");
  for (double x : values)
    if (!std::isfinite(x)) throw std::invalid_argument("TorusFunction::dense: non-finite entry");
  f.values_ = std::move(values);
  return f;
}

TorusFunction TorusFunction::from_oracle(int r, int n, Oracle oracle) {
  TorusFunction f(r, n);
  if (!oracle) throw std::invalid_argument("TorusFunction::from_oracle: empty oracle");
  f.oracle_ = std::move(oracle);
  return f;
}

TorusFunction TorusFunction::constant(int r, int n, double c) {
  TorusFunction f(r, n);
  f.values_.assign(f.point_count_, c);
  return f;
}

TorusFunction TorusFunction::coordinate_cosine(int r, int n, int j) {
  TorusFunction f(r, n);
  if (j < 0 || j >= n) throw std::invalid_argument("coordinate_cosine: coordinate out of range");
  const DenseGrid grid(r, n);
  f.values_.resize(f.point_count_);
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  std::size_t idx = 0;
  do {
    f.values_[idx++] = std::cos(kTwoPi * x[static_cast<std::size_t>(j)] / grid.period);
  } while (grid.advance(x));
  return f;
}

TorusFunction TorusFunction::cosine_sum(int r, int n, std::span<const double> coefficients) {
  TorusFunction f(r, n);
  if (static_cast<int>(coefficients.size()) != n)
    throw std::invalid_argument("cosine_sum: need one coefficient per coordinate");
  const DenseGrid grid(r, n);
  f.values_.resize(f.point_count_);
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  std::size_t idx = 0;
  do {
    double v = 0.0;
    for (int j = 0; j < n; ++j)
      v += coefficients[static_cast<std::size_t>(j)] * std::cos(kTwoPi * x[static_cast<std::size_t>(j)] / grid.period);
    f.values_[idx++] = v;
  } while (grid.advance(x));
  return f;
}

TorusFunction TorusFunction::coordinate_tent(int r, int n, int j) {
  TorusFunction f(r, n);
  if (j < 0 || j >= n) throw std::invalid_argument("coordinate_tent: coordinate out of range");
  const DenseGrid grid(r, n);
  f.values_.resize(f.point_count_);
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  std::size_t idx = 0;
  do {
    const int c = x[static_cast<std::size_t>(j)];
    f.values_[idx++] = static_cast<double>(std::min(c, grid.period - c));
  } while (grid.advance(x));
  return f;
}

TorusFunction TorusFunction::random_dense(int r, int n, std::uint64_t seed) {
  TorusFunction f(r, n);
  RngStream rng(seed);
  f.values_.resize(f.point_count_);
  for (double& v : f.values_) v = rng.next_signed();
  return f;
}

TorusFunction TorusFunction::random_trig(int r, int n, int degree, std::uint64_t seed) {
  TorusFunction f(r, n);
  if (degree < 1) throw std::invalid_argument("random_trig: degree >= 1 required");
  RngStream rng(seed);
  std::vector<double> cos_coeff(static_cast<std::size_t>(degree * n));
  std::vector<double> sin_coeff(static_cast<std::size_t>(degree * n));
  for (double& c : cos_coeff) c = rng.next_gaussian();
  for (double& c : sin_coeff) c = rng.next_gaussian();

  const DenseGrid grid(r, n);
  f.values_.resize(f.point_count_);
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  std::size_t idx = 0;
  do {
    double v = 0.0;
    for (int t = 1; t <= degree; ++t) {
      for (int j = 0; j < n; ++j) {
        const double phase = kTwoPi * t * x[static_cast<std::size_t>(j)] / grid.period;
        const std::size_t c = static_cast<std::size_t>((t - 1) * n + j);
        v += cos_coeff[c] * std::cos(phase) + sin_coeff[c] * std::sin(phase);
      }
    }
    f.values_[idx++] = v;
  } while (grid.advance(x));
  return f;
}

const std::vector<double>& TorusFunction::values() const {
  if (!is_dense()) throw std::logic_error("TorusFunction: dense backing required");
  return values_;
}

double TorusFunction::at_index(std::size_t idx) const {
  if (!is_dense()) throw std::logic_error("TorusFunction: dense backing required");
  return values_[idx];
}

double TorusFunction::at(std::span<const int> point) const {
  if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("TorusFunction::at: wrong arity");
  if (is_dense()) return values_[encode(point)];
  // Normalize representatives before handing them to the oracle.
  std::vector<int> canon(point.size());
  for (std::size_t j = 0; j < point.size(); ++j) canon[j] = wrap(point[j], period());
  return oracle_(canon);
}

void TorusFunction::decode(std::size_t idx, std::span<int> point) const {
  const std::size_t period = static_cast<std::size_t>(2 * r_);
  for (int j = 0; j < n_; ++j) {
    point[static_cast<std::size_t>(j)] = static_cast<int>(idx % period);
    idx /= period;
  }
}

std::size_t TorusFunction::encode(std::span<const int> point) const {
  const int period = 2 * r_;
  std::size_t idx = 0;
  std::size_t stride = 1;
  for (int j = 0; j < n_; ++j) {
    idx += static_cast<std::size_t>(wrap(point[static_cast<std::size_t>(j)], period)) * stride;
    stride *= static_cast<std::size_t>(period);
  }
  return idx;
}

TorusFunction t_s_average(const TorusFunction& f, std::uint32_t subset) {
  if (!f.is_dense()) throw std::invalid_argument("t_s_average: dense backing required");
  if (subset >> f.n()) throw std::invalid_argument("t_s_average: subset outside {0..n-1}");
  const int k = std::popcount(subset);
  if (k > 20) throw std::invalid_argument("t_s_average: |S| <= 20 required");
  if (k == 0) return f;

  const DenseGrid grid(f.r(), f.n());
  const std::vector<int> pos = subset_positions(subset);
  std::vector<std::vector<std::ptrdiff_t>> plus(pos.size()), minus(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    plus[i] = shift_deltas(grid.period, grid.strides[static_cast<std::size_t>(pos[i])], 2);
    minus[i] = shift_deltas(grid.period, grid.strides[static_cast<std::size_t>(pos[i])], -2);
  }

  const std::vector<double>& in = f.values();
  std::vector<double> out(in.size());
  std::vector<int> x(static_cast<std::size_t>(f.n()), 0);
  const double scale = std::ldexp(1.0, -k);
  std::size_t idx = 0;
  do {
    double acc = 0.0;
    for (std::uint32_t signs = 0; signs < (std::uint32_t{1} << k); ++signs) {
      std::ptrdiff_t shifted = static_cast<std::ptrdiff_t>(idx);
      for (std::size_t i = 0; i < pos.size(); ++i) {
        const auto& table = ((signs >> i) & 1u) ? minus[i] : plus[i];
        shifted += table[static_cast<std::size_t>(x[static_cast<std::size_t>(pos[i])])];
      }
      acc += in[static_cast<std::size_t>(shifted)];
    }
    out[idx] = acc * scale;
    ++idx;
  } while (grid.advance(x));
  return TorusFunction::dense(f.r(), f.n(), std::move(out));
}

TorusFunction t_s_average_dft(const TorusFunction& f, std::uint32_t subset) {
  if (!f.is_dense()) throw std::invalid_argument("t_s_average_dft: dense backing required");
  if (subset >> f.n()) throw std::invalid_argument("t_s_average_dft: subset outside {0..n-1}");

  const int period = f.period();
  const std::size_t total = f.point_count();
  std::vector<std::complex<double>> data(total);
  for (std::size_t i = 0; i < total; ++i) data[i] = f.at_index(i);

  const DenseGrid grid(f.r(), f.n());
  std::vector<std::complex<double>> line(static_cast<std::size_t>(period));

  auto axis_dft = [&](int axis, bool forward) {
    const std::size_t stride = static_cast<std::size_t>(grid.strides[static_cast<std::size_t>(axis)]);
    const double sign = forward ? -1.0 : 1.0;
    const double norm = forward ? 1.0 : 1.0 / period;
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % static_cast<std::size_t>(period) != 0) continue;
      for (int t = 0; t < period; ++t) {
        std::complex<double> acc = 0.0;
        for (int s = 0; s < period; ++s) {
          const double angle = sign * kTwoPi * t * s / period;
          acc += data[base + static_cast<std::size_t>(s) * stride] *
                 std::complex<double>(std::cos(angle), std::sin(angle));
        }
        line[static_cast<std::size_t>(t)] = acc * norm;
      }
      for (int t = 0; t < period; ++t) data[base + static_cast<std::size_t>(t) * stride] = line[static_cast<std::size_t>(t)];
    }
  };

  for (int j = 0; j < f.n(); ++j) axis_dft(j, true);

  std::vector<int> xi(static_cast<std::size_t>(f.n()), 0);
  std::size_t idx = 0;
  do {
    double factor = 1.0;
    for (int j = 0; j < f.n(); ++j)
      if ((subset >> j) & 1u) factor *= std::cos(2.0 * kTwoPi * xi[static_cast<std::size_t>(j)] / period);
    data[idx++] *= factor;
  } while (grid.advance(xi));

  for (int j = 0; j < f.n(); ++j) axis_dft(j, false);

  std::vector<double> out(total);
  for (std::size_t i = 0; i < total; ++i) out[i] = data[i].real();
  return TorusFunction::dense(f.r(), f.n(), std::move(out));
}

CubeFunction chaos_lift(const TorusFunction& f, std::span<const int> x) {
  if (static_cast<int>(x.size()) != f.n()) throw std::invalid_argument("chaos_lift: wrong base point arity");
  if (f.n() > CubeFunction::kMaxDimension) throw std::invalid_argument("chaos_lift: n <= 24 required");
  const int n = f.n();
  std::vector<double> v(std::size_t{1} << n);
  std::vector<int> plus(static_cast<std::size_t>(n)), minus(static_cast<std::size_t>(n));
  for (std::uint32_t b = 0; b < v.size(); ++b) {
    for (int j = 0; j < n; ++j) {
      const int eps = ((b >> j) & 1u) ? -1 : 1;
      plus[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)] + 2 * eps;
      minus[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)] - 2 * eps;
    }
    v[b] = f.at(plus) - f.at(minus);
  }
  return CubeFunction(n, std::move(v));
}

namespace {

struct McAccumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t count = 0;

  void add(double v) {
    sum += v;
    sum_sq += v * v;
    ++count;
  }
  double mean() const { return count == 0 ? 0.0 : sum / static_cast<double>(count); }
  double stderr_of_mean() const {
    if (count < 2) return 0.0;
    const double m = mean();
    double var = (sum_sq - static_cast<double>(count) * m * m) / static_cast<double>(count - 1);
    var = std::max(var, 0.0);
    return std::sqrt(var / static_cast<double>(count));
  }
};

// Runs `budget` samples in fixed-size blocks, each with its own stream derived
// from (seed, tag, block); the reduction order is fixed, so the result does
// not depend on how blocks would be scheduled.
template <typename Sampler>
McAccumulator run_blocks(std::uint64_t budget, std::uint64_t seed, std::uint64_t tag, Sampler&& sample) {
  McAccumulator total;
  const std::uint64_t blocks = (budget + kMcBlockSize - 1) / kMcBlockSize;
  for (std::uint64_t blk = 0; blk < blocks; ++blk) {
    RngStream rng(seed, (tag << 32) | blk);
    const std::uint64_t lo = blk * kMcBlockSize;
    const std::uint64_t hi = std::min(budget, lo + kMcBlockSize);
    McAccumulator local;
    for (std::uint64_t i = lo; i < hi; ++i) local.add(sample(rng));
    total.sum += local.sum;
    total.sum_sq += local.sum_sq;
    total.count += local.count;
  }
  return total;
}

void draw_point(RngStream& rng, int period, std::span<int> x) {
  for (int& c : x) c = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(period)));
}

// Evaluates T_{[n]\setminus S} f at a point by direct averaging over the
// complement's sign patterns.
double smoothed_at(const TorusFunction& f, std::uint32_t complement, std::span<const int> x,
                   std::vector<int>& scratch) {
  const std::vector<int> pos = subset_positions(complement);
  const std::uint32_t patterns = std::uint32_t{1} << pos.size();
  double acc = 0.0;
  for (std::uint32_t signs = 0; signs < patterns; ++signs) {
    std::copy(x.begin(), x.end(), scratch.begin());
    for (std::size_t i = 0; i < pos.size(); ++i)
      scratch[static_cast<std::size_t>(pos[i])] += ((signs >> i) & 1u) ? -2 : 2;
    acc += f.at(scratch);
  }
  return acc / patterns;
}

DifferenceStats stats_impl(const TorusFunction& f, double p, int k, EvalMode mode,
                           std::uint64_t budget, std::uint64_t seed, bool smoothed) {
  const int n = f.n();
  if (!(p >= 1.0)) throw std::invalid_argument("difference_stats: p >= 1 required");
  if (k < 1 || k > n) throw std::invalid_argument("difference_stats: k in {1..n} required");
  const int r = f.r();
  int m_scale = 1;
  if (smoothed) {
    if (r % 4 != 0)
      throw std::invalid_argument("smoothed_difference_stats: r divisible by 4 required (r = 4m)");
    m_scale = r / 4;
  }
  const double inv_mp = 1.0 / abs_pow(static_cast<double>(m_scale), p);
  const std::uint64_t subset_count = binomial(n, k);

  DifferenceStats out;
  out.p = p;
  out.k = k;
  out.mode = mode;
  out.seed = seed;

  const int period = f.period();

  if (mode == EvalMode::exact) {
    if (!f.is_dense()) throw std::invalid_argument("difference_stats: exact mode requires dense backing");
    const std::size_t points = f.point_count();
    if (points > (std::uint64_t{1} << 26) >> n || n >= 26)
      throw std::invalid_argument("difference_stats: exact mode work bound (2r)^n * 2^n <= 2^26 exceeded");

    const DenseGrid grid(f.r(), n);
    const std::vector<double>& vals = f.values();

    // gradient: sum over j of the mean p-th power of the unit-step difference
    {
      double total = 0.0;
      for (int j = 0; j < n; ++j) {
        const auto step = shift_deltas(period, grid.strides[static_cast<std::size_t>(j)], 1);
        double acc = 0.0;
        std::vector<int> x(static_cast<std::size_t>(n), 0);
        std::size_t idx = 0;
        do {
          const std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(idx) + step[static_cast<std::size_t>(x[static_cast<std::size_t>(j)])];
          acc += abs_pow(vals[static_cast<std::size_t>(nb)] - vals[idx], p);
          ++idx;
        } while (grid.advance(x));
        total += acc / static_cast<double>(points);
      }
      out.gradient_term = total;
    }

    out.diagonal_term = diagonal_difference_term(f, p);

    // long term: binomial average over |S| = k, enumerating the 2^k signs on S
    {
      double subset_acc = 0.0;
      std::uint32_t subset = first_subset(k);
      std::vector<int> scratch(static_cast<std::size_t>(n));
      for (std::uint64_t si = 0; si < subset_count; ++si, subset = next_subset(subset)) {
        const std::vector<int> pos = subset_positions(subset);
        const TorusFunction* source = &f;
        std::optional<TorusFunction> smoothed_table;
        if (smoothed) {
          const std::uint32_t complement = ((std::uint32_t{1} << n) - 1u) & ~subset;
          smoothed_table = t_s_average(f, complement);
          source = &*smoothed_table;
        }
        const std::vector<double>& sv = source->values();
        double acc = 0.0;
        std::vector<int> x(static_cast<std::size_t>(n), 0);
        std::size_t idx = 0;
        do {
          const double base = sv[idx];
          for (std::uint32_t signs = 0; signs < (std::uint32_t{1} << k); ++signs) {
            std::copy(x.begin(), x.end(), scratch.begin());
            for (std::size_t i = 0; i < pos.size(); ++i)
              scratch[static_cast<std::size_t>(pos[i])] += ((signs >> i) & 1u) ? -r : r;
            acc += abs_pow(sv[source->encode(scratch)] - base, p);
          }
          ++idx;
        } while (grid.advance(x));
        subset_acc += acc / (static_cast<double>(points) * std::ldexp(1.0, k));
      }
      out.long_term = subset_acc / static_cast<double>(subset_count) * inv_mp;
    }
    return out;
  }

  // Monte Carlo
  if (budget == 0) throw std::invalid_argument("difference_stats: monte_carlo budget must be positive");
  out.sample_count = budget;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1u;

  auto long_sample = [&](RngStream& rng) {
    const std::uint32_t subset = unrank_subset_colex(rng.next_below(subset_count), n, k);
    std::vector<int> x(static_cast<std::size_t>(n));
    draw_point(rng, period, x);
    const std::uint64_t signs = rng.next_u64();
    std::vector<int> shifted_pt(x);
    int bit = 0;
    for (int j = 0; j < n; ++j) {
      if ((subset >> j) & 1u) {
        shifted_pt[static_cast<std::size_t>(j)] += ((signs >> bit) & 1u) ? -r : r;
        ++bit;
      }
    }
    if (!smoothed) return abs_pow(f.at(shifted_pt) - f.at(x), p);
    const std::uint32_t complement = full & ~subset;
    std::vector<int> scratch(static_cast<std::size_t>(n));
    const double a = smoothed_at(f, complement, shifted_pt, scratch);
    const double b = smoothed_at(f, complement, x, scratch);
    return abs_pow(a - b, p) * inv_mp;
  };
  auto gradient_sample = [&](RngStream& rng) {
    std::vector<int> x(static_cast<std::size_t>(n));
    draw_point(rng, period, x);
    const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    std::vector<int> y(x);
    y[static_cast<std::size_t>(j)] += 1;
    return static_cast<double>(n) * abs_pow(f.at(y) - f.at(x), p);
  };
  auto diagonal_sample = [&](RngStream& rng) {
    std::vector<int> x(static_cast<std::size_t>(n));
    draw_point(rng, period, x);
    const std::uint64_t signs = rng.next_u64();
    std::vector<int> y(x);
    for (int j = 0; j < n; ++j) y[static_cast<std::size_t>(j)] += ((signs >> j) & 1u) ? -1 : 1;
    return abs_pow(f.at(y) - f.at(x), p);
  };

  const McAccumulator long_acc = run_blocks(budget, seed, 1, long_sample);
  const McAccumulator grad_acc = run_blocks(budget, seed, 2, gradient_sample);
  const McAccumulator diag_acc = run_blocks(budget, seed, 3, diagonal_sample);
  out.long_term = long_acc.mean();
  out.gradient_term = grad_acc.mean();
  out.diagonal_term = diag_acc.mean();
  out.long_stderr = long_acc.stderr_of_mean();
  out.gradient_stderr = grad_acc.stderr_of_mean();
  out.diagonal_stderr = diag_acc.stderr_of_mean();
  return out;
}

}  // namespace

DifferenceStats difference_stats(const TorusFunction& f, double p, int k, EvalMode mode,
                                 std::uint64_t budget, std::uint64_t seed) {
  return stats_impl(f, p, k, mode, budget, seed, /*smoothed=*/false);
}

double diagonal_difference_term(const TorusFunction& f, double p) {
  if (!f.is_dense()) throw std::invalid_argument("diagonal_difference_term: dense backing required");
  if (!(p >= 1.0)) throw std::invalid_argument("diagonal_difference_term: p >= 1 required");
  const int n = f.n();
  const std::size_t points = f.point_count();
  if (points > (std::uint64_t{1} << 26) >> n)
    throw std::invalid_argument("diagonal_difference_term: work bound (2r)^n * 2^n <= 2^26 exceeded");

  const int period = f.period();
  const DenseGrid grid(f.r(), n);
  const std::vector<double>& vals = f.values();

  // Gray-code walk over the 2^n sign patterns, one coordinate flip per step.
  std::vector<std::vector<std::ptrdiff_t>> plus(static_cast<std::size_t>(n)), flip_diff(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    plus[static_cast<std::size_t>(j)] = shift_deltas(period, grid.strides[static_cast<std::size_t>(j)], 1);
    const auto minus = shift_deltas(period, grid.strides[static_cast<std::size_t>(j)], -1);
    flip_diff[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(period));
    for (int c = 0; c < period; ++c)
      flip_diff[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] =
          minus[static_cast<std::size_t>(c)] - plus[static_cast<std::size_t>(c)];
  }
  double acc = 0.0;
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  std::size_t idx = 0;
  std::vector<int> sign_state(static_cast<std::size_t>(n));
  do {
    std::ptrdiff_t shifted = static_cast<std::ptrdiff_t>(idx);
    for (int j = 0; j < n; ++j) {
      shifted += plus[static_cast<std::size_t>(j)][static_cast<std::size_t>(x[static_cast<std::size_t>(j)])];
      sign_state[static_cast<std::size_t>(j)] = 0;
    }
    const double base = vals[idx];
    acc += abs_pow(vals[static_cast<std::size_t>(shifted)] - base, p);
    for (std::uint32_t g = 1; g < (std::uint32_t{1} << n); ++g) {
      const int j = std::countr_zero(g);
      const std::size_t cj = static_cast<std::size_t>(x[static_cast<std::size_t>(j)]);
      if (sign_state[static_cast<std::size_t>(j)] == 0) {
        shifted += flip_diff[static_cast<std::size_t>(j)][cj];
        sign_state[static_cast<std::size_t>(j)] = 1;
      } else {
        shifted -= flip_diff[static_cast<std::size_t>(j)][cj];
        sign_state[static_cast<std::size_t>(j)] = 0;
      }
      acc += abs_pow(vals[static_cast<std::size_t>(shifted)] - base, p);
    }
    ++idx;
  } while (grid.advance(x));
  return acc / (static_cast<double>(points) * std::ldexp(1.0, n));
}

double torus_p_norm(const TorusFunction& f, double p) {
  if (!f.is_dense()) throw std::invalid_argument("torus_p_norm: dense backing required");
  if (!(p >= 1.0)) throw std::invalid_argument("torus_p_norm: p >= 1 required");
  double acc = 0.0;
  for (std::size_t i = 0; i < f.point_count(); ++i) acc += abs_pow(f.at_index(i), p);
  return root_p(acc / static_cast<double>(f.point_count()), p);
}

DifferenceStats smoothed_difference_stats(const TorusFunction& f, double p, int k, EvalMode mode,
                                          std::uint64_t budget, std::uint64_t seed) {
  return stats_impl(f, p, k, mode, budget, seed, /*smoothed=*/true);
}

}  // namespace xpineq
