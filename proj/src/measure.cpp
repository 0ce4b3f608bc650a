#include "tmspectra/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tmspectra/combinatorics.hpp"
#include "tmspectra/potential.hpp"

namespace tmspectra {

namespace {

constexpr int kMaxOrder = 22;

// In-place radix-2 transform computing out[j] = sum_r in[r] e^{+2 pi i r j / N}.
void inverse_dft(std::vector<Complex>& a) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw InternalError("inverse_dft: size must be a power of 2");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = kTwoPi / static_cast<double>(len);
    const Complex wl{std::cos(ang), std::sin(ang)};
    for (std::size_t i = 0; i < n; i += len) {
      Complex w{1.0, 0.0};
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex u = a[i + k];
        const Complex v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

// integral of e^{2 pi i m x} over [a, a + 2^-n]; exact antiderivative.
Complex phase_integral(std::int64_t m, double a, double b) {
  if (m == 0) return Complex{b - a, 0.0};
  const double w = kTwoPi * static_cast<double>(m);
  const Complex eb{std::cos(w * b), std::sin(w * b)};
  const Complex ea{std::cos(w * a), std::sin(w * a)};
  return (eb - ea) / Complex{0.0, w};
}

}  // namespace

PartialProduct::PartialProduct(CircleParameter param, int order, std::vector<Complex> coeff)
    : param_(std::move(param)), order_(order), coeff_(std::move(coeff)) {}

Complex PartialProduct::coeff(std::int64_t m) const {
  const std::int64_t am = m < 0 ? -m : m;
  if (am >= static_cast<std::int64_t>(coeff_.size())) return Complex{0.0, 0.0};
  const Complex v = coeff_[static_cast<std::size_t>(am)];
  return m < 0 ? std::conj(v) : v;
}

PartialProduct partial_product(const CircleParameter& param, int order) {
  if (order < 0 || order > kMaxOrder)
    throw std::invalid_argument("partial_product: order outside [0, 22]");
  // Only the conj(phase)/2 shift appears below: for m >= 0 the +2^k shift
  // falls outside the previous order's support.
  const Complex half_phib = 0.5 * std::conj(param.phase);

  std::vector<Complex> cur(1, Complex{1.0, 0.0});  // order 0: the constant 1
  for (int k = 0; k < order; ++k) {
    const std::int64_t block = std::int64_t{1} << k;  // support of the current order
    std::vector<Complex> next(static_cast<std::size_t>(2 * block));
    for (std::int64_t m = 0; m < 2 * block; ++m) {
      Complex v = m < block ? cur[static_cast<std::size_t>(m)] : Complex{0.0, 0.0};
      // + (conj(phase)/2) * coeff(m - 2^k); negative index means conjugate.
      const std::int64_t lo = m - block;
      if (lo >= -(block - 1)) {
        const Complex c =
            lo >= 0 ? cur[static_cast<std::size_t>(lo)] : std::conj(cur[static_cast<std::size_t>(-lo)]);
        v += half_phib * c;
      }
      next[static_cast<std::size_t>(m)] = v;
    }
    cur = std::move(next);
  }
  return PartialProduct(param, order, std::move(cur));
}

double density_at(const PartialProduct& pp, double x) {
  const CircleParameter& param = pp.parameter();
  double direct = 1.0;
  double y = torus_reduce(x);
  for (int k = 0; k < pp.order(); ++k) {
    direct *= 1.0 + std::cos(kTwoPi * (y - param.c));
    y *= 2.0;
    if (y >= 1.0) y -= 1.0;
  }

  const auto& coeffs = pp.nonnegative_coeffs();
  double series = coeffs[0].real();
  for (std::size_t m = 1; m < coeffs.size(); ++m) {
    const double w = kTwoPi * static_cast<double>(m) * x;
    series += 2.0 * (coeffs[m].real() * std::cos(w) - coeffs[m].imag() * std::sin(w));
  }
  if (std::fabs(series - direct) > 1e-8 * std::max(1.0, std::fabs(direct)))
    throw InternalError("density_at: product and Fourier forms disagree");
  return direct;
}

double cylinder_integral(const PartialProduct& pp, std::uint64_t m, int depth) {
  if (depth < 0 || depth > 62) throw std::invalid_argument("cylinder_integral: bad depth");
  const double a = std::ldexp(static_cast<double>(m), -depth);
  const double b = std::ldexp(static_cast<double>(m + 1), -depth);
  const auto& coeffs = pp.nonnegative_coeffs();
  double acc = coeffs[0].real() * (b - a);
  for (std::size_t f = 1; f < coeffs.size(); ++f) {
    const Complex term = coeffs[f] * phase_integral(static_cast<std::int64_t>(f), a, b);
    acc += 2.0 * term.real();  // conjugate frequency doubles the real part
  }
  return acc;
}

std::vector<double> cylinder_integrals(const PartialProduct& pp, int depth) {
  if (depth < 0 || depth > 24) throw std::invalid_argument("cylinder_integrals: bad depth");
  const std::size_t bins = std::size_t{1} << depth;
  const double cell = std::ldexp(1.0, -depth);
  const auto& coeffs = pp.nonnegative_coeffs();

  // Fold coeff(m) * g(m) into residue classes mod 2^depth, m over all
  // frequencies; g(m) is the integral of e^{2 pi i m x} over the first cell.
  std::vector<Complex> folded(bins, Complex{0.0, 0.0});
  folded[0] += coeffs[0] * cell;
  for (std::int64_t sgn : {+1, -1}) {
    for (std::size_t f = 1; f < coeffs.size(); ++f) {
      const std::int64_t m = sgn * static_cast<std::int64_t>(f);
      const Complex c = sgn > 0 ? coeffs[f] : std::conj(coeffs[f]);
      const Complex g = phase_integral(m, 0.0, cell);
      std::size_t r = static_cast<std::size_t>(((m % static_cast<std::int64_t>(bins)) +
                                                static_cast<std::int64_t>(bins)) %
                                               static_cast<std::int64_t>(bins));
      folded[r] += c * g;
    }
  }
  inverse_dft(folded);
  std::vector<double> out(bins);
  for (std::size_t j = 0; j < bins; ++j) out[j] = folded[j].real();
  return out;
}

namespace {

Bracket buffered_estimate(const CircleParameter& param, const DyadicWord& w, int buffer) {
  const int n = w.length();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int k = buffer - 1; k <= buffer + 1; ++k) {
    const int order = std::min(kMaxOrder, n + k);
    const PartialProduct pp = partial_product(param, order);
    const double v = cylinder_integral(pp, w.value(), n);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return Bracket(lo, hi);
}

}  // namespace

CylinderMeasure cylinder_measure(const CircleParameter& param, const DyadicWord& w, int buffer) {
  if (buffer < 1) throw std::invalid_argument("cylinder_measure: buffer must be >= 1");
  CylinderMeasure out;
  out.word = w;
  if (w.length() == 0) {
    out.estimate = Bracket::point(1.0);
    out.gibbs_lo = ExtReal(0.0);
    out.gibbs_hi = 0.0;
    return out;
  }
  if (w.length() + buffer > kMaxOrder)
    throw std::invalid_argument("cylinder_measure: |w| + buffer exceeds the order cap");

  const CylinderExtrema ex = cylinder_extrema(param, w, 3);
  out.gibbs_lo = ex.sum_of_infs;
  out.gibbs_hi = ex.sum_of_sups;
  const Bracket window(out.gibbs_lo.is_minus_inf() ? 0.0 : std::exp(out.gibbs_lo.as_double()),
                       std::exp(out.gibbs_hi));
  out.estimate = clamp_into(buffered_estimate(param, w, buffer), window, &out.clamped);
  return out;
}

CylinderMeasureSweep cylinder_measure_sweep(const CircleParameter& param, int depth, int buffer) {
  if (depth < 1 || depth > 14) throw std::invalid_argument("cylinder_measure_sweep: bad depth");
  if (depth + buffer > kMaxOrder)
    throw std::invalid_argument("cylinder_measure_sweep: depth + buffer exceeds the order cap");

  CylinderMeasureSweep sweep;
  sweep.depth = depth;
  const std::size_t count = std::size_t{1} << depth;

  std::vector<std::vector<double>> runs;
  for (int k = buffer - 1; k <= buffer + 1; ++k) {
    const PartialProduct pp = partial_product(param, std::min(kMaxOrder, depth + k));
    runs.push_back(cylinder_integrals(pp, depth));
  }

  const CylinderSweep ext = cylinder_sweep(param, depth, 3);
  sweep.gibbs_lo = ext.sum_of_infs;
  sweep.gibbs_hi = ext.sum_of_sups;
  sweep.estimate.reserve(count);
  for (std::size_t wv = 0; wv < count; ++wv) {
    double lo = runs[0][wv], hi = runs[0][wv];
    for (const auto& r : runs) {
      lo = std::min(lo, r[wv]);
      hi = std::max(hi, r[wv]);
    }
    const Bracket window(std::isinf(sweep.gibbs_lo[wv]) ? 0.0 : std::exp(sweep.gibbs_lo[wv]),
                         std::exp(sweep.gibbs_hi[wv]));
    bool clipped = false;
    sweep.estimate.push_back(clamp_into(Bracket(lo, hi), window, &clipped));
    sweep.clamp_events += clipped;
  }
  return sweep;
}

double measure_decay_check(const CircleParameter& param, int depth) {
  if (param.is_zero())
    throw std::invalid_argument("measure_decay_check: c = 0 has a point measure");
  if (depth < 2 || depth > 14) throw std::invalid_argument("measure_decay_check: bad depth");

  const SingularityCoding coding(param);

  // Certified lower bound on log mu(<w>) via the extension trick, recursing
  // on the short extension word and closing with a quadrature bracket.
  auto lower_bound = [&](const DyadicWord& w, auto&& self) -> double {
    const int n = w.length();
    if (n == 0) return 0.0;
    if (n <= 6) {
      const CylinderMeasure cm = cylinder_measure(param, w, 8);
      if (cm.estimate.lo > 0.0) return std::log(cm.estimate.lo);
    }
    const DyadicWord v = extension_search(coding, w, ExtensionGoal::kAvoidG);
    const DyadicWord wv = w.concat(v);
    double infs = 0.0;
    for (int k = 0; k < n; ++k) {
      const DyadicWord sfx = wv.suffix(k);
      infs += term_inf(param, sfx.value(), sfx.length()).as_double();
    }
    if (std::isinf(infs)) throw InternalError("measure_decay_check: extension failed to clear G");
    if (v.length() >= n) return infs;  // no progress; drop the tail mass term
    return infs + self(v, self);
  };

  double worst = std::numeric_limits<double>::infinity();
  const std::size_t count = std::size_t{1} << depth;
  for (std::uint64_t wv = 0; wv < count; ++wv) {
    const double b = lower_bound(DyadicWord::from_value(wv, depth), lower_bound);
    worst = std::min(worst, b);
  }
  return worst / (static_cast<double>(depth) * static_cast<double>(depth));
}

}  // namespace tmspectra
