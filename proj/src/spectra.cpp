#include "tmspectra/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "tmspectra/autocorr.hpp"
#include "tmspectra/measure.hpp"
#include "tmspectra/pressure.hpp"

namespace tmspectra {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Bracket scale_to_log2(const Bracket& b) {
  return Bracket(down_ulp(b.lo / kLog2), up_ulp(b.hi / kLog2));
}

}  // namespace

SpectrumCurve lq_spectrum(const CircleParameter& param, const std::vector<double>& q_grid,
                          int depth, LqPipeline pipeline, int buffer, unsigned workers) {
  if (q_grid.empty()) throw std::invalid_argument("lq_spectrum: empty grid");

  SpectrumCurve curve;
  curve.arguments = q_grid;

  if (pipeline == LqPipeline::kPressurePartition) {
    const SpectrumCurve p = pressure_curve(param, q_grid, depth, 3, workers);
    curve.provenance = Provenance::kPressurePartition;
    curve.values.reserve(q_grid.size());
    for (const Bracket& b : p.values) curve.values.push_back(scale_to_log2(b));
    return curve;
  }

  if (depth > 12) throw std::invalid_argument("lq_spectrum: measure pipeline caps depth at 12");
  const CylinderMeasureSweep sweep = cylinder_measure_sweep(param, depth, buffer);
  curve.provenance = Provenance::kMeasurePartition;
  const double scale = 1.0 / (depth * kLog2);
  for (double q : q_grid) {
    if (q < 0.0) {
      for (const Bracket& est : sweep.estimate)
        if (est.lo <= 0.0)
          throw std::invalid_argument(
              "lq_spectrum: negative q with a cylinder bracket touching zero");
    }
    double lo_sum = 0.0, hi_sum = 0.0;
    for (const Bracket& est : sweep.estimate) {
      const double a = std::pow(est.lo, q);
      const double b = std::pow(est.hi, q);
      lo_sum += std::min(a, b);
      hi_sum += std::max(a, b);
    }
    curve.values.push_back(
        Bracket(down_ulp(std::log(lo_sum) * scale), up_ulp(std::log(hi_sum) * scale)));
  }
  return curve;
}

SpectrumCurve uniform_measure_curve(const std::vector<double>& q_grid) {
  SpectrumCurve curve;
  curve.provenance = Provenance::kClosedForm;
  curve.arguments = q_grid;
  curve.values.reserve(q_grid.size());
  for (double q : q_grid) curve.values.push_back(Bracket::point(1.0 - q));
  curve.validate();
  return curve;
}

std::vector<double> default_alpha_grid(const SpectrumCurve& curve, int fill) {
  curve.validate();
  std::set<double> grid;
  double lo = kInf, hi = -kInf;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    const double dm = (curve.values[i].mid() - curve.values[i - 1].mid()) /
                      (curve.arguments[i] - curve.arguments[i - 1]);
    if (!std::isfinite(dm)) continue;
    grid.insert(dm);
    lo = std::min(lo, dm);
    hi = std::max(hi, dm);
  }
  if (!std::isfinite(lo)) throw std::invalid_argument("default_alpha_grid: no finite slopes");
  for (int i = 0; i < fill; ++i)
    grid.insert(lo + (hi - lo) * static_cast<double>(i) / std::max(1, fill - 1));
  return {grid.begin(), grid.end()};
}

LegendreCurve legendre(const SpectrumCurve& curve, const std::vector<double>& alphas) {
  curve.validate();
  if (convexity_violations(curve) > 0)
    throw std::invalid_argument("legendre: input curve non-convex beyond bracket slack");

  LegendreCurve out;
  out.alphas = alphas;
  out.values.reserve(alphas.size());
  for (double a : alphas) {
    double lo = -kInf, hi = -kInf;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      const double q = curve.arguments[i];
      if (std::isfinite(curve.values[i].hi)) lo = std::max(lo, q * a - curve.values[i].hi);
      if (std::isfinite(curve.values[i].lo)) hi = std::max(hi, q * a - curve.values[i].lo);
    }
    out.values.push_back(Bracket(lo, std::max(lo, hi)));
  }

  // Slope range of the source curve: the conjugate is meaningful inside it.
  const std::size_t n = curve.size();
  if (n >= 2) {
    out.alpha_min = (curve.values[1].mid() - curve.values[0].mid()) /
                    (curve.arguments[1] - curve.arguments[0]);
    out.alpha_max = (curve.values[n - 1].mid() - curve.values[n - 2].mid()) /
                    (curve.arguments[n - 1] - curve.arguments[n - 2]);
  }
  return out;
}

namespace {

std::vector<double> default_t_grid() {
  std::vector<double> t;
  for (int i = 0; i <= 24; ++i) t.push_back(static_cast<double>(i) / 8.0);  // [0, 3]
  return t;
}

LegendreCurve birkhoff_from_pressure(const SpectrumCurve& pressure,
                                     const std::vector<double>& alphas) {
  const LegendreCurve conj = legendre(pressure, alphas);
  LegendreCurve out;
  out.alphas = alphas;
  out.alpha_min = conj.alpha_min;
  out.alpha_max = conj.alpha_max;
  out.values.reserve(alphas.size());
  for (const Bracket& v : conj.values) {
    // b = -p*/log 2, clipped into [0,1].
    double lo = -v.hi / kLog2, hi = -v.lo / kLog2;
    lo = std::clamp(lo, 0.0, 1.0);
    hi = std::clamp(hi, 0.0, 1.0);
    out.values.push_back(Bracket(lo, hi));
  }
  return out;
}

}  // namespace

LegendreCurve birkhoff_spectrum(const CircleParameter& param, const std::vector<double>& alphas,
                                int depth, unsigned workers) {
  if (param.is_zero())
    throw std::invalid_argument("birkhoff_spectrum: c = 0 unsupported (degenerate averages)");
  const SpectrumCurve p = pressure_curve(param, default_t_grid(), depth, 3, workers);
  return birkhoff_from_pressure(p, alphas);
}

LegendreCurve dimension_spectrum(const CircleParameter& param, const std::vector<double>& alphas,
                                 int depth, unsigned workers) {
  if (param.is_zero())
    throw std::invalid_argument("dimension_spectrum: c = 0 unsupported (point measure)");
  const SpectrumCurve p = pressure_curve(param, default_t_grid(), depth, 3, workers);

  // f(alpha) = b(-alpha log 2); evaluate the Birkhoff curve on the mapped,
  // re-sorted grid and read the values back in the caller's order.
  std::vector<double> mapped(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) mapped[i] = -alphas[i] * kLog2;
  std::vector<double> sorted = mapped;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const LegendreCurve b = birkhoff_from_pressure(p, sorted);

  LegendreCurve out;
  out.alphas = alphas;
  out.values.reserve(alphas.size());
  for (double m : mapped) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), m);
    out.values.push_back(b.values[static_cast<std::size_t>(it - sorted.begin())]);
  }
  out.alpha_min = -b.alpha_max / kLog2;
  out.alpha_max = -b.alpha_min / kLog2;
  out.excluded_alpha = -b.alpha_min / kLog2;  // the theorem omits this point
  return out;
}

FourierDimensionReport fourier_dimension(const CircleParameter& param, int depth, int kmax,
                                         unsigned workers) {
  FourierDimensionReport report;
  const Bracket d2 = correlation_exponent(param);
  report.eigen_route = Bracket(down_ulp(1.0 - d2.hi), up_ulp(1.0 - d2.lo));

  // All three routes estimate 1 - D2 = -beta(2); the partition-sum beta is
  // nonpositive at q = 2, so the pressure route enters negated.
  const PressureEstimate p2 = partition_pressure(param, 2.0, depth, 3, workers);
  report.pressure_route = scale_to_log2(p2.value.scaled(-1.0));

  const ThetaGrowth growth = theta_growth(param, kmax);
  const double pad = std::max(2.0 * growth.slope_stderr, 1e-3);
  report.theta_route = Bracket(1.0 - growth.slope - pad, 1.0 - growth.slope + pad);
  return report;
}

Bracket q_r(const SpectrumCurve& curve, double r) {
  curve.validate();
  if (r < 0.0) throw std::invalid_argument("q_r: order must be >= 0");

  // Crossing of the piecewise-linear envelope env(q) with r q.
  auto crossing = [&](bool upper) -> double {
    auto env = [&](std::size_t i) { return upper ? curve.values[i].hi : curve.values[i].lo; };
    auto g = [&](std::size_t i) { return env(i) - r * curve.arguments[i]; };
    if (g(0) < 0.0)
      throw std::invalid_argument("q_r: crossing left of the grid; extend the curve");
    for (std::size_t i = 1; i < curve.size(); ++i) {
      if (g(i) >= 0.0) continue;
      const double g0 = g(i - 1), g1 = g(i);
      const double q0 = curve.arguments[i - 1], q1 = curve.arguments[i];
      return q0 + g0 * (q1 - q0) / (g0 - g1);
    }
    throw std::invalid_argument("q_r: crossing right of the grid; extend the curve");
  };
  const double lo = crossing(false);
  const double hi = crossing(true);
  if (std::min(lo, hi) <= 0.0)
    throw std::invalid_argument("q_r: crossing at q <= 0; extend the curve");
  return Bracket(std::min(lo, hi), std::max(lo, hi));
}

Bracket quantization_dimension(const CircleParameter& param, double r,
                               const SpectrumCurve& curve) {
  if (r < 0.0) throw std::invalid_argument("quantization_dimension: order must be >= 0");
  if (param.is_zero()) return Bracket::point(0.0);
  const Bracket q = q_r(curve, r);
  if (q.contains(1.0) || q.lo >= 1.0)
    throw std::invalid_argument("quantization_dimension: q_r bracket touches 1; undefined");
  // r q / (1 - q) is increasing in q on (0, 1).
  return Bracket(down_ulp(r * q.lo / (1.0 - q.lo)), up_ulp(r * q.hi / (1.0 - q.hi)));
}

Bracket spectral_dimension(const CircleParameter& param, const SpectrumCurve& curve) {
  if (param.is_zero())
    throw std::invalid_argument("spectral_dimension: c = 0 unsupported (support degenerates)");
  return q_r(curve, 1.0);
}

}  // namespace tmspectra
