#include "tmspectra/autocorr.hpp"

#include <cmath>
#include <stdexcept>

namespace tmspectra {

EtaTable eta_table(const CircleParameter& param, std::uint64_t max_index) {
  if (max_index < 1) throw std::invalid_argument("eta_table: max_index must be >= 1");
  if (max_index > (std::uint64_t{1} << 26))
    throw std::invalid_argument("eta_table: table exceeds memory budget");

  EtaTable table;
  table.parameter = param;
  table.eta.resize(max_index + 2);
  const Complex phi = param.phase;
  const Complex phib = std::conj(phi);
  table.eta[0] = Complex{1.0, 0.0};
  table.eta[1] = phi / (2.0 - phib);
  for (std::uint64_t i = 2; i < table.eta.size(); ++i) {
    if ((i & 1u) == 0) {
      table.eta[i] = table.eta[i >> 1];
    } else {
      table.eta[i] = 0.5 * (phi * table.eta[i >> 1] + phib * table.eta[(i >> 1) + 1]);
    }
  }
  return table;
}

Complex empirical_eta(const TmPrefix& prefix, std::uint64_t lag, std::uint64_t window) {
  if (window == 0) throw std::invalid_argument("empirical_eta: empty window");
  if (lag + window > prefix.size())
    throw std::invalid_argument("empirical_eta: window exceeds prefix length");
  Complex acc{0.0, 0.0};
  for (std::uint64_t m = 0; m < window; ++m)
    acc += std::conj(prefix.values[m]) * prefix.values[m + lag];
  return acc / static_cast<double>(window);
}

McMatrix mc_matrix(const CircleParameter& param) {
  const Complex phi = param.phase;
  const Complex phib = std::conj(phi);
  McMatrix m;
  m.a = {{{Complex{1.5, 0.0}, Complex{0.5, 0.0}, Complex{0.5, 0.0}},
          {0.5 * phi, phi, Complex{0.0, 0.0}},
          {0.5 * phib, Complex{0.0, 0.0}, phib}}};
  return m;
}

std::array<Complex, 3> McMatrix::apply(const std::array<Complex, 3>& v) const {
  std::array<Complex, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
  return out;
}

CorrelationState correlation_state(const EtaTable& table, std::uint64_t n) {
  if (n < 1 || 2 * n > table.max_index())
    throw std::invalid_argument("correlation_state: eta table too short");
  CorrelationState s;
  s.index = n;
  Complex pi_sum{0.0, 0.0};
  for (std::uint64_t m = n; m < 2 * n; ++m) {
    s.Z += std::norm(table.eta[m]);
    pi_sum += table.eta[m] * std::conj(table.eta[m + 1]);
  }
  const Complex phi = table.parameter.phase;
  s.Pi = 0.5 * phi * phi * pi_sum;
  return s;
}

CorrelationState advance_state(const CircleParameter& param, const CorrelationState& s) {
  const McMatrix m = mc_matrix(param);
  const std::array<Complex, 3> v{Complex{s.Z, 0.0}, s.Pi, std::conj(s.Pi)};
  const std::array<Complex, 3> w = m.apply(v);
  CorrelationState out;
  out.Z = w[0].real();
  out.Pi = w[1];
  out.index = 2 * s.index;
  return out;
}

namespace {

// Characteristic polynomial of the doubling matrix.
inline double cubic(double x, double cos2pc) {
  const double a = 1.5 + 2.0 * cos2pc;
  const double b = 1.0 + 2.5 * cos2pc;
  return ((x - a) * x + b) * x - 1.0;
}

}  // namespace

Bracket lambda1(const CircleParameter& param) {
  const double cos2pc = std::cos(kTwoPi * param.c);
  if (param.is_zero()) return Bracket::point(2.0);  // (x-1)(x-2)(x-1/2)

  // p(1) = (cos-1)/2 < 0 and p(2) = 3(1-cos) > 0 for c != 0, and the unique
  // root of modulus > 1 is real, so bisection on [1,2] is safe.
  double lo = 1.0, hi = 2.0;
  double flo = cubic(lo, cos2pc);
  if (!(flo <= 0.0) || !(cubic(hi, cos2pc) >= 0.0))
    throw InternalError("lambda1: sign bracket lost, no real root > 1");
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = cubic(mid, cos2pc);
    if (fm <= 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  (void)flo;
  return Bracket(down_ulp(down_ulp(lo)), up_ulp(up_ulp(hi)));
}

std::pair<Complex, Complex> companion_eigenvalues(const CircleParameter& param, double lambda) {
  const double cos2pc = std::cos(kTwoPi * param.c);
  const double a = 1.5 + 2.0 * cos2pc;
  // Deflate x^3 - a x^2 + b x - 1 by (x - lambda): quotient x^2 + B x + C.
  const double B = lambda - a;
  const double C = 1.0 / lambda;  // product of all three roots is 1
  const Complex disc = Complex{B * B - 4.0 * C, 0.0};
  const Complex s = std::sqrt(disc);
  return {0.5 * (-B + s.real()) + 0.5 * Complex{0.0, s.imag()},
          0.5 * (-B - s.real()) - 0.5 * Complex{0.0, s.imag()}};
}

Bracket correlation_exponent(const CircleParameter& param) {
  const Bracket l = lambda1(param);
  return Bracket(down_ulp(std::log(l.lo) / kLog2), up_ulp(std::log(l.hi) / kLog2));
}

ThetaGrowth theta_growth(const CircleParameter& param, int kmax) {
  if (kmax < 2 || kmax > 24) throw std::invalid_argument("theta_growth: kmax out of range");
  const std::uint64_t top = std::uint64_t{1} << kmax;
  const EtaTable table = eta_table(param, top);

  ThetaGrowth growth;
  growth.theta.reserve(static_cast<std::size_t>(kmax) + 1);
  double acc = 0.0;
  std::uint64_t next = 1;
  int k = 0;
  for (std::uint64_t m = 0; m < top; ++m) {
    if (m == next) {
      growth.theta.emplace_back(k, acc);
      ++k;
      next <<= 1;
    }
    acc += std::norm(table.eta[m]);
  }
  growth.theta.emplace_back(kmax, acc);

  growth.fit_k_lo = kmax / 2;
  growth.fit_k_hi = kmax;
  // Least squares of log Theta_{2^k} against k log 2.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (const auto& [kk, th] : growth.theta) {
    if (kk < growth.fit_k_lo || kk > growth.fit_k_hi || th <= 0.0) continue;
    const double x = kk * kLog2, y = std::log(th);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  if (cnt >= 2) {
    const double denom = cnt * sxx - sx * sx;
    growth.slope = (cnt * sxy - sx * sy) / denom;
    const double intercept = (sy - growth.slope * sx) / cnt;
    double ss = 0.0;
    for (const auto& [kk, th] : growth.theta) {
      if (kk < growth.fit_k_lo || kk > growth.fit_k_hi || th <= 0.0) continue;
      const double r = std::log(th) - (growth.slope * kk * kLog2 + intercept);
      ss += r * r;
    }
    if (cnt > 2) growth.slope_stderr = std::sqrt(ss / (cnt - 2) / denom * cnt);
  }
  return growth;
}

}  // namespace tmspectra
