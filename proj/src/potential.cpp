#include "tmspectra/potential.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tmspectra {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Does the closed interval [m/2^depth, (m+1)/2^depth] contain the point given
// as num/den (exact integer test)? Wrap at 1 is handled by also testing the
// shifted representative num/den + 1.
bool interval_contains_fraction(std::uint64_t m, int depth, std::int64_t num, std::int64_t den) {
  const auto lo = static_cast<__int128>(m) * den;
  const auto hi = static_cast<__int128>(m + 1) * den;
  const __int128 scale = static_cast<__int128>(num) << depth;
  if (lo <= scale && scale <= hi) return true;
  const __int128 shifted = static_cast<__int128>(num + den) << depth;
  return lo <= shifted && shifted <= hi;
}

bool interval_contains_double(std::uint64_t m, int depth, double x) {
  const double a = std::ldexp(static_cast<double>(m), -depth);
  const double b = std::ldexp(static_cast<double>(m + 1), -depth);
  return (a <= x && x <= b) || (a <= x + 1.0 && x + 1.0 <= b);
}

bool interval_contains_c(const CircleParameter& param, std::uint64_t m, int depth) {
  if (param.rational_form)
    return interval_contains_fraction(m, depth, param.rational_form->num,
                                      param.rational_form->den);
  return interval_contains_double(m, depth, param.c);
}

bool interval_contains_singularity(const CircleParameter& param, std::uint64_t m, int depth) {
  if (param.singularity_rational)
    return interval_contains_fraction(m, depth, param.singularity_rational->num,
                                      param.singularity_rational->den);
  return interval_contains_double(m, depth, param.singularity);
}

bool dyadic_is_singularity(const CircleParameter& param, std::uint64_t num, int depth) {
  if (param.singularity_rational) {
    const auto& s = *param.singularity_rational;
    return static_cast<__int128>(num) * s.den == (static_cast<__int128>(s.num) << depth);
  }
  return std::ldexp(static_cast<double>(num), -depth) == param.singularity;
}

}  // namespace

ExtReal psi_from_distance(double d) {
  if (d >= 0.5) return ExtReal::minus_inf();
  if (d <= 0.0) return ExtReal(0.0);
  const double c = std::cos(3.14159265358979323846 * d);
  if (c <= 0.0) return ExtReal::minus_inf();
  return ExtReal(2.0 * std::log(c));
}

ExtReal psi(const CircleParameter& param, double x) {
  x = torus_reduce(x);
  if (x == param.singularity) return ExtReal::minus_inf();
  return psi_from_distance(torus_distance(x, param.c));
}

ExtReal psi_dyadic(const CircleParameter& param, std::uint64_t num, int depth) {
  if (dyadic_is_singularity(param, num, depth)) return ExtReal::minus_inf();
  const double x = std::ldexp(static_cast<double>(num), -depth);
  return psi_from_distance(torus_distance(x, param.c));
}

ExtReal birkhoff_sum(const CircleParameter& param, double x, int n) {
  if (n < 1) throw std::invalid_argument("birkhoff_sum: length must be >= 1");
  x = torus_reduce(x);
  ExtReal acc(0.0);
  for (int k = 0; k < n; ++k) {
    acc += psi(param, x);
    if (acc.is_minus_inf()) return acc;
    x *= 2.0;
    if (x >= 1.0) x -= 1.0;
  }
  return acc;
}

double term_sup(const CircleParameter& param, std::uint64_t m, int depth) {
  if (interval_contains_c(param, m, depth)) return 0.0;
  const double a = std::ldexp(static_cast<double>(m), -depth);
  const double b = std::ldexp(static_cast<double>(m + 1), -depth);
  const double d = std::min(torus_distance(a, param.c), torus_distance(b, param.c));
  return psi_from_distance(d).as_double();  // finite: the singularity is on the far side
}

ExtReal term_inf(const CircleParameter& param, std::uint64_t m, int depth) {
  if (interval_contains_singularity(param, m, depth)) return ExtReal::minus_inf();
  const double a = std::ldexp(static_cast<double>(m), -depth);
  const double b = std::ldexp(static_cast<double>(m + 1), -depth);
  const double d = std::max(torus_distance(a, param.c), torus_distance(b, param.c));
  return psi_from_distance(d);
}

CylinderExtrema cylinder_extrema(const CircleParameter& param, const DyadicWord& w,
                                 int grid_depth) {
  if (grid_depth < 1) throw std::invalid_argument("cylinder_extrema: grid_depth must be >= 1");
  const int n = w.length();
  if (n < 1 || n + grid_depth > 62)
    throw std::invalid_argument("cylinder_extrema: depth out of range");

  CylinderExtrema ex;
  ex.word = w;

  // Termwise closed-form extrema over the suffix cylinders T^k<w> = <w_{k+1..n}>.
  double sups = 0.0;
  ExtReal infs(0.0);
  for (int k = 0; k < n; ++k) {
    const int len = n - k;
    const std::uint64_t m = w.value() & ((len == 64 ? ~0ull : (std::uint64_t{1} << len) - 1));
    sups += term_sup(param, m, len);
    infs += term_inf(param, m, len);
  }
  ex.sum_of_sups = sups;
  ex.sum_of_infs = infs;

  // Grid extrema at depth n + grid_depth.
  const int D = n + grid_depth;
  const std::uint64_t base = w.value() << grid_depth;
  const std::uint64_t mod = std::uint64_t{1} << D;
  double gmax = kNegInf;
  double gmin = std::numeric_limits<double>::infinity();
  for (std::uint64_t j = 0; j <= (std::uint64_t{1} << grid_depth); ++j) {
    const std::uint64_t start = (base + j) & (mod - 1);
    double sum = 0.0;
    bool singular = false;
    std::uint64_t num = start;
    for (int k = 0; k < n; ++k) {
      const ExtReal v = psi_dyadic(param, num, D);
      if (v.is_minus_inf()) {
        singular = true;
        break;
      }
      sum += v.as_double();
      num = (num << 1) & (mod - 1);
    }
    if (singular) {
      gmin = kNegInf;
    } else {
      gmax = std::max(gmax, sum);
      gmin = std::min(gmin, sum);
    }
  }
  if (gmax == kNegInf)
    throw InternalError("cylinder_extrema: every grid node singular");
  ex.grid_max = gmax;
  ex.grid_min = ExtReal(gmin);
  return ex;
}

CylinderSweep cylinder_sweep(const CircleParameter& param, int depth, int grid_depth) {
  if (depth < 1 || grid_depth < 1 || depth + grid_depth > 26)
    throw std::invalid_argument("cylinder_sweep: depth out of range");

  CylinderSweep s;
  s.depth = depth;
  s.grid_depth = grid_depth;
  const std::size_t count = std::size_t{1} << depth;

  // Termwise sums by suffix recursion: S_l(v) = term(l, v) + S_{l-1}(v mod 2^{l-1}).
  std::vector<double> sup_prev(1, 0.0), inf_prev(1, 0.0);
  for (int level = 1; level <= depth; ++level) {
    const std::size_t sz = std::size_t{1} << level;
    std::vector<double> sup_cur(sz), inf_cur(sz);
    const std::size_t half_mask = (sz >> 1) - 1;
    for (std::uint64_t v = 0; v < sz; ++v) {
      sup_cur[v] = term_sup(param, v, level) + sup_prev[v & half_mask];
      inf_cur[v] = term_inf(param, v, level).as_double() + inf_prev[v & half_mask];
    }
    sup_prev = std::move(sup_cur);
    inf_prev = std::move(inf_cur);
  }
  s.sum_of_sups = std::move(sup_prev);
  s.sum_of_infs = std::move(inf_prev);

  // Birkhoff sums of length `depth` at every dyadic node of depth D.
  const int D = depth + grid_depth;
  const std::size_t nodes = std::size_t{1} << D;
  std::vector<double> tab(nodes);
  for (std::uint64_t j = 0; j < nodes; ++j) tab[j] = psi_dyadic(param, j, D).as_double();
  std::vector<double> birk(nodes, 0.0), next(nodes);
  for (int k = 0; k < depth; ++k) {
    for (std::uint64_t j = 0; j < nodes; ++j)
      next[j] = tab[j] + birk[(j << 1) & (nodes - 1)];
    birk.swap(next);
  }

  s.grid_max.assign(count, kNegInf);
  s.grid_min.assign(count, std::numeric_limits<double>::infinity());
  const std::uint64_t pts = std::uint64_t{1} << grid_depth;
  for (std::uint64_t w = 0; w < count; ++w) {
    double gmax = kNegInf;
    double gmin = std::numeric_limits<double>::infinity();
    for (std::uint64_t j = 0; j <= pts; ++j) {
      const double v = birk[((w << grid_depth) + j) & (nodes - 1)];
      if (v == kNegInf) {
        gmin = kNegInf;
      } else {
        gmax = std::max(gmax, v);
        gmin = std::min(gmin, v);
      }
    }
    s.grid_max[w] = gmax;
    s.grid_min[w] = gmin;
  }
  return s;
}

}  // namespace tmspectra
