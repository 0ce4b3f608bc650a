#include "tmspectra/pressure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tmspectra/combinatorics.hpp"
#include "tmspectra/parallel.hpp"
#include "tmspectra/potential.hpp"

namespace tmspectra {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// (1/n) log sum_w exp(terms[w]) with a fixed block structure, so the result
// is bit-identical for any worker count. -inf terms vanish; a +inf term makes
// the sum +inf.
double log_mean_exp(const std::vector<double>& terms, int depth, unsigned workers) {
  const std::size_t n = terms.size();
  const std::size_t block = std::size_t{1} << 14;
  const std::size_t blocks = (n + block - 1) / block;

  std::vector<double> block_max(blocks, -kInf);
  parallel_blocks(blocks, workers, [&](std::size_t b) {
    double m = -kInf;
    const std::size_t end = std::min(n, (b + 1) * block);
    for (std::size_t i = b * block; i < end; ++i) m = std::max(m, terms[i]);
    block_max[b] = m;
  });
  double gmax = -kInf;
  for (double m : block_max) gmax = std::max(gmax, m);
  if (gmax == kInf) return kInf;
  if (gmax == -kInf) return -kInf;

  std::vector<double> block_sum(blocks, 0.0);
  parallel_blocks(blocks, workers, [&](std::size_t b) {
    double s = 0.0;
    const std::size_t end = std::min(n, (b + 1) * block);
    for (std::size_t i = b * block; i < end; ++i) {
      const double x = terms[i];
      if (x != -kInf) s += std::exp(x - gmax);
    }
    block_sum[b] = s;
  });
  double total = 0.0;
  for (double s : block_sum) total += s;
  return (gmax + std::log(total)) / static_cast<double>(depth);
}

PressureEstimate pressure_from_sweep(const CylinderSweep& sweep, double t, unsigned workers) {
  PressureEstimate est;
  est.t = t;
  est.depth = sweep.depth;
  est.mode = t >= 0.0 ? PressureEstimate::Mode::kSupBased : PressureEstimate::Mode::kInfBased;
  if (t == 0.0) {
    est.value = Bracket::point(kLog2);  // 2^n unit terms
    return est;
  }

  const std::size_t count = sweep.sum_of_sups.size();
  std::vector<double> lo_terms(count), hi_terms(count);
  if (t > 0.0) {
    for (std::size_t w = 0; w < count; ++w) {
      lo_terms[w] = t * sweep.grid_max[w];
      hi_terms[w] = t * sweep.sum_of_sups[w];
    }
  } else {
    for (std::size_t w = 0; w < count; ++w) {
      lo_terms[w] = t * sweep.grid_min[w];     // -inf grid node -> +inf term
      hi_terms[w] = t * sweep.sum_of_infs[w];  // -inf cylinder inf -> +inf term
    }
  }
  const double lo = log_mean_exp(lo_terms, sweep.depth, workers);
  const double hi = log_mean_exp(hi_terms, sweep.depth, workers);
  est.value = Bracket(down_ulp(std::min(lo, hi)), up_ulp(std::max(lo, hi)));
  return est;
}

}  // namespace

double pressure_c0(double t) { return std::max((1.0 - 2.0 * t) * kLog2, 0.0); }

PressureEstimate partition_pressure(const CircleParameter& param, double t, int depth,
                                    int grid_depth, unsigned workers) {
  if (depth < 1 || depth > 20) throw std::invalid_argument("partition_pressure: bad depth");
  const CylinderSweep sweep = cylinder_sweep(param, depth, grid_depth);
  return pressure_from_sweep(sweep, t, workers);
}

SpectrumCurve pressure_curve(const CircleParameter& param, const std::vector<double>& t_grid,
                             int depth, int grid_depth, unsigned workers) {
  if (t_grid.empty()) throw std::invalid_argument("pressure_curve: empty grid");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i - 1] < t_grid[i]))
      throw std::invalid_argument("pressure_curve: grid must be strictly increasing");

  const CylinderSweep sweep = cylinder_sweep(param, depth, grid_depth);
  SpectrumCurve curve;
  curve.provenance = Provenance::kPressurePartition;
  curve.arguments = t_grid;
  curve.values.reserve(t_grid.size());
  for (double t : t_grid) curve.values.push_back(pressure_from_sweep(sweep, t, workers).value);
  return curve;
}

namespace {

// sup of psi over the closed dyadic interval minus the open ball of radius
// `margin` around the singularity. Candidates: the endpoints, the ball
// boundary points, and c itself; evaluated a hair outward so the bound stays
// an upper bound.
double term_sup_restricted(const CircleParameter& param, std::uint64_t m, int level,
                           double margin) {
  const double a = std::ldexp(static_cast<double>(m), -level);
  const double b = std::ldexp(static_cast<double>(m + 1), -level);
  const double slack = 1.0 - 1e-9;
  auto inside = [&](double x) {
    const double x1 = torus_reduce(x);
    return ((a <= x1 && x1 <= b) || (a <= x1 + 1.0 && x1 + 1.0 <= b)) &&
           torus_distance(x1, param.singularity) >= margin * slack;
  };
  if (inside(param.c)) return 0.0;
  double best = -kInf;
  const double cands[4] = {a, b, param.singularity - margin, param.singularity + margin};
  for (double x : cands) {
    if (!inside(x)) continue;
    const ExtReal v = psi_from_distance(torus_distance(torus_reduce(x), param.c));
    if (v.finite()) best = std::max(best, v.as_double());
  }
  if (best == -kInf)
    throw InternalError("term_sup_restricted: admissible cylinder with empty allowed region");
  return best;
}

}  // namespace

PressureEstimate restricted_partition_pressure(const CircleParameter& param, double t, int depth,
                                               int forbidden_depth, int grid_depth) {
  (void)grid_depth;
  if (depth < 1 || depth > 20)
    throw std::invalid_argument("restricted_partition_pressure: bad depth");
  if (forbidden_depth < 1 || forbidden_depth > 16)
    throw std::invalid_argument("restricted_partition_pressure: bad forbidden depth");

  const SingularityCoding coding(param);
  const ForbiddenAutomaton aut = forbidden_automaton(coding, forbidden_depth);
  const double margin = coding.forbidden_margin(forbidden_depth);
  const int window = forbidden_depth + 1;

  // Witness depth: enough tail below the word that the termwise lower bound
  // on the witness cylinder is tight.
  const int L = std::min(53, std::max(depth, window) + 12);
  const std::uint64_t count = std::uint64_t{1} << depth;
  const std::uint64_t wmask = (std::uint64_t{1} << window) - 1;

  std::vector<double> lo_terms, hi_terms;
  lo_terms.reserve(count);
  hi_terms.reserve(count);
  std::uint64_t admissible_words = 0;

  for (std::uint64_t w = 0; w < count; ++w) {
    // Admissibility of the word itself.
    bool ok = true;
    if (depth >= window) {
      for (int i = window; i <= depth && ok; ++i)
        ok = aut.admissible[(w >> (depth - i)) & wmask];
    }
    if (!ok) continue;

    // Extend to a live state (padding if the word is shorter than the window),
    // then follow the greedy live walk down to depth L.
    std::uint64_t x_bits;
    int have;
    if (depth >= window) {
      std::uint64_t state = w & wmask;
      if (!aut.live[state]) continue;  // admissible as a word, no continuation
      x_bits = w;
      have = depth;
    } else {
      const int pad = window - depth;
      std::int64_t found = -1;
      for (std::uint64_t suffix = 0; suffix < (std::uint64_t{1} << pad); ++suffix) {
        const std::uint64_t cand = (w << pad) | suffix;
        if (aut.admissible[cand] && aut.live[cand]) {
          found = static_cast<std::int64_t>(cand);
          break;
        }
      }
      if (found < 0) continue;
      x_bits = static_cast<std::uint64_t>(found);
      have = window;
    }
    ++admissible_words;
    {
      const auto tail = aut.live_walk(x_bits & wmask, L - have);
      for (std::uint8_t bit : tail) x_bits = (x_bits << 1) | bit;
    }

    // Certified lower bound on sup over <w> within the subshift: the witness
    // cylinder of depth L lies inside it, so termwise infima over the witness
    // suffixes (value x_bits mod 2^(L-k)) bound the Birkhoff sum of any point
    // of the subshift below the witness.
    double lo = 0.0;
    for (int k = 0; k < depth; ++k) {
      const int len = L - k;
      const std::uint64_t mask = (len >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
      lo += term_inf(param, x_bits & mask, len).as_double();
    }

    // Certified upper bound: termwise suprema off the forbidden neighborhood.
    double hi = 0.0;
    for (int k = 0; k < depth; ++k) {
      const int len = depth - k;
      const std::uint64_t mask = (std::uint64_t{1} << len) - 1;
      hi += term_sup_restricted(param, w & mask, len, margin);
    }
    if (lo > hi) lo = hi;  // float slop on a genuine enclosure
    lo_terms.push_back(t * lo);
    hi_terms.push_back(t * hi);
  }

  if (admissible_words == 0) {
    if (forbidden_depth >= 2)
      throw InternalError("restricted_partition_pressure: empty admissible set at m >= 2");
    throw std::invalid_argument("restricted_partition_pressure: no admissible words");
  }

  PressureEstimate est;
  est.t = t;
  est.depth = depth;
  est.mode = PressureEstimate::Mode::kSupBased;
  est.restricted_m = forbidden_depth;
  const double a = log_mean_exp(lo_terms, depth, 1);
  const double b = log_mean_exp(hi_terms, depth, 1);
  est.value = Bracket(down_ulp(std::min(a, b)), up_ulp(std::max(a, b)));
  return est;
}

}  // namespace tmspectra
