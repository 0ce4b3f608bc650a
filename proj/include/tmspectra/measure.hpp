#ifndef TMSPECTRA_MEASURE_HPP
#define TMSPECTRA_MEASURE_HPP

#include <cstdint>
#include <vector>

#include "tmspectra/bracket.hpp"
#include "tmspectra/dyadic.hpp"
#include "tmspectra/extreal.hpp"
#include "tmspectra/parameter.hpp"

namespace tmspectra {

// Fourier coefficients of the order-N partial density
//   h_N(x) = prod_{k<N} (1 + cos(2 pi (2^k x - c))),
// built by the sparse shift recursion
//   coeff_{N+1}(m) = coeff_N(m) + (conj(phase)/2) coeff_N(m - 2^N)
//                              + (phase/2)       coeff_N(m + 2^N).
// Only m >= 0 is stored; coeff(-m) = conj(coeff(m)) since h_N is real, and
// coeff(m) = 0 for |m| >= 2^N, exactly.
class PartialProduct {
public:
  PartialProduct(CircleParameter param, int order, std::vector<Complex> coeff_nonneg);

  const CircleParameter& parameter() const { return param_; }
  int order() const { return order_; }
  Complex coeff(std::int64_t m) const;
  const std::vector<Complex>& nonnegative_coeffs() const { return coeff_; }

private:
  CircleParameter param_;
  int order_;
  std::vector<Complex> coeff_;
};

PartialProduct partial_product(const CircleParameter& param, int order);

// Evaluates both the direct product and the Fourier series and checks that
// they agree to 1e-8 (relative for large values) before returning the direct
// product.
double density_at(const PartialProduct& pp, double x);

// Exact trigonometric integral of the Fourier form over [m 2^-n, (m+1) 2^-n].
double cylinder_integral(const PartialProduct& pp, std::uint64_t m, int depth);

// All depth-n cylinder integrals at once: fold the spectrum modulo 2^n and
// inverse-transform. Cheaper than 2^n separate integrals.
std::vector<double> cylinder_integrals(const PartialProduct& pp, int depth);

// Measure of a cylinder: quadrature across buffer orders |w|+K-1, K, K+1
// spread into a bracket and clamped into the certified window
//   exp(sum_of_infs) <= mu(<w>) <= exp(sum_of_sups)
// from the potential extrema. A clamp is recorded, not an error.
struct CylinderMeasure {
  DyadicWord word;
  Bracket estimate;
  ExtReal gibbs_lo;
  double gibbs_hi = 0.0;
  bool clamped = false;
};

CylinderMeasure cylinder_measure(const CircleParameter& param, const DyadicWord& w,
                                 int buffer = 8);

struct CylinderMeasureSweep {
  int depth = 0;
  std::vector<Bracket> estimate;
  std::vector<double> gibbs_lo;  // may contain -inf
  std::vector<double> gibbs_hi;
  std::size_t clamp_events = 0;
};

CylinderMeasureSweep cylinder_measure_sweep(const CircleParameter& param, int depth,
                                            int buffer = 8);

// (1/n^2) * min over all depth-n words of a certified lower bound on
// log mu(<w>), built from the extension trick: log mu(<w>) >=
// termwise-inf over <wv> + log mu(<v>) with v the G-avoiding extension.
// Diagnostic for the measure-decay floor, not a sharp bound.
double measure_decay_check(const CircleParameter& param, int depth);

}  // namespace tmspectra

#endif  // TMSPECTRA_MEASURE_HPP
