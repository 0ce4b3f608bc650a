#ifndef TMSPECTRA_SPECTRA_HPP
#define TMSPECTRA_SPECTRA_HPP

#include "tmspectra/curves.hpp"
#include "tmspectra/parameter.hpp"

namespace tmspectra {

enum class LqPipeline { kPressurePartition, kMeasurePartition };

// L^q-spectrum in log-2 units: the pressure pipeline rescales the partition
// pressure at t = q; the measure pipeline forms sum_w mu(<w>)^q from the
// buffered cylinder-measure brackets. Negative q is rejected on the measure
// pipeline when any cylinder bracket touches zero.
SpectrumCurve lq_spectrum(const CircleParameter& param, const std::vector<double>& q_grid,
                          int depth, LqPipeline pipeline, int buffer = 8, unsigned workers = 0);

// The exact curve beta(q) = 1 - q of the uniform cylinder weights 2^-n; the
// closed-form harness for the dimension formulas downstream.
SpectrumCurve uniform_measure_curve(const std::vector<double>& q_grid);

// Discrete convex conjugate sup_q (q a - p(q)) over the curve's grid, taken
// on the bracket envelopes separately (conjugating the lower envelope gives
// the upper bound and vice versa). The alpha range is read from one-sided
// difference quotients at the grid ends.
LegendreCurve legendre(const SpectrumCurve& curve, const std::vector<double>& alphas);

// Default alpha grid: difference-quotient slopes of the curve plus a uniform
// fill between the extreme slopes.
std::vector<double> default_alpha_grid(const SpectrumCurve& curve, int fill = 65);

// Birkhoff spectrum -p*(alpha)/log 2 on the interior slope range, clipped to
// [0, 1]; zero outside. Undefined at c = 0.
LegendreCurve birkhoff_spectrum(const CircleParameter& param, const std::vector<double>& alphas,
                                int depth, unsigned workers = 0);

// Local-dimension spectrum: the Birkhoff spectrum read at -alpha log 2, with
// the endpoint alpha = -alpha_min/log 2 flagged as excluded.
LegendreCurve dimension_spectrum(const CircleParameter& param, const std::vector<double>& alphas,
                                 int depth, unsigned workers = 0);

struct FourierDimensionReport {
  Bracket eigen_route;     // 1 - log2(dominant eigenvalue)
  Bracket pressure_route;  // beta(2) from the partition pressure
  Bracket theta_route;     // 1 - regression slope of the correlation sums
};

FourierDimensionReport fourier_dimension(const CircleParameter& param, int depth = 18,
                                         int kmax = 20, unsigned workers = 0);

// Crossing inf{q > 0 : beta(q) < r q} located on the piecewise-linear bracket
// envelopes of the curve.
Bracket q_r(const SpectrumCurve& curve, double r);

// r q_r / (1 - q_r); zero for the point mass at c = 0. A q_r bracket
// containing 1 leaves the value undefined and is reported as an error.
Bracket quantization_dimension(const CircleParameter& param, double r,
                               const SpectrumCurve& curve);

// q_1: the exponent governing the eigenvalue-count growth. Undefined at c = 0.
Bracket spectral_dimension(const CircleParameter& param, const SpectrumCurve& curve);

}  // namespace tmspectra

#endif  // TMSPECTRA_SPECTRA_HPP
