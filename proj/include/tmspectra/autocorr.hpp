#ifndef TMSPECTRA_AUTOCORR_HPP
#define TMSPECTRA_AUTOCORR_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "tmspectra/bracket.hpp"
#include "tmspectra/parameter.hpp"
#include "tmspectra/sequence.hpp"

namespace tmspectra {

// Autocorrelation coefficients eta_0 .. eta_N, built by
//   eta_{2n}   = eta_n
//   eta_{2n+1} = (phase*eta_n + conj(phase)*eta_{n+1}) / 2
// seeded by eta_0 = 1, eta_1 = phase / (2 - conj(phase)).
struct EtaTable {
  CircleParameter parameter;
  std::vector<Complex> eta;  // indices 0 .. N+1

  const Complex& operator[](std::uint64_t n) const { return eta[n]; }
  std::uint64_t max_index() const { return eta.size() - 1; }
};

EtaTable eta_table(const CircleParameter& param, std::uint64_t max_index);

// Finite-window Birkhoff average (1/k) sum_{m<k} conj(t_m) t_{m+lag}; the
// independent oracle for the recursion above.
Complex empirical_eta(const TmPrefix& prefix, std::uint64_t lag, std::uint64_t window);

struct McMatrix {
  std::array<std::array<Complex, 3>, 3> a;

  std::array<Complex, 3> apply(const std::array<Complex, 3>& v) const;
  Complex trace() const { return a[0][0] + a[1][1] + a[2][2]; }
};

McMatrix mc_matrix(const CircleParameter& param);

// State vector (Z_n, Pi_n); the third component conj(Pi_n) is implicit.
struct CorrelationState {
  double Z = 0.0;
  Complex Pi{0.0, 0.0};
  std::uint64_t index = 0;
};

// Brute-force state from the eta table: Z_n = sum_{m=n}^{2n-1} |eta_m|^2 and
// Pi_n = (phase^2/2) sum_{m=n}^{2n-1} eta_m conj(eta_{m+1}).
CorrelationState correlation_state(const EtaTable& table, std::uint64_t n);

// Doubling step: the matrix applied to (Z, Pi, conj Pi).
CorrelationState advance_state(const CircleParameter& param, const CorrelationState& s);

// Dominant eigenvalue of the doubling matrix, as the unique real root > 1 of
//   x^3 - (3/2 + 2cos(2 pi c)) x^2 + (1 + (5/2)cos(2 pi c)) x - 1 = 0,
// certified by bisection. Width <= 1e-12.
Bracket lambda1(const CircleParameter& param);

// The two companion eigenvalues obtained by deflating the cubic at lambda.
std::pair<Complex, Complex> companion_eigenvalues(const CircleParameter& param, double lambda);

// log2 of the dominant eigenvalue.
Bracket correlation_exponent(const CircleParameter& param);

struct ThetaGrowth {
  std::vector<std::pair<int, double>> theta;  // (k, Theta_{2^k})
  double slope = 0.0;       // least-squares slope of log Theta_{2^k} vs k log 2
  double slope_stderr = 0.0;
  int fit_k_lo = 0;
  int fit_k_hi = 0;
};

// Partial sums Theta_n = sum_{m<n} |eta_m|^2 along dyadic n, with the slope
// regressed over k in [kmax/2, kmax] to skip the transient.
ThetaGrowth theta_growth(const CircleParameter& param, int kmax);

}  // namespace tmspectra

#endif  // TMSPECTRA_AUTOCORR_HPP
