// Test-only oracles, kept independent of the library code paths they check.
#ifndef TMSPECTRA_TESTS_ORACLES_HPP
#define TMSPECTRA_TESTS_ORACLES_HPP

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "tmspectra/autocorr.hpp"

namespace oracles {

using tmspectra::Complex;

// Dominant eigenvalue of a 3x3 complex matrix by plain power iteration with a
// Rayleigh quotient; the dominant root is real and simple here, so the
// iteration converges geometrically.
inline Complex power_iteration_eigenvalue(const tmspectra::McMatrix& m, int iters = 400) {
  std::array<Complex, 3> v{Complex{1.0, 0.3}, Complex{0.7, -0.2}, Complex{0.4, 0.1}};
  Complex lambda{0.0, 0.0};
  for (int it = 0; it < iters; ++it) {
    const std::array<Complex, 3> w = m.apply(v);
    double norm = 0.0;
    for (const auto& x : w) norm = std::max(norm, std::abs(x));
    Complex num{0.0, 0.0}, den{0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
      num += w[i] * std::conj(v[i]);
      den += v[i] * std::conj(v[i]);
    }
    lambda = num / den;
    for (auto& x : v) x /= norm;
    v = m.apply(v);
  }
  return lambda;
}

// Composite Simpson rule on [a, b].
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  const double h = (b - a) / (2.0 * panels);
  double acc = f(a) + f(b);
  for (int i = 1; i < 2 * panels; ++i) acc += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return acc * h / 3.0;
}

inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

}  // namespace oracles

#endif  // TMSPECTRA_TESTS_ORACLES_HPP
