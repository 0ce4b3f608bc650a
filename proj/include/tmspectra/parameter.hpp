#ifndef TMSPECTRA_PARAMETER_HPP
#define TMSPECTRA_PARAMETER_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "tmspectra/common.hpp"

namespace tmspectra {

// Reduced fraction num/den with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// The rotation parameter c on the torus together with the derived data every
// other module needs: the unit phase e^{2 pi i c} and the singularity
// position c + 1/2 (mod 1). When c is an exact rational p/q the fraction is
// kept so downstream bit-level logic can stay exact.
struct CircleParameter {
  double c = 0.0;
  Complex phase{1.0, 0.0};
  double singularity = 0.5;
  std::optional<Rational> rational_form;

  // Exact singularity fraction; only available in the rational case.
  std::optional<Rational> singularity_rational;

  bool is_zero() const { return rational_form ? rational_form->num == 0 : c == 0.0; }
};

CircleParameter make_parameter(double c);
CircleParameter make_parameter(std::int64_t p, std::int64_t q);

}  // namespace tmspectra

#endif  // TMSPECTRA_PARAMETER_HPP
