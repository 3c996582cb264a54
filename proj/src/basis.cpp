#include "gatesmith/basis.hpp"

#include <cmath>

#include "gatesmith/errors.hpp"

namespace gatesmith::synthesis {

std::string to_string(AncillaPolicy policy) {
  return policy == AncillaPolicy::shared ? "shared" : "fresh";
}

AncillaPolicy parse_policy(const std::string& text) {
  if (text == "shared") return AncillaPolicy::shared;
  if (text == "fresh") return AncillaPolicy::fresh;
  throw PreconditionError("unknown ancilla policy '" + text + "' (expected shared or fresh)");
}

Angle BasisSpec::working_theta() const {
  if (!s_is_reflection) return s_theta;
  if (const auto& f = s_theta.exact()) return Angle::from_pi_fraction(f->den - 2 * f->num, 2 * f->den);
  return Angle(M_PI / 2 - s_theta.radians());
}

double BasisSpec::delta() const {
  const double c = std::cos(working_theta().radians());
  const double s = std::sin(working_theta().radians());
  return 1.0 / std::log(1.0 / (c * c * c * c + s * s * s * s));
}

double BasisSpec::delta_prime() const {
  const double c = std::cos(working_theta().radians());
  return 1.0 / std::log(1.0 / (c * c));
}

void BasisSpec::require_basis_changing() const {
  if (s_theta.is_multiple_of_half_pi()) {
    throw PreconditionError("S must be basis-changing: theta = " + s_theta.to_string() +
                            " is a multiple of pi/2");
  }
}

}  // namespace gatesmith::synthesis
