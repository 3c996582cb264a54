#pragma once

#include <string>

#include "gatesmith/angle.hpp"

namespace gatesmith::synthesis {

/// How approximate sigma-z gates obtain their phase ancilla.
enum class AncillaPolicy {
  shared,  ///< every use consumes the same register
  fresh,   ///< every use gets its own register
};

std::string to_string(AncillaPolicy policy);
AncillaPolicy parse_policy(const std::string& text);

/// The single-qubit basis gate S, either the rotation U_theta or the
/// reflection [[cos, sin], [sin, -cos]].  A reflection is normalized to the
/// rotation sigma-x . S = U_{pi/2 - theta}, which is what the constructions
/// consume.
struct BasisSpec {
  Angle s_theta;
  bool s_is_reflection = false;

  /// Angle of the rotation the constructions use.
  Angle working_theta() const;

  /// 1 / log(1 / (cos^4 + sin^4)) of the working angle.
  double delta() const;
  /// 1 / log(1 / cos^2) of the working angle.
  double delta_prime() const;

  /// Throws PreconditionError when S preserves the computational basis.
  void require_basis_changing() const;
};

}  // namespace gatesmith::synthesis
