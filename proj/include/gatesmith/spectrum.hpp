#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gatesmith/simulator.hpp"

namespace gatesmith {

/// A rotation by `angle` in (0, pi) acting on `multiplicity` mutually
/// orthogonal invariant planes.  For each plane (u, v): O u = cos u + sin v,
/// O v = -sin u + cos v.
struct RotationBlock {
  double angle = 0.0;
  int multiplicity = 0;
  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> planes;
};

/// Real canonical form of an orthogonal operator: +1 and -1 eigenspaces
/// plus 2D rotation blocks, so that plus + minus + 2 * sum(multiplicity) = dim.
struct EigenSummary {
  int dim = 0;
  int plus_one_multiplicity = 0;
  int minus_one_multiplicity = 0;
  Eigen::MatrixXd plus_one_basis;   // dim x plus_one_multiplicity, orthonormal columns
  Eigen::MatrixXd minus_one_basis;  // dim x minus_one_multiplicity
  std::vector<RotationBlock> rotations;  // ascending by angle

  int rotation_count() const;
};

struct SpectrumOptions {
  /// Maximum tolerated entry of O^T O - I.
  double orthogonality_tolerance = 1e-8;
  /// Rotation angles closer than this to 0 or pi count as +1 / -1, and
  /// rotation angles closer than this to each other are merged.
  double merge_gap = 1e-6;
};

EigenSummary rotation_spectrum(const RealOperator& op, const SpectrumOptions& options = {});

/// Reassembles the operator from its canonical form.
RealOperator reconstruct(const EigenSummary& summary);

}  // namespace gatesmith
