#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gatesmith/angle.hpp"
#include "gatesmith/circuit.hpp"
#include "gatesmith/simulator.hpp"

namespace gatesmith::completeness {

using Rational = boost::rational<std::int64_t>;

// -- operator constructions -------------------------------------------------

/// [CNOT(0->1), S(0), S(1)] twice, i.e. (S (x) S . CNOT)^2 with S = U_theta.
Circuit theorem3_circuit(const Angle& theta);
RealOperator build_theorem3_U(const Angle& theta);

/// [Toffoli(0,1->2), H, H, H] twice, i.e. (H (x) H (x) H . Toffoli)^2.
Circuit theorem4_circuit();
RealOperator build_theorem4_U();

/// 2 arccos(cos^2 theta): the rotation angle of (U_theta (x) U_theta . CNOT)^2.
double theorem3_expected_angle(const Angle& theta);
/// pi - arccos(3/4).
double theorem4_expected_angle();

// -- exact characteristic-polynomial certificate ----------------------------

/// Exact eigen-structure of an orthogonal operator whose entries are integer
/// multiples of 1/denominator.  When exactly two eigenvalues are off the
/// real axis they are the roots of  lambda^2 - pair_sum lambda + pair_product.
struct CharpolyCertificate {
  int dim = 0;
  std::int64_t denominator = 1;
  Rational trace;
  int plus_one_multiplicity = 0;
  int minus_one_multiplicity = 0;
  int remaining = 0;
  std::optional<Rational> pair_sum;
  std::optional<Rational> pair_product;
  /// Both coefficients of the pair polynomial are integers.
  bool integral = true;
  /// The pair polynomial has no rational root.
  bool irreducible = false;

  /// A non-integral irreducible monic quadratic has roots that are not
  /// algebraic integers, hence not roots of unity, hence the rotation angle
  /// is an irrational multiple of pi.
  bool certifies_irrational_angle() const;
};

/// Throws ExactnessError unless every entry times `denominator` is exactly
/// an integer and O^T O = I holds exactly.
CharpolyCertificate exact_rotation_certificate(const RealOperator& op, std::int64_t denominator);

/// (H (x) H (x) H . Toffoli)^2 built in integer arithmetic; every entry is
/// exactly k/8 and therefore exactly representable as a double.
RealOperator theorem4_exact_operator();
/// (H (x) H . CNOT)^2 built the same way; entries are exactly k/4.
RealOperator cnot_hadamard_exact_operator();

/// True iff the exact certificate for (H (x) H (x) H . Toffoli)^2 shows trace
/// 9/2, six +1 eigenvalues, and a non-integral irreducible pair polynomial
/// with sum -3/2 and product 1.
bool check_theorem4_charpoly();

// -- irrationality heuristic -------------------------------------------------

struct IrrationalityWitness {
  double value_over_pi = 0.0;
  std::optional<std::pair<std::int64_t, std::int64_t>> best_rational;
  /// |value - p/q| for the best convergent with q <= q_max.
  double residual = 0.0;
  std::int64_t q_max = 1;
  /// The convergent itself, whether or not it was close enough to report.
  std::pair<std::int64_t, std::int64_t> best_convergent{0, 1};
};

inline constexpr double kRationalResidual = 1e-12;

/// Continued-fraction search for a rational p/q, q <= q_max, within 1e-12
/// of x.  A finite witness, not a proof.
IrrationalityWitness rational_witness(double x, std::int64_t q_max);

// -- stabilizer escape -------------------------------------------------------

struct EscapeCheck {
  std::string operator_id;
  std::vector<std::string> preserved;
  std::vector<double> preservation_residuals;
  std::string escaped_from;
  double escape_margin = 0.0;

  static constexpr double kPreserveTolerance = 1e-10;
  static constexpr double kEscapeMargin = 1e-3;

  bool all_preserved() const;
  bool escapes() const { return escape_margin > kEscapeMargin; }
  bool holds() const { return all_preserved() && escapes(); }
};

/// Distance of U xi from span{xi}.
double span_residual(const RealOperator& u, const Eigen::VectorXd& xi);
/// 1 - |<xi, U xi>|.
double escape_margin(const RealOperator& u, const Eigen::VectorXd& xi);

struct LabeledVector {
  std::string label;
  Eigen::VectorXd vector;
};

EscapeCheck make_escape_check(const std::string& operator_id, const RealOperator& u,
                              const std::vector<LabeledVector>& preserved,
                              const LabeledVector& escaped);

struct Theorem3Escape {
  LabeledVector xi1;  // 1/2 (|00> - |01> + |10> + |11>)
  LabeledVector xi2;  // +1 eigenvector of U orthogonal to xi1, computed numerically
  double xi1_eigen_residual = 0.0;
  std::vector<EscapeCheck> checks;
};

/// CNOT[0->1] preserves xi1 and moves span{xi2}; CNOT[1->0] moves span{xi1}.
/// Throws PreconditionError when theta is a multiple of pi/4, DegeneracyError
/// when the +1 eigenspace is not two-dimensional.
Theorem3Escape stabilizer_escape_suite_theorem3(const Angle& theta);

struct Theorem4Escape {
  std::vector<LabeledVector> xis;       // the six listed +1 eigenvectors, normalized
  std::vector<double> eigen_residuals;  // |U xi - xi|
  std::vector<RealOperator> operators;  // U1..U6 as written
  std::vector<std::string> operator_ids;
  std::vector<EscapeCheck> checks;      // check i: U_i vs xi_1..xi_{i-1}, xi_i
  /// An ordering of U1..U6 (0-based indices) that satisfies the escape
  /// chain, if one exists.
  std::optional<std::vector<int>> chain_ordering;
};

Theorem4Escape stabilizer_escape_suite_theorem4();

}  // namespace gatesmith::completeness
