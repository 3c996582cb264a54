#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>

#include "gatesmith/circuit.hpp"

namespace gatesmith {

/// Dense real operator on 2^n amplitudes.
using RealOperator = Eigen::MatrixXd;

/// Largest register circuit_unitary will materialize by default.
inline constexpr int kDefaultOperatorCap = 12;
/// Largest register the statevector routines will allocate.
inline constexpr int kDefaultStateCap = 26;

/// Real amplitude vector over n qubits; qubit 0 is the most significant bit.
struct StateVector {
  int n_qubits = 0;
  Eigen::VectorXd amplitudes = Eigen::VectorXd::Ones(1);

  static StateVector basis(int n_qubits, std::uint64_t index);
  /// Basis state from a bit string such as "0110" (character i is qubit i).
  static StateVector from_bits(const std::string& bits);

  double norm() const { return amplitudes.norm(); }
};

/// |a> (x) |b>, with a on the leading qubits.
StateVector tensor(const StateVector& a, const StateVector& b);

/// Local 2^a x 2^a matrix of a gate; the first listed qubit is the most
/// significant local bit.  Arity must not exceed 12.
RealOperator gate_matrix(const GateKind& kind);

/// Applies `kind` to `qubits` of `state`.
StateVector apply_gate(StateVector state, const GateKind& kind, std::span<const int> qubits);

/// Runs the whole circuit on `state`.
StateVector simulate(const Circuit& circuit, StateVector state);

/// In-place kernel used by the routines above.  Only basis indices whose
/// bits in `control_mask` are all set are acted on.
void apply_gate_inplace(Eigen::VectorXd& amplitudes, int n_qubits, const GateKind& kind,
                        std::span<const int> qubits, std::uint64_t control_mask = 0);

/// The operator the circuit denotes; column j is the image of |j>.
RealOperator circuit_unitary(const Circuit& circuit, int max_qubits = kDefaultOperatorCap);

/// Max-abs entry of O^T O - I.
double orthogonality_defect(const RealOperator& op);

}  // namespace gatesmith
