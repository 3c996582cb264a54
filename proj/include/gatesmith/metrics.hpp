#pragma once

#include "gatesmith/circuit.hpp"
#include "gatesmith/simulator.hpp"

namespace gatesmith {

/// Worst-case deviation of `circuit` from `target` on data inputs, with the
/// trailing N - r qubits held in `ancilla`:
///
///   max_{|xi| = 1} || C (xi (x) anc) - (T xi) (x) anc ||
///
/// The data register is the leading r = log2(target.rows()) qubits.  The
/// value is the largest singular value of the 2^N x 2^r difference map,
/// assembled from 2^r statevector runs.
double restricted_error(const RealOperator& target, const Circuit& circuit,
                        const StateVector& ancilla, int max_qubits = kDefaultStateCap);

/// log2 of a power-of-two dimension; throws DimensionError otherwise.
int qubits_for_dimension(Eigen::Index dim);

}  // namespace gatesmith
