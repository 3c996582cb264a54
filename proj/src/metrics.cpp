#include "gatesmith/metrics.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <string>

#include "gatesmith/errors.hpp"

namespace gatesmith {

int qubits_for_dimension(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) {
    throw DimensionError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  return n;
}

double restricted_error(const RealOperator& target, const Circuit& circuit,
                        const StateVector& ancilla, int max_qubits) {
  if (target.rows() != target.cols()) throw DimensionError("target is not square");
  const int r = qubits_for_dimension(target.rows());
  const int n = circuit.n_qubits();
  if (r + ancilla.n_qubits != n) {
    throw DimensionError("target (" + std::to_string(r) + " qubits) plus ancilla (" +
                         std::to_string(ancilla.n_qubits) + ") does not match circuit width " +
                         std::to_string(n));
  }
  if (std::abs(ancilla.norm() - 1.0) > 1e-10) throw PreconditionError("ancilla is not normalized");
  if (n > max_qubits) {
    throw CapExceededError(std::to_string(n) + " qubits exceeds the verification cap of " +
                           std::to_string(max_qubits));
  }

  const Eigen::Index data_dim = target.rows();
  const Eigen::Index anc_dim = ancilla.amplitudes.size();
  Eigen::MatrixXd diff(data_dim * anc_dim, data_dim);
  for (Eigen::Index j = 0; j < data_dim; ++j) {
    StateVector input = tensor(StateVector::basis(r, static_cast<std::uint64_t>(j)), ancilla);
    StateVector out = simulate(circuit, std::move(input));
    for (Eigen::Index i = 0; i < data_dim; ++i) {
      out.amplitudes.segment(i * anc_dim, anc_dim) -= target(i, j) * ancilla.amplitudes;
    }
    diff.col(j) = out.amplitudes;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diff);
  return svd.singularValues()(0);
}

}  // namespace gatesmith
