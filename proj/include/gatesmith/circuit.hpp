#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gatesmith/angle.hpp"

namespace gatesmith {

class Circuit;

namespace gates {

/// Doubly controlled bit flip; qubits (control, control, target).
struct Toffoli {};
/// Qubits (control, target).
struct Cnot {};
struct X {};
struct Z {};
struct H {};
/// The rotation U_theta = [[cos, -sin], [sin, cos]].
struct STheta {
  Angle theta;
};
/// U_{-theta}, the inverse of STheta(theta).
struct SThetaInv {
  Angle theta;
};
/// The reflection [[cos, sin], [sin, -cos]]; a basis gate when the
/// user-supplied S has determinant -1.
struct SReflect {
  Angle theta;
};
/// Diagonal on m qubits: -1 on |0...0>, +1 elsewhere.  With `negated`
/// the signs are swapped (+1 on |0...0>, -1 elsewhere).
struct ReflectZero {
  int m = 1;
  bool negated = false;
};
/// Qubits (r_0 .. r_{m-1}, flag): flips the flag iff the m-qubit register
/// is not all zeros.
struct MarkNonZeroFlip {
  int m = 1;
};
/// The von Neumann sign-flip permutation on (b0, b1, b1', ..., bk, bk'):
/// when b0 = 1, flips both bits of the first pair whose bits agree.
struct SigmaZTilde {
  int k = 1;
};
/// Qubits (control, inner qubits...): applies `inner` iff control is |1>.
struct ControlledBlock {
  std::shared_ptr<const Circuit> inner;
};

}  // namespace gates

using GateKind = std::variant<gates::Toffoli, gates::Cnot, gates::X, gates::Z, gates::H,
                              gates::STheta, gates::SThetaInv, gates::SReflect,
                              gates::ReflectZero, gates::MarkNonZeroFlip,
                              gates::SigmaZTilde, gates::ControlledBlock>;

/// Number of qubits the gate acts on.
int arity(const GateKind& kind);

/// snake_case name used in JSON and gate counts.
std::string kind_name(const GateKind& kind);

/// True for gates that permute computational basis states up to sign.
bool is_classical(const GateKind& kind);

GateKind inverse(const GateKind& kind);

struct GateApp {
  GateKind kind;
  std::vector<int> qubits;
};

/// An ordered gate list over a fixed number of qubits.  Gates are applied
/// in list order; qubit 0 is the most significant bit of a basis index.
class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<GateApp>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Validates arity, range and distinctness of `qubits`.
  Circuit& add(GateKind kind, std::vector<int> qubits);

  /// Appends `other`, mapping its qubit i to `wiring[i]`.
  Circuit& append(const Circuit& other, std::span<const int> wiring);
  /// Appends `other` on the identity wiring; requires other.n_qubits() <= n_qubits().
  Circuit& append(const Circuit& other);

  /// Reversed gate order with every gate inverted.
  Circuit inverse() const;

  /// Total gate count per kind name, counting nested blocks recursively.
  std::map<std::string, std::int64_t> gate_counts() const;

 private:
  int n_qubits_;
  std::vector<GateApp> gates_;
};

/// A copy of `circuit` widened to `n_qubits` total wires.
Circuit widen(const Circuit& circuit, int n_qubits);

}  // namespace gatesmith
