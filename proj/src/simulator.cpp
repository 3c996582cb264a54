#include "gatesmith/simulator.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "gatesmith/errors.hpp"

namespace gatesmith {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

struct Signed {
  std::uint64_t index;
  double sign;
};

std::uint64_t bit_of(int n_qubits, int qubit) {
  return std::uint64_t{1} << (n_qubits - 1 - qubit);
}

// 2x2 action [[a, b], [c, d]] of single-qubit gates.
struct Mat2 {
  double a, b, c, d;
};

Mat2 single_qubit_matrix(const GateKind& kind) {
  return std::visit(overloaded{
                        [](const gates::X&) { return Mat2{0, 1, 1, 0}; },
                        [](const gates::Z&) { return Mat2{1, 0, 0, -1}; },
                        [](const gates::H&) {
                          const double r = 1.0 / std::sqrt(2.0);
                          return Mat2{r, r, r, -r};
                        },
                        [](const gates::STheta& g) {
                          const double c = std::cos(g.theta.radians()), s = std::sin(g.theta.radians());
                          return Mat2{c, -s, s, c};
                        },
                        [](const gates::SThetaInv& g) {
                          const double c = std::cos(g.theta.radians()), s = std::sin(g.theta.radians());
                          return Mat2{c, s, -s, c};
                        },
                        [](const gates::SReflect& g) {
                          const double c = std::cos(g.theta.radians()), s = std::sin(g.theta.radians());
                          return Mat2{c, s, s, -c};
                        },
                        [](const auto&) -> Mat2 { throw std::logic_error("not a single-qubit gate"); },
                    },
                    kind);
}

bool is_single_qubit_matrix(const GateKind& kind) {
  return std::holds_alternative<gates::X>(kind) || std::holds_alternative<gates::Z>(kind) ||
         std::holds_alternative<gates::H>(kind) || std::holds_alternative<gates::STheta>(kind) ||
         std::holds_alternative<gates::SThetaInv>(kind) ||
         std::holds_alternative<gates::SReflect>(kind);
}

// Signed permutation on local indices of `width` bits (MSB = first qubit).
Signed local_permutation(const GateKind& kind, int width, std::uint64_t l) {
  return std::visit(
      overloaded{
          [&](const gates::ReflectZero& g) {
            const bool zero = (l == 0);
            return Signed{l, (zero != g.negated) ? -1.0 : 1.0};
          },
          [&](const gates::MarkNonZeroFlip&) {
            const std::uint64_t reg = l >> 1;
            return Signed{reg != 0 ? (l ^ 1u) : l, 1.0};
          },
          [&](const gates::SigmaZTilde& g) {
            const std::uint64_t cond = std::uint64_t{1} << (width - 1);
            if ((l & cond) == 0) return Signed{l, 1.0};
            for (int i = 0; i < g.k; ++i) {
              const int hi = width - 2 - 2 * i;  // bit of b_i
              const std::uint64_t b = (l >> hi) & 1u;
              const std::uint64_t bp = (l >> (hi - 1)) & 1u;
              if (b == bp) {
                return Signed{l ^ (std::uint64_t{3} << (hi - 1)), 1.0};
              }
            }
            return Signed{l, 1.0};
          },
          [&](const auto&) -> Signed { throw std::logic_error("not a permutation gate"); },
      },
      kind);
}

void validate(int n_qubits, const GateKind& kind, std::span<const int> qubits) {
  if (static_cast<int>(qubits.size()) != arity(kind)) {
    throw PreconditionError(kind_name(kind) + ": arity mismatch");
  }
  std::uint64_t seen = 0;
  for (int q : qubits) {
    if (q < 0 || q >= n_qubits) throw PreconditionError(kind_name(kind) + ": qubit index out of range");
    const std::uint64_t b = std::uint64_t{1} << q;
    if (seen & b) throw PreconditionError(kind_name(kind) + ": duplicate qubit index");
    seen |= b;
  }
}

void check_cap(int n_qubits, int cap) {
  if (n_qubits > cap) {
    throw CapExceededError(std::to_string(n_qubits) + " qubits exceeds the dense cap of " +
                           std::to_string(cap));
  }
}

}  // namespace

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  check_cap(n_qubits, kDefaultStateCap);
  StateVector s;
  s.n_qubits = n_qubits;
  s.amplitudes = Eigen::VectorXd::Zero(std::int64_t{1} << n_qubits);
  if (index >= static_cast<std::uint64_t>(s.amplitudes.size())) {
    throw PreconditionError("basis index out of range");
  }
  s.amplitudes[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

StateVector StateVector::from_bits(const std::string& bits) {
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw PreconditionError("bit string may only contain 0 and 1");
    index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return basis(static_cast<int>(bits.size()), index);
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  check_cap(a.n_qubits + b.n_qubits, kDefaultStateCap);
  StateVector out;
  out.n_qubits = a.n_qubits + b.n_qubits;
  out.amplitudes.resize(a.amplitudes.size() * b.amplitudes.size());
  for (Eigen::Index i = 0; i < a.amplitudes.size(); ++i) {
    out.amplitudes.segment(i * b.amplitudes.size(), b.amplitudes.size()) =
        a.amplitudes[i] * b.amplitudes;
  }
  return out;
}

void apply_gate_inplace(Eigen::VectorXd& amps, int n_qubits, const GateKind& kind,
                        std::span<const int> qubits, std::uint64_t control_mask) {
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  double* v = amps.data();

  if (is_single_qubit_matrix(kind)) {
    const Mat2 m = single_qubit_matrix(kind);
    const std::uint64_t t = bit_of(n_qubits, qubits[0]);
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & t) || (i & control_mask) != control_mask) continue;
      const double x0 = v[i], x1 = v[i | t];
      v[i] = m.a * x0 + m.b * x1;
      v[i | t] = m.c * x0 + m.d * x1;
    }
    return;
  }

  if (std::holds_alternative<gates::Toffoli>(kind) || std::holds_alternative<gates::Cnot>(kind)) {
    std::uint64_t controls = control_mask;
    for (std::size_t j = 0; j + 1 < qubits.size(); ++j) controls |= bit_of(n_qubits, qubits[j]);
    const std::uint64_t t = bit_of(n_qubits, qubits.back());
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & t) == 0 && (i & controls) == controls) std::swap(v[i], v[i | t]);
    }
    return;
  }

  if (const auto* block = std::get_if<gates::ControlledBlock>(&kind)) {
    const std::uint64_t mask = control_mask | bit_of(n_qubits, qubits[0]);
    std::vector<int> mapped;
    for (const auto& g : block->inner->gates()) {
      mapped.clear();
      for (int q : g.qubits) mapped.push_back(qubits[1 + q]);
      apply_gate_inplace(amps, n_qubits, g.kind, mapped, mask);
    }
    return;
  }

  // Generic signed permutation.
  const int width = static_cast<int>(qubits.size());
  std::vector<std::uint64_t> bits(width);
  std::uint64_t gate_mask = 0;
  for (int j = 0; j < width; ++j) {
    bits[j] = bit_of(n_qubits, qubits[j]);
    gate_mask |= bits[j];
  }
  Eigen::VectorXd out = amps;
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & control_mask) != control_mask) continue;
    std::uint64_t l = 0;
    for (int j = 0; j < width; ++j) l = (l << 1) | static_cast<std::uint64_t>((i & bits[j]) != 0);
    const Signed img = local_permutation(kind, width, l);
    std::uint64_t target = i & ~gate_mask;
    for (int j = 0; j < width; ++j) {
      if ((img.index >> (width - 1 - j)) & 1u) target |= bits[j];
    }
    out[static_cast<Eigen::Index>(target)] = img.sign * v[i];
  }
  amps.swap(out);
}

StateVector apply_gate(StateVector state, const GateKind& kind, std::span<const int> qubits) {
  validate(state.n_qubits, kind, qubits);
  apply_gate_inplace(state.amplitudes, state.n_qubits, kind, qubits);
  return state;
}

StateVector simulate(const Circuit& circuit, StateVector state) {
  if (state.n_qubits != circuit.n_qubits()) {
    throw DimensionError("state has " + std::to_string(state.n_qubits) + " qubits, circuit has " +
                         std::to_string(circuit.n_qubits()));
  }
  for (const auto& g : circuit.gates()) {
    apply_gate_inplace(state.amplitudes, state.n_qubits, g.kind, g.qubits);
  }
  return state;
}

RealOperator gate_matrix(const GateKind& kind) {
  const int a = arity(kind);
  check_cap(a, kDefaultOperatorCap);
  Circuit c(a);
  std::vector<int> q(a);
  for (int i = 0; i < a; ++i) q[i] = i;
  c.add(kind, q);
  return circuit_unitary(c);
}

RealOperator circuit_unitary(const Circuit& circuit, int max_qubits) {
  check_cap(circuit.n_qubits(), max_qubits);
  const int n = circuit.n_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  RealOperator op(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    Eigen::VectorXd col = Eigen::VectorXd::Unit(dim, j);
    for (const auto& g : circuit.gates()) apply_gate_inplace(col, n, g.kind, g.qubits);
    op.col(j) = col;
  }
  return op;
}

double orthogonality_defect(const RealOperator& op) {
  if (op.rows() != op.cols()) throw DimensionError("operator is not square");
  return (op.transpose() * op - RealOperator::Identity(op.rows(), op.cols())).cwiseAbs().maxCoeff();
}

}  // namespace gatesmith
