#include "gatesmith/circuit.hpp"

#include <algorithm>
#include <numeric>

#include "gatesmith/errors.hpp"

namespace gatesmith {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

int arity(const GateKind& kind) {
  return std::visit(
      overloaded{
          [](const gates::Toffoli&) { return 3; },
          [](const gates::Cnot&) { return 2; },
          [](const gates::ReflectZero& g) { return g.m; },
          [](const gates::MarkNonZeroFlip& g) { return g.m + 1; },
          [](const gates::SigmaZTilde& g) { return 1 + 2 * g.k; },
          [](const gates::ControlledBlock& g) { return 1 + g.inner->n_qubits(); },
          [](const auto&) { return 1; },
      },
      kind);
}

std::string kind_name(const GateKind& kind) {
  return std::visit(overloaded{
                        [](const gates::Toffoli&) { return "toffoli"; },
                        [](const gates::Cnot&) { return "cnot"; },
                        [](const gates::X&) { return "x"; },
                        [](const gates::Z&) { return "z"; },
                        [](const gates::H&) { return "h"; },
                        [](const gates::STheta&) { return "s_theta"; },
                        [](const gates::SThetaInv&) { return "s_theta_inv"; },
                        [](const gates::SReflect&) { return "s_reflect"; },
                        [](const gates::ReflectZero&) { return "reflect_zero"; },
                        [](const gates::MarkNonZeroFlip&) { return "mark_nonzero_flip"; },
                        [](const gates::SigmaZTilde&) { return "sigma_z_tilde"; },
                        [](const gates::ControlledBlock&) { return "controlled_block"; },
                    },
                    kind);
}

bool is_classical(const GateKind& kind) {
  return std::visit(overloaded{
                        [](const gates::H&) { return false; },
                        [](const gates::STheta&) { return false; },
                        [](const gates::SThetaInv&) { return false; },
                        [](const gates::SReflect&) { return false; },
                        [](const gates::ControlledBlock& g) {
                          return std::all_of(g.inner->gates().begin(), g.inner->gates().end(),
                                             [](const GateApp& a) { return is_classical(a.kind); });
                        },
                        [](const auto&) { return true; },
                    },
                    kind);
}

GateKind inverse(const GateKind& kind) {
  return std::visit(overloaded{
                        [](const gates::STheta& g) -> GateKind { return gates::SThetaInv{g.theta}; },
                        [](const gates::SThetaInv& g) -> GateKind { return gates::STheta{g.theta}; },
                        [](const gates::ControlledBlock& g) -> GateKind {
                          return gates::ControlledBlock{
                              std::make_shared<const Circuit>(g.inner->inverse())};
                        },
                        // Every other kind is an involution.
                        [](const auto& g) -> GateKind { return g; },
                    },
                    kind);
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0) throw PreconditionError("negative qubit count");
}

Circuit& Circuit::add(GateKind kind, std::vector<int> qubits) {
  if (const auto* block = std::get_if<gates::ControlledBlock>(&kind); block && !block->inner) {
    throw PreconditionError("controlled block without inner circuit");
  }
  const int expected = arity(kind);
  if (static_cast<int>(qubits.size()) != expected) {
    throw PreconditionError(kind_name(kind) + ": expected " + std::to_string(expected) +
                            " qubits, got " + std::to_string(qubits.size()));
  }
  for (int q : qubits) {
    if (q < 0 || q >= n_qubits_) {
      throw PreconditionError(kind_name(kind) + ": qubit index " + std::to_string(q) +
                              " out of range for " + std::to_string(n_qubits_) + " qubits");
    }
  }
  std::vector<int> sorted = qubits;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError(kind_name(kind) + ": duplicate qubit index");
  }
  gates_.push_back(GateApp{std::move(kind), std::move(qubits)});
  return *this;
}

Circuit& Circuit::append(const Circuit& other, std::span<const int> wiring) {
  if (static_cast<int>(wiring.size()) != other.n_qubits()) {
    throw DimensionError("wiring size does not match appended circuit");
  }
  for (const auto& g : other.gates()) {
    std::vector<int> mapped;
    mapped.reserve(g.qubits.size());
    for (int q : g.qubits) mapped.push_back(wiring[q]);
    add(g.kind, std::move(mapped));
  }
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits() > n_qubits_) throw DimensionError("appended circuit is wider");
  std::vector<int> wiring(other.n_qubits());
  std::iota(wiring.begin(), wiring.end(), 0);
  return append(other, wiring);
}

Circuit Circuit::inverse() const {
  Circuit out(n_qubits_);
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    out.gates_.push_back(GateApp{gatesmith::inverse(it->kind), it->qubits});
  }
  return out;
}

std::map<std::string, std::int64_t> Circuit::gate_counts() const {
  std::map<std::string, std::int64_t> counts;
  for (const auto& g : gates_) {
    if (const auto* block = std::get_if<gates::ControlledBlock>(&g.kind)) {
      for (const auto& [name, n] : block->inner->gate_counts()) counts[name] += n;
      counts["controlled_block"] += 1;
    } else {
      counts[kind_name(g.kind)] += 1;
    }
  }
  return counts;
}

Circuit widen(const Circuit& circuit, int n_qubits) {
  Circuit out(n_qubits);
  out.append(circuit);
  return out;
}

}  // namespace gatesmith
