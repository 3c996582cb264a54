#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gatesmith/basis.hpp"
#include "gatesmith/circuit.hpp"
#include "gatesmith/simulator.hpp"

namespace gatesmith::synthesis {

/// How Z-type phases are realized after lowering.
struct SigmaZBuilder {
  /// Pair count of each phase-ancilla register.
  int k2 = 1;
  AncillaPolicy policy = AncillaPolicy::shared;
};

/// Output of lowering: a circuit over {Toffoli, S} whose leading
/// `source_qubits` wires are the source circuit's wires and whose remaining
/// wires start in the computational basis state `ancilla_bits`.
struct LoweredCircuit {
  Circuit circuit{0};
  int source_qubits = 0;
  std::string ancilla_bits;
  int sigma_z_uses = 0;
  int phase_registers = 0;
};

/// Gate counts and width of a lowering that was counted rather than built.
struct LoweringTally {
  std::map<std::string, std::int64_t> gate_counts;
  std::int64_t size = 0;
  std::int64_t total_qubits = 0;
  std::int64_t sigma_z_uses = 0;
  std::int64_t phase_registers = 0;
};

/// Incremental lowering to the bare basis.
///
/// Rules: CNOT uses one |1> ancilla, X two; U_{-theta} = X U_theta X;
/// multi-controlled X uses a clean V-chain, a dirty (borrowed) V-chain, or
/// a one-bit split, in that order of preference; Z and the register
/// reflections route their phase through the sigma-z-tilde network on a
/// phase-ancilla register that is prepared at the start and unprepared at
/// the end; a controlled block adds its control to every classical gate and
/// leaves conjugating rotations V . C . V^-1 uncontrolled.
class BasisLowerer {
 public:
  BasisLowerer(int source_qubits, const BasisSpec& basis, SigmaZBuilder builder);
  ~BasisLowerer();
  BasisLowerer(const BasisLowerer&) = delete;
  BasisLowerer& operator=(const BasisLowerer&) = delete;

  /// Lowers `block` (on the source wires) `repeat` times.  With
  /// `materialize` false only the tally is updated.
  void lower(const Circuit& block, std::int64_t repeat = 1, bool materialize = true);

  const LoweringTally& tally() const;

  /// Adds the phase-ancilla preparation and returns the circuit.  Throws
  /// std::logic_error if any block was lowered without materializing.
  LoweredCircuit finish();
  /// Adds the phase-ancilla preparation to the tally only.
  LoweringTally finish_tally();

 private:
  class Impl;
  Impl* impl_;
};

/// One-shot lowering of a whole circuit.  Throws LoweringError for gates
/// with no rule (H, rotations by angles other than the basis angle,
/// controlled rotations that are not conjugations).
LoweredCircuit lower_to_basis(const Circuit& circuit, const BasisSpec& basis,
                              SigmaZBuilder builder = {});

/// True iff every gate is Toffoli or the basis gate S.
bool uses_only_basis(const Circuit& circuit, const BasisSpec& basis);

/// Multi-controlled X over explicit resources, Toffoli gates only.
/// `clean` wires must be |0> (and are returned to |0>); `dirty` wires may
/// hold anything and are restored.  Needs at least 3 controls and either
/// m - 2 spare wires or one dirty wire; throws LoweringError otherwise.
void append_multi_controlled_x(Circuit& circuit, const std::vector<int>& controls, int target,
                               const std::vector<int>& clean, const std::vector<int>& dirty);

/// IR-level pass: every Z becomes sigma_z_tilde on a phase register and
/// every ReflectZero flags a work wire and phase-flips it the same way.
/// Wires after the source wires: the flag wire (if needed), then the
/// registers.  `extension` is their initial state.
struct PhaseRoutedCircuit {
  Circuit circuit{0};
  StateVector extension;
  int sigma_z_uses = 0;
  int phase_registers = 0;
};

PhaseRoutedCircuit route_phases_through_sigma_z(const Circuit& circuit, const Angle& theta, int k2,
                                                AncillaPolicy policy);

}  // namespace gatesmith::synthesis
