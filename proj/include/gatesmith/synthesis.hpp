#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "gatesmith/basis.hpp"
#include "gatesmith/circuit.hpp"
#include "gatesmith/simulator.hpp"

namespace gatesmith::synthesis {

// -- sigma-z from phase ancillae ----------------------------------------------

/// (U_theta|0> (x) U_theta|1>)^{(x)k} on 2k qubits; k = 0 gives the scalar 1.
StateVector phase_ancilla(const Angle& theta, int k);

/// Prepares phase_ancilla(theta, k) from |0>^{2k} with 3k gates.
Circuit phase_ancilla_preparation(const Angle& theta, int k);

/// 2 (cos^4 + sin^4)^{k/2}: the worst-case error of one sigma-z-tilde use.
double sigma_z_error_bound(const Angle& theta, int k);

/// Circuit on 1 + 2k qubits holding the single sigma_z_tilde permutation.
/// Requires k >= 1 and theta not a multiple of pi/2.
Circuit build_sigma_z_tilde(const Angle& theta, int k);

/// Smallest k >= 1 with sigma_z_error_bound(theta, k) <= eps.
int choose_k_sigma_z(const Angle& theta, double eps);

// -- preparing |phi_{alpha/2}> --------------------------------------------------

/// U_{-theta}[0] . CNOT[0,1] . U_theta[0] (U_theta applied first).
Circuit build_T_theta(const Angle& theta);

/// T_theta on each of the k qubit pairs (2i, 2i+1).
Circuit t_theta_power(const Angle& theta, int k);

/// arcsin(cos^{2k} theta).
double grover_gamma(const Angle& theta, int k);

/// Iteration count T with |pi/2 - (2T+1) gamma - alpha/2| < gamma.
/// Requires alpha <= pi and 0 < gamma < pi/2 - alpha/2.
int grover_iteration_count(double alpha, double gamma);

/// One Grover step on the 2k-qubit register: reflect |0^2k> away, then
/// reflect about T_theta^{(x)k}|0^2k>.
Circuit grover_iteration(const Angle& theta, int k);

struct HalfAnglePlan {
  double gamma = 0.0;
  int iterations = 0;
  /// alpha/2 >= pi/2: Grover aims at pi - alpha/2 and a final reflection
  /// restores the intended angle.
  bool reflected = false;
  double grover_alpha = 0.0;  // the full angle handed to grover_iteration_count
};

HalfAnglePlan plan_half_alpha(const Angle& alpha, const Angle& theta, int k);

/// Circuit on 1 + 2k qubits mapping |0>|0^2k> to within 2 gamma of
/// |phi_{alpha/2}>|0^2k>.  Throws PreconditionError when gamma is not
/// below pi/2 - alpha'/2.
Circuit build_W_half_alpha(const Angle& alpha, const Angle& theta, int k);

// -- U_alpha --------------------------------------------------------------------

enum class PrepMode {
  grover,  ///< the Grover-based construction above
  oracle,  ///< the exact single-qubit rotation U_{alpha/2}
};

struct SigmaZMode {
  bool approximate = false;
  int k2 = 0;
  AncillaPolicy policy = AncillaPolicy::shared;

  static SigmaZMode exact() { return {}; }
  static SigmaZMode approx(int k2, AncillaPolicy policy = AncillaPolicy::shared) {
    return {true, k2, policy};
  }
};

struct WAlphaCircuit {
  Circuit circuit{0};
  /// State of every qubit after the data qubit 0.
  StateVector ancilla;
  int sigma_z_uses = 0;
};

/// W_{alpha/2} . D . W_{alpha/2}^dagger . Z[0], with D = +1 on the all-zeros
/// string of the 1 + 2k prepared qubits and -1 elsewhere.
WAlphaCircuit build_W_alpha(const Angle& alpha, const Angle& theta, int k,
                            PrepMode prep = PrepMode::grover,
                            SigmaZMode sigma_z = SigmaZMode::exact());

/// The 2 x 2 rotation U_alpha.
RealOperator rotation_matrix(double alpha);

// -- end to end -----------------------------------------------------------------

struct SynthesisParams {
  int k1 = 0;
  int k2 = 0;
  double gamma = 0.0;
  int grover_T = 0;
  AncillaPolicy policy = AncillaPolicy::shared;
};

struct SynthesisReport {
  /// Measured restricted error; only meaningful when `verified`.
  double achieved_error = 0.0;
  double bound_error = 0.0;
  bool verified = false;
  std::string verification_note;
  std::map<std::string, std::int64_t> gate_counts;
  std::int64_t size = 0;
  std::int64_t ancilla_count = 0;
  std::int64_t total_qubits = 0;
  std::int64_t sigma_z_uses = 0;
  /// U_alpha realized as two U_{alpha/2} blocks (alpha too close to pi).
  bool split = false;
  SynthesisParams params;
};

struct SynthesisOptions {
  AncillaPolicy policy = AncillaPolicy::shared;
  /// Dense verification is attempted only up to this many qubits.
  int max_qubits = 12;
  /// gamma target as a fraction of eps.
  double gamma_fraction = 1.0 / 8.0;
  /// Above this many lowered gates the circuit is counted, not built.
  std::int64_t max_materialized_gates = 4'000'000;
  /// Build the circuit even when it cannot be verified.
  bool build_circuit = true;
  /// Overrides of the automatic parameter choices (for experiments; the
  /// reported bound then reflects the forced values).
  std::optional<int> k1_override;
  std::optional<int> k2_override;
};

struct SynthesisResult {
  /// Empty (zero qubits) when the circuit was too large to build.
  Circuit circuit{0};
  bool materialized = true;
  /// Initial bits of qubits 1.. (qubit 0 is the data qubit).
  std::string ancilla_bits;
  SynthesisReport report;
};

/// Compiles U_alpha into Toffoli and S gates with restricted error <= eps.
SynthesisResult synthesize(const Angle& alpha, const BasisSpec& basis, double eps,
                           const SynthesisOptions& options = {});

}  // namespace gatesmith::synthesis
