#include "gatesmith/synthesis.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <utility>
#include <vector>

#include "gatesmith/errors.hpp"
#include "gatesmith/lowering.hpp"
#include "gatesmith/metrics.hpp"

namespace gatesmith::synthesis {
namespace {

constexpr int kMaxK = 100000;

void require_not_half_pi(const Angle& theta) {
  if (theta.is_multiple_of_half_pi()) {
    throw PreconditionError("theta = " + theta.to_string() +
                            " is a multiple of pi/2; S would not be basis-changing");
  }
}

std::vector<int> iota(int from, int count) {
  std::vector<int> v(static_cast<std::size_t>(count));
  std::iota(v.begin(), v.end(), from);
  return v;
}

Angle half(const Angle& a) {
  if (const auto& f = a.exact()) return Angle::from_pi_fraction(f->num, 2 * f->den);
  return Angle(a.radians() / 2);
}

// A gate list with repeated blocks; flattening gives the circuit.
using Program = std::vector<std::pair<Circuit, std::int64_t>>;

Circuit flatten(const Program& program, int n_qubits) {
  Circuit out(n_qubits);
  for (const auto& [block, repeat] : program) {
    for (std::int64_t r = 0; r < repeat; ++r) out.append(block);
  }
  return out;
}

Program inverse(const Program& program) {
  Program out;
  for (auto it = program.rbegin(); it != program.rend(); ++it) out.emplace_back(it->first.inverse(), it->second);
  return out;
}

// W_{alpha/2} on 1 + 2k qubits as prefix, iteration^T, suffix.
Program half_alpha_program(const Angle& alpha, const Angle& theta, int k, HalfAnglePlan* plan_out) {
  const HalfAnglePlan plan = plan_half_alpha(alpha, theta, k);
  if (plan_out) *plan_out = plan;
  const int n = 1 + 2 * k;
  const std::vector<int> reg = iota(1, 2 * k);

  Circuit prefix(n);
  prefix.append(t_theta_power(theta, k), reg);
  Circuit step(n);
  step.append(grover_iteration(theta, k), reg);

  Circuit suffix(n);
  if (plan.reflected) suffix.add(gates::ReflectZero{2 * k, false}, reg);
  std::vector<int> mark = reg;
  mark.push_back(0);
  suffix.add(gates::MarkNonZeroFlip{2 * k}, mark);
  std::vector<int> ctrl = {0};
  ctrl.insert(ctrl.end(), reg.begin(), reg.end());
  suffix.add(gates::ControlledBlock{std::make_shared<const Circuit>(t_theta_power(theta, k))}, ctrl);

  Program p;
  p.emplace_back(std::move(prefix), 1);
  p.emplace_back(std::move(step), plan.iterations);
  p.emplace_back(std::move(suffix), 1);
  return p;
}

// Z[0], W^dagger, D, W on 1 + 2k qubits.
Program w_alpha_program(const Angle& alpha, const Angle& theta, int k, PrepMode prep,
                        HalfAnglePlan* plan_out) {
  const int n = 1 + 2 * k;
  Program w;
  if (prep == PrepMode::grover) {
    w = half_alpha_program(alpha, theta, k, plan_out);
  } else {
    Circuit r(n);
    r.add(gates::STheta{half(alpha)}, {0});
    w.emplace_back(std::move(r), 1);
  }
  Program out;
  Circuit z(n);
  z.add(gates::Z{}, {0});
  out.emplace_back(std::move(z), 1);
  for (auto& b : inverse(w)) out.push_back(std::move(b));
  Circuit d(n);
  d.add(gates::ReflectZero{n, true}, iota(0, n));
  out.emplace_back(std::move(d), 1);
  for (auto& b : w) out.push_back(std::move(b));
  return out;
}

std::int64_t phase_uses(const Circuit& c) {
  std::int64_t uses = 0;
  for (const auto& [name, count] : c.gate_counts()) {
    if (name == "z" || name == "reflect_zero") uses += count;
  }
  return uses;
}

std::int64_t phase_uses(const Program& program) {
  std::int64_t uses = 0;
  for (const auto& [block, repeat] : program) uses += phase_uses(block) * repeat;
  return uses;
}

int smallest_k_for_gamma(const Angle& theta, double target) {
  for (int k = 1; k <= kMaxK; ++k) {
    if (grover_gamma(theta, k) <= target) return k;
  }
  throw PreconditionError("eps is too small for the Grover register");
}

bool plan_feasible(const Angle& alpha, const Angle& theta, int k) {
  try {
    plan_half_alpha(alpha, theta, k);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

}  // namespace

// -----------------------------------------------------------------------------

StateVector phase_ancilla(const Angle& theta, int k) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  const double c = std::cos(theta.radians());
  const double s = std::sin(theta.radians());
  StateVector pair;
  pair.n_qubits = 2;
  pair.amplitudes = Eigen::Vector4d(-c * s, c * c, -s * s, s * c);
  StateVector out;
  for (int i = 0; i < k; ++i) out = tensor(out, pair);
  return out;
}

Circuit phase_ancilla_preparation(const Angle& theta, int k) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  Circuit c(2 * k);
  for (int i = 0; i < k; ++i) {
    c.add(gates::STheta{theta}, {2 * i});
    c.add(gates::X{}, {2 * i + 1});
    c.add(gates::STheta{theta}, {2 * i + 1});
  }
  return c;
}

double sigma_z_error_bound(const Angle& theta, int k) {
  const double c = std::cos(theta.radians());
  const double s = std::sin(theta.radians());
  return 2.0 * std::pow(c * c * c * c + s * s * s * s, k / 2.0);
}

Circuit build_sigma_z_tilde(const Angle& theta, int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  require_not_half_pi(theta);
  Circuit c(1 + 2 * k);
  c.add(gates::SigmaZTilde{k}, iota(0, 1 + 2 * k));
  return c;
}

int choose_k_sigma_z(const Angle& theta, double eps) {
  if (!(eps > 0.0)) throw PreconditionError("eps must be positive");
  require_not_half_pi(theta);
  for (int k = 1; k <= kMaxK; ++k) {
    if (sigma_z_error_bound(theta, k) <= eps * (1.0 + 1e-12)) return k;
  }
  throw PreconditionError("eps is too small for a phase ancilla register");
}

Circuit build_T_theta(const Angle& theta) {
  Circuit c(2);
  c.add(gates::STheta{theta}, {0});
  c.add(gates::Cnot{}, {0, 1});
  c.add(gates::SThetaInv{theta}, {0});
  return c;
}

Circuit t_theta_power(const Angle& theta, int k) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  const Circuit t = build_T_theta(theta);
  Circuit c(2 * k);
  for (int i = 0; i < k; ++i) {
    const int wiring[] = {2 * i, 2 * i + 1};
    c.append(t, wiring);
  }
  return c;
}

double grover_gamma(const Angle& theta, int k) {
  const double c = std::cos(theta.radians());
  return std::asin(std::pow(c * c, k));
}

int grover_iteration_count(double alpha, double gamma) {
  const double a = alpha / 2;
  if (!(gamma > 0.0) || !(gamma < M_PI / 2 - a)) {
    throw PreconditionError("gamma must lie in (0, pi/2 - alpha/2)");
  }
  const double t0 = std::round(((M_PI / 2 - a) / gamma - 1) / 2);
  for (double t : {t0, t0 - 1, t0 + 1}) {
    if (t < 0) continue;
    if (std::abs(M_PI / 2 - (2 * t + 1) * gamma - a) < gamma) return static_cast<int>(t);
  }
  throw PreconditionError("no iteration count satisfies the angle condition");
}

Circuit grover_iteration(const Angle& theta, int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  const std::vector<int> all = iota(0, 2 * k);
  const Circuit t = t_theta_power(theta, k);
  Circuit c(2 * k);
  c.add(gates::ReflectZero{2 * k, false}, all);
  c.append(t);
  c.add(gates::ReflectZero{2 * k, true}, all);
  c.append(t);
  return c;
}

HalfAnglePlan plan_half_alpha(const Angle& alpha, const Angle& theta, int k) {
  require_not_half_pi(theta);
  if (k < 1) throw PreconditionError("k must be at least 1");
  HalfAnglePlan plan;
  const double a = alpha.radians();
  plan.reflected = a / 2 >= M_PI / 2;
  plan.grover_alpha = plan.reflected ? 2 * M_PI - a : a;
  plan.gamma = grover_gamma(theta, k);
  if (!(plan.gamma < M_PI / 2 - plan.grover_alpha / 2)) {
    throw PreconditionError("k = " + std::to_string(k) + " is too small for alpha = " + alpha.to_string());
  }
  plan.iterations = grover_iteration_count(plan.grover_alpha, plan.gamma);
  return plan;
}

Circuit build_W_half_alpha(const Angle& alpha, const Angle& theta, int k) {
  return flatten(half_alpha_program(alpha, theta, k, nullptr), 1 + 2 * k);
}

WAlphaCircuit build_W_alpha(const Angle& alpha, const Angle& theta, int k, PrepMode prep,
                            SigmaZMode sigma_z) {
  if (k < 0 || (prep == PrepMode::grover && k < 1)) throw PreconditionError("k out of range");
  const int n = 1 + 2 * k;
  Circuit ir = flatten(w_alpha_program(alpha, theta, k, prep, nullptr), n);
  WAlphaCircuit out;
  if (!sigma_z.approximate) {
    out.sigma_z_uses = static_cast<int>(phase_uses(ir));
    out.circuit = std::move(ir);
    out.ancilla = StateVector::basis(2 * k, 0);
    return out;
  }
  require_not_half_pi(theta);
  PhaseRoutedCircuit routed = route_phases_through_sigma_z(ir, theta, sigma_z.k2, sigma_z.policy);
  out.circuit = std::move(routed.circuit);
  out.ancilla = tensor(StateVector::basis(2 * k, 0), routed.extension);
  out.sigma_z_uses = routed.sigma_z_uses;
  return out;
}

RealOperator rotation_matrix(double alpha) {
  RealOperator u(2, 2);
  u << std::cos(alpha), -std::sin(alpha), std::sin(alpha), std::cos(alpha);
  return u;
}

// -----------------------------------------------------------------------------

SynthesisResult synthesize(const Angle& alpha, const BasisSpec& basis, double eps,
                           const SynthesisOptions& options) {
  basis.require_basis_changing();
  if (!(eps > 0.0 && eps < 1.0)) throw PreconditionError("eps must lie in (0, 1)");
  if (!(options.gamma_fraction > 0.0)) throw PreconditionError("gamma_fraction must be positive");
  const Angle theta = basis.working_theta();

  // One U_alpha block, or two U_{alpha/2} blocks when alpha is so close to pi
  // that no register size reaches the reflected target.
  std::vector<Angle> segments = {alpha};
  double gamma_target = eps * options.gamma_fraction;
  int k1 = options.k1_override ? *options.k1_override : smallest_k_for_gamma(theta, gamma_target);
  auto feasible = [&](int k) {
    for (const auto& s : segments) {
      if (!plan_feasible(s, theta, k)) return false;
    }
    return true;
  };
  int k = k1;
  while (!feasible(k) && k < k1 + 32 && !options.k1_override) ++k;
  bool split = false;
  if (!feasible(k)) {
    split = true;
    segments = {half(alpha), half(alpha)};
    gamma_target /= 2;
    k1 = options.k1_override ? *options.k1_override : smallest_k_for_gamma(theta, gamma_target);
    k = k1;
    while (!feasible(k) && k < k1 + 32 && !options.k1_override) ++k;
    if (!feasible(k)) throw PreconditionError("no Grover register size reaches alpha = " + alpha.to_string());
  }
  k1 = k;

  const int n_ir = 1 + 2 * k1;
  Program program;
  HalfAnglePlan first_plan;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    HalfAnglePlan plan;
    for (auto& b : w_alpha_program(segments[i], theta, k1, PrepMode::grover, &plan)) program.push_back(std::move(b));
    if (i == 0) first_plan = plan;
  }
  const std::int64_t uses = phase_uses(program);
  const double nu = static_cast<double>(uses);

  int k2 = 0;
  if (options.k2_override) {
    k2 = *options.k2_override;
  } else if (options.policy == AncillaPolicy::shared) {
    const double g3 = std::pow(first_plan.gamma, 3);
    int k_acc = 1;
    while (sigma_z_error_bound(theta, k_acc) * nu * (nu + 1) / 2 > eps / 2 && k_acc < kMaxK) ++k_acc;
    k2 = std::max(choose_k_sigma_z(theta, g3), k_acc);
  } else {
    k2 = choose_k_sigma_z(theta, eps / (2 * nu));
  }
  const double per_use = sigma_z_error_bound(theta, k2);
  const double sigma_term =
      options.policy == AncillaPolicy::shared ? per_use * nu * (nu + 1) / 2 : per_use * nu;

  SynthesisResult result;
  SynthesisReport& report = result.report;
  report.bound_error = static_cast<double>(segments.size()) * 4 * first_plan.gamma + sigma_term;
  report.split = split;
  report.params = {k1, k2, first_plan.gamma, first_plan.iterations, options.policy};

  const SigmaZBuilder builder{k2, options.policy};
  LoweringTally tally;
  {
    BasisLowerer counter(n_ir, basis, builder);
    for (const auto& [block, repeat] : program) counter.lower(block, repeat, false);
    tally = counter.finish_tally();
  }
  report.gate_counts = tally.gate_counts;
  report.size = tally.size;
  report.total_qubits = tally.total_qubits;
  report.ancilla_count = tally.total_qubits - 1;
  report.sigma_z_uses = tally.sigma_z_uses;

  const bool verifiable = report.total_qubits <= options.max_qubits;
  if (tally.size > options.max_materialized_gates || !(verifiable || options.build_circuit)) {
    result.materialized = false;
    report.achieved_error = std::numeric_limits<double>::quiet_NaN();
    report.verification_note =
        verifiable ? "circuit of " + std::to_string(tally.size) + " gates was counted but not built"
                   : std::to_string(report.total_qubits) + " qubits exceed the verification cap of " +
                         std::to_string(options.max_qubits);
    return result;
  }
  BasisLowerer lowerer(n_ir, basis, builder);
  for (const auto& [block, repeat] : program) lowerer.lower(block, repeat, true);
  LoweredCircuit lowered = lowerer.finish();
  result.circuit = std::move(lowered.circuit);
  result.ancilla_bits = std::string(static_cast<std::size_t>(2 * k1), '0') + lowered.ancilla_bits;

  if (!verifiable) {
    report.achieved_error = std::numeric_limits<double>::quiet_NaN();
    report.verification_note = std::to_string(report.total_qubits) +
                               " qubits exceed the verification cap of " +
                               std::to_string(options.max_qubits);
    return result;
  }
  report.achieved_error = restricted_error(rotation_matrix(alpha.radians()), result.circuit,
                                           StateVector::from_bits(result.ancilla_bits),
                                           std::max(options.max_qubits, 1));
  report.verified = true;
  return result;
}

}  // namespace gatesmith::synthesis
