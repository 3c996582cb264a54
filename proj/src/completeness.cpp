#include "gatesmith/completeness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "gatesmith/errors.hpp"
#include "gatesmith/spectrum.hpp"

namespace gatesmith::completeness {

Circuit theorem3_circuit(const Angle& theta) {
  Circuit c(2);
  for (int rep = 0; rep < 2; ++rep) {
    c.add(gates::Cnot{}, {0, 1});
    c.add(gates::STheta{theta}, {0});
    c.add(gates::STheta{theta}, {1});
  }
  return c;
}

RealOperator build_theorem3_U(const Angle& theta) { return circuit_unitary(theorem3_circuit(theta)); }

Circuit theorem4_circuit() {
  Circuit c(3);
  for (int rep = 0; rep < 2; ++rep) {
    c.add(gates::Toffoli{}, {0, 1, 2});
    for (int q = 0; q < 3; ++q) c.add(gates::H{}, {q});
  }
  return c;
}

RealOperator build_theorem4_U() { return circuit_unitary(theorem4_circuit()); }

double theorem3_expected_angle(const Angle& theta) {
  const double c = std::cos(theta.radians());
  return 2.0 * std::acos(c * c);
}

double theorem4_expected_angle() { return std::numbers::pi - std::acos(0.75); }

// -- rational witness --------------------------------------------------------

IrrationalityWitness rational_witness(double x, std::int64_t q_max) {
  if (!std::isfinite(x)) throw PreconditionError("rational_witness: non-finite input");
  if (q_max < 1) throw PreconditionError("rational_witness: q_max must be >= 1");

  IrrationalityWitness w;
  w.value_over_pi = x;
  w.q_max = q_max;

  // Convergents h/k of the continued fraction of x.
  long double rem = x;
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(rem));
  std::int64_t k_prev = 0, k = 1;
  rem -= std::floor(rem);
  w.best_convergent = {h, k};
  for (int iter = 0; iter < 64 && rem != 0.0L; ++iter) {
    if (x - static_cast<double>(h) / static_cast<double>(k) == 0.0) break;
    rem = 1.0L / rem;
    const long double a_ld = std::floor(rem);
    rem -= a_ld;
    if (a_ld > static_cast<long double>(q_max)) break;
    const auto a = static_cast<std::int64_t>(a_ld);
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    if (k_next > q_max) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    w.best_convergent = {h, k};
  }
  w.residual = std::abs(x - static_cast<double>(w.best_convergent.first) /
                                static_cast<double>(w.best_convergent.second));
  if (w.residual < kRationalResidual) w.best_rational = w.best_convergent;
  return w;
}

// -- escape checks -----------------------------------------------------------

bool EscapeCheck::all_preserved() const {
  return std::all_of(preservation_residuals.begin(), preservation_residuals.end(),
                     [](double r) { return r < kPreserveTolerance; });
}

double span_residual(const RealOperator& u, const Eigen::VectorXd& xi) {
  const Eigen::VectorXd image = u * xi;
  return (image - xi.dot(image) * xi).norm();
}

double escape_margin(const RealOperator& u, const Eigen::VectorXd& xi) {
  return 1.0 - std::abs(xi.dot(u * xi));
}

EscapeCheck make_escape_check(const std::string& operator_id, const RealOperator& u,
                              const std::vector<LabeledVector>& preserved,
                              const LabeledVector& escaped) {
  EscapeCheck check;
  check.operator_id = operator_id;
  for (const auto& p : preserved) {
    check.preserved.push_back(p.label);
    check.preservation_residuals.push_back(span_residual(u, p.vector));
  }
  check.escaped_from = escaped.label;
  check.escape_margin = escape_margin(u, escaped.vector);
  return check;
}

namespace {

RealOperator single_gate_operator(int n, GateKind kind, std::vector<int> qubits) {
  Circuit c(n);
  c.add(std::move(kind), std::move(qubits));
  return circuit_unitary(c);
}

Eigen::VectorXd ket(int n, std::initializer_list<std::pair<int, double>> terms) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(Eigen::Index{1} << n);
  for (auto [index, amp] : terms) v[index] += amp;
  return v.normalized();
}

}  // namespace

Theorem3Escape stabilizer_escape_suite_theorem3(const Angle& theta) {
  if (theta.is_multiple_of_quarter_pi()) {
    throw PreconditionError("theta " + theta.to_string() +
                            " is a multiple of pi/4: S is not basis-changing after squaring");
  }
  const RealOperator u = build_theorem3_U(theta);
  const EigenSummary spectrum = rotation_spectrum(u);
  if (spectrum.plus_one_multiplicity != 2) {
    throw DegeneracyError("(S (x) S . CNOT)^2 has a +1 eigenspace of dimension " +
                          std::to_string(spectrum.plus_one_multiplicity) + ", expected 2");
  }

  Theorem3Escape out;
  out.xi1 = {"xi1", ket(2, {{0, 1.0}, {1, -1.0}, {2, 1.0}, {3, 1.0}})};
  out.xi1_eigen_residual = (u * out.xi1.vector - out.xi1.vector).norm();

  const Eigen::MatrixXd& basis = spectrum.plus_one_basis;
  const Eigen::Vector2d c = basis.transpose() * out.xi1.vector;
  out.xi2 = {"xi2", (basis * Eigen::Vector2d(-c[1], c[0])).normalized()};

  const RealOperator cnot01 = single_gate_operator(2, gates::Cnot{}, {0, 1});
  const RealOperator cnot10 = single_gate_operator(2, gates::Cnot{}, {1, 0});
  out.checks.push_back(make_escape_check("CNOT[1,2]", cnot01, {out.xi1}, out.xi2));
  out.checks.push_back(make_escape_check("CNOT[2,1]", cnot10, {}, out.xi1));
  return out;
}

Theorem4Escape stabilizer_escape_suite_theorem4() {
  Theorem4Escape out;
  out.xis = {
      {"|000>", ket(3, {{0, 1.0}})},
      {"|010>", ket(3, {{2, 1.0}})},
      {"|100>", ket(3, {{4, 1.0}})},
      {"|001>+|011>", ket(3, {{1, 1.0}, {3, 1.0}})},
      {"|101>+|110>+|111>", ket(3, {{5, 1.0}, {6, 1.0}, {7, 1.0}})},
      {"|011>-|101>", ket(3, {{3, 1.0}, {5, -1.0}})},
  };
  const RealOperator u = build_theorem4_U();
  for (const auto& xi : out.xis) out.eigen_residuals.push_back((u * xi.vector - xi.vector).norm());

  // Paper indices [a, b, c] are 1-based: controls a, b and target c.
  const RealOperator u1 = single_gate_operator(3, gates::H{}, {2});
  const RealOperator t231 = single_gate_operator(3, gates::Toffoli{}, {1, 2, 0});
  const RealOperator t132 = single_gate_operator(3, gates::Toffoli{}, {0, 2, 1});
  out.operators = {u1, u1 * t231 * u1, u1 * t132 * u1, t231, u1 * t231 * u1, t132};
  out.operator_ids = {"U1 = I(x)I(x)H",          "U2 = U1 T[2,3,1] U1", "U3 = U1 T[1,3,2] U1",
                      "U4 = T[2,3,1]",           "U5 = U1 T[2,3,1] U1", "U6 = T[1,3,2]"};

  for (std::size_t i = 0; i < out.operators.size(); ++i) {
    std::vector<LabeledVector> before(out.xis.begin(), out.xis.begin() + static_cast<long>(i));
    out.checks.push_back(make_escape_check(out.operator_ids[i], out.operators[i], before, out.xis[i]));
  }

  std::vector<int> order(out.operators.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < order.size() && ok; ++i) {
      std::vector<LabeledVector> before(out.xis.begin(), out.xis.begin() + static_cast<long>(i));
      ok = make_escape_check("", out.operators[order[i]], before, out.xis[i]).holds();
    }
    if (ok) {
      out.chain_ordering = order;
      break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace gatesmith::completeness
