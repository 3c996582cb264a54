#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gatesmith/errors.hpp"
#include "gatesmith/lowering.hpp"
#include "gatesmith/metrics.hpp"
#include "gatesmith/spectrum.hpp"
#include "gatesmith/synthesis.hpp"

using namespace gatesmith;
using namespace gatesmith::synthesis;

namespace {

double c4s4(double t) { return std::pow(std::cos(t), 4) + std::pow(std::sin(t), 4); }

// |phi_{a/2}> (x) |0^{2k}>.
Eigen::VectorXd ideal_prepared(double alpha, int k) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(Eigen::Index{1} << (1 + 2 * k));
  v(0) = std::cos(alpha / 2);
  v(Eigen::Index{1} << (2 * k)) = std::sin(alpha / 2);
  return v;
}

double prep_error(double alpha, const Angle& theta, int k) {
  const Circuit w = build_W_half_alpha(Angle(alpha), theta, k);
  return (simulate(w, StateVector::basis(1 + 2 * k, 0)).amplitudes - ideal_prepared(alpha, k)).norm();
}

}  // namespace

// -- phase ancilla / sigma-z ------------------------------------------------------

TEST(PhaseAncilla, Examples) {
  const StateVector empty = phase_ancilla(Angle(0.3), 0);
  EXPECT_EQ(empty.n_qubits, 0);
  EXPECT_EQ(empty.amplitudes.size(), 1);
  EXPECT_EQ(empty.amplitudes(0), 1.0);

  const StateVector p = phase_ancilla(Angle::parse("pi/4"), 1);
  EXPECT_LT((p.amplitudes - Eigen::Vector4d(-0.5, 0.5, -0.5, 0.5)).norm(), 1e-15);
  EXPECT_THROW(phase_ancilla(Angle(0.3), -1), PreconditionError);
}

TEST(PhaseAncilla, CaseOneProjectionNorm) {
  for (double t : {M_PI / 6, M_PI / 5, 1.0, 1.3}) {
    for (int k = 1; k <= 6; ++k) {
      const StateVector p = phase_ancilla(Angle(t), k);
      double norm2 = 0;
      for (Eigen::Index i = 0; i < p.amplitudes.size(); ++i) {
        bool all_differ = true;
        for (int pair = 0; pair < k; ++pair) {
          const int b = static_cast<int>((i >> (2 * k - 1 - 2 * pair)) & 1);
          const int bp = static_cast<int>((i >> (2 * k - 2 - 2 * pair)) & 1);
          all_differ = all_differ && b != bp;
        }
        if (all_differ) norm2 += p.amplitudes(i) * p.amplitudes(i);
      }
      EXPECT_NEAR(std::sqrt(norm2), std::pow(c4s4(t), k / 2.0), 1e-12);
    }
  }
  const StateVector p = phase_ancilla(Angle::parse("pi/6"), 2);
  double norm2 = 0;
  for (int i : {0b0110, 0b0101, 0b1010, 0b1001}) norm2 += p.amplitudes(i) * p.amplitudes(i);
  EXPECT_NEAR(std::sqrt(norm2), 0.625, 1e-12);
}

TEST(PhaseAncilla, PreparationCircuit) {
  for (int k = 0; k <= 3; ++k) {
    const Angle t(0.7);
    const StateVector out = simulate(phase_ancilla_preparation(t, k), StateVector::basis(2 * k, 0));
    EXPECT_LT((out.amplitudes - phase_ancilla(t, k).amplitudes).norm(), 1e-14);
  }
}

TEST(SigmaZ, ChooseKExamples) {
  EXPECT_EQ(choose_k_sigma_z(Angle::parse("pi/4"), 0.25), 6);
  EXPECT_EQ(choose_k_sigma_z(Angle::parse("pi/4"), 1.9), 1);
  EXPECT_EQ(choose_k_sigma_z(Angle::parse("pi/6"), 0.01), 23);
  EXPECT_THROW(choose_k_sigma_z(Angle::parse("pi/2"), 0.1), PreconditionError);
  EXPECT_THROW(choose_k_sigma_z(Angle(0.3), 0.0), PreconditionError);
}

TEST(SigmaZ, ChooseKIsMinimal) {
  for (double t : {0.3, M_PI / 6, 1.0, 1.3}) {
    for (double eps : {0.5, 0.1, 1e-3, 1e-6}) {
      const int k = choose_k_sigma_z(Angle(t), eps);
      EXPECT_LE(sigma_z_error_bound(Angle(t), k), eps * (1 + 1e-12));
      if (k > 1) {
        EXPECT_GT(sigma_z_error_bound(Angle(t), k - 1), eps);
      }
    }
  }
}

TEST(SigmaZ, ErrorMatchesBoundOnGrid) {
  for (double t : {M_PI / 6, M_PI / 5, 1.0, 1.3}) {
    for (int k = 1; k <= 10; ++k) {
      const Angle theta(t);
      const Circuit c = build_sigma_z_tilde(theta, k);
      RealOperator z(2, 2);
      z << 1, 0, 0, -1;
      const double err = restricted_error(z, c, phase_ancilla(theta, k));
      const double bound = sigma_z_error_bound(theta, k);
      EXPECT_LE(err, bound + 1e-10) << t << " " << k;
      // The bound is attained: the error lives entirely on the all-pairs-differ branch.
      EXPECT_NEAR(err, bound, 1e-10) << t << " " << k;
    }
  }
  EXPECT_LE(sigma_z_error_bound(Angle::parse("pi/4"), 6), 0.25 + 1e-15);
  EXPECT_THROW(build_sigma_z_tilde(Angle::parse("pi/2"), 2), PreconditionError);
  EXPECT_THROW(build_sigma_z_tilde(Angle(0.3), 0), PreconditionError);
}

// -- T_theta and Grover ---------------------------------------------------------

TEST(TTheta, SelfInverseAndOverlap) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 2 * M_PI);
  for (int i = 0; i < 10; ++i) {
    const RealOperator t = circuit_unitary(build_T_theta(Angle(u(rng))));
    EXPECT_LT((t * t - RealOperator::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-12);
  }
  const Angle th = Angle::parse("pi/6");
  EXPECT_NEAR(circuit_unitary(build_T_theta(th))(0, 0), 0.75, 1e-15);
  const StateVector one = simulate(t_theta_power(th, 2), StateVector::basis(4, 0));
  EXPECT_NEAR(one.amplitudes(0), 9.0 / 16.0, 1e-15);
  EXPECT_NEAR(std::sin(grover_gamma(th, 2)), 9.0 / 16.0, 1e-15);
}

TEST(Grover, IterationCountExamples) {
  EXPECT_EQ(grover_iteration_count(M_PI / 3, 0.1), 5);
  EXPECT_EQ(grover_iteration_count(0.7, 0.01), 61);
  const double g = 0.2;
  const double alpha = 2 * (M_PI / 2 - 3 * g);
  EXPECT_EQ(grover_iteration_count(alpha, g), 1);
  EXPECT_THROW(grover_iteration_count(M_PI / 3, 1.1), PreconditionError);
  EXPECT_THROW(grover_iteration_count(M_PI / 3, 0.0), PreconditionError);
}

TEST(Grover, IterationCountProperty) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> ua(0, M_PI), uf(0.001, 0.999);
  for (int i = 0; i < 2000; ++i) {
    const double alpha = ua(rng);
    const double gamma = uf(rng) * (M_PI / 2 - alpha / 2);
    const int t = grover_iteration_count(alpha, gamma);
    EXPECT_GE(t, 0);
    EXPECT_LT(std::abs(M_PI / 2 - (2 * t + 1) * gamma - alpha / 2), gamma);
  }
}

TEST(Grover, IterationIsPlaneRotationByTwoGamma) {
  const Angle th = Angle::parse("pi/6");
  for (int k = 1; k <= 3; ++k) {
    const RealOperator g = circuit_unitary(grover_iteration(th, k));
    const Eigen::VectorXd zero = StateVector::basis(2 * k, 0).amplitudes;
    const Eigen::VectorXd tilde = simulate(t_theta_power(th, k), StateVector::basis(2 * k, 0)).amplitudes;
    const double sg = zero.dot(tilde);
    const Eigen::VectorXd hat = (tilde - sg * zero).normalized();
    Eigen::MatrixXd basis(zero.size(), 2);
    basis << zero, hat;
    // Invariant plane.
    const Eigen::MatrixXd image = g * basis;
    EXPECT_LT((image - basis * (basis.transpose() * image)).norm(), 1e-12);
    const Eigen::MatrixXd m = basis.transpose() * image;
    const EigenSummary s = rotation_spectrum(m);
    ASSERT_EQ(s.rotation_count(), 1);
    EXPECT_NEAR(s.rotations[0].angle, 2 * grover_gamma(th, k), 1e-9);
    // Signed angle from |0^{2k}> in the (zero, hat) frame drops by exactly 2 gamma.
    const Eigen::VectorXd after = g * tilde;
    const double before_angle = std::atan2(hat.dot(tilde), sg);
    const double after_angle = std::atan2(hat.dot(after), zero.dot(after));
    EXPECT_NEAR(std::remainder(before_angle - after_angle - 2 * grover_gamma(th, k), 2 * M_PI), 0.0, 1e-9);
  }
}

TEST(Grover, PreparationWithinTwoGamma) {
  for (double t : {M_PI / 6, 1.0}) {
    for (double alpha : {M_PI / 3, 0.7, 2.0, 1.9 * M_PI}) {
      int tested = 0;
      for (int k = 1; k <= 6; ++k) {
        HalfAnglePlan plan;
        try {
          plan = plan_half_alpha(Angle(alpha), Angle(t), k);
        } catch (const PreconditionError&) {
          continue;
        }
        ++tested;
        EXPECT_LE(prep_error(alpha, Angle(t), k), 2 * plan.gamma + 1e-10) << t << " " << alpha << " " << k;
        EXPECT_EQ(plan.reflected, alpha > M_PI);
      }
      EXPECT_GT(tested, 0);
    }
  }
}

TEST(Grover, StepOneOverlap) {
  const Angle th = Angle::parse("pi/6");
  const int k = 2;
  Circuit step1(1 + 2 * k);
  step1.append(t_theta_power(th, k), std::vector<int>{1, 2, 3, 4});
  const StateVector s = simulate(step1, StateVector::basis(1 + 2 * k, 0));
  EXPECT_NEAR(s.amplitudes(0), 9.0 / 16.0, 1e-15);
}

TEST(Grover, TooSmallRegisterRejected) {
  EXPECT_THROW(build_W_half_alpha(Angle(2.0), Angle::parse("pi/6"), 1), PreconditionError);
  EXPECT_THROW(build_W_half_alpha(Angle(0.5), Angle::parse("pi/2"), 3), PreconditionError);
  EXPECT_THROW(plan_half_alpha(Angle(M_PI), Angle(1.0), 8), PreconditionError);
}

// -- W_alpha ----------------------------------------------------------------------

TEST(WAlpha, OracleModeIsExact) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 2 * M_PI);
  for (int i = 0; i < 20; ++i) {
    const double alpha = u(rng);
    const Angle theta(u(rng));
    const int k = i % 3;
    const WAlphaCircuit w = build_W_alpha(Angle(alpha), theta, k, PrepMode::oracle);
    EXPECT_LT(restricted_error(rotation_matrix(alpha), w.circuit, w.ancilla), 1e-10);
  }
}

TEST(WAlpha, GroverModeWithinFourGamma) {
  const Angle th = Angle::parse("pi/6");
  const WAlphaCircuit w = build_W_alpha(Angle::parse("pi/3"), th, 8);
  const double err = restricted_error(rotation_matrix(M_PI / 3), w.circuit, w.ancilla);
  const double bound = 4 * std::asin(std::pow(std::cos(M_PI / 6), 16));
  EXPECT_NEAR(bound, 0.4012, 1e-4);
  EXPECT_NEAR(4 * grover_gamma(th, 8), bound, 1e-12);
  EXPECT_LE(err, bound);
}

TEST(WAlpha, ZeroAngleActsAsIdentity) {
  const Angle th(1.0);
  const WAlphaCircuit w = build_W_alpha(Angle(0.0), th, 3);
  EXPECT_LE(restricted_error(RealOperator::Identity(2, 2), w.circuit, w.ancilla), 4 * grover_gamma(th, 3));
}

TEST(WAlpha, ReflectedHalfAngle) {
  const Angle th = Angle::parse("pi/6");
  const double alpha = 1.9 * M_PI;
  for (int k = 2; k <= 4; ++k) {
    const HalfAnglePlan plan = plan_half_alpha(Angle(alpha), th, k);
    ASSERT_TRUE(plan.reflected);
    const WAlphaCircuit w = build_W_alpha(Angle(alpha), th, k);
    EXPECT_LE(restricted_error(rotation_matrix(alpha), w.circuit, w.ancilla), 4 * plan.gamma + 1e-10);
  }
}

TEST(WAlpha, ApproximateSigmaZWithinAccountedBound) {
  const Angle th = Angle::parse("pi/4");
  struct Case {
    AncillaPolicy policy;
    int k;
    int k2;
  };
  // Fresh registers grow with every use, so that case stays small.
  for (const Case c : {Case{AncillaPolicy::shared, 2, 3}, Case{AncillaPolicy::fresh, 1, 1}}) {
    const AncillaPolicy policy = c.policy;
    const WAlphaCircuit w = build_W_alpha(Angle(0.7), th, c.k, PrepMode::grover, SigmaZMode::approx(c.k2, policy));
    const double n = w.sigma_z_uses;
    const double d = sigma_z_error_bound(th, c.k2);
    const double bound = 4 * grover_gamma(th, c.k) + (policy == AncillaPolicy::shared ? d * n * (n + 1) / 2 : d * n);
    EXPECT_LE(restricted_error(rotation_matrix(0.7), w.circuit, w.ancilla), bound);
  }
}

TEST(WAlpha, SharedAncillaDegradationFollowsAccumulationModel) {
  const Angle th(1.0);
  const int k2 = 3;
  const double d = sigma_z_error_bound(th, k2);
  RealOperator z(2, 2);
  z << 1, 0, 0, -1;
  for (int uses = 1; uses <= 10; ++uses) {
    Circuit c(1);
    for (int i = 0; i < uses; ++i) c.add(gates::Z{}, {0});
    const PhaseRoutedCircuit r = route_phases_through_sigma_z(c, th, k2, AncillaPolicy::shared);
    ASSERT_EQ(r.phase_registers, 1);
    const RealOperator target = uses % 2 ? z : RealOperator::Identity(2, 2);
    const double err = restricted_error(target, r.circuit, r.extension);
    EXPECT_LE(err, d * uses * (uses + 1) / 2.0 + 1e-12) << uses;
    // Uses compose exactly on the agreeing branch, so reuse never adds error.
    EXPECT_LE(err, d + 1e-12) << uses;
  }
}

// -- end to end -------------------------------------------------------------------

TEST(Synthesize, Preconditions) {
  EXPECT_THROW(synthesize(Angle(0.3), BasisSpec{Angle::parse("pi/2"), false}, 0.1), PreconditionError);
  EXPECT_THROW(synthesize(Angle(0.3), BasisSpec{Angle::parse("pi"), true}, 0.1), PreconditionError);
  EXPECT_THROW(synthesize(Angle(0.3), BasisSpec{Angle(0.5), false}, 0.0), PreconditionError);
  EXPECT_THROW(synthesize(Angle(0.3), BasisSpec{Angle(0.5), false}, 1.0), PreconditionError);
}

TEST(Synthesize, ParametersSatisfyInvariants) {
  for (double t : {M_PI / 6, 1.0}) {
    for (double alpha : {M_PI / 3, 0.7, 2.0}) {
      for (double eps : {0.2, 0.1, 0.05}) {
        SynthesisOptions opt;
        opt.build_circuit = false;
        const SynthesisResult r = synthesize(Angle(alpha), BasisSpec{Angle(t), false}, eps, opt);
        const auto& p = r.report.params;
        EXPECT_NEAR(std::sin(p.gamma), std::pow(std::cos(t), 2 * p.k1), 1e-12);
        EXPECT_LT(std::abs(M_PI / 2 - (2 * p.grover_T + 1) * p.gamma - alpha / 2), p.gamma);
        EXPECT_LE(p.gamma, eps / 8);
        EXPECT_GT(grover_gamma(Angle(t), p.k1 - 1), eps / 8);
        EXPECT_LE(r.report.bound_error, eps);
        EXPECT_GT(r.report.size, 0);
        EXPECT_EQ(r.report.ancilla_count, r.report.total_qubits - 1);
        EXPECT_FALSE(r.report.verified);
        EXPECT_FALSE(r.report.verification_note.empty());
      }
    }
  }
}

TEST(Synthesize, SizeGrowsAsEpsShrinks) {
  SynthesisOptions opt;
  opt.build_circuit = false;
  std::int64_t last = 0;
  for (double eps : {0.2, 0.1, 0.05, 0.025}) {
    const auto r = synthesize(Angle(0.7), BasisSpec{Angle::parse("pi/6"), false}, eps, opt);
    EXPECT_GT(r.report.size, last);
    last = r.report.size;
  }
}

TEST(Synthesize, CountedSizeMatchesBuiltCircuit) {
  SynthesisOptions opt;
  opt.build_circuit = true;
  for (auto policy : {AncillaPolicy::shared, AncillaPolicy::fresh}) {
    opt.policy = policy;
    const auto r = synthesize(Angle(2.0), BasisSpec{Angle(1.0), false}, 0.2, opt);
    ASSERT_TRUE(r.materialized);
    EXPECT_EQ(static_cast<std::int64_t>(r.circuit.size()), r.report.size);
    EXPECT_EQ(r.circuit.gate_counts(), r.report.gate_counts);
    EXPECT_EQ(r.circuit.n_qubits(), r.report.total_qubits);
    EXPECT_EQ(static_cast<std::int64_t>(r.ancilla_bits.size()), r.report.ancilla_count);
    EXPECT_TRUE(uses_only_basis(r.circuit, BasisSpec{Angle(1.0), false}));
  }
}

TEST(Synthesize, DeterministicForFixedInputs) {
  const auto a = synthesize(Angle(0.7), BasisSpec{Angle(1.0), false}, 0.2);
  const auto b = synthesize(Angle(0.7), BasisSpec{Angle(1.0), false}, 0.2);
  EXPECT_EQ(a.report.gate_counts, b.report.gate_counts);
  EXPECT_EQ(a.ancilla_bits, b.ancilla_bits);
  ASSERT_EQ(a.circuit.size(), b.circuit.size());
  for (std::size_t i = 0; i < a.circuit.size(); ++i) {
    EXPECT_EQ(a.circuit.gates()[i].qubits, b.circuit.gates()[i].qubits);
  }
}

TEST(Synthesize, VerifiedPipelineAtForcedSmallParameters) {
  SynthesisOptions opt;
  opt.k1_override = 2;
  opt.k2_override = 2;
  opt.max_qubits = 20;
  const BasisSpec basis{Angle::parse("pi/4"), false};
  const auto r = synthesize(Angle(0.7), basis, 0.9, opt);
  ASSERT_TRUE(r.report.verified) << r.report.verification_note;
  EXPECT_LE(r.report.achieved_error, r.report.bound_error);
  EXPECT_TRUE(uses_only_basis(r.circuit, basis));
  EXPECT_EQ(r.circuit.n_qubits(), r.report.total_qubits);
  // Same circuit, unlowered with exact phases, for reference.
  const WAlphaCircuit ir = build_W_alpha(Angle(0.7), basis.s_theta, 2);
  const double ir_err = restricted_error(rotation_matrix(0.7), ir.circuit, ir.ancilla);
  EXPECT_LE(std::abs(r.report.achieved_error - ir_err), r.report.bound_error - 4 * r.report.params.gamma + 1e-12);
}

TEST(Synthesize, ReflectionBasis) {
  SynthesisOptions opt;
  opt.k1_override = 2;
  opt.k2_override = 2;
  opt.max_qubits = 20;
  // Reflection at theta = pi/4 normalizes to the rotation by pi/4.
  const BasisSpec basis{Angle::parse("pi/4"), true};
  EXPECT_EQ(*basis.working_theta().exact(), (PiFraction{1, 4}));
  const auto r = synthesize(Angle(0.7), basis, 0.9, opt);
  ASSERT_TRUE(r.report.verified);
  EXPECT_LE(r.report.achieved_error, r.report.bound_error);
  EXPECT_TRUE(uses_only_basis(r.circuit, basis));
  EXPECT_GT(r.report.gate_counts.at("s_reflect"), 0);
  EXPECT_EQ(r.report.gate_counts.count("s_theta"), 0u);
}

TEST(Synthesize, AlphaNearPiSplits) {
  SynthesisOptions opt;
  opt.build_circuit = false;
  const auto r = synthesize(Angle::parse("pi"), BasisSpec{Angle::parse("pi/6"), false}, 0.2, opt);
  EXPECT_TRUE(r.report.split);
  EXPECT_LE(r.report.bound_error, 0.2);
  const auto q = synthesize(Angle(1.9 * M_PI), BasisSpec{Angle::parse("pi/6"), false}, 0.2, opt);
  EXPECT_FALSE(q.report.split);
}

TEST(Synthesize, ZeroAngleWithinHalf) {
  SynthesisOptions opt;
  opt.build_circuit = false;
  const auto r = synthesize(Angle(0.0), BasisSpec{Angle(0.9), false}, 0.5, opt);
  EXPECT_LE(r.report.bound_error, 0.5);
}

TEST(Synthesize, TinyEpsIsCountedNotBuilt) {
  const auto r = synthesize(Angle::parse("pi/3"), BasisSpec{Angle::parse("pi/6"), false}, 1e-6);
  EXPECT_FALSE(r.materialized);
  EXPECT_FALSE(r.report.verified);
  EXPECT_LE(r.report.bound_error, 1e-6);
  EXPECT_GT(r.report.size, 4'000'000);
  EXPECT_EQ(r.circuit.n_qubits(), 0);
}
