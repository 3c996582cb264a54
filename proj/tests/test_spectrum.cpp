#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gatesmith/errors.hpp"
#include "gatesmith/spectrum.hpp"

using namespace gatesmith;

namespace {

Eigen::MatrixXd random_orthogonal(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  return qr.householderQ() * Eigen::MatrixXd::Identity(d, d);
}

Eigen::MatrixXd planted(int plus, int minus, const std::vector<double>& angles) {
  const int d = plus + minus + 2 * static_cast<int>(angles.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  int i = 0;
  for (; i < plus; ++i) m(i, i) = 1;
  for (; i < plus + minus; ++i) m(i, i) = -1;
  for (double t : angles) {
    m(i, i) = std::cos(t);
    m(i, i + 1) = -std::sin(t);
    m(i + 1, i) = std::sin(t);
    m(i + 1, i + 1) = std::cos(t);
    i += 2;
  }
  return m;
}

}  // namespace

TEST(Spectrum, RecoversPlantedStructure) {
  std::mt19937_64 rng(1);
  const Eigen::MatrixXd q = random_orthogonal(9, rng);
  const Eigen::MatrixXd o = q * planted(2, 1, {0.4, 2.1, 0.4}) * q.transpose();
  const EigenSummary s = rotation_spectrum(o);
  EXPECT_EQ(s.dim, 9);
  EXPECT_EQ(s.plus_one_multiplicity, 2);
  EXPECT_EQ(s.minus_one_multiplicity, 1);
  ASSERT_EQ(s.rotations.size(), 2u);
  EXPECT_NEAR(s.rotations[0].angle, 0.4, 1e-12);
  EXPECT_EQ(s.rotations[0].multiplicity, 2);
  EXPECT_NEAR(s.rotations[1].angle, 2.1, 1e-12);
  EXPECT_EQ(s.rotation_count(), 3);
  EXPECT_LT((o * s.plus_one_basis - s.plus_one_basis).norm(), 1e-12);
  EXPECT_LT((o * s.minus_one_basis + s.minus_one_basis).norm(), 1e-12);
  for (const auto& b : s.rotations) {
    for (const auto& [u, v] : b.planes) {
      EXPECT_LT((o * u - (std::cos(b.angle) * u + std::sin(b.angle) * v)).norm(), 1e-11);
      EXPECT_LT((o * v - (-std::sin(b.angle) * u + std::cos(b.angle) * v)).norm(), 1e-11);
    }
  }
}

TEST(Spectrum, ReconstructionPropertyOnRandomOrthogonal) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 9;
    const Eigen::MatrixXd o = random_orthogonal(d, rng);
    const EigenSummary s = rotation_spectrum(o);
    int total = s.plus_one_multiplicity + s.minus_one_multiplicity;
    for (const auto& b : s.rotations) {
      total += 2 * b.multiplicity;
      EXPECT_GT(b.angle, 0.0);
      EXPECT_LT(b.angle, M_PI);
    }
    EXPECT_EQ(total, d);
    EXPECT_LT((reconstruct(s) - o).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Spectrum, AnglesNearZeroOrPiCountAsReal) {
  const Eigen::MatrixXd o = planted(0, 0, {1e-8, M_PI - 1e-8});
  const EigenSummary s = rotation_spectrum(o);
  EXPECT_EQ(s.plus_one_multiplicity, 2);
  EXPECT_EQ(s.minus_one_multiplicity, 2);
  EXPECT_TRUE(s.rotations.empty());
}

TEST(Spectrum, TraceIdentity) {
  std::mt19937_64 rng(4);
  const Eigen::MatrixXd o = random_orthogonal(7, rng);
  const EigenSummary s = rotation_spectrum(o);
  double tr = s.plus_one_multiplicity - s.minus_one_multiplicity;
  for (const auto& b : s.rotations) tr += 2 * b.multiplicity * std::cos(b.angle);
  EXPECT_NEAR(tr, o.trace(), 1e-12);
}

TEST(Spectrum, RejectsNonOrthogonal) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
  m(0, 1) = 0.1;
  EXPECT_THROW(rotation_spectrum(m), PreconditionError);
  EXPECT_THROW(rotation_spectrum(Eigen::MatrixXd::Identity(2, 3)), std::invalid_argument);
}
