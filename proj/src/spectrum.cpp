#include "gatesmith/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "gatesmith/errors.hpp"

namespace gatesmith {

namespace {

struct RawPlane {
  double angle;
  Eigen::VectorXd u, v;
};

Eigen::MatrixXd stack(const std::vector<Eigen::VectorXd>& cols, Eigen::Index dim) {
  Eigen::MatrixXd out(dim, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = cols[i];
  return out;
}

}  // namespace

int EigenSummary::rotation_count() const {
  int n = 0;
  for (const auto& r : rotations) n += r.multiplicity;
  return n;
}

EigenSummary rotation_spectrum(const RealOperator& op, const SpectrumOptions& options) {
  if (op.rows() != op.cols()) throw DimensionError("operator is not square");
  if (op.rows() == 0) throw DimensionError("empty operator");
  if (orthogonality_defect(op) > options.orthogonality_tolerance) {
    throw PreconditionError("rotation_spectrum: operator is not orthogonal");
  }

  const Eigen::Index n = op.rows();
  Eigen::RealSchur<Eigen::MatrixXd> schur(op);
  const Eigen::MatrixXd& t = schur.matrixT();
  const Eigen::MatrixXd& q = schur.matrixU();

  std::vector<Eigen::VectorXd> plus, minus;
  std::vector<RawPlane> planes;

  for (Eigen::Index i = 0; i < n;) {
    const bool two_by_two = (i + 1 < n) && std::abs(t(i + 1, i)) > 0.0;
    if (!two_by_two) {
      (t(i, i) > 0 ? plus : minus).push_back(q.col(i));
      ++i;
      continue;
    }
    const double a = t(i, i), b = t(i, i + 1), c = t(i + 1, i), d = t(i + 1, i + 1);
    Eigen::VectorXd u = q.col(i), v = q.col(i + 1);
    if (c - b < 0) std::swap(u, v);
    const double angle = std::atan2(std::abs(c - b) / 2.0, (a + d) / 2.0);
    if (angle < options.merge_gap) {
      plus.push_back(u);
      plus.push_back(v);
    } else if (angle > std::numbers::pi - options.merge_gap) {
      minus.push_back(u);
      minus.push_back(v);
    } else {
      planes.push_back(RawPlane{angle, u, v});
    }
    i += 2;
  }

  std::sort(planes.begin(), planes.end(),
            [](const RawPlane& x, const RawPlane& y) { return x.angle < y.angle; });

  EigenSummary out;
  out.dim = static_cast<int>(n);
  out.plus_one_multiplicity = static_cast<int>(plus.size());
  out.minus_one_multiplicity = static_cast<int>(minus.size());
  out.plus_one_basis = stack(plus, n);
  out.minus_one_basis = stack(minus, n);
  for (const auto& p : planes) {
    if (!out.rotations.empty() &&
        p.angle - out.rotations.back().angle < options.merge_gap) {
      auto& block = out.rotations.back();
      block.angle = (block.angle * block.multiplicity + p.angle) / (block.multiplicity + 1);
      block.multiplicity += 1;
      block.planes.emplace_back(p.u, p.v);
    } else {
      out.rotations.push_back(RotationBlock{p.angle, 1, {{p.u, p.v}}});
    }
  }
  return out;
}

RealOperator reconstruct(const EigenSummary& s) {
  RealOperator op = s.plus_one_basis * s.plus_one_basis.transpose() -
                    s.minus_one_basis * s.minus_one_basis.transpose();
  if (op.size() == 0) op = RealOperator::Zero(s.dim, s.dim);
  for (const auto& block : s.rotations) {
    const double c = std::cos(block.angle), sn = std::sin(block.angle);
    for (const auto& [u, v] : block.planes) {
      op += c * (u * u.transpose() + v * v.transpose()) + sn * (v * u.transpose() - u * v.transpose());
    }
  }
  return op;
}

}  // namespace gatesmith
