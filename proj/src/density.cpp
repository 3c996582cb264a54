#include "gatesmith/density.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "gatesmith/errors.hpp"

namespace gatesmith::completeness {

namespace {

std::uint64_t cell_hash(const RealOperator& m, double resolution) {
  // FNV-1a over the rounded entries.
  std::uint64_t h = 1469598103934665603ull;
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const auto cell = static_cast<std::int64_t>(std::llround(m.data()[i] / resolution));
    h ^= static_cast<std::uint64_t>(cell);
    h *= 1099511628211ull;
  }
  return h;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return (n % 2) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

double operator_distance(const RealOperator& a, const RealOperator& b) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a - b);
  return svd.singularValues()(0);
}

RealOperator haar_special_orthogonal(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd g(dim, dim);
  for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = normal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    if (r(i, i) < 0) q.col(i) *= -1.0;
  }
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

CoverageReport density_probe(std::span<const RealOperator> generators,
                             const DensityProbeOptions& options) {
  if (generators.empty()) throw PreconditionError("density_probe: no generators");
  const Eigen::Index dim = generators.front().rows();
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim) throw DimensionError("density_probe: generator dimensions differ");
    if (orthogonality_defect(g) > 1e-8) throw PreconditionError("density_probe: generator is not orthogonal");
  }
  if (dim > 8) throw PreconditionError("density_probe: dimension above 8");
  if (options.max_word_len < 0 || options.max_word_len > 12) {
    throw PreconditionError("density_probe: max_word_len must be in [0, 12]");
  }
  if (options.n_targets < 1) throw PreconditionError("density_probe: need at least one target");

  std::vector<RealOperator> letters(generators.begin(), generators.end());
  if (options.include_inverses) {
    for (const auto& g : generators) {
      const RealOperator inv = g.transpose();
      const bool known = std::any_of(letters.begin(), letters.end(), [&](const RealOperator& l) {
        return (l - inv).cwiseAbs().maxCoeff() < options.dedup_radius;
      });
      if (!known) letters.push_back(inv);
    }
  }

  std::mt19937_64 rng(options.seed);
  std::vector<RealOperator> targets;
  for (int t = 0; t < options.n_targets; ++t) targets.push_back(haar_special_orthogonal(static_cast<int>(dim), rng));

  std::vector<RealOperator> words;
  std::unordered_multimap<std::uint64_t, std::size_t> cells;
  std::vector<double> best(targets.size(), std::numeric_limits<double>::infinity());
  const double sqrt_dim = std::sqrt(static_cast<double>(dim));

  auto try_insert = [&](RealOperator w) -> bool {
    const std::uint64_t key = cell_hash(w, options.hash_resolution);
    auto [lo, hi] = cells.equal_range(key);
    for (auto it = lo; it != hi; ++it) {
      const RealOperator& kept = words[it->second];
      if ((kept - w).cwiseAbs().maxCoeff() <= options.dedup_radius &&
          operator_distance(kept, w) <= options.dedup_radius) {
        return false;
      }
    }
    for (std::size_t t = 0; t < targets.size(); ++t) {
      // ||.||_F / sqrt(dim) <= ||.||_2 <= ||.||_F
      const double frob = (targets[t] - w).norm();
      if (frob / sqrt_dim >= best[t]) continue;
      best[t] = std::min(best[t], operator_distance(targets[t], w));
    }
    cells.emplace(key, words.size());
    words.push_back(std::move(w));
    return true;
  };

  CoverageReport report;
  report.dim = static_cast<int>(dim);
  auto record = [&](int len) {
    report.rows.push_back(CoverageRow{len, words.size(), *std::min_element(best.begin(), best.end()),
                                      median(best), *std::max_element(best.begin(), best.end())});
  };

  try_insert(RealOperator::Identity(dim, dim));
  record(0);
  std::vector<std::size_t> frontier{0};
  for (int len = 1; len <= options.max_word_len; ++len) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (const auto& letter : letters) {
        if (words.size() >= options.max_words) {
          report.truncated = true;
          break;
        }
        if (try_insert(letter * words[idx])) next.push_back(words.size() - 1);
      }
    }
    frontier = std::move(next);
    record(len);
  }
  report.target_distances = best;
  return report;
}

}  // namespace gatesmith::completeness
