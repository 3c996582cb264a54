#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gatesmith/simulator.hpp"

namespace gatesmith::completeness {

struct DensityProbeOptions {
  int max_word_len = 6;
  int n_targets = 16;
  std::uint64_t seed = 1;
  /// Also enumerate words in the inverses (transposes) of the generators.
  bool include_inverses = true;
  /// Words within this operator-norm distance of a kept word are discarded.
  double dedup_radius = 1e-6;
  /// Cell size of the entry-wise hash used to find dedup candidates.
  double hash_resolution = 1e-3;
  /// Enumeration stops growing once this many distinct words are kept.
  std::size_t max_words = 400000;
};

/// Coverage after enumerating all words of length <= word_len.
struct CoverageRow {
  int word_len = 0;
  std::size_t words = 0;
  double min_distance = 0.0;
  double median_distance = 0.0;
  double max_distance = 0.0;
};

struct CoverageReport {
  int dim = 0;
  std::vector<CoverageRow> rows;  // word_len = 0 (identity only) .. max_word_len
  /// Distance from each target to the full word set.
  std::vector<double> target_distances;
  bool truncated = false;
};

/// Spectral-norm distance.
double operator_distance(const RealOperator& a, const RealOperator& b);

/// Haar-distributed element of SO(dim).
RealOperator haar_special_orthogonal(int dim, std::mt19937_64& rng);

/// Breadth-first enumeration of words over `generators` with geometric
/// deduplication, then distances from Haar-random SO(dim) targets to the
/// word set after each length.  Deterministic for a fixed seed.
CoverageReport density_probe(std::span<const RealOperator> generators,
                             const DensityProbeOptions& options);

}  // namespace gatesmith::completeness
