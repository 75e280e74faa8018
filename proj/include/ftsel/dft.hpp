#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ftsel/binning.hpp"
#include "ftsel/dataset.hpp"

namespace ftsel {

// Discriminant feature test result for one feature: the minimum over all
// candidate thresholds of the sample-weighted average entropy of the two
// induced subsets. Lower loss means a more discriminant feature; 0 means some
// threshold separates the classes perfectly.
struct DftScore {
  std::size_t feature_index = 0;
  double optimal_loss = 0;       // min over loss_curve, in [0, log2(C)]
  double optimal_threshold = 0;  // argmin candidate, smallest on ties
  bool degenerate = false;       // constant feature: no candidates, worst loss
  std::vector<std::pair<double, double>> loss_curve;  // (threshold, loss)
};

struct DftOptions {
  BinningConfig binning{};
  // Reweight class counts to equal priors before computing entropies.
  // Default off: raw empirical frequencies.
  bool class_balanced = false;
};

// Entropy in bits of a class-count vector: -sum_c p_c log2 p_c over classes
// with nonzero count, p_c = count_c / total. An empty subset has entropy 0.
double subset_entropy(std::span<const std::int64_t> class_counts);

// Weighted average entropy of the split at bin boundary b in [1, B-1]:
// (N_L * H_L + N_R * H_R) / N, left = bins [0, b).
double dft_loss_at(const BinHistogram& histogram, std::size_t boundary);

// Evaluates every candidate threshold and keeps the minimum. A constant
// feature gets optimal_loss = log2(C) at threshold = min with the degenerate
// flag set, so it ranks last instead of failing a batch run.
DftScore dft_score(std::span<const double> feature_column, const Target& target,
                   const DftOptions& options = {});

// One score per feature, index-aligned.
std::vector<DftScore> dft_score_all(const FeatureMatrix& matrix, const Target& target,
                                    const DftOptions& options = {});

}  // namespace ftsel
