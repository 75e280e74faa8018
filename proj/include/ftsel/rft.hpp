#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ftsel/binning.hpp"
#include "ftsel/dataset.hpp"

namespace ftsel {

// Relevant feature test result for one feature: the minimum over all
// candidate thresholds of the sample-weighted average within-subset MSE when
// each subset predicts its own target mean. Lower is better; never exceeds
// the population variance of the target (the no-split predictor).
struct RftScore {
  std::size_t feature_index = 0;
  double optimal_loss = 0;
  double optimal_threshold = 0;  // argmin candidate, smallest on ties
  bool degenerate = false;       // constant feature: loss = var(y)
  std::vector<std::pair<double, double>> loss_curve;  // (threshold, loss)
};

// Mean squared error of predicting a subset by its mean, from the sufficient
// statistics: sum_sq/count - (sum/count)^2, clamped at 0 against rounding.
// Subsets of 0 or 1 samples have MSE 0.
double side_mse(std::int64_t count, double sum, double sum_sq);

// Weighted average within-subset MSE of the split at bin boundary b in
// [1, B-1]: (N_L * R_L + N_R * R_R) / N, left = bins [0, b).
double rft_loss_at(const BinHistogram& histogram, std::size_t boundary);

RftScore rft_score(std::span<const double> feature_column, const Target& target,
                   const BinningConfig& config = {});

std::vector<RftScore> rft_score_all(const FeatureMatrix& matrix, const Target& target,
                                    const BinningConfig& config = {});

}  // namespace ftsel
