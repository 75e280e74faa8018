#pragma once

#include <span>
#include <string>

#include "ftsel/dataset.hpp"

namespace ftsel {

enum class BaselineMethod { anova_f, abs_corr, variance };

// Classic filter scores. Higher means more important, the reverse of the
// DFT/RFT losses; the ranking module normalizes the polarity.
struct BaselineScore {
  std::size_t feature_index = 0;
  BaselineMethod method = BaselineMethod::variance;
  double score = 0;
  bool degenerate = false;
};

// One-way ANOVA F statistic of the feature against class labels:
// (SS_between / (C-1)) / (SS_within / (N-C)). Zero within-class variance with
// nonzero between-class variance returns +infinity so the feature ranks
// first; zero both ways returns 0 with the degenerate flag.
BaselineScore anova_f(std::span<const double> feature_column, const Target& target);

// Absolute Pearson correlation; 0 with the degenerate flag when either vector
// is constant.
BaselineScore abs_corr(std::span<const double> feature_column,
                       std::span<const double> target_values);

// Unbiased sample variance of the column; ignores any target.
BaselineScore variance_score(std::span<const double> feature_column);

const char* baseline_method_name(BaselineMethod method);

}  // namespace ftsel
