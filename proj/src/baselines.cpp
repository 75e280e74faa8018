#include "ftsel/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ftsel {

namespace {

bool all_equal(std::span<const double> v) {
  for (double x : v)
    if (x != v[0]) return false;
  return true;
}

double mean_of(std::span<const double> v) {
  double sum = 0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

}  // namespace

BaselineScore anova_f(std::span<const double> feature_column, const Target& target) {
  if (target.kind() != Target::Kind::categorical)
    throw std::invalid_argument("anova requires a categorical target");
  if (feature_column.size() != target.size())
    throw std::invalid_argument("feature/target length mismatch");
  const std::size_t n = feature_column.size();
  const std::size_t n_classes = static_cast<std::size_t>(target.n_classes());
  if (n <= n_classes) throw DataError("anova needs more samples than classes");

  const auto labels = target.labels();
  std::vector<double> class_sum(n_classes, 0.0);
  std::vector<std::int64_t> class_n(n_classes, 0);
  for (std::size_t i = 0; i < n; ++i) {
    class_sum[static_cast<std::size_t>(labels[i])] += feature_column[i];
    ++class_n[static_cast<std::size_t>(labels[i])];
  }
  std::vector<double> class_mean(n_classes, 0.0);
  for (std::size_t c = 0; c < n_classes; ++c)
    class_mean[c] = class_sum[c] / static_cast<double>(class_n[c]);
  const double grand_mean = mean_of(feature_column);

  double ss_between = 0;
  for (std::size_t c = 0; c < n_classes; ++c) {
    const double d = class_mean[c] - grand_mean;
    ss_between += static_cast<double>(class_n[c]) * d * d;
  }
  // Exact constancy within every class means SS_within is 0 regardless of
  // the rounding of the class mean.
  bool within_constant = true;
  std::vector<double> first_seen(n_classes, 0.0);
  std::vector<bool> seen(n_classes, false);
  double ss_within = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = static_cast<std::size_t>(labels[i]);
    const double d = feature_column[i] - class_mean[c];
    ss_within += d * d;
    if (!seen[c]) {
      seen[c] = true;
      first_seen[c] = feature_column[i];
    } else if (feature_column[i] != first_seen[c]) {
      within_constant = false;
    }
  }
  if (within_constant) ss_within = 0;

  BaselineScore out;
  out.method = BaselineMethod::anova_f;
  if (ss_within == 0) {
    if (ss_between > 0) {
      out.score = std::numeric_limits<double>::infinity();
    } else {
      out.score = 0;
      out.degenerate = true;
    }
    return out;
  }
  out.score = (ss_between / static_cast<double>(n_classes - 1)) /
              (ss_within / static_cast<double>(n - n_classes));
  return out;
}

BaselineScore abs_corr(std::span<const double> feature_column,
                       std::span<const double> target_values) {
  if (feature_column.size() != target_values.size())
    throw std::invalid_argument("feature/target length mismatch");
  if (feature_column.size() < 2) throw std::invalid_argument("need at least 2 samples");

  BaselineScore out;
  out.method = BaselineMethod::abs_corr;
  if (all_equal(feature_column) || all_equal(target_values)) {
    out.degenerate = true;
    return out;
  }
  const double mx = mean_of(feature_column);
  const double my = mean_of(target_values);
  double sxy = 0;
  double sxx = 0;
  double syy = 0;
  for (std::size_t i = 0; i < feature_column.size(); ++i) {
    const double dx = feature_column[i] - mx;
    const double dy = target_values[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  out.score = std::min(1.0, std::abs(sxy) / std::sqrt(sxx * syy));
  return out;
}

BaselineScore variance_score(std::span<const double> feature_column) {
  if (feature_column.size() < 2) throw std::invalid_argument("need at least 2 samples");
  BaselineScore out;
  out.method = BaselineMethod::variance;
  if (all_equal(feature_column)) {
    out.degenerate = true;
    return out;
  }
  const double m = mean_of(feature_column);
  double ss = 0;
  for (double v : feature_column) {
    const double d = v - m;
    ss += d * d;
  }
  out.score = ss / static_cast<double>(feature_column.size() - 1);
  return out;
}

const char* baseline_method_name(BaselineMethod method) {
  switch (method) {
    case BaselineMethod::anova_f:
      return "anova";
    case BaselineMethod::abs_corr:
      return "corr";
    case BaselineMethod::variance:
      return "var";
  }
  return "unknown";
}

}  // namespace ftsel
