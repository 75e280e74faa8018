#include "ftsel/rft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ftsel {

namespace {

BinMoments total_moments(const BinHistogram& h) {
  BinMoments total;
  for (std::size_t bin = 0; bin < h.n_bins(); ++bin) {
    const BinMoments& m = h.moments(bin);
    total.count += m.count;
    total.sum += m.sum;
    total.sum_sq += m.sum_sq;
  }
  return total;
}

// Shared by rft_loss_at and the scan in rft_score so both produce identical
// values.
double split_mse(const BinMoments& left, const BinMoments& right) {
  const double n = static_cast<double>(left.count + right.count);
  return (static_cast<double>(left.count) * side_mse(left.count, left.sum, left.sum_sq) +
          static_cast<double>(right.count) * side_mse(right.count, right.sum, right.sum_sq)) /
         n;
}

}  // namespace

double side_mse(std::int64_t count, double sum, double sum_sq) {
  if (count < 0) throw std::invalid_argument("negative count");
  if (count <= 1) return 0.0;
  const double mean = sum / static_cast<double>(count);
  return std::max(0.0, sum_sq / static_cast<double>(count) - mean * mean);
}

double rft_loss_at(const BinHistogram& histogram, std::size_t boundary) {
  if (histogram.kind() != Target::Kind::continuous)
    throw std::invalid_argument("rft needs a continuous histogram");
  if (boundary < 1 || boundary >= histogram.n_bins())
    throw std::invalid_argument("boundary out of range");
  BinMoments left;
  for (std::size_t bin = 0; bin < boundary; ++bin) {
    const BinMoments& m = histogram.moments(bin);
    left.count += m.count;
    left.sum += m.sum;
    left.sum_sq += m.sum_sq;
  }
  const BinMoments total = total_moments(histogram);
  const BinMoments right{total.count - left.count, total.sum - left.sum,
                         total.sum_sq - left.sum_sq};
  return split_mse(left, right);
}

RftScore rft_score(std::span<const double> feature_column, const Target& target,
                   const BinningConfig& config) {
  if (target.kind() != Target::Kind::continuous)
    throw std::invalid_argument("rft requires a continuous target");

  const BinHistogram hist = build_histogram(feature_column, target, config);
  const CandidateThresholds& candidates = hist.thresholds();
  const BinMoments total = total_moments(hist);

  RftScore score;
  if (candidates.degenerate()) {
    // No candidate split: score the no-split predictor, i.e. the population
    // variance of the target.
    score.degenerate = true;
    score.optimal_loss = side_mse(total.count, total.sum, total.sum_sq);
    score.optimal_threshold = candidates.feature_min;
    return score;
  }

  BinMoments left;
  score.loss_curve.reserve(candidates.thresholds.size());
  bool first = true;
  for (std::size_t b = 1; b < hist.n_bins(); ++b) {
    const BinMoments& m = hist.moments(b - 1);
    left.count += m.count;
    left.sum += m.sum;
    left.sum_sq += m.sum_sq;
    const BinMoments right{total.count - left.count, total.sum - left.sum,
                           total.sum_sq - left.sum_sq};
    const double loss = split_mse(left, right);
    const double threshold = candidates.thresholds[b - 1];
    score.loss_curve.emplace_back(threshold, loss);
    if (first || loss < score.optimal_loss) {
      score.optimal_loss = loss;
      score.optimal_threshold = threshold;
      first = false;
    }
  }
  return score;
}

std::vector<RftScore> rft_score_all(const FeatureMatrix& matrix, const Target& target,
                                    const BinningConfig& config) {
  if (matrix.n_samples() != target.size())
    throw std::invalid_argument("matrix/target length mismatch");
  std::vector<RftScore> scores;
  scores.reserve(matrix.n_features());
  for (std::size_t i = 0; i < matrix.n_features(); ++i) {
    RftScore s = rft_score(matrix.column(i), target, config);
    s.feature_index = i;
    scores.push_back(std::move(s));
  }
  return scores;
}

}  // namespace ftsel
