#include "ftsel/dft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ftsel {

namespace {

// Entropy from -p log2 p terms, summed in sorted order so the result does not
// depend on class numbering.
double entropy_from_probabilities(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  double h = 0;
  for (double t : terms) h += t;
  return h;
}

template <typename Count>
double entropy_of_counts(std::span<const Count> counts) {
  double total = 0;
  for (Count c : counts) total += static_cast<double>(c);
  if (total <= 0) return 0.0;
  std::vector<double> terms;
  terms.reserve(counts.size());
  for (Count c : counts) {
    if (c <= 0) continue;
    const double p = static_cast<double>(c) / total;
    terms.push_back(-p * std::log2(p));
  }
  return entropy_from_probabilities(terms);
}

// Shared by dft_loss_at and the scan in dft_score so both produce identical
// values. `weights` is empty for raw counts; otherwise per-class reweighting.
double split_entropy(std::span<const std::int64_t> left, std::span<const std::int64_t> right,
                     std::span<const double> weights) {
  if (weights.empty()) {
    std::int64_t n_left = 0;
    std::int64_t n_right = 0;
    for (std::int64_t c : left) n_left += c;
    for (std::int64_t c : right) n_right += c;
    const double n = static_cast<double>(n_left + n_right);
    return (static_cast<double>(n_left) * entropy_of_counts(left) +
            static_cast<double>(n_right) * entropy_of_counts(right)) /
           n;
  }
  std::vector<double> wl(left.size());
  std::vector<double> wr(right.size());
  double n_left = 0;
  double n_right = 0;
  for (std::size_t c = 0; c < left.size(); ++c) {
    wl[c] = static_cast<double>(left[c]) * weights[c];
    wr[c] = static_cast<double>(right[c]) * weights[c];
    n_left += wl[c];
    n_right += wr[c];
  }
  return (n_left * entropy_of_counts(std::span<const double>(wl)) +
          n_right * entropy_of_counts(std::span<const double>(wr))) /
         (n_left + n_right);
}

std::vector<std::int64_t> class_totals(const BinHistogram& h) {
  std::vector<std::int64_t> totals(static_cast<std::size_t>(h.n_classes()), 0);
  for (std::size_t bin = 0; bin < h.n_bins(); ++bin)
    for (int c = 0; c < h.n_classes(); ++c)
      totals[static_cast<std::size_t>(c)] += h.class_count(bin, c);
  return totals;
}

}  // namespace

double subset_entropy(std::span<const std::int64_t> class_counts) {
  for (std::int64_t c : class_counts)
    if (c < 0) throw std::invalid_argument("negative class count");
  return entropy_of_counts(class_counts);
}

double dft_loss_at(const BinHistogram& histogram, std::size_t boundary) {
  if (histogram.kind() != Target::Kind::categorical)
    throw std::invalid_argument("dft needs a categorical histogram");
  if (boundary < 1 || boundary >= histogram.n_bins())
    throw std::invalid_argument("boundary out of range");
  const std::size_t n_classes = static_cast<std::size_t>(histogram.n_classes());
  std::vector<std::int64_t> left(n_classes, 0);
  for (std::size_t bin = 0; bin < boundary; ++bin)
    for (std::size_t c = 0; c < n_classes; ++c)
      left[c] += histogram.class_count(bin, static_cast<int>(c));
  std::vector<std::int64_t> right = class_totals(histogram);
  for (std::size_t c = 0; c < n_classes; ++c) right[c] -= left[c];
  return split_entropy(left, right, {});
}

DftScore dft_score(std::span<const double> feature_column, const Target& target,
                   const DftOptions& options) {
  if (target.kind() != Target::Kind::categorical)
    throw std::invalid_argument("dft requires a categorical target");

  const BinHistogram hist = build_histogram(feature_column, target, options.binning);
  const CandidateThresholds& candidates = hist.thresholds();
  const std::size_t n_classes = static_cast<std::size_t>(hist.n_classes());

  DftScore score;
  if (candidates.degenerate()) {
    score.degenerate = true;
    score.optimal_loss = std::log2(static_cast<double>(n_classes));
    score.optimal_threshold = candidates.feature_min;
    return score;
  }

  std::vector<double> weights;
  if (options.class_balanced) {
    const std::vector<std::int64_t> totals = class_totals(hist);
    const double n = static_cast<double>(hist.total_count());
    weights.resize(n_classes, 0.0);
    for (std::size_t c = 0; c < n_classes; ++c)
      if (totals[c] > 0)
        weights[c] = n / (static_cast<double>(n_classes) * static_cast<double>(totals[c]));
  }

  std::vector<std::int64_t> left(n_classes, 0);
  std::vector<std::int64_t> right = class_totals(hist);
  score.loss_curve.reserve(candidates.thresholds.size());
  bool first = true;
  for (std::size_t b = 1; b < hist.n_bins(); ++b) {
    for (std::size_t c = 0; c < n_classes; ++c) {
      const std::int64_t count = hist.class_count(b - 1, static_cast<int>(c));
      left[c] += count;
      right[c] -= count;
    }
    const double loss = split_entropy(left, right, weights);
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

std::vector<DftScore> dft_score_all(const FeatureMatrix& matrix, const Target& target,
                                    const DftOptions& options) {
  if (matrix.n_samples() != target.size())
    throw std::invalid_argument("matrix/target length mismatch");
  std::vector<DftScore> scores;
  scores.reserve(matrix.n_features());
  for (std::size_t i = 0; i < matrix.n_features(); ++i) {
    DftScore s = dft_score(matrix.column(i), target, options);
    s.feature_index = i;
    scores.push_back(std::move(s));
  }
  return scores;
}

}  // namespace ftsel
