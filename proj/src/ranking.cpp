#include "ftsel/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ftsel {

RankedFeatures rank(std::span<const double> scores, Polarity polarity, std::string method) {
  if (scores.empty()) throw std::invalid_argument("empty score list");
  for (double v : scores) {
    if (std::isnan(v)) throw std::invalid_argument("scores must not be NaN");
    if (std::isinf(v) && (polarity == Polarity::loss_ascending || v < 0))
      throw std::invalid_argument("infinite score only allowed as a score-descending sentinel");
  }
  RankedFeatures out;
  out.method = std::move(method);
  out.polarity = polarity;
  out.order.resize(scores.size());
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  if (polarity == Polarity::loss_ascending) {
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  } else {
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  }
  out.sorted_values.reserve(scores.size());
  for (std::size_t i : out.order) out.sorted_values.push_back(scores[i]);
  return out;
}

ElbowReport detect_elbow(const RankedFeatures& ranked, const ElbowOptions& options) {
  const std::size_t p = ranked.order.size();
  if (p < 3) throw std::invalid_argument("elbow detection needs at least 3 features");
  if (options.smoothing_window % 2 == 0)
    throw std::invalid_argument("smoothing window must be odd");

  ElbowReport report;
  report.curvature_profile.assign(p, 0.0);

  // Work on an ascending curve: flip the sign for score-descending input.
  std::vector<double> curve(ranked.sorted_values.begin(), ranked.sorted_values.end());
  if (ranked.polarity == Polarity::score_descending)
    for (double& v : curve) v = -v;

  // Saturate infinity sentinels to the finite ends of the curve.
  double finite_lo = std::numeric_limits<double>::infinity();
  double finite_hi = -std::numeric_limits<double>::infinity();
  for (double v : curve) {
    if (!std::isinf(v)) {
      finite_lo = std::min(finite_lo, v);
      finite_hi = std::max(finite_hi, v);
    }
  }
  if (finite_lo > finite_hi || finite_lo == finite_hi) {
    report.early_index = p;
    report.late_index = p;
    report.degenerate = true;
    return report;
  }
  for (double& v : curve) {
    if (std::isinf(v)) v = v < 0 ? finite_lo : finite_hi;
  }

  const double base = curve.front();
  const double range = curve.back() - base;
  if (range == 0) {
    report.early_index = p;
    report.late_index = p;
    report.degenerate = true;
    return report;
  }
  for (double& v : curve) v = (v - base) / range;

  if (options.smoothing_window > 1) {
    const std::size_t half = options.smoothing_window / 2;
    std::vector<double> smoothed(p);
    for (std::size_t i = 0; i < p; ++i) {
      const std::size_t lo = i >= half ? i - half : 0;
      const std::size_t hi = std::min(p - 1, i + half);
      double sum = 0;
      for (std::size_t j = lo; j <= hi; ++j) sum += curve[j];
      smoothed[i] = sum / static_cast<double>(hi - lo + 1);
    }
    curve = std::move(smoothed);
  }

  double max_curvature = -std::numeric_limits<double>::infinity();
  std::size_t argmax = 0;
  for (std::size_t i = 1; i + 1 < p; ++i) {
    const double d2 = curve[i + 1] - 2.0 * curve[i] + curve[i - 1];
    report.curvature_profile[i] = d2;
    if (d2 > max_curvature) {
      max_curvature = d2;
      argmax = i;
    }
  }

  // No convex bend above numerical noise: constant or linear curve.
  if (max_curvature <= 1e-12) {
    report.early_index = p;
    report.late_index = p;
    report.degenerate = true;
    return report;
  }

  report.late_index = argmax + 1;  // ranks are 1-based
  const double threshold = 0.5 * max_curvature;
  for (std::size_t i = 1; i + 1 < p; ++i) {
    if (report.curvature_profile[i] >= threshold) {
      report.early_index = i + 1;
      break;
    }
  }
  return report;
}

std::vector<std::size_t> select_top_k(const RankedFeatures& ranked, std::size_t k) {
  if (k < 1 || k > ranked.order.size()) throw std::invalid_argument("k out of range");
  return std::vector<std::size_t>(ranked.order.begin(), ranked.order.begin() + k);
}

}  // namespace ftsel
