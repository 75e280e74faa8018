#pragma once

#include <span>
#include <string>
#include <vector>

namespace ftsel {

// loss_ascending: lower is better (DFT/RFT). score_descending: higher is
// better (ANOVA F, |corr|, variance).
enum class Polarity { loss_ascending, score_descending };

struct RankedFeatures {
  std::string method;
  Polarity polarity = Polarity::loss_ascending;
  std::vector<std::size_t> order;     // permutation of 0..P-1, best first
  std::vector<double> sorted_values;  // aligned with order
};

// Stable sort by value; ties keep the lower feature index first. Values must
// not be NaN; +infinity is allowed only for score_descending (sentinel for
// "ranks first").
RankedFeatures rank(std::span<const double> scores, Polarity polarity, std::string method = "");

struct ElbowOptions {
  // Centered moving-average window applied to the normalized curve before
  // differencing. Must be odd; 1 disables smoothing.
  std::size_t smoothing_window = 1;
};

// Elbow of the ranked curve found from discrete second differences of the
// normalized (and, for score_descending, sign-flipped) sorted values.
// late_index is the rank with the largest second difference; early_index is
// the smallest rank whose second difference reaches half of that maximum.
// Ranks are 1-based counts of features to keep. A curve with no convex bend
// (constant or linear) reports early = late = P with the degenerate flag.
struct ElbowReport {
  std::size_t early_index = 0;
  std::size_t late_index = 0;
  std::vector<double> curvature_profile;  // per rank; 0 at the two endpoints
  bool degenerate = false;
};

ElbowReport detect_elbow(const RankedFeatures& ranked, const ElbowOptions& options = {});

// First k entries of the ranking, in importance order.
std::vector<std::size_t> select_top_k(const RankedFeatures& ranked, std::size_t k);

}  // namespace ftsel
