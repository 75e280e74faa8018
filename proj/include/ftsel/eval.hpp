#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ftsel/dataset.hpp"

namespace ftsel {

// Parameters of the seeded synthetic datasets. Classification uses
// n_samples_per_class and class_separation; regression uses n_samples and
// target_coefficients (one per informative dimension). Informative dimensions
// come first: indices [0, n_informative).
struct SyntheticSpec {
  std::size_t n_samples_per_class = 0;
  std::size_t n_samples = 0;
  std::size_t n_informative = 0;
  std::size_t n_noise = 0;
  double class_separation = 0;
  std::vector<double> target_coefficients;
  std::uint64_t seed = 0;
};

// Two balanced classes: informative dims are N(-sep/2, 1) for class 0 and
// N(+sep/2, 1) for class 1, noise dims are N(0, 1) regardless of class.
// Values are drawn column by column from Rng(seed); class-0 rows come first.
std::pair<FeatureMatrix, Target> generate_classification(const SyntheticSpec& spec);

// All dims are N(0, 1); y = sum_k coeff_k * x_k over informative dims plus
// N(0, 1) noise. Feature columns are drawn first, then the per-sample noise.
std::pair<FeatureMatrix, Target> generate_regression(const SyntheticSpec& spec);

enum class Metric { accuracy, mse };
enum class Split { train, test };

struct EvalResult {
  Metric metric = Metric::accuracy;
  double value = 0;
  std::size_t n_features_used = 0;
  Split split = Split::test;
};

// Nearest class centroid in the selected dims, Euclidean distance after
// standardizing with train-set statistics only. Returns test accuracy.
EvalResult nearest_centroid_eval(const FeatureMatrix& train_x, const Target& train_y,
                                 const FeatureMatrix& test_x, const Target& test_y,
                                 std::span<const std::size_t> selected);

// Ordinary least squares with intercept on the selected dims, fit on train
// via normal equations with 1e-8 ridge jitter. Returns test MSE.
EvalResult least_squares_eval(const FeatureMatrix& train_x, const Target& train_y,
                              const FeatureMatrix& test_x, const Target& test_y,
                              std::span<const std::size_t> selected);

}  // namespace ftsel
