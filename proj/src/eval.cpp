#include "ftsel/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ftsel/rng.hpp"

namespace ftsel {

namespace {

void check_selection(const FeatureMatrix& train_x, const FeatureMatrix& test_x,
                     std::span<const std::size_t> selected) {
  if (selected.empty()) throw std::invalid_argument("empty selection");
  if (train_x.n_features() != test_x.n_features())
    throw std::invalid_argument("train/test feature counts differ");
  for (std::size_t i : selected)
    if (i >= train_x.n_features()) throw std::invalid_argument("selected index out of range");
}

// Solves A x = b in place for a symmetric positive definite A (row-major,
// dim x dim) via Cholesky. Returns false if a pivot is not positive.
bool cholesky_solve(std::vector<double>& a, std::vector<double>& b, std::size_t dim) {
  for (std::size_t j = 0; j < dim; ++j) {
    double pivot = a[j * dim + j];
    for (std::size_t k = 0; k < j; ++k) pivot -= a[j * dim + k] * a[j * dim + k];
    if (pivot <= 0) return false;
    const double root = std::sqrt(pivot);
    a[j * dim + j] = root;
    for (std::size_t i = j + 1; i < dim; ++i) {
      double v = a[i * dim + j];
      for (std::size_t k = 0; k < j; ++k) v -= a[i * dim + k] * a[j * dim + k];
      a[i * dim + j] = v / root;
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    double v = b[i];
    for (std::size_t k = 0; k < i; ++k) v -= a[i * dim + k] * b[k];
    b[i] = v / a[i * dim + i];
  }
  for (std::size_t ii = dim; ii > 0; --ii) {
    const std::size_t i = ii - 1;
    double v = b[i];
    for (std::size_t k = i + 1; k < dim; ++k) v -= a[k * dim + i] * b[k];
    b[i] = v / a[i * dim + i];
  }
  return true;
}

}  // namespace

std::pair<FeatureMatrix, Target> generate_classification(const SyntheticSpec& spec) {
  const std::size_t p = spec.n_informative + spec.n_noise;
  if (p == 0) throw std::invalid_argument("at least one feature dimension required");
  if (spec.n_samples_per_class < 1)
    throw std::invalid_argument("need at least one sample per class");
  const std::size_t n = 2 * spec.n_samples_per_class;

  std::vector<int> labels(n, 0);
  for (std::size_t i = spec.n_samples_per_class; i < n; ++i) labels[i] = 1;

  Rng rng(spec.seed);
  std::vector<double> values;
  values.reserve(n * p);
  for (std::size_t j = 0; j < p; ++j) {
    const bool informative = j < spec.n_informative;
    for (std::size_t i = 0; i < n; ++i) {
      double mean = 0;
      if (informative)
        mean = labels[i] == 0 ? -spec.class_separation / 2 : spec.class_separation / 2;
      values.push_back(rng.normal(mean, 1.0));
    }
  }
  return {FeatureMatrix(n, p, std::move(values)),
          Target::categorical(std::move(labels), 2, {"0", "1"})};
}

std::pair<FeatureMatrix, Target> generate_regression(const SyntheticSpec& spec) {
  const std::size_t p = spec.n_informative + spec.n_noise;
  if (p == 0) throw std::invalid_argument("at least one feature dimension required");
  if (spec.n_samples < 2) throw std::invalid_argument("need at least 2 samples");
  if (spec.target_coefficients.size() != spec.n_informative)
    throw std::invalid_argument("coefficient count must equal informative dims");

  Rng rng(spec.seed);
  std::vector<double> values;
  values.reserve(spec.n_samples * p);
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t i = 0; i < spec.n_samples; ++i) values.push_back(rng.normal());

  FeatureMatrix matrix(spec.n_samples, p, std::move(values));
  std::vector<double> y(spec.n_samples, 0.0);
  for (std::size_t i = 0; i < spec.n_samples; ++i) {
    double v = 0;
    for (std::size_t k = 0; k < spec.n_informative; ++k)
      v += spec.target_coefficients[k] * matrix(i, k);
    y[i] = v + rng.normal();
  }
  return {std::move(matrix), Target::continuous(std::move(y))};
}

EvalResult nearest_centroid_eval(const FeatureMatrix& train_x, const Target& train_y,
                                 const FeatureMatrix& test_x, const Target& test_y,
                                 std::span<const std::size_t> selected) {
  if (train_y.kind() != Target::Kind::categorical ||
      test_y.kind() != Target::Kind::categorical)
    throw std::invalid_argument("nearest centroid needs categorical targets");
  check_selection(train_x, test_x, selected);
  if (train_x.n_samples() != train_y.size() || test_x.n_samples() != test_y.size())
    throw std::invalid_argument("matrix/target length mismatch");
  const std::size_t n_classes = static_cast<std::size_t>(train_y.n_classes());
  for (int id : test_y.labels())
    if (id >= train_y.n_classes()) throw DataError("class absent from train");

  // Standardization statistics from the train split only.
  const std::size_t k = selected.size();
  std::vector<double> mean(k, 0.0);
  std::vector<double> scale(k, 1.0);
  const double n_train = static_cast<double>(train_x.n_samples());
  for (std::size_t d = 0; d < k; ++d) {
    const auto col = train_x.column(selected[d]);
    double sum = 0;
    for (double v : col) sum += v;
    mean[d] = sum / n_train;
    double ss = 0;
    for (double v : col) {
      const double diff = v - mean[d];
      ss += diff * diff;
    }
    const double sd = std::sqrt(ss / (n_train - 1.0));
    if (sd > 0) scale[d] = 1.0 / sd;
  }

  std::vector<double> centroid(n_classes * k, 0.0);
  std::vector<std::int64_t> class_n(n_classes, 0);
  const auto train_labels = train_y.labels();
  for (std::size_t i = 0; i < train_x.n_samples(); ++i)
    ++class_n[static_cast<std::size_t>(train_labels[i])];
  for (std::size_t d = 0; d < k; ++d) {
    const auto col = train_x.column(selected[d]);
    for (std::size_t i = 0; i < train_x.n_samples(); ++i) {
      const std::size_t c = static_cast<std::size_t>(train_labels[i]);
      centroid[c * k + d] += (col[i] - mean[d]) * scale[d];
    }
  }
  for (std::size_t c = 0; c < n_classes; ++c)
    for (std::size_t d = 0; d < k; ++d)
      centroid[c * k + d] /= static_cast<double>(class_n[c]);

  const auto test_labels = test_y.labels();
  std::size_t correct = 0;
  std::vector<double> z(k);
  for (std::size_t i = 0; i < test_x.n_samples(); ++i) {
    for (std::size_t d = 0; d < k; ++d)
      z[d] = (test_x(i, selected[d]) - mean[d]) * scale[d];
    std::size_t best_class = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < n_classes; ++c) {
      double dist = 0;
      for (std::size_t d = 0; d < k; ++d) {
        const double diff = z[d] - centroid[c * k + d];
        dist += diff * diff;
      }
      if (dist < best_dist) {
        best_dist = dist;
        best_class = c;
      }
    }
    if (best_class == static_cast<std::size_t>(test_labels[i])) ++correct;
  }
  return {Metric::accuracy, static_cast<double>(correct) / static_cast<double>(test_x.n_samples()),
          k, Split::test};
}

EvalResult least_squares_eval(const FeatureMatrix& train_x, const Target& train_y,
                              const FeatureMatrix& test_x, const Target& test_y,
                              std::span<const std::size_t> selected) {
  if (train_y.kind() != Target::Kind::continuous || test_y.kind() != Target::Kind::continuous)
    throw std::invalid_argument("least squares needs continuous targets");
  check_selection(train_x, test_x, selected);
  if (train_x.n_samples() != train_y.size() || test_x.n_samples() != test_y.size())
    throw std::invalid_argument("matrix/target length mismatch");
  const std::size_t k = selected.size();
  if (train_x.n_samples() <= k + 1) throw DataError("not enough training samples for the fit");

  // Normal equations with an intercept at index 0; small ridge jitter keeps
  // rank-deficient designs solvable.
  const std::size_t dim = k + 1;
  std::vector<double> gram(dim * dim, 0.0);
  std::vector<double> rhs(dim, 0.0);
  const auto y = train_y.values();
  std::vector<double> row(dim, 1.0);
  for (std::size_t i = 0; i < train_x.n_samples(); ++i) {
    for (std::size_t d = 0; d < k; ++d) row[d + 1] = train_x(i, selected[d]);
    for (std::size_t a = 0; a < dim; ++a) {
      rhs[a] += row[a] * y[i];
      for (std::size_t b = 0; b <= a; ++b) gram[a * dim + b] += row[a] * row[b];
    }
  }
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) gram[a * dim + b] = gram[b * dim + a];
  for (std::size_t a = 0; a < dim; ++a) gram[a * dim + a] += 1e-8;

  if (!cholesky_solve(gram, rhs, dim)) throw DataError("degenerate design matrix");

  const auto y_test = test_y.values();
  double se = 0;
  for (std::size_t i = 0; i < test_x.n_samples(); ++i) {
    double pred = rhs[0];
    for (std::size_t d = 0; d < k; ++d) pred += rhs[d + 1] * test_x(i, selected[d]);
    const double err = pred - y_test[i];
    se += err * err;
  }
  return {Metric::mse, se / static_cast<double>(test_x.n_samples()), k, Split::test};
}

}  // namespace ftsel
