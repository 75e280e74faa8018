// ftsel command line: score features, dump loss curves, select subspaces,
// and run synthetic benchmarks. Exit codes: 0 success, 2 usage error,
// 3 data validation error.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ftsel/baselines.hpp"
#include "ftsel/binning.hpp"
#include "ftsel/dataset.hpp"
#include "ftsel/dft.hpp"
#include "ftsel/eval.hpp"
#include "ftsel/ranking.hpp"
#include "ftsel/rft.hpp"
#include "ftsel/version.hpp"

namespace {

using ftsel::DataError;
using ftsel::FeatureMatrix;
using ftsel::Polarity;
using ftsel::Target;
using nlohmann::json;

constexpr std::uint64_t kTestSeedSalt = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kNoiseTrainSalt = 0xA5A5A5A55A5A5A5AULL;
constexpr std::uint64_t kNoiseTestSalt = 0xC3C3C3C33C3C3C3CULL;

struct RunConfig {
  std::string command;
  std::string method = "dft";
  std::string input;
  std::string train_path;
  std::string test_path;
  std::string label;
  std::string target_kind = "auto";
  std::size_t bins = 16;
  bool balanced = false;
  std::size_t top_k = 0;
  std::string elbow_mode;
  std::string output;
  std::string format = "csv";
  std::uint64_t seed = 42;
  double noise_sigma = 0.0;
  std::string delimiter = ",";
  std::size_t smoothing = 1;
  std::vector<std::size_t> curve_features;
  // synthetic benchmark parameters
  std::string task;
  std::size_t n_per_class = 500;
  std::size_t n_samples = 1000;
  std::size_t n_informative = 5;
  std::size_t n_noise_dims = 45;
  double separation = 6.0;
  std::vector<double> coefficients;
};

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

json json_number(double v) {
  // JSON has no infinity; keep the sentinel readable instead of null.
  if (std::isinf(v)) return json(v > 0 ? "inf" : "-inf");
  return json(v);
}

// Writes through a temp file and renames so failed runs leave no partial
// output. Empty path or "-" means stdout.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw DataError("cannot write: " + path);
    out << content;
    if (!out) {
      std::filesystem::remove(tmp);
      throw DataError("cannot write: " + path);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw DataError("cannot write: " + path);
  }
}

void check_common(const RunConfig& cfg) {
  if (cfg.bins < 2) throw std::invalid_argument("bins must be >= 2");
  if (cfg.delimiter.size() != 1)
    throw std::invalid_argument("delimiter must be a single character");
}

bool is_loss_method(const std::string& method) { return method == "dft" || method == "rft"; }

Polarity polarity_for(const std::string& method) {
  return is_loss_method(method) ? Polarity::loss_ascending : Polarity::score_descending;
}

Target::Kind resolve_target_kind(const RunConfig& cfg) {
  const std::string& m = cfg.method;
  if (cfg.target_kind == "auto") {
    if (m == "dft" || m == "anova") return Target::Kind::categorical;
    return Target::Kind::continuous;
  }
  const Target::Kind kind = cfg.target_kind == "categorical" ? Target::Kind::categorical
                                                             : Target::Kind::continuous;
  if ((m == "dft" || m == "anova") && kind != Target::Kind::categorical)
    throw std::invalid_argument(m + " requires categorical target");
  if (m == "rft" && kind != Target::Kind::continuous)
    throw std::invalid_argument("rft requires continuous target");
  return kind;
}

std::vector<double> correlation_target(const Target& target) {
  if (target.kind() == Target::Kind::continuous)
    return std::vector<double>(target.values().begin(), target.values().end());
  std::vector<double> values;
  values.reserve(target.size());
  for (int id : target.labels()) values.push_back(static_cast<double>(id));
  return values;
}

struct ScoredFeature {
  std::size_t index = 0;
  double value = 0;
  double threshold = 0;
  bool has_threshold = false;
  bool degenerate = false;
};

std::vector<ScoredFeature> score_features(const std::string& method, const FeatureMatrix& matrix,
                                          const Target& target, const RunConfig& cfg) {
  std::vector<ScoredFeature> out;
  out.reserve(matrix.n_features());
  if (method == "dft") {
    ftsel::DftOptions options{{cfg.bins}, cfg.balanced};
    for (const auto& s : ftsel::dft_score_all(matrix, target, options))
      out.push_back({s.feature_index, s.optimal_loss, s.optimal_threshold, true, s.degenerate});
  } else if (method == "rft") {
    for (const auto& s : ftsel::rft_score_all(matrix, target, {cfg.bins}))
      out.push_back({s.feature_index, s.optimal_loss, s.optimal_threshold, true, s.degenerate});
  } else if (method == "anova") {
    for (std::size_t i = 0; i < matrix.n_features(); ++i) {
      const auto s = ftsel::anova_f(matrix.column(i), target);
      out.push_back({i, s.score, 0, false, s.degenerate});
    }
  } else if (method == "corr") {
    const std::vector<double> y = correlation_target(target);
    for (std::size_t i = 0; i < matrix.n_features(); ++i) {
      const auto s = ftsel::abs_corr(matrix.column(i), y);
      out.push_back({i, s.score, 0, false, s.degenerate});
    }
  } else {
    for (std::size_t i = 0; i < matrix.n_features(); ++i) {
      const auto s = ftsel::variance_score(matrix.column(i));
      out.push_back({i, s.score, 0, false, s.degenerate});
    }
  }
  return out;
}

std::vector<double> values_of(const std::vector<ScoredFeature>& scored) {
  std::vector<double> v;
  v.reserve(scored.size());
  for (const auto& s : scored) v.push_back(s.value);
  return v;
}

json base_provenance(const RunConfig& cfg) {
  json j;
  j["tool"] = "ftsel";
  j["version"] = ftsel::kVersion;
  j["command"] = cfg.command;
  j["method"] = cfg.method;
  j["bins"] = cfg.bins;
  j["seed"] = cfg.seed;
  j["noise_sigma"] = cfg.noise_sigma;
  return j;
}

FeatureMatrix maybe_add_noise(const FeatureMatrix& matrix, const RunConfig& cfg) {
  if (cfg.noise_sigma == 0) return matrix;
  return ftsel::add_gaussian_noise(matrix, cfg.noise_sigma, cfg.seed);
}

int cmd_score(const RunConfig& cfg) {
  check_common(cfg);
  const Target::Kind kind = resolve_target_kind(cfg);
  const auto ds = ftsel::load_csv(cfg.input, cfg.label, kind, cfg.delimiter[0]);
  const FeatureMatrix matrix = maybe_add_noise(ds.matrix, cfg);
  const auto scored = score_features(cfg.method, matrix, ds.target, cfg);
  const auto ranked = ftsel::rank(values_of(scored), polarity_for(cfg.method), cfg.method);

  if (cfg.format == "json") {
    json doc;
    doc["provenance"] = base_provenance(cfg);
    json rows = json::array();
    for (std::size_t r = 0; r < ranked.order.size(); ++r) {
      const ScoredFeature& s = scored[ranked.order[r]];
      json row;
      row["rank"] = r + 1;
      row["feature"] = s.index;
      row["name"] = ds.feature_names[s.index];
      row["score"] = json_number(s.value);
      if (s.has_threshold) row["threshold"] = s.threshold;
      row["degenerate"] = s.degenerate;
      rows.push_back(std::move(row));
    }
    doc["scores"] = std::move(rows);
    write_output(cfg.output, doc.dump(2) + "\n");
    return 0;
  }

  std::ostringstream os;
  os << "rank,feature,name,score,threshold,degenerate\n";
  for (std::size_t r = 0; r < ranked.order.size(); ++r) {
    const ScoredFeature& s = scored[ranked.order[r]];
    os << (r + 1) << ',' << s.index << ',' << ds.feature_names[s.index] << ','
       << format_double(s.value) << ',';
    if (s.has_threshold) os << format_double(s.threshold);
    os << ',' << (s.degenerate ? 1 : 0) << '\n';
  }
  write_output(cfg.output, os.str());
  return 0;
}

int cmd_curve(const RunConfig& cfg) {
  check_common(cfg);
  if (!cfg.curve_features.empty() && !is_loss_method(cfg.method))
    throw std::invalid_argument("threshold curves require dft or rft");
  const Target::Kind kind = resolve_target_kind(cfg);
  const auto ds = ftsel::load_csv(cfg.input, cfg.label, kind, cfg.delimiter[0]);
  const FeatureMatrix matrix = maybe_add_noise(ds.matrix, cfg);
  for (std::size_t f : cfg.curve_features)
    if (f >= matrix.n_features()) throw std::invalid_argument("feature index out of range");

  // Per-feature threshold-vs-loss curves, then the ranked curve with elbows.
  std::vector<std::pair<std::size_t, std::vector<std::pair<double, double>>>> curves;
  for (std::size_t f : cfg.curve_features) {
    if (cfg.method == "dft") {
      ftsel::DftOptions options{{cfg.bins}, cfg.balanced};
      curves.emplace_back(f, ftsel::dft_score(matrix.column(f), ds.target, options).loss_curve);
    } else {
      curves.emplace_back(f, ftsel::rft_score(matrix.column(f), ds.target, {cfg.bins}).loss_curve);
    }
  }
  const auto scored = score_features(cfg.method, matrix, ds.target, cfg);
  const auto ranked = ftsel::rank(values_of(scored), polarity_for(cfg.method), cfg.method);
  const auto elbow = ftsel::detect_elbow(ranked, {cfg.smoothing});

  if (cfg.format == "json") {
    json doc;
    doc["provenance"] = base_provenance(cfg);
    doc["provenance"]["elbow"] = {{"early", elbow.early_index},
                                  {"late", elbow.late_index},
                                  {"degenerate", elbow.degenerate}};
    json curve_rows = json::array();
    for (const auto& [f, points] : curves) {
      json pts = json::array();
      for (const auto& [thr, loss] : points) pts.push_back({{"threshold", thr}, {"loss", loss}});
      curve_rows.push_back({{"feature", f}, {"points", std::move(pts)}});
    }
    doc["threshold_curves"] = std::move(curve_rows);
    json ranked_rows = json::array();
    for (std::size_t r = 0; r < ranked.order.size(); ++r)
      ranked_rows.push_back({{"rank", r + 1},
                             {"feature", ranked.order[r]},
                             {"value", json_number(ranked.sorted_values[r])}});
    doc["ranked_curve"] = std::move(ranked_rows);
    write_output(cfg.output, doc.dump(2) + "\n");
    return 0;
  }

  std::ostringstream os;
  os << "section,feature,x,y\n";
  for (const auto& [f, points] : curves)
    for (const auto& [thr, loss] : points)
      os << "curve," << f << ',' << format_double(thr) << ',' << format_double(loss) << '\n';
  for (std::size_t r = 0; r < ranked.order.size(); ++r)
    os << "ranked," << ranked.order[r] << ',' << (r + 1) << ','
       << format_double(ranked.sorted_values[r]) << '\n';
  os << "elbow_early,," << elbow.early_index << ",\n";
  os << "elbow_late,," << elbow.late_index << ",\n";
  write_output(cfg.output, os.str());
  return 0;
}

int cmd_select(const RunConfig& cfg) {
  check_common(cfg);
  if ((cfg.top_k == 0) == cfg.elbow_mode.empty())
    throw std::invalid_argument("exactly one of --k or --elbow is required");
  const Target::Kind kind = resolve_target_kind(cfg);
  const auto ds = ftsel::load_csv(cfg.input, cfg.label, kind, cfg.delimiter[0]);
  const auto scored = score_features(cfg.method, ds.matrix, ds.target, cfg);
  const auto ranked = ftsel::rank(values_of(scored), polarity_for(cfg.method), cfg.method);

  std::size_t k = cfg.top_k;
  if (!cfg.elbow_mode.empty()) {
    const auto elbow = ftsel::detect_elbow(ranked, {cfg.smoothing});
    k = cfg.elbow_mode == "early" ? elbow.early_index : elbow.late_index;
  }
  if (k < 1 || k > ds.matrix.n_features()) {
    std::ostringstream os;
    os << "k out of range: " << k << " (have " << ds.matrix.n_features() << " features)";
    throw std::invalid_argument(os.str());
  }
  std::vector<std::size_t> selected = ftsel::select_top_k(ranked, k);

  std::ostringstream info;
  info << "selected k=" << k << " method=" << cfg.method << " features=[";
  for (std::size_t i = 0; i < selected.size(); ++i) info << (i ? "," : "") << selected[i];
  info << "]\n";
  std::cerr << info.str();

  // Columns go out in original order; the label column comes last.
  std::sort(selected.begin(), selected.end());
  std::ostringstream os;
  const char d = cfg.delimiter[0];
  for (std::size_t i : selected) os << ds.feature_names[i] << d;
  os << ds.label_name << '\n';
  for (std::size_t row = 0; row < ds.matrix.n_samples(); ++row) {
    for (std::size_t i : selected) os << format_double(ds.matrix(row, i)) << d;
    os << ds.raw_labels[row] << '\n';
  }
  write_output(cfg.output, os.str());
  return 0;
}

struct BenchCell {
  std::size_t k = 0;
  double value = 0;
  std::vector<std::size_t> features;
};

struct BenchRow {
  std::string method;
  std::string selection;  // early | late | full
  BenchCell clean;
  BenchCell noisy;
};

BenchCell bench_eval(const std::string& task, const FeatureMatrix& train_x, const Target& train_y,
                     const FeatureMatrix& test_x, const Target& test_y,
                     std::vector<std::size_t> selected) {
  BenchCell cell;
  cell.k = selected.size();
  if (task == "classification")
    cell.value = ftsel::nearest_centroid_eval(train_x, train_y, test_x, test_y, selected).value;
  else
    cell.value = ftsel::least_squares_eval(train_x, train_y, test_x, test_y, selected).value;
  cell.features = std::move(selected);
  return cell;
}

std::vector<BenchCell> bench_pipeline(const std::string& method, const std::string& task,
                                      const FeatureMatrix& train_x, const Target& train_y,
                                      const FeatureMatrix& test_x, const Target& test_y,
                                      const RunConfig& cfg) {
  const auto scored = score_features(method, train_x, train_y, cfg);
  const auto ranked = ftsel::rank(values_of(scored), polarity_for(method), method);
  const auto elbow = ftsel::detect_elbow(ranked, {cfg.smoothing});
  std::vector<std::size_t> all(train_x.n_features());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return {
      bench_eval(task, train_x, train_y, test_x, test_y,
                 ftsel::select_top_k(ranked, elbow.early_index)),
      bench_eval(task, train_x, train_y, test_x, test_y,
                 ftsel::select_top_k(ranked, elbow.late_index)),
      bench_eval(task, train_x, train_y, test_x, test_y, std::move(all)),
  };
}

int cmd_bench(const RunConfig& cfg) {
  check_common(cfg);
  if (cfg.task != "classification" && cfg.task != "regression")
    throw std::invalid_argument("--task must be classification or regression");
  if (cfg.train_path.empty() != cfg.test_path.empty())
    throw std::invalid_argument("--train and --test must be given together");
  if (cfg.noise_sigma < 0) throw std::invalid_argument("noise sigma must be non-negative");

  const bool classification = cfg.task == "classification";
  const Target::Kind kind =
      classification ? Target::Kind::categorical : Target::Kind::continuous;

  std::optional<std::pair<FeatureMatrix, Target>> train;
  std::optional<std::pair<FeatureMatrix, Target>> test;
  json data_info;
  if (!cfg.train_path.empty()) {
    if (cfg.label.empty()) throw std::invalid_argument("--label is required with --train/--test");
    auto tr = ftsel::load_csv(cfg.train_path, cfg.label, kind, cfg.delimiter[0]);
    auto te = ftsel::load_csv(cfg.test_path, cfg.label, kind, cfg.delimiter[0]);
    train.emplace(std::move(tr.matrix), std::move(tr.target));
    test.emplace(std::move(te.matrix), std::move(te.target));
    data_info = {{"train", cfg.train_path}, {"test", cfg.test_path}};
  } else {
    ftsel::SyntheticSpec spec;
    spec.n_informative = cfg.n_informative;
    spec.n_noise = cfg.n_noise_dims;
    spec.seed = cfg.seed;
    if (classification) {
      spec.n_samples_per_class = cfg.n_per_class;
      spec.class_separation = cfg.separation;
    } else {
      spec.n_samples = cfg.n_samples;
      spec.target_coefficients = cfg.coefficients;
      if (spec.target_coefficients.empty())
        spec.target_coefficients.assign(cfg.n_informative, 1.0);
      if (spec.target_coefficients.size() != cfg.n_informative)
        throw std::invalid_argument("--coeff count must equal --informative");
    }
    train.emplace(classification ? ftsel::generate_classification(spec)
                                 : ftsel::generate_regression(spec));
    spec.seed = cfg.seed ^ kTestSeedSalt;
    test.emplace(classification ? ftsel::generate_classification(spec)
                                : ftsel::generate_regression(spec));
    data_info = {{"synthetic", true},
                 {"informative", cfg.n_informative},
                 {"noise_dims", cfg.n_noise_dims}};
    if (classification) {
      data_info["n_per_class"] = cfg.n_per_class;
      data_info["separation"] = cfg.separation;
    } else {
      data_info["n_samples"] = cfg.n_samples;
    }
  }

  const FeatureMatrix noisy_train_x =
      ftsel::add_gaussian_noise(train->first, cfg.noise_sigma, cfg.seed ^ kNoiseTrainSalt);
  const FeatureMatrix noisy_test_x =
      ftsel::add_gaussian_noise(test->first, cfg.noise_sigma, cfg.seed ^ kNoiseTestSalt);

  const std::vector<std::string> methods =
      classification ? std::vector<std::string>{"dft", "anova", "corr", "var"}
                     : std::vector<std::string>{"rft", "corr", "var"};
  const std::vector<std::string> selections = {"early", "late", "full"};

  std::vector<BenchRow> rows;
  for (const auto& method : methods) {
    const auto clean = bench_pipeline(method, cfg.task, train->first, train->second, test->first,
                                      test->second, cfg);
    const auto noisy = bench_pipeline(method, cfg.task, noisy_train_x, train->second,
                                      noisy_test_x, test->second, cfg);
    for (std::size_t s = 0; s < selections.size(); ++s)
      rows.push_back({method, selections[s], clean[s], noisy[s]});
  }

  if (cfg.format == "json") {
    json doc;
    doc["provenance"] = base_provenance(cfg);
    doc["provenance"]["task"] = cfg.task;
    doc["provenance"]["data"] = std::move(data_info);
    doc["metric"] = classification ? "accuracy" : "mse";
    json jrows = json::array();
    for (const auto& row : rows) {
      json r;
      r["method"] = row.method;
      r["selection"] = row.selection;
      r["clean"] = {{"k", row.clean.k},
                    {"value", json_number(row.clean.value)},
                    {"features", row.clean.features}};
      r["noisy"] = {{"k", row.noisy.k},
                    {"value", json_number(row.noisy.value)},
                    {"features", row.noisy.features}};
      jrows.push_back(std::move(r));
    }
    doc["rows"] = std::move(jrows);
    write_output(cfg.output, doc.dump(2) + "\n");
    return 0;
  }

  std::ostringstream os;
  os << "method,selection,k_clean,metric_clean,k_noisy,metric_noisy\n";
  for (const auto& row : rows)
    os << row.method << ',' << row.selection << ',' << row.clean.k << ','
       << format_double(row.clean.value) << ',' << row.noisy.k << ','
       << format_double(row.noisy.value) << '\n';
  write_output(cfg.output, os.str());
  return 0;
}

void add_io_options(CLI::App* cmd, RunConfig& cfg, bool with_format = true) {
  cmd->add_option("--input,-i", cfg.input, "input CSV file")->required();
  cmd->add_option("--label,-l", cfg.label, "label column name or index")->required();
  cmd->add_option("--delimiter", cfg.delimiter, "field delimiter (default ,)");
  cmd->add_option("--output,-o", cfg.output, "output path (default stdout)");
  if (with_format)
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

void add_method_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--method,-m", cfg.method, "scoring method")
      ->check(CLI::IsMember({"dft", "rft", "anova", "corr", "var"}));
  cmd->add_option("--bins,-b", cfg.bins, "number of uniform bins B (default 16)");
  cmd->add_option("--target-kind", cfg.target_kind, "target interpretation")
      ->check(CLI::IsMember({"categorical", "continuous", "auto"}));
  cmd->add_flag("--balanced", cfg.balanced, "reweight classes to equal priors (dft)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ftsel - supervised feature selection via split losses and filter scores"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* score = app.add_subcommand("score", "score and rank all features");
  add_io_options(score, cfg);
  add_method_options(score, cfg);
  score->add_option("--noise-sigma", cfg.noise_sigma, "add N(0, sigma^2) noise before scoring");
  score->add_option("--seed", cfg.seed, "seed for the noise stream");

  CLI::App* curve = app.add_subcommand("curve", "emit threshold-loss and ranked-score curves");
  add_io_options(curve, cfg);
  add_method_options(curve, cfg);
  curve->add_option("--feature,-f", cfg.curve_features, "feature indices for threshold curves");
  curve->add_option("--smoothing", cfg.smoothing, "odd moving-average window for elbow detection");
  curve->add_option("--noise-sigma", cfg.noise_sigma, "add N(0, sigma^2) noise before scoring");
  curve->add_option("--seed", cfg.seed, "seed for the noise stream");

  CLI::App* select = app.add_subcommand("select", "write a reduced dataset with the top features");
  add_io_options(select, cfg, /*with_format=*/false);
  add_method_options(select, cfg);
  select->add_option("--k,-k", cfg.top_k, "number of features to keep");
  select->add_option("--elbow", cfg.elbow_mode, "pick k from the ranked-curve elbow")
      ->check(CLI::IsMember({"early", "late"}));
  select->add_option("--smoothing", cfg.smoothing,
                     "odd moving-average window for elbow detection");

  CLI::App* bench = app.add_subcommand("bench", "compare all methods on a train/test pair");
  bench->add_option("--task", cfg.task, "classification or regression")->required();
  bench->add_option("--train", cfg.train_path, "training CSV (with --test)");
  bench->add_option("--test", cfg.test_path, "test CSV (with --train)");
  bench->add_option("--label,-l", cfg.label, "label column for --train/--test");
  bench->add_option("--delimiter", cfg.delimiter, "field delimiter (default ,)");
  bench->add_option("--bins,-b", cfg.bins, "number of uniform bins B (default 16)");
  bench->add_flag("--balanced", cfg.balanced, "reweight classes to equal priors (dft)");
  bench->add_option("--seed", cfg.seed, "seed for synthetic data and noise");
  bench->add_option("--noise-sigma", cfg.noise_sigma, "perturbation for the noisy columns");
  bench->add_option("--n-per-class", cfg.n_per_class, "synthetic: samples per class");
  bench->add_option("--n-samples", cfg.n_samples, "synthetic: regression sample count");
  bench->add_option("--informative", cfg.n_informative, "synthetic: informative dims");
  bench->add_option("--noise-dims", cfg.n_noise_dims, "synthetic: noise dims");
  bench->add_option("--separation", cfg.separation, "synthetic: class mean separation");
  bench->add_option("--coeff", cfg.coefficients, "synthetic: regression coefficients");
  bench->add_option("--smoothing", cfg.smoothing,
                    "odd moving-average window for elbow detection");
  bench->add_option("--output,-o", cfg.output, "output path (default stdout)");
  bench->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(score)) {
      cfg.command = "score";
      return cmd_score(cfg);
    }
    if (app.got_subcommand(curve)) {
      cfg.command = "curve";
      return cmd_curve(cfg);
    }
    if (app.got_subcommand(select)) {
      cfg.command = "select";
      return cmd_select(cfg);
    }
    cfg.command = "bench";
    return cmd_bench(cfg);
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
