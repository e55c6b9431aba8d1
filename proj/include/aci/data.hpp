#pragma once

#include "aci/types.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aci {

/// An ordered stream of examples. Row i of X is the object of example i;
/// y holds reals (regression) or exact integer class ids (classification).
struct Dataset {
  std::string name;
  Task task = Task::regression;
  RowMatrix X;
  Vector y;
  int n_classes = 0;
  std::vector<std::string> label_names;

  std::size_t size() const { return static_cast<std::size_t>(X.rows()); }
  Eigen::Index dim() const { return X.cols(); }
  Example example(std::size_t i) const;
  Label label(std::size_t i) const;

  Dataset slice(std::size_t begin, std::size_t end) const;
  Dataset subset(std::span<const std::size_t> indices) const;
  Dataset concat(const Dataset& tail) const;
};

enum class WineOrder { white_then_red, red_then_white, file };

WineOrder parse_wine_order(const std::string& s);

struct WineData {
  Dataset data;
  std::size_t n_white = 0;
  std::size_t n_red = 0;
  std::vector<std::string> warnings;
};

/// Reads the semicolon-delimited wine quality files (header row, 11
/// feature columns, then quality). WineOrder::file reads one pre-ordered
/// file from `red_path` and ignores `white_path`.
WineData load_wine(const std::filesystem::path& red_path,
                   const std::filesystem::path& white_path, WineOrder order);

/// One semicolon-delimited wine file.
Dataset load_wine_file(const std::filesystem::path& path, const std::string& name);

/// One whitespace-delimited digits file: label then 256 pixel values.
Dataset load_usps_file(const std::filesystem::path& path, const std::string& name);

std::pair<Dataset, Dataset> load_usps(const std::filesystem::path& train_path,
                                      const std::filesystem::path& test_path);

/// Writes label then features per line, 17 significant digits, in the
/// format read by load_usps_file (generic width).
void save_whitespace(const Dataset& d, std::ostream& out);

/// Column-wise z-score fitted on one dataset and applied to others.
struct Standardizer {
  Eigen::RowVectorXd mean;
  Eigen::RowVectorXd scale;
  static Standardizer fit(const RowMatrix& X);
  void apply(RowMatrix& X) const;
};

enum class StreamKind { changepoint_regression, drifting_classes };

/// Parameters of a synthetic non-exchangeable stream. Pure function of its
/// fields.
struct StreamSpec {
  StreamKind kind = StreamKind::changepoint_regression;
  std::size_t n = 2000;
  int p = 3;
  int n_classes = 4;
  double changepoint = 0.5;  // fraction of n
  double shift = 1.0;        // |w2 - w1| (regression) / mean jump (classes)
  double drift_rate = 0.0;   // per-step parameter drift
  double noise = 0.5;
  std::uint64_t seed = 0;
};

/// y = x^T w_t + noise with w_t = w1 before the changepoint and w2 after,
/// plus drift_rate * t along a fixed direction.
Dataset synth_changepoint_stream(const StreamSpec& spec);

/// Gaussian classes whose means drift and jump at the changepoint.
Dataset synth_class_stream(const StreamSpec& spec);

Dataset synth_stream(const StreamSpec& spec);

struct SplitPlan {
  std::uint64_t seed = 0;
  double cal_fraction = 0.0;
  std::vector<std::size_t> proper_train;
  std::vector<std::size_t> calibration;
};

/// Seeded uniform shuffle; the last floor(cal_fraction * l) indices go to
/// calibration.
SplitPlan split_train_calibration(std::size_t l, double cal_fraction, std::uint64_t seed);

}  // namespace aci
