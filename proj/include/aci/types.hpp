#pragma once

#include <Eigen/Core>

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace aci {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using VectorRef = Eigen::Ref<const Eigen::VectorXd>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Error taxonomy. Everything derives from std::exception subclasses so
// callers that only care about "something went wrong" can catch broadly.

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double condition_estimate)
      : std::runtime_error(what), condition_(condition_estimate) {}
  /// Reciprocal condition estimate of the system that failed.
  double condition_estimate() const noexcept { return condition_; }

 private:
  double condition_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Task { classification, regression };

/// Dense 0-based class id assigned by the dataset loader.
struct ClassLabel {
  int id = 0;
  friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

using Label = std::variant<ClassLabel, double>;

struct Example {
  Vector object;
  Label label;
};

inline double label_value(const Label& y) {
  if (const auto* c = std::get_if<ClassLabel>(&y)) return c->id;
  return std::get<double>(y);
}

// Prediction set variants. Intervals are closed at both ends; infinite
// endpoints are allowed.
struct LabelSet {
  std::vector<int> ids;  // sorted, unique
};
struct AllLabels {};
struct Interval {
  double lower = -kInf;
  double upper = kInf;
};
struct EmptySet {};

class PredictionSet {
 public:
  using Variant = std::variant<LabelSet, AllLabels, Interval, EmptySet>;

  static PredictionSet labels(std::vector<int> ids);
  static PredictionSet all_labels() { return PredictionSet(AllLabels{}); }
  static PredictionSet interval(double lower, double upper);
  static PredictionSet empty() { return PredictionSet(EmptySet{}); }
  /// The full label space for the task: AllLabels or (-inf, +inf).
  static PredictionSet full(Task task);

  const Variant& value() const noexcept { return v_; }

  bool is_empty() const noexcept;
  bool is_interval() const noexcept { return std::holds_alternative<Interval>(v_); }
  bool is_infinite_interval() const noexcept;

 private:
  explicit PredictionSet(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

bool set_contains(const PredictionSet& set, const Label& y);

/// Number of labels in a classification set; AllLabels counts as n_labels.
std::size_t set_size(const PredictionSet& set, int n_labels);

/// Width of a regression set (0 for EmptySet, +inf for unbounded).
double interval_width(const PredictionSet& set);

/// inner ⊆ outer. n_labels resolves AllLabels for classification sets.
bool is_subset(const PredictionSet& inner, const PredictionSet& outer,
               int n_labels);

/// The forced answer of an extended confidence predictor outside (0, 1):
/// full set for eps <= 0, empty set for eps >= 1, nullopt otherwise.
std::optional<PredictionSet> extended_boundary(double eps, Task task);

std::string describe(const PredictionSet& set);

}  // namespace aci
