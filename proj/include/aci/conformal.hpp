#pragma once

#include "aci/history.hpp"
#include "aci/numerics.hpp"
#include "aci/predictor.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace aci {

/// Conformal p-value of the last score: |{i : s_i >= s_last}| / n.
double p_value(std::span<const double> scores);

/// Scores one member of a bag against the rest of the bag. Must be
/// deterministic and invariant to the order of the other members.
class NonconformityMeasure {
 public:
  virtual ~NonconformityMeasure() = default;
  virtual double score(const History& bag, std::size_t member) const = 0;
};

/// Ratio of the mean distance to the k nearest same-label examples to the
/// mean distance to the k nearest other-label examples.
///
/// Fewer than k same-label examples: average what exists. None at all:
/// +inf. No other-label examples: 0. `exclude` removes one bag member from
/// consideration (used when z itself sits inside the bag).
double knn_nonconformity(const History& bag, const VectorRef& x, int label, int k,
                         std::optional<std::size_t> exclude = std::nullopt);

class KnnNonconformity final : public NonconformityMeasure {
 public:
  explicit KnnNonconformity(int k) : k_(k) {}
  double score(const History& bag, std::size_t member) const override;

 private:
  int k_;
};

/// Generic full conformal classifier: for every candidate label, append
/// (x, y) to the bag, score every member against the rest, keep y iff its
/// p-value exceeds eps. Quadratic in the history per candidate; intended
/// for small histories and as a reference for the specialised predictors.
PredictionSet conformal_predict(const NonconformityMeasure& measure,
                                const History& history, const VectorRef& x,
                                double eps, int n_labels);

/// Per-candidate p-values of the k-NN conformal predictor.
std::vector<double> knn_cp_pvalues(const History& history, const VectorRef& x,
                                   int k, int n_labels);

PredictionSet knn_cp_predict(const History& history, const VectorRef& x,
                             double eps, int k, int n_labels);

/// k-NN conformal predictor for the online protocol. Keeps the pairwise
/// distance matrix of the history so each step costs O(n^2) comparisons
/// and O(n p) new distance evaluations.
class KnnConformalPredictor final : public OnlinePredictor {
 public:
  KnnConformalPredictor(Eigen::Index dim, int k, int n_labels);

  Task task() const override { return Task::classification; }
  std::string name() const override { return "knn-cp"; }
  int n_labels() const override { return n_labels_; }

  PredictionSet predict(const VectorRef& x, double eps) override;
  void learn(const VectorRef& x, double label) override;

  std::vector<double> pvalues(const VectorRef& x) const;
  const History& history() const { return history_; }

 private:
  double& dist(std::size_t i, std::size_t j) { return dist_[i * capacity_ + j]; }
  double dist(std::size_t i, std::size_t j) const { return dist_[i * capacity_ + j]; }
  void grow(std::size_t capacity);

  int k_;
  int n_labels_;
  History history_;
  std::size_t capacity_ = 0;
  std::vector<double> dist_;  // capacity_ x capacity_, row-major
};

/// Vectors of the CRR residual representation a + b * y.
struct CrrCoefficients {
  Vector a;  // (I - H)(y_1, ..., y_{n-1}, 0)^T
  Vector b;  // (I - H)(0, ..., 0, 1)^T
};

/// A and B for the n-row design (history rows then x).
CrrCoefficients crr_coefficients(const History& history, const VectorRef& x,
                                 double ridge);

/// Interval from CRR coefficients at significance eps in (0, 1).
PredictionSet crr_interval(const CrrCoefficients& coef, double eps);

/// Conformalized ridge regression: the exact full conformal interval for
/// the upper (y - yhat) and lower (yhat - y) residual measures at eps / 2.
PredictionSet crr_predict(const History& history, const VectorRef& x,
                          double eps, double ridge);

struct LinearOptions {
  double ridge = 0.0;
  bool intercept = false;
};

/// Online CRR with running X^T X and X^T y. Recomputes A and B each step
/// (O(n p) plus one p x p factorization).
class CrrPredictor final : public OnlinePredictor {
 public:
  CrrPredictor(Eigen::Index dim, LinearOptions options);

  Task task() const override { return Task::regression; }
  std::string name() const override { return "crr"; }

  PredictionSet predict(const VectorRef& x, double eps) override;
  void learn(const VectorRef& x, double label) override;

  CrrCoefficients coefficients(const VectorRef& x) const;

 private:
  Vector augment(const VectorRef& x) const;

  LinearOptions options_;
  History history_;
  Matrix gram_;  // X^T X (no ridge)
  Vector xty_;
};

}  // namespace aci
