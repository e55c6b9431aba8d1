#pragma once

#include "aci/types.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace aci {

// ---------------------------------------------------------------------------
// Underlying scorers
// ---------------------------------------------------------------------------

/// Classifier producing per-label scores in [0, 1] that sum to one.
class ClassScorer {
 public:
  virtual ~ClassScorer() = default;
  virtual void fit(const RowMatrix& X, std::span<const double> labels, int n_labels,
                   std::uint64_t seed) = 0;
  virtual int n_labels() const = 0;
  virtual Vector class_scores(const VectorRef& x) const = 0;
  /// One row of scores per row of X.
  virtual Matrix class_scores_batch(const RowMatrix& X) const;
};

/// Regressor with a point prediction and a quantile function that is
/// nondecreasing in q.
class RegressionScorer {
 public:
  virtual ~RegressionScorer() = default;
  virtual void fit(const RowMatrix& X, std::span<const double> y, std::uint64_t seed) = 0;
  virtual double point(const VectorRef& x) const = 0;
  virtual double quantile(const VectorRef& x, double q) const = 0;
};

/// class_scores(x)[y] = share of label y among the k nearest training rows.
class KnnClassScorer final : public ClassScorer {
 public:
  explicit KnnClassScorer(int k) : k_(k) {}
  void fit(const RowMatrix& X, std::span<const double> labels, int n_labels,
           std::uint64_t seed) override;
  int n_labels() const override { return n_labels_; }
  Vector class_scores(const VectorRef& x) const override;
  Matrix class_scores_batch(const RowMatrix& X) const override;

 private:
  int k_;
  int n_labels_ = 0;
  RowMatrix train_;
  std::vector<int> labels_;
};

/// Point = mean of the k nearest training labels; quantile(x, q) = their
/// empirical quantile (ceiling convention). Monotone in q by construction.
class KnnQuantileScorer final : public RegressionScorer {
 public:
  explicit KnnQuantileScorer(int k) : k_(k) {}
  void fit(const RowMatrix& X, std::span<const double> y, std::uint64_t seed) override;
  double point(const VectorRef& x) const override;
  double quantile(const VectorRef& x, double q) const override;

  /// Sorted labels of the k nearest neighbours of x.
  std::vector<double> neighbor_labels(const VectorRef& x) const;

 private:
  int k_;
  RowMatrix train_;
  std::vector<double> y_;
};

/// Wraps a scorer whose raw quantiles may cross: evaluates them on a fixed
/// level grid, applies isotonic regression and interpolates linearly.
class MonotoneQuantiles final : public RegressionScorer {
 public:
  MonotoneQuantiles(std::shared_ptr<RegressionScorer> raw, int grid_size = 99);
  void fit(const RowMatrix& X, std::span<const double> y, std::uint64_t seed) override {
    raw_->fit(X, y, seed);
  }
  double point(const VectorRef& x) const override { return raw_->point(x); }
  double quantile(const VectorRef& x, double q) const override;

 private:
  std::shared_ptr<RegressionScorer> raw_;
  std::vector<double> levels_;
};

// ---------------------------------------------------------------------------
// Decision rules
// ---------------------------------------------------------------------------

/// Inductive p-value (|{j : cal_j >= alpha}| + 1) / (n_cal + 1) against
/// calibration scores sorted ascending.
double icp_pvalue(std::span<const double> sorted_cal_scores, double alpha);

/// ICP classification from the label scores of x. Nonconformity is
/// 1 - score.
PredictionSet icp_classify_from_scores(std::span<const double> sorted_cal_scores,
                                       const VectorRef& class_scores, double eps);

PredictionSet icp_classify_predict(const ClassScorer& scorer,
                                   std::span<const double> cal_scores,
                                   const VectorRef& x, double eps);

/// point +- the ceil((1 - eps)(n_cal + 1))-th smallest calibration residual;
/// (-inf, +inf) when that index exceeds n_cal.
PredictionSet icp_regress_from_point(std::span<const double> sorted_cal_residuals,
                                     double point, double eps);

PredictionSet icp_regress_predict(const RegressionScorer& scorer,
                                  std::span<const double> cal_residuals,
                                  const VectorRef& x, double eps);

PredictionSet inccp_classify_predict(const ClassScorer& scorer, const VectorRef& x,
                                     double eps);

/// [quantile(eps / 2), quantile(1 - eps / 2)].
PredictionSet inccp_regress_predict(const RegressionScorer& scorer,
                                    const VectorRef& x, double eps);

/// 1 - class_score(x_j, y_j) for every calibration row.
std::vector<double> class_calibration_scores(const ClassScorer& scorer,
                                             const RowMatrix& X,
                                             std::span<const double> labels);

/// |y_j - point(x_j)| for every calibration row.
std::vector<double> calibration_residuals(const RegressionScorer& scorer,
                                          const RowMatrix& X, std::span<const double> y);

// ---------------------------------------------------------------------------
// Fitted offline predictors (fixed prediction rule)
// ---------------------------------------------------------------------------

class OfflinePredictor {
 public:
  virtual ~OfflinePredictor() = default;
  virtual Task task() const = 0;
  virtual std::string name() const = 0;
  virtual int n_labels() const { return 0; }
  virtual PredictionSet predict(const VectorRef& x, double eps) const = 0;

  /// Caches eps-independent work for a block of test rows; subsequent
  /// predict_row(i, eps) calls are equivalent to predict(X.row(i), eps).
  virtual void prepare(const RowMatrix& X) { prepared_ = X; }
  virtual PredictionSet predict_row(std::size_t i, double eps) const {
    return predict(prepared_.row(static_cast<Eigen::Index>(i)).transpose(), eps);
  }

 protected:
  RowMatrix prepared_;
};

class IcpClassifier final : public OfflinePredictor {
 public:
  IcpClassifier(std::shared_ptr<const ClassScorer> scorer, std::vector<double> cal_scores);
  Task task() const override { return Task::classification; }
  std::string name() const override { return "icp-class"; }
  int n_labels() const override { return scorer_->n_labels(); }
  PredictionSet predict(const VectorRef& x, double eps) const override;
  void prepare(const RowMatrix& X) override { scores_ = scorer_->class_scores_batch(X); }
  PredictionSet predict_row(std::size_t i, double eps) const override;

 private:
  std::shared_ptr<const ClassScorer> scorer_;
  std::vector<double> sorted_cal_;
  Matrix scores_;
};

class InccpClassifier final : public OfflinePredictor {
 public:
  explicit InccpClassifier(std::shared_ptr<const ClassScorer> scorer)
      : scorer_(std::move(scorer)) {}
  Task task() const override { return Task::classification; }
  std::string name() const override { return "inccp-class"; }
  int n_labels() const override { return scorer_->n_labels(); }
  PredictionSet predict(const VectorRef& x, double eps) const override;
  void prepare(const RowMatrix& X) override { scores_ = scorer_->class_scores_batch(X); }
  PredictionSet predict_row(std::size_t i, double eps) const override;

 private:
  std::shared_ptr<const ClassScorer> scorer_;
  Matrix scores_;
};

class IcpRegressor final : public OfflinePredictor {
 public:
  IcpRegressor(std::shared_ptr<const RegressionScorer> scorer, std::vector<double> residuals);
  Task task() const override { return Task::regression; }
  std::string name() const override { return "icp-reg"; }
  PredictionSet predict(const VectorRef& x, double eps) const override;
  void prepare(const RowMatrix& X) override;
  PredictionSet predict_row(std::size_t i, double eps) const override;

 private:
  std::shared_ptr<const RegressionScorer> scorer_;
  std::vector<double> sorted_residuals_;
  std::vector<double> points_;
};

class InccpRegressor final : public OfflinePredictor {
 public:
  explicit InccpRegressor(std::shared_ptr<const RegressionScorer> scorer)
      : scorer_(std::move(scorer)) {}
  Task task() const override { return Task::regression; }
  std::string name() const override { return "inccp-reg"; }
  PredictionSet predict(const VectorRef& x, double eps) const override;

 private:
  std::shared_ptr<const RegressionScorer> scorer_;
};

}  // namespace aci
