#pragma once

#include "aci/conformal.hpp"
#include "aci/history.hpp"
#include "aci/predictor.hpp"

#include <vector>

namespace aci {

/// S_k(x, y): share of label y among the k nearest history neighbours of x
/// (all of the history when it holds fewer than k examples).
std::vector<double> knn_vote_scores(const History& history, const VectorRef& x,
                                    int k, int n_labels);

/// Labels whose vote share exceeds eps.
PredictionSet threshold_labels(std::span<const double> scores, double eps);

PredictionSet knn_threshold_predict(const History& history, const VectorRef& x,
                                    double eps, int k, int n_labels);

class KnnThresholdPredictor final : public OnlinePredictor {
 public:
  KnnThresholdPredictor(Eigen::Index dim, int k, int n_labels)
      : k_(k), n_labels_(n_labels), history_(dim) {}

  Task task() const override { return Task::classification; }
  std::string name() const override { return "knn-nccp"; }
  int n_labels() const override { return n_labels_; }

  PredictionSet predict(const VectorRef& x, double eps) override {
    return knn_threshold_predict(history_, x, eps, k_, n_labels_);
  }
  void learn(const VectorRef& x, double label) override { history_.add(x, label); }

 private:
  int k_;
  int n_labels_;
  History history_;
};

/// Least-squares prediction interval yhat +- t_{1-eps/2, m-p} * sigma *
/// sqrt(1 + x^T (X^T X + aI)^{-1} x) over the m history rows, with
/// sigma^2 = rss / (m - p). (-inf, +inf) when m - p < 1 or the design is
/// singular.
PredictionSet ols_interval_predict(const History& history, const VectorRef& x,
                                   double eps, double ridge);

/// Online least-squares/ridge interval predictor with running sufficient
/// statistics (X^T X, X^T y, y^T y).
class OlsIntervalPredictor final : public OnlinePredictor {
 public:
  OlsIntervalPredictor(Eigen::Index dim, LinearOptions options);

  Task task() const override { return Task::regression; }
  std::string name() const override { return "ols-nccp"; }

  PredictionSet predict(const VectorRef& x, double eps) override;
  void learn(const VectorRef& x, double label) override;

 private:
  Vector augment(const VectorRef& x) const;

  LinearOptions options_;
  Eigen::Index dim_;
  std::size_t count_ = 0;
  Matrix gram_;
  Vector xty_;
  double yty_ = 0.0;
};

}  // namespace aci
