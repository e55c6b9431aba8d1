#pragma once

#include "aci/history.hpp"
#include "aci/rng.hpp"
#include "aci/types.hpp"

#include <cstdint>
#include <memory>
#include <string>

namespace aci {

/// Online set predictor: sees the history through `learn`, answers at any
/// finite significance level. Implementations honour the extended contract
/// (full set for eps <= 0, empty set for eps >= 1).
///
/// Instances are single-writer. Do not share one across concurrent steps.
class OnlinePredictor {
 public:
  virtual ~OnlinePredictor() = default;

  virtual Task task() const = 0;
  virtual std::string name() const = 0;
  virtual int n_labels() const { return 0; }

  virtual PredictionSet predict(const VectorRef& x, double eps) = 0;
  virtual void learn(const VectorRef& x, double label) = 0;
};

/// EmptySet with probability clamp(eps, 0, 1), AllLabels otherwise.
PredictionSet coin_flip_predict(double eps, Rng& rng);

/// Uniform random subset of {0..n_labels-1} for eps in (0, 1); boundary
/// sets outside. Not nested in eps.
PredictionSet random_set_predict(double eps, int n_labels, Rng& rng);

/// Coin-flip predictor. The coin for step n is a pure function of
/// (seed, n), so repeated queries within a step see the same draw.
class CoinFlipPredictor final : public OnlinePredictor {
 public:
  CoinFlipPredictor(Task task, int n_labels, std::uint64_t seed)
      : task_(task), n_labels_(n_labels), seed_(seed) {}

  Task task() const override { return task_; }
  std::string name() const override { return "coin-flip"; }
  int n_labels() const override { return n_labels_; }
  PredictionSet predict(const VectorRef& x, double eps) override;
  void learn(const VectorRef&, double) override { ++step_; }

 private:
  Task task_;
  int n_labels_;
  std::uint64_t seed_;
  std::uint64_t step_ = 0;
};

class RandomSetPredictor final : public OnlinePredictor {
 public:
  RandomSetPredictor(int n_labels, std::uint64_t seed)
      : n_labels_(n_labels), seed_(seed) {}

  Task task() const override { return Task::classification; }
  std::string name() const override { return "random-set"; }
  int n_labels() const override { return n_labels_; }
  PredictionSet predict(const VectorRef& x, double eps) override;
  void learn(const VectorRef&, double) override { ++step_; }

 private:
  int n_labels_;
  std::uint64_t seed_;
  std::uint64_t step_ = 0;
  std::uint64_t query_ = 0;
};

/// Always answers EmptySet, ignoring eps. Breaks the extended contract;
/// only useful as a negative control for the coverage guarantee.
class ConstantEmptyPredictor final : public OnlinePredictor {
 public:
  explicit ConstantEmptyPredictor(Task task) : task_(task) {}
  Task task() const override { return task_; }
  std::string name() const override { return "constant-empty"; }
  PredictionSet predict(const VectorRef&, double) override {
    return PredictionSet::empty();
  }
  void learn(const VectorRef&, double) override {}

 private:
  Task task_;
};

}  // namespace aci
