#pragma once

#include "aci/controller.hpp"
#include "aci/trace.hpp"
#include "aci/types.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aci {

/// Interval score (u - l) + (2/eps)(l - y)[y < l] + (2/eps)(y - u)[y > u].
/// +inf if either endpoint is infinite. eps must lie in (0, 1).
double winkler_score(double lower, double upper, double y, double eps);

/// Same score written as |set| + 2 d(set, y) / eps.
double winkler_score_set_form(double lower, double upper, double y, double eps);

/// |set \ {y}| for a classification set.
int excess_count(const PredictionSet& set, int y, int n_labels);

/// Plain observed excess at one fixed significance level.
double observed_excess(std::span<const std::pair<PredictionSet, int>> sets_and_labels,
                       int n_labels);

/// Observed excess where step i was answered at eps_i (read from records).
double observed_excess_aci(std::span<const StepRecord> records);

struct WinklerClamp {
  double lo = 0.001;
  double hi = 0.999;
};

/// Builds the record for one step. Regression EmptySet counts as an error
/// with an infinite penalty and is flagged separately.
StepRecord make_step_record(std::int64_t step, double eps_used, const PredictionSet& set,
                            const Label& y, int n_labels, WinklerClamp clamp = {});

struct RunSummary {
  std::int64_t n = 0;
  std::int64_t err_sum = 0;
  double mean_err = 0.0;
  std::optional<double> mean_winkler_finite;
  std::optional<double> mean_width_finite;
  std::optional<double> mean_set_size;  // classification
  std::optional<double> oe_aci;         // classification
  double frac_inf = 0.0;
  double frac_empty = 0.0;
  std::int64_t n_infinite = 0;
  std::int64_t n_empty = 0;
  double eps_target = 0.0;
  double eps1 = 0.0;
  double gamma = 0.0;
  double bound = 0.0;
  bool bound_satisfied = false;
  bool confined = false;
  double min_eps = 0.0;
  double max_eps = 0.0;
};

RunSummary summarize_run(std::span<const StepRecord> records, double eps_target,
                         double gamma);

struct MetricCI {
  double mean = 0.0;
  double sd = 0.0;
  double half_width = 0.0;  // 1.96 sd / sqrt(T)
  std::size_t trials = 0;
  double lower() const { return mean - half_width; }
  double upper() const { return mean + half_width; }
};

MetricCI mean_ci(std::span<const double> values);

/// Per-metric mean and normal-approximation 95% interval across trials.
/// Metrics absent in any trial (e.g. no finite intervals) use the trials
/// that report them. Needs at least two trials.
std::map<std::string, MetricCI> aggregate_trials(std::span<const RunSummary> summaries);

/// Named numeric view of a summary, used for aggregation and reporting.
std::map<std::string, double> summary_metrics(const RunSummary& s);

/// Lag-1 sample autocorrelation.
double lag1_autocorrelation(std::span<const int> values);

}  // namespace aci
