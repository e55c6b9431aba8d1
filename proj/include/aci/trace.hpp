#pragma once

#include "aci/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace aci {

/// One step of an ACI-driven run.
struct StepRecord {
  std::int64_t step = 0;
  double eps_used = 0.0;
  int err = 0;
  /// Label count for classification, interval width for regression.
  double set_size_or_width = 0.0;
  std::optional<double> winkler;  // regression only; +inf for unbounded sets
  std::optional<int> excess;      // classification only
  bool is_infinite = false;
  bool is_empty = false;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

using Trace = std::vector<StepRecord>;

}  // namespace aci
