#pragma once

#include "aci/trace.hpp"

#include <cstdint>
#include <span>

namespace aci {

/// Significance-level controller state. `eps_current` is stored unclamped;
/// predictors apply the extended boundary themselves.
struct AciState {
  double eps_target = 0.1;
  double eps_current = 0.1;
  double gamma = 0.01;
  std::int64_t step_count = 0;
  std::int64_t err_sum = 0;
};

/// Starts a controller at eps1 (defaults to the target rate).
AciState make_aci_state(double eps_target, double gamma, double eps1);
inline AciState make_aci_state(double eps_target, double gamma) {
  return make_aci_state(eps_target, gamma, eps_target);
}

/// eps_{n+1} = eps_n + gamma * (eps - err_n)
AciState aci_update(const AciState& state, bool err);

/// Smallest step size that guarantees |eps - mean err| <= delta after n
/// steps: max(eps1, 1 - eps1) / (delta * n - 1). Throws DomainError when
/// delta <= (max(eps1, 1 - eps1) + 1) / n.
double gamma_for_bound(double eps1, double delta, std::int64_t n);

/// (max(eps1, 1 - eps1) + gamma) / (gamma * n)
double deviation_bound(double eps1, double gamma, std::int64_t n);

struct GuaranteeReport {
  std::int64_t n = 0;
  std::int64_t err_sum = 0;
  double eps_target = 0.0;
  double eps1 = 0.0;
  double gamma = 0.0;
  double deviation = 0.0;  // |eps - err_sum / n|
  double bound = 0.0;
  bool satisfied = false;
};

/// Checks the finite-sample deviation bound on a trace. eps1 is read from
/// the first record's eps_used.
GuaranteeReport check_guarantee(std::span<const StepRecord> trace,
                                double eps_target, double gamma);

struct ConfinementReport {
  double min_eps = 0.0;
  double max_eps = 0.0;
  bool satisfied = true;  // every eps_used in [-gamma, 1 + gamma]
};

ConfinementReport check_confinement(std::span<const StepRecord> trace,
                                    double gamma);

}  // namespace aci
