#pragma once

#include <cstdint>
#include <vector>

#include "spinportrait/random.hpp"
#include "spinportrait/su2_scheme.hpp"

namespace spinportrait {

enum class ObjectiveKind { GramProduct, ConditionNumber };

/// Returned by `objective` for a set with a (numerically) singular shell.
inline constexpr double kInfeasibleObjective = -1e18;

struct OptimizerConfig {
  ObjectiveKind objective = ObjectiveKind::GramProduct;
  int restarts = 8;
  /// Objective evaluations per restart.
  int max_iters = 20000;
  std::uint64_t seed = 0;
  /// A restart stops once a full simplex pass improves the best value by
  /// less than this.
  double tolerance = 1e-13;

  /// Throws ConfigError for restarts < 1, max_iters < 1 or tolerance <= 0.
  void validate() const;
};

/// Larger is better. GramProduct: sum_L log det M(L), or the sentinel when
/// any det <= 1e-12. ConditionNumber: -cond(Q) with equal weights.
double objective(const DirectionSet& ds, ObjectiveKind kind);

/// Gauge-fixed parametrization: n_1 = +z, n_2 = n(x_0, 0), and n_k for
/// k >= 2 from (x_{2k-3}, x_{2k-2}) as (theta, phi). 8j - 1 parameters.
DirectionSet directions_from_params(Spin spin, const std::vector<double>& x);
int parameter_count(Spin spin);

struct OptimizeResult {
  DirectionSet directions;
  double objective;
  int best_restart;
  int evaluations;
};

/// Multi-restart Nelder-Mead over the gauge-fixed angles. Each restart
/// starts from uniformly random directions drawn from its own seeded stream;
/// the best objective wins, ties going to the lowest restart index. Throws
/// OptimizationFailure if every restart ends infeasible.
OptimizeResult optimize(Spin spin, const OptimizerConfig& config);

/// Uniformly random 4j + 1 directions.
DirectionSet random_direction_set(Spin spin, Rng& rng);

}  // namespace spinportrait
