#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ontomap/objective.hpp"

namespace ontomap {

using Rng = std::mt19937_64;

/// Independent generator for restart `index` of a run seeded with `seed`.
/// Depends only on (seed, index), so restarts can run in any order.
Rng restart_stream(std::uint64_t seed, std::uint64_t index);

struct OptimizerConfig {
  std::uint64_t seed = 0;
  int restarts = 10;
  int max_iters = 20000;      // proposals per restart
  double initial_step = 0.5;  // std-dev of the logit perturbation
  double step_decay = 0.5;
  int patience = 200;         // consecutive rejections before decaying the step
  double min_step = 1e-6;     // stop once the step falls below this
  SmoothingPolicy policy{};
  int threads = 0;            // 0 = hardware concurrency; results do not depend on it

  /// Throws DomainError for out-of-range fields.
  void validate() const;
};

struct HillClimbResult {
  OntologyMap map;
  ObjectiveReport report;
  int iterations = 0;
  std::vector<double> accepted_totals;  // start total first; filled only when tracing
};

struct RestartOutcome {
  int restart = 0;
  std::uint64_t stream_seed = 0;
  double final_total = 0.0;
  int iterations = 0;
};

struct OptimizationResult {
  OntologyMap best_map;
  ObjectiveReport best_report;
  int best_restart = 0;
  std::vector<RestartOutcome> per_restart;
};

/// Columns of phi and phi_inv drawn uniformly from the simplex.
OntologyMap random_map(std::size_t n0, std::size_t n1, Rng& rng);

/// Strict-improvement local search from `start`.
///
/// Each proposal perturbs one column (of phi or phi_inv, chosen uniformly) in
/// logit space with Gaussian noise of scale `step` and maps it back through a
/// softmax. After `patience` consecutive rejections the step is multiplied by
/// `step_decay`. Stops when the step drops below `min_step` or after
/// `max_iters` proposals.
HillClimbResult hill_climb(const FiniteStateModel& o0, const FiniteStateModel& o1, const OntologyMap& start,
                           const OptimizerConfig& config, Rng& rng, bool trace = false);

/// Best of `config.restarts` hill climbs from random starts.
OptimizationResult optimize(const FiniteStateModel& o0, const FiniteStateModel& o1, const OptimizerConfig& config);

}  // namespace ontomap
