#include "ontomap/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "ontomap/errors.hpp"

namespace ontomap {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index ^ 0xd1b54a32d192ed03ULL));
}

Matrix random_stochastic(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = expo(rng);
    m.col(j) /= m.col(j).sum();
  }
  return m;
}

Matrix to_logits(const Matrix& probs, double floor) {
  return probs.array().max(floor).log().matrix();
}

}  // namespace

Rng restart_stream(std::uint64_t seed, std::uint64_t index) { return Rng(stream_seed(seed, index)); }

void OptimizerConfig::validate() const {
  if (restarts < 1) throw DomainError("restarts must be positive");
  if (max_iters < 1) throw DomainError("max_iters must be positive");
  if (!(initial_step > 0.0)) throw DomainError("initial_step must be positive");
  if (!(step_decay > 0.0 && step_decay < 1.0)) throw DomainError("step_decay must lie in (0,1)");
  if (patience < 1) throw DomainError("patience must be positive");
  if (!(min_step > 0.0)) throw DomainError("min_step must be positive");
  if (threads < 0) throw DomainError("threads must be nonnegative");
}

OntologyMap random_map(std::size_t n0, std::size_t n1, Rng& rng) {
  if (n0 == 0 || n1 == 0) throw DimensionError("random_map needs at least one state on each side");
  const auto r0 = static_cast<Eigen::Index>(n0);
  const auto r1 = static_cast<Eigen::Index>(n1);
  OntologyMap map;
  map.phi = random_stochastic(r0, r1, rng);
  map.phi_inv = random_stochastic(r1, r0, rng);
  return map;
}

HillClimbResult hill_climb(const FiniteStateModel& o0, const FiniteStateModel& o1, const OntologyMap& start,
                           const OptimizerConfig& config, Rng& rng, bool trace) {
  config.validate();
  require_compatible(o0, o1, start);
  if (!start.is_valid()) throw DomainError("hill_climb start map is not column-stochastic");

  const SmoothingPolicy& policy = config.policy;
  OntologyMap current = start;
  Matrix logits[2] = {to_logits(start.phi, policy.epsilon()), to_logits(start.phi_inv, policy.epsilon())};
  Matrix* mats[2] = {&current.phi, &current.phi_inv};
  const Eigen::Index phi_cols = start.phi.cols();
  const Eigen::Index total_cols = phi_cols + start.phi_inv.cols();

  double best = evaluate_total(o0, o1, current, policy);
  HillClimbResult result;
  if (trace) result.accepted_totals.push_back(best);

  std::uniform_int_distribution<Eigen::Index> pick(0, total_cols - 1);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double step = config.initial_step;
  int rejections = 0;
  int iter = 0;
  Vector proposal_logits;
  Vector saved_column;

  while (iter < config.max_iters && step >= config.min_step) {
    ++iter;
    const Eigen::Index c = pick(rng);
    const int which = c < phi_cols ? 0 : 1;
    const Eigen::Index col = which == 0 ? c : c - phi_cols;
    Matrix& m = *mats[which];

    proposal_logits = logits[which].col(col);
    for (Eigen::Index i = 0; i < proposal_logits.size(); ++i) proposal_logits(i) += step * gauss(rng);
    proposal_logits.array() -= proposal_logits.maxCoeff();

    saved_column = m.col(col);
    m.col(col) = proposal_logits.array().exp().matrix();
    m.col(col) /= m.col(col).sum();

    const double candidate = evaluate_total(o0, o1, current, policy);
    if (candidate < best) {
      best = candidate;
      logits[which].col(col) = proposal_logits;
      rejections = 0;
      if (trace) result.accepted_totals.push_back(best);
    } else {
      m.col(col) = saved_column;
      if (++rejections >= config.patience) {
        step *= config.step_decay;
        rejections = 0;
      }
    }
  }

  result.report = evaluate(o0, o1, current, policy);
  result.map = std::move(current);
  result.iterations = iter;
  return result;
}

OptimizationResult optimize(const FiniteStateModel& o0, const FiniteStateModel& o1, const OptimizerConfig& config) {
  config.validate();
  require_same_alphabets(o0, o1);

  const auto restarts = static_cast<std::size_t>(config.restarts);
  std::vector<HillClimbResult> runs(restarts);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < restarts; r = next++) {
      Rng rng = restart_stream(config.seed, r);
      const OntologyMap start = random_map(o0.states(), o1.states(), rng);
      runs[r] = hill_climb(o0, o1, start, config, rng);
    }
  };

  std::size_t workers = config.threads > 0 ? static_cast<std::size_t>(config.threads)
                                           : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, restarts);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  OptimizationResult out;
  std::size_t best = 0;
  for (std::size_t r = 0; r < restarts; ++r) {
    out.per_restart.push_back({static_cast<int>(r), stream_seed(config.seed, r), runs[r].report.total,
                               runs[r].iterations});
    if (runs[r].report.total < runs[best].report.total) best = r;
  }
  out.best_restart = static_cast<int>(best);
  out.best_map = std::move(runs[best].map);
  out.best_report = std::move(runs[best].report);
  return out;
}

}  // namespace ontomap
