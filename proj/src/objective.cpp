#include "ontomap/objective.hpp"

#include "ontomap/errors.hpp"

namespace ontomap {

bool OntologyMap::is_valid(double tol) const {
  return phi.rows() == phi_inv.cols() && phi.cols() == phi_inv.rows() && is_column_stochastic(phi, tol) &&
         is_column_stochastic(phi_inv, tol);
}

OntologyMap OntologyMap::identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return {Matrix::Identity(k, k), Matrix::Identity(k, k)};
}

double ObjectiveReport::sum_of_terms() const {
  double s = 0.0;
  for (const auto& [_, v] : forward_transition_terms) s += v;
  s += forward_output_term;
  for (const auto& [_, v] : backward_transition_terms) s += v;
  s += backward_output_term;
  return s;
}

void require_compatible(const FiniteStateModel& o0, const FiniteStateModel& o1, const OntologyMap& map) {
  require_same_alphabets(o0, o1);
  const auto n0 = static_cast<Eigen::Index>(o0.states());
  const auto n1 = static_cast<Eigen::Index>(o1.states());
  if (map.phi.rows() != n0 || map.phi.cols() != n1)
    throw DimensionError("phi must be " + std::to_string(n0) + "x" + std::to_string(n1));
  if (map.phi_inv.rows() != n1 || map.phi_inv.cols() != n0)
    throw DimensionError("phi_inv must be " + std::to_string(n1) + "x" + std::to_string(n0));
}

namespace {

// Terms in report order: forward transitions, forward output, backward
// transitions, backward output.
template <typename Sink>
void compute_terms(const FiniteStateModel& o0, const FiniteStateModel& o1, const OntologyMap& map,
                   const SmoothingPolicy& policy, Sink&& sink) {
  const std::size_t m = o0.motor().size();
  for (std::size_t x = 0; x < m; ++x) {
    sink(kl_columns(o1.transition(x), map.phi_inv * o0.transition(x) * map.phi, policy));
  }
  sink(kl_columns(o1.output(), o0.output() * map.phi, policy));
  for (std::size_t x = 0; x < m; ++x) {
    sink(kl_columns(o0.transition(x), map.phi * o1.transition(x) * map.phi_inv, policy));
  }
  sink(kl_columns(o0.output(), o1.output() * map.phi_inv, policy));
}

}  // namespace

ObjectiveReport evaluate(const FiniteStateModel& o0, const FiniteStateModel& o1, const OntologyMap& map,
                         const SmoothingPolicy& policy) {
  require_compatible(o0, o1, map);
  std::vector<double> terms;
  terms.reserve(2 * o0.motor().size() + 2);
  compute_terms(o0, o1, map, policy, [&](double v) { terms.push_back(v); });

  const auto& motor = o0.motor();
  const std::size_t m = motor.size();
  ObjectiveReport r;
  for (std::size_t x = 0; x < m; ++x) r.forward_transition_terms.emplace_back(motor[x], terms[x]);
  r.forward_output_term = terms[m];
  for (std::size_t x = 0; x < m; ++x) r.backward_transition_terms.emplace_back(motor[x], terms[m + 1 + x]);
  r.backward_output_term = terms[2 * m + 1];
  r.total = r.sum_of_terms();
  return r;
}

double evaluate_total(const FiniteStateModel& o0, const FiniteStateModel& o1, const OntologyMap& map,
                      const SmoothingPolicy& policy) {
  require_compatible(o0, o1, map);
  double total = 0.0;
  compute_terms(o0, o1, map, policy, [&](double v) { total += v; });
  return total;
}

}  // namespace ontomap
