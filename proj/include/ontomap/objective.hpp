#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ontomap/divergence.hpp"
#include "ontomap/model.hpp"

namespace ontomap {

/// Pair of stochastic maps between the state spaces of two models.
///
/// phi (n0 x n1) carries O1 distributions to O0; phi_inv (n1 x n0) carries
/// O0 distributions to O1. phi_inv is not a matrix inverse of phi.
struct OntologyMap {
  Matrix phi;
  Matrix phi_inv;

  std::size_t old_states() const { return static_cast<std::size_t>(phi.rows()); }
  std::size_t new_states() const { return static_cast<std::size_t>(phi.cols()); }

  /// Both matrices column-stochastic and shapes transposed to each other.
  bool is_valid(double tol = kStochasticTolerance) const;

  static OntologyMap identity(std::size_t n);
};

/// Per-term breakdown of the bisimulation objective. Term vectors are keyed
/// by motor symbol in alphabet order.
struct ObjectiveReport {
  double total = 0.0;
  std::vector<std::pair<std::string, double>> forward_transition_terms;   // KL(T1^x || phi_inv T0^x phi)
  double forward_output_term = 0.0;                                        // KL(A1 || A0 phi)
  std::vector<std::pair<std::string, double>> backward_transition_terms;  // KL(T0^x || phi T1^x phi_inv)
  double backward_output_term = 0.0;                                       // KL(A0 || A1 phi_inv)

  /// Sum of the individual terms, in a fixed order.
  double sum_of_terms() const;
};

/// Bisimulation objective of `map` between o0 (old) and o1 (new).
///
/// The output terms compare A1 with A0·phi and A0 with A1·phi_inv: an output
/// matrix is pulled back through the map, never conjugated by it.
ObjectiveReport evaluate(const FiniteStateModel& o0, const FiniteStateModel& o1, const OntologyMap& map,
                         const SmoothingPolicy& policy = SmoothingPolicy{});

/// Total only; same arithmetic as evaluate().total.
double evaluate_total(const FiniteStateModel& o0, const FiniteStateModel& o1, const OntologyMap& map,
                      const SmoothingPolicy& policy = SmoothingPolicy{});

/// Throws DimensionError unless alphabets match and map shapes fit the models.
void require_compatible(const FiniteStateModel& o0, const FiniteStateModel& o1, const OntologyMap& map);

}  // namespace ontomap
