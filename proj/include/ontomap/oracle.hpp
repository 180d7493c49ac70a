#pragma once

#include <cstddef>

#include "ontomap/objective.hpp"

namespace ontomap {

struct OracleResult {
  OntologyMap map;
  double total = 0.0;
  std::size_t evaluated = 0;
  /// Largest |objective change| from the best grid point to any grid point one
  /// step away (one unit of mass moved between two entries of one column).
  double step_variation = 0.0;
};

/// Free parameters of a map between n0 and n1 states.
std::size_t free_map_parameters(std::size_t n0, std::size_t n1);

inline constexpr std::size_t kOracleMaxFreeParameters = 6;

/// Exhaustive search over maps whose columns lie on the simplex grid with
/// spacing `resolution` (1/resolution must be an integer). Ties keep the first
/// grid point in enumeration order. Throws DomainError when the instance has
/// more than kOracleMaxFreeParameters free parameters.
OracleResult oracle_search(const FiniteStateModel& o0, const FiniteStateModel& o1, double resolution = 0.05,
                           const SmoothingPolicy& policy = SmoothingPolicy{});

}  // namespace ontomap
