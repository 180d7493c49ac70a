#pragma once

#include <cstddef>

#include "ontomap/model.hpp"
#include "ontomap/objective.hpp"
#include "ontomap/utility.hpp"

namespace ontomap {

/// A row of `length` cells; the agent moves left or right and sees whether it
/// stands at the left end, the right end, or in between.
struct CorridorSpec {
  std::size_t length = 4;

  /// Throws DomainError when length < 2.
  void validate() const;
};

const Alphabet& corridor_motor();   // (L, R)
const Alphabet& corridor_sensor();  // (left-end, middle, right-end)

FiniteStateModel build_corridor(const CorridorSpec& spec);

/// 1 at the rightmost cell, 0 elsewhere.
UtilityVector corridor_goal(const CorridorSpec& spec);

/// Reference 4-cell -> 5-cell map, published to three significant figures.
/// Columns are rescaled to sum to 1 since the rounded values do not.
OntologyMap published_corridor_map();

}  // namespace ontomap
