#pragma once

#include <vector>

#include "ontomap/matrix.hpp"
#include "ontomap/objective.hpp"

namespace ontomap {

/// Real-valued utility per hidden state of one model.
class UtilityVector {
 public:
  /// Throws DomainError on non-finite entries or an empty vector.
  explicit UtilityVector(Vector values);
  UtilityVector(std::initializer_list<double> values);

  std::size_t model_states() const { return static_cast<std::size_t>(values_.size()); }
  const Vector& values() const { return values_; }
  double operator[](std::size_t i) const { return values_(static_cast<Eigen::Index>(i)); }

 private:
  Vector values_;
};

/// Utility over O1 states: entry j is the expected O0 utility under phi's column j.
/// Throws DimensionError unless u has one entry per row of phi.
UtilityVector translate(const UtilityVector& u, const OntologyMap& map);

}  // namespace ontomap
