#include "ontomap/utility.hpp"

#include <string>

#include "ontomap/errors.hpp"

namespace ontomap {

UtilityVector::UtilityVector(Vector values) : values_(std::move(values)) {
  if (values_.size() == 0) throw DomainError("utility vector must not be empty");
  if (!values_.allFinite()) throw DomainError("utility vector has a non-finite entry");
}

UtilityVector::UtilityVector(std::initializer_list<double> values)
    : UtilityVector(Eigen::Map<const Vector>(values.begin(), static_cast<Eigen::Index>(values.size()))) {}

UtilityVector translate(const UtilityVector& u, const OntologyMap& map) {
  if (u.model_states() != map.old_states()) {
    throw DimensionError("utility has " + std::to_string(u.model_states()) + " entries but the map expects " +
                         std::to_string(map.old_states()) + " old states");
  }
  return UtilityVector(map.phi.transpose() * u.values());
}

}  // namespace ontomap
