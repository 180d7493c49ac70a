#include "ontomap/corridor.hpp"

#include <string>

#include "ontomap/errors.hpp"

namespace ontomap {

void CorridorSpec::validate() const {
  if (length < 2) throw DomainError("corridor length must be at least 2, got " + std::to_string(length));
}

const Alphabet& corridor_motor() {
  static const Alphabet motor{"L", "R"};
  return motor;
}

const Alphabet& corridor_sensor() {
  static const Alphabet sensor{"left-end", "middle", "right-end"};
  return sensor;
}

FiniteStateModel build_corridor(const CorridorSpec& spec) {
  spec.validate();
  const auto n = static_cast<Eigen::Index>(spec.length);
  Matrix left = Matrix::Zero(n, n);
  Matrix right = Matrix::Zero(n, n);
  Matrix out = Matrix::Zero(3, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    left(j == 0 ? 0 : j - 1, j) = 1.0;
    right(j == n - 1 ? n - 1 : j + 1, j) = 1.0;
    out(j == 0 ? 0 : (j == n - 1 ? 2 : 1), j) = 1.0;
  }
  return FiniteStateModel(spec.length, corridor_motor(), corridor_sensor(), {std::move(left), std::move(right)},
                          std::move(out));
}

UtilityVector corridor_goal(const CorridorSpec& spec) {
  spec.validate();
  Vector v = Vector::Zero(static_cast<Eigen::Index>(spec.length));
  v(v.size() - 1) = 1.0;
  return UtilityVector(std::move(v));
}

OntologyMap published_corridor_map() {
  OntologyMap map;
  map.phi.resize(4, 5);
  map.phi << 1, 0, 0, 0, 0,
             0, 1, 0.503, 0, 0,
             0, 0, 0.496, 1, 0,
             0, 0, 0, 0, 1;
  map.phi_inv.resize(5, 4);
  map.phi_inv << 1, 0.014, 0.001, 0,
                 0, 0.715, 0, 0,
                 0, 0.270, 0.283, 0,
                 0, 0, 0.715, 0,
                 0, 0, 0, 1;
  normalize_columns(map.phi);
  normalize_columns(map.phi_inv);
  return map;
}

}  // namespace ontomap
