#include <doctest.h>

#include <cmath>

#include "ontomap/corridor.hpp"
#include "ontomap/errors.hpp"
#include "ontomap/objective.hpp"
#include "support/generators.hpp"

using namespace ontomap;

namespace {

// Objective of the published corridor map (columns rescaled to sum to 1),
// computed with an independent dense-array implementation of the objective.
constexpr double kPublishedMapObjective = 6.868154434913966;

FiniteStateModel deterministic_model(testing::Gen& g, std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  std::uniform_int_distribution<Eigen::Index> pick_state(0, k - 1), pick_sensor(0, 2);
  std::vector<Matrix> ts;
  for (int x = 0; x < 2; ++x) {
    Matrix t = Matrix::Zero(k, k);
    for (Eigen::Index j = 0; j < k; ++j) t(pick_state(g), j) = 1.0;
    ts.push_back(t);
  }
  Matrix a = Matrix::Zero(3, k);
  for (Eigen::Index j = 0; j < k; ++j) a(pick_sensor(g), j) = 1.0;
  return FiniteStateModel(n, corridor_motor(), corridor_sensor(), ts, a);
}

}  // namespace

TEST_CASE("evaluate worked examples") {
  const auto c4 = build_corridor({4});
  const auto c5 = build_corridor({5});

  SUBCASE("a model against itself under the identity map") {
    CHECK(evaluate(c4, c4, OntologyMap::identity(4)).total <= 1e-9);
    CHECK(evaluate(c5, c5, OntologyMap::identity(5)).total <= 1e-9);
  }

  SUBCASE("published corridor map") {
    const auto report = evaluate(c4, c5, published_corridor_map());
    CHECK(std::abs(report.total - kPublishedMapObjective) <= 1e-9);
    CHECK(report.forward_transition_terms.size() == 2);
    CHECK(report.forward_transition_terms[0].first == "L");
    CHECK(report.backward_transition_terms[1].first == "R");
    CHECK(report.forward_output_term < 1e-6);
  }

  SUBCASE("single-state models") {
    const FiniteStateModel one(1, corridor_motor(), corridor_sensor(), {Matrix::Ones(1, 1), Matrix::Ones(1, 1)},
                               Vector::Unit(3, 1));
    CHECK(evaluate(one, one, OntologyMap::identity(1)).total == 0.0);
  }
}

TEST_CASE("evaluate rejects mismatched inputs") {
  const auto c4 = build_corridor({4});
  const auto c5 = build_corridor({5});
  CHECK_THROWS_AS(evaluate(c4, c5, OntologyMap::identity(4)), DimensionError);
  OntologyMap transposed{published_corridor_map().phi_inv, published_corridor_map().phi};
  CHECK_THROWS_AS(evaluate(c4, c5, transposed), DimensionError);
  const FiniteStateModel other(4, {"up", "down"}, corridor_sensor(), c4.transitions(), c4.output());
  CHECK_THROWS_AS(evaluate(c4, other, OntologyMap::identity(4)), DimensionError);
}

TEST_CASE("property: report terms sum to the total and are nonnegative") {
  testing::Gen g(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n0 = testing::uniform_size(g, 1, 5), n1 = testing::uniform_size(g, 1, 5);
    const auto o0 = testing::random_model(g, n0);
    const auto o1 = testing::random_model(g, n1);
    const auto map = testing::random_ontology_map(g, n0, n1, 0.2);
    const auto r = evaluate(o0, o1, map);
    CHECK(std::abs(r.total - r.sum_of_terms()) <= 1e-9);
    CHECK(r.total == evaluate_total(o0, o1, map));
    const double slack = 1e-6;
    for (const auto& [_, v] : r.forward_transition_terms) CHECK(v >= -slack);
    for (const auto& [_, v] : r.backward_transition_terms) CHECK(v >= -slack);
    CHECK(r.forward_output_term >= -slack);
    CHECK(r.backward_output_term >= -slack);
  }
}

TEST_CASE("property: label invariance under simultaneous permutation") {
  testing::Gen g(12);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n0 = testing::uniform_size(g, 1, 6), n1 = testing::uniform_size(g, 1, 6);
    const auto o0 = testing::random_model(g, n0);
    const auto o1 = testing::random_model(g, n1);
    const auto map = testing::random_ontology_map(g, n0, n1, 0.2);
    const auto perm0 = testing::permutation(g, n0);
    const auto perm1 = testing::permutation(g, n1);
    const Matrix p0 = permutation_matrix(perm0);
    const Matrix p1 = permutation_matrix(perm1);
    const OntologyMap relabeled{p0 * map.phi * p1.transpose(), p1 * map.phi_inv * p0.transpose()};
    const double before = evaluate_total(o0, o1, map);
    const double after = evaluate_total(permute_states(o0, perm0), permute_states(o1, perm1), relabeled);
    CHECK(std::abs(before - after) <= 1e-9);
  }
}

TEST_CASE("property: a permuted copy is matched exactly by the permutation") {
  testing::Gen g(13);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = testing::uniform_size(g, 1, 7);
    const auto o0 = trial % 2 ? deterministic_model(g, n) : build_corridor({std::max<std::size_t>(n, 2)});
    const auto perm = testing::permutation(g, o0.states());
    const auto o1 = permute_states(o0, perm);
    const Matrix p = permutation_matrix(perm);
    CHECK(evaluate_total(o0, o1, {p.transpose(), p}) <= 1e-9);
  }
}

TEST_CASE("property: swapping the roles of the models") {
  testing::Gen g(14);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n0 = testing::uniform_size(g, 1, 5), n1 = testing::uniform_size(g, 1, 5);
    const auto o0 = testing::random_model(g, n0);
    const auto o1 = testing::random_model(g, n1);
    const auto map = testing::random_ontology_map(g, n0, n1);
    const double forward = evaluate_total(o0, o1, map);
    const double swapped = evaluate_total(o1, o0, {map.phi_inv, map.phi});
    CHECK(std::abs(forward - swapped) <= 1e-9);
  }
}

TEST_CASE("evaluate is deterministic") {
  testing::Gen g(15);
  const auto o0 = testing::random_model(g, 4);
  const auto o1 = testing::random_model(g, 5);
  const auto map = testing::random_ontology_map(g, 4, 5);
  const auto a = evaluate(o0, o1, map);
  const auto b = evaluate(o0, o1, map);
  CHECK(a.total == b.total);
  CHECK(a.forward_transition_terms == b.forward_transition_terms);
}
