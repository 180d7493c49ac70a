#include <doctest.h>

#include "ontomap/corridor.hpp"
#include "ontomap/errors.hpp"
#include "ontomap/text_format.hpp"

using namespace ontomap;

TEST_CASE("build_corridor reproduces the four- and five-cell matrices") {
  SUBCASE("length 4") {
    const auto m = build_corridor({4});
    Matrix tl(4, 4), tr(4, 4), a(3, 4);
    tl << 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0;
    tr << 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1;
    a << 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1;
    CHECK(m.transition("L") == tl);
    CHECK(m.transition("R") == tr);
    CHECK(m.output() == a);
  }
  SUBCASE("length 5") {
    const auto m = build_corridor({5});
    Matrix tl(5, 5), tr(5, 5), a(3, 5);
    tl << 1, 1, 0, 0, 0,
          0, 0, 1, 0, 0,
          0, 0, 0, 1, 0,
          0, 0, 0, 0, 1,
          0, 0, 0, 0, 0;
    tr << 0, 0, 0, 0, 0,
          1, 0, 0, 0, 0,
          0, 1, 0, 0, 0,
          0, 0, 1, 0, 0,
          0, 0, 0, 1, 1;
    a << 1, 0, 0, 0, 0,
         0, 1, 1, 1, 0,
         0, 0, 0, 0, 1;
    CHECK(m.transition("L") == tl);
    CHECK(m.transition("R") == tr);
    CHECK(m.output() == a);
  }
  SUBCASE("length 2 leaves the middle symbol unused") {
    const auto m = build_corridor({2});
    Matrix tl(2, 2), tr(2, 2), a(3, 2);
    tl << 1, 1, 0, 0;
    tr << 0, 0, 1, 1;
    a << 1, 0, 0, 0, 0, 1;
    CHECK(m.transition("L") == tl);
    CHECK(m.transition("R") == tr);
    CHECK(m.output() == a);
    CHECK(m.sensor() == corridor_sensor());
  }
  SUBCASE("too short") {
    CHECK_THROWS_AS(build_corridor({1}), DomainError);
    CHECK_THROWS_AS(build_corridor({0}), DomainError);
    CHECK_THROWS_AS(corridor_goal({1}), DomainError);
  }
}

TEST_CASE("corridor_goal") {
  CHECK(corridor_goal({4}).values() == Vector{{0, 0, 0, 1}});
  CHECK(corridor_goal({5}).values() == Vector{{0, 0, 0, 0, 1}});
  CHECK(corridor_goal({2}).values() == Vector{{0, 1}});
}

TEST_CASE("every generated corridor is valid with one 1 per column") {
  for (std::size_t len = 2; len <= 40; ++len) {
    const auto m = build_corridor({len});
    CHECK(validate_model(m).empty());
    auto one_hot = [](const Matrix& x) {
      for (Eigen::Index j = 0; j < x.cols(); ++j) {
        if ((x.col(j).array() == 1.0).count() != 1 || x.col(j).sum() != 1.0) return false;
      }
      return true;
    };
    for (const auto& t : m.transitions()) CHECK(one_hot(t));
    CHECK(one_hot(m.output()));
  }
}

TEST_CASE("bundled fixtures are byte-identical to the generator") {
  for (std::size_t len : {4u, 5u}) {
    const std::string path = std::string(ONTOMAP_FIXTURE_DIR) + "/corridor" + std::to_string(len) + ".json";
    CHECK(read_file(path) == write_model(build_corridor({len})));
  }
}

TEST_CASE("published map is column-stochastic") {
  const auto map = published_corridor_map();
  CHECK(map.is_valid(1e-12));
  CHECK(map.phi(1, 2) == doctest::Approx(0.503 / 0.999));
}

TEST_CASE("published map fixture matches the built-in copy") {
  CHECK(read_file(std::string(ONTOMAP_FIXTURE_DIR) + "/corridor_published_map.json") ==
        write_map(published_corridor_map()));
}
