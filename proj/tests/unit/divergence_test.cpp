#include <doctest.h>

#include <cmath>
#include <limits>

#include "ontomap/divergence.hpp"
#include "ontomap/errors.hpp"
#include "support/generators.hpp"

using namespace ontomap;

TEST_CASE("smoothing policy range") {
  CHECK_THROWS_AS(SmoothingPolicy(0.0), DomainError);
  CHECK_THROWS_AS(SmoothingPolicy(-1e-9), DomainError);
  CHECK_THROWS_AS(SmoothingPolicy(2e-3), DomainError);
  CHECK(SmoothingPolicy().epsilon() == 1e-9);
  CHECK(SmoothingPolicy(1e-3).epsilon() == 1e-3);
}

TEST_CASE("kl_columns worked examples") {
  SUBCASE("identical matrices") {
    Matrix p(2, 2);
    p << 0.3, 0.6, 0.7, 0.4;
    CHECK(std::abs(kl_columns(p, p)) <= 1e-12);
  }
  SUBCASE("point mass against a fair coin") {
    Matrix p(2, 1), q(2, 1);
    p << 1, 0;
    q << 0.5, 0.5;
    // ln 2
    CHECK(kl_columns(p, q) == doctest::Approx(0.6931471805599453).epsilon(1e-9));
  }
  SUBCASE("two columns") {
    Matrix q(2, 2);
    q << 0.9, 0.2, 0.1, 0.8;
    // -ln 0.9 - ln 0.8
    CHECK(std::abs(kl_columns(Matrix::Identity(2, 2), q) - 0.32850406697203605) <= 1e-9);
  }
  SUBCASE("zero in Q under positive P stays finite") {
    Matrix p(2, 1), q(2, 1);
    p << 0.5, 0.5;
    q << 1.0, 0.0;
    const double v = kl_columns(p, q);
    CHECK(std::isfinite(v));
    // 0.5 ln(0.5 / 1) + 0.5 ln(0.5 / eps)
    CHECK(v == doctest::Approx(0.5 * std::log(0.5) + 0.5 * std::log(0.5 / 1e-9)).epsilon(1e-12));
  }
  SUBCASE("all-zero Q column is floored everywhere") {
    Matrix p(4, 1);
    p << 1, 0, 0, 0;
    CHECK(kl_columns(p, Matrix::Zero(4, 1)) == doctest::Approx(-std::log(1e-9)).epsilon(1e-12));
  }
  SUBCASE("unnormalized Q is rescaled") {
    Matrix p(2, 1), q(2, 1);
    p << 1, 0;
    q << 3, 3;
    CHECK(kl_columns(p, q) == doctest::Approx(0.6931471805599453).epsilon(1e-9));
  }
  SUBCASE("shared zeros cost nothing") {
    Matrix p(3, 2);
    p << 1, 0, 0, 0.25, 0, 0.75;
    CHECK(kl_columns(p, p) == 0.0);
  }
}

TEST_CASE("kl_columns errors") {
  CHECK_THROWS_AS(kl_columns(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), DimensionError);
  Matrix p(2, 1);
  p << 0.5, 0.4;
  CHECK_THROWS_AS(kl_columns(p, p), DomainError);
  Matrix q(2, 1);
  q << 1.0, -0.1;
  CHECK_THROWS_AS(kl_columns(Matrix::Identity(2, 1) + Matrix::Zero(2, 1), q), DomainError);
}

namespace {

// Plain per-entry definition, used as an independent check.
double reference_kl(const Matrix& p, const Matrix& q, double eps) {
  double total = 0.0;
  for (Eigen::Index j = 0; j < p.cols(); ++j) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < p.rows(); ++i) s += q(i, j);
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
      if (p(i, j) <= 0.0) continue;
      double qq = s > 0.0 ? q(i, j) / s : 0.0;
      if (qq < eps) qq = eps;
      total += p(i, j) * std::log(p(i, j) / qq);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("property: identity, nonnegativity, finiteness, column permutation") {
  testing::Gen g(7);
  const SmoothingPolicy policy;
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = static_cast<Eigen::Index>(testing::uniform_size(g, 1, 6));
    const auto c = static_cast<Eigen::Index>(testing::uniform_size(g, 1, 6));
    const Matrix p = testing::stochastic_matrix(g, r, c, 0.3);
    const Matrix q = testing::stochastic_matrix(g, r, c, 0.3);
    const double v = kl_columns(p, q, policy);

    CHECK(std::isfinite(v));
    CHECK(v >= -static_cast<double>(r * c) * policy.epsilon());
    CHECK(v == doctest::Approx(reference_kl(p, q, policy.epsilon())).epsilon(1e-12));

    const Matrix dense = testing::stochastic_matrix(g, r, c, 0.0);
    if (dense.minCoeff() > policy.epsilon()) CHECK(kl_columns(dense, dense, policy) <= 1e-12);

    const auto perm = testing::permutation(g, static_cast<std::size_t>(c));
    Matrix pp(r, c), qp(r, c);
    for (Eigen::Index j = 0; j < c; ++j) {
      pp.col(j) = p.col(static_cast<Eigen::Index>(perm[j]));
      qp.col(j) = q.col(static_cast<Eigen::Index>(perm[j]));
    }
    // Column order changes the summation order, so allow rounding.
    CHECK(kl_columns(pp, qp, policy) == doctest::Approx(v).epsilon(1e-12));
  }
}

TEST_CASE("property: finite for nonnegative Q with zeros") {
  testing::Gen g(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<Eigen::Index>(testing::uniform_size(g, 1, 5));
    const auto c = static_cast<Eigen::Index>(testing::uniform_size(g, 1, 5));
    const Matrix p = testing::stochastic_matrix(g, r, c, 0.5);
    Matrix q = Matrix::Zero(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j)
        if (testing::uniform_real(g, 0, 1) < 0.3) q(i, j) = testing::uniform_real(g, 0, 3);
    CHECK(std::isfinite(kl_columns(p, q)));
  }
}
