#include "ontomap/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ontomap/errors.hpp"

namespace ontomap {

SmoothingPolicy::SmoothingPolicy(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1e-3))
    throw DomainError("smoothing epsilon must lie in (0, 1e-3], got " + std::to_string(epsilon));
}

double kl_columns(const Matrix& p, const Matrix& q, const SmoothingPolicy& policy) {
  if (p.rows() != q.rows() || p.cols() != q.cols()) {
    throw DimensionError("kl_columns shape mismatch: " + std::to_string(p.rows()) + "x" +
                         std::to_string(p.cols()) + " vs " + std::to_string(q.rows()) + "x" +
                         std::to_string(q.cols()));
  }
  const double eps = policy.epsilon();
  double total = 0.0;
  for (Eigen::Index j = 0; j < p.cols(); ++j) {
    double p_sum = 0.0;
    double q_sum = 0.0;
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
      const double pv = p(i, j);
      const double qv = q(i, j);
      if (!(pv >= 0.0)) throw DomainError("kl_columns: P has a negative or NaN entry");
      if (!(qv >= 0.0) || !std::isfinite(qv)) throw DomainError("kl_columns: Q has a negative or non-finite entry");
      p_sum += pv;
      q_sum += qv;
    }
    if (std::abs(p_sum - 1.0) > kStochasticTolerance)
      throw DomainError("kl_columns: column " + std::to_string(j + 1) + " of P is not a distribution");

    // An all-zero Q column carries no information; every entry takes the floor.
    const double scale = q_sum > 0.0 ? 1.0 / q_sum : 0.0;
    double column = 0.0;
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
      const double pv = p(i, j);
      if (pv == 0.0) continue;
      const double qv = std::max(q(i, j) * scale, eps);
      column += pv * std::log(pv / qv);
    }
    total += column;
  }
  return total;
}

}  // namespace ontomap
