#pragma once

#include "ontomap/matrix.hpp"

namespace ontomap {

/// Floor applied to the approximating distribution so KL stays finite.
class SmoothingPolicy {
 public:
  static constexpr double kDefaultEpsilon = 1e-9;

  /// Throws DomainError unless 0 < epsilon <= 1e-3.
  explicit SmoothingPolicy(double epsilon = kDefaultEpsilon);

  double epsilon() const { return epsilon_; }

 private:
  double epsilon_;
};

/// Sum over columns of KL(P[:,j] || Q'[:,j]) in nats.
///
/// P is the "true" side and must be column-stochastic. Q' is Q with each
/// column rescaled to sum to 1 and then floored at epsilon; terms with P = 0
/// contribute 0. When Q is already stochastic and positive wherever P is, the
/// result is the exact divergence (no smoothing error).
/// Throws DimensionError on shape mismatch and DomainError if a column of P
/// is not a distribution or Q has a negative entry.
double kl_columns(const Matrix& p, const Matrix& q, const SmoothingPolicy& policy = SmoothingPolicy{});

}  // namespace ontomap
