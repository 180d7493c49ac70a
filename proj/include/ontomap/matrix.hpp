#pragma once

#include <Eigen/Dense>

namespace ontomap {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kStochasticTolerance = 1e-9;

// True when every entry lies in [0,1] and every column sums to 1 within `tol`.
bool is_column_stochastic(const Matrix& m, double tol = kStochasticTolerance);

// Divides each column by its sum unless the sum is already 1 to within a few
// ulps, so applying it twice is a no-op.
void normalize_columns(Matrix& m);

// Column-wise softmax of a logit matrix.
Matrix softmax_columns(const Matrix& logits);

}  // namespace ontomap
