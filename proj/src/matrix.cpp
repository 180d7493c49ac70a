#include "ontomap/matrix.hpp"

#include <cmath>
#include <limits>

namespace ontomap {

bool is_column_stochastic(const Matrix& m, double tol) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const double v = m(i, j);
      if (!(v >= 0.0 && v <= 1.0)) return false;
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol) return false;
  }
  return true;
}

void normalize_columns(Matrix& m) {
  const double slack = 4.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(m.rows());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const double sum = m.col(j).sum();
    if (sum > 0.0 && std::abs(sum - 1.0) > slack) m.col(j) /= sum;
  }
}

Matrix softmax_columns(const Matrix& logits) {
  Matrix out(logits.rows(), logits.cols());
  for (Eigen::Index j = 0; j < logits.cols(); ++j) {
    const double top = logits.col(j).maxCoeff();
    out.col(j) = (logits.col(j).array() - top).exp().matrix();
    out.col(j) /= out.col(j).sum();
  }
  return out;
}

}  // namespace ontomap
