#include "sheaflab/linalg.hpp"

#include <Eigen/SVD>
#include <limits>

namespace sheaflab {

double rank_threshold(double sigma_max, Eigen::Index rows, Eigen::Index cols, double rel_tol) {
  const double rel = rel_tol >= 0
                         ? rel_tol
                         : static_cast<double>(std::max(rows, cols)) *
                               std::numeric_limits<double>::epsilon();
  return rel * sigma_max;
}

Eigen::Index numerical_rank(const MatrixD& m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<MatrixD> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double thresh = rank_threshold(sv(0), m.rows(), m.cols(), rel_tol);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > thresh) ++rank;
  return rank;
}

MatrixD numerical_kernel_basis(const MatrixD& m, double rel_tol) {
  const Eigen::Index n = m.cols();
  if (m.rows() == 0 || n == 0) return MatrixD::Identity(n, n);
  Eigen::JacobiSVD<MatrixD> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  if (sv.size() > 0 && sv(0) > 0.0) {
    const double thresh = rank_threshold(sv(0), m.rows(), m.cols(), rel_tol);
    while (rank < sv.size() && sv(rank) > thresh) ++rank;
  }
  return svd.matrixV().rightCols(n - rank);
}

}  // namespace sheaflab
