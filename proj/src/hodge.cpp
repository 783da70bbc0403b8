#include "sheaflab/hodge.hpp"

namespace sheaflab {

std::vector<Eigen::Triplet<double>> coboundary_triplets(const Sheaf<double>& F, int q, long& rows,
                                                        long& cols, bool assume_valid) {
  detail::require_valid(F, assume_valid);
  const SimplicialComplex& K = F.complex();
  if (q < 0 || q >= K.dim())
    throw std::out_of_range("coboundary degree must satisfy 0 <= q < dim K");

  const std::vector<long> off_lo = F.offsets(q);
  const std::vector<long> off_hi = F.offsets(q + 1);
  const bool cov = F.variance() == Variance::covariant;
  rows = cov ? off_hi.back() : off_lo.back();
  cols = cov ? off_lo.back() : off_hi.back();

  std::vector<Eigen::Triplet<double>> out;
  for (int c = 0; c < K.count(q + 1); ++c) {
    for (const auto& ref : K.faces_of(q + 1, c)) {
      const Matrix<double>* m = F.restriction(q, ref.face, c);
      if (!m) continue;
      const long r0 = cov ? off_hi[c] : off_lo[ref.face];
      const long c0 = cov ? off_lo[ref.face] : off_hi[c];
      for (Eigen::Index j = 0; j < m->cols(); ++j)
        for (Eigen::Index i = 0; i < m->rows(); ++i) {
          const double v = ref.sign * (*m)(i, j);
          if (v != 0.0) out.emplace_back(static_cast<int>(r0 + i), static_cast<int>(c0 + j), v);
        }
    }
  }
  return out;
}

Eigen::SparseMatrix<double> coboundary_sparse(const Sheaf<double>& F, int q, bool assume_valid) {
  long rows = 0, cols = 0;
  auto trips = coboundary_triplets(F, q, rows, cols, assume_valid);
  Eigen::SparseMatrix<double> sp(rows, cols);
  sp.setFromTriplets(trips.begin(), trips.end());
  return sp;
}

std::vector<double> spectrum(const MatrixD& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("spectrum: matrix must be square");
  const double scale = std::max(1.0, max_abs(M));
  if (max_abs(MatrixD(M - M.transpose())) > 1e-9 * scale)
    throw std::invalid_argument("spectrum: matrix is not symmetric within tolerance");
  if (M.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<MatrixD> solver(MatrixD(0.5 * (M + M.transpose())));
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace sheaflab
