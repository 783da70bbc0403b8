#pragma once

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>
#include <algorithm>
#include <optional>
#include <vector>

#include "sheaflab/sheaf.hpp"

namespace sheaflab {

namespace detail {

template <typename S>
void require_valid(const Sheaf<S>& F, bool assume_valid) {
  if (!assume_valid && !F.validated())
    throw std::logic_error("sheaf has not been validated; run validate_sheaf first");
}

}  // namespace detail

// Degree-q block operator between cochain degrees q and q+1, in canonical
// simplex order. Covariant: maps q-cochains to (q+1)-cochains with block
// (tau, sigma) = [sigma:tau] * F_{sigma,tau}. Contravariant: the
// boundary-direction operator from (q+1)-cochains to q-cochains with block
// (sigma, tau) = [sigma:tau] * F_{tau,sigma}.
template <typename S>
Matrix<S> coboundary_matrix(const Sheaf<S>& F, int q, bool assume_valid = false) {
  detail::require_valid(F, assume_valid);
  const SimplicialComplex& K = F.complex();
  if (q < 0 || q >= K.dim())
    throw std::out_of_range("coboundary degree must satisfy 0 <= q < dim K");

  const std::vector<long> off_lo = F.offsets(q);
  const std::vector<long> off_hi = F.offsets(q + 1);
  const bool cov = F.variance() == Variance::covariant;
  Matrix<S> C = Matrix<S>::Zero(cov ? off_hi.back() : off_lo.back(),
                                cov ? off_lo.back() : off_hi.back());

  for (int c = 0; c < K.count(q + 1); ++c) {
    for (const auto& ref : K.faces_of(q + 1, c)) {
      const Matrix<S>* m = F.restriction(q, ref.face, c);
      if (!m || m->size() == 0) continue;
      Matrix<S> block = (ref.sign < 0) ? Matrix<S>(-*m) : *m;
      if (cov)
        C.block(off_hi[c], off_lo[ref.face], block.rows(), block.cols()) = block;
      else
        C.block(off_lo[ref.face], off_hi[c], block.rows(), block.cols()) = block;
    }
  }
  return C;
}

// Triplet-list assembly for complexes too large for dense storage.
std::vector<Eigen::Triplet<double>> coboundary_triplets(const Sheaf<double>& F, int q,
                                                        long& rows, long& cols,
                                                        bool assume_valid = false);
Eigen::SparseMatrix<double> coboundary_sparse(const Sheaf<double>& F, int q,
                                              bool assume_valid = false);

enum class LaplacianPart { up, down, full };

inline LaplacianPart laplacian_part_from_string(const std::string& s) {
  if (s == "up") return LaplacianPart::up;
  if (s == "down") return LaplacianPart::down;
  if (s == "full") return LaplacianPart::full;
  throw std::invalid_argument("unknown Laplacian part: " + s);
}

// Hodge Laplacian at degree q with adjoints given by matrix transpose.
// Missing coboundaries (below degree 0, above the top dimension) contribute
// zero, so the top degree is handled here rather than by coboundary_matrix.
template <typename S>
Matrix<S> hodge_laplacian(const Sheaf<S>& F, int q, LaplacianPart part = LaplacianPart::full,
                          bool assume_valid = false) {
  detail::require_valid(F, assume_valid);
  const SimplicialComplex& K = F.complex();
  if (q < 0 || q > K.dim()) throw std::out_of_range("laplacian degree out of range");

  const long n = F.total_dim(q);
  const bool cov = F.variance() == Variance::covariant;
  Matrix<S> L = Matrix<S>::Zero(n, n);

  const bool want_up = part != LaplacianPart::down;
  const bool want_down = part != LaplacianPart::up;

  if (want_up && q < K.dim()) {
    Matrix<S> C = coboundary_matrix(F, q, true);
    L += cov ? Matrix<S>(C.transpose() * C) : Matrix<S>(C * C.transpose());
  }
  if (want_down && q > 0) {
    Matrix<S> C = coboundary_matrix(F, q - 1, true);
    L += cov ? Matrix<S>(C * C.transpose()) : Matrix<S>(C.transpose() * C);
  }
  return L;
}

// dim ker of the degree-q Hodge Laplacian. Exact mode uses rank-nullity on
// the two adjacent operators; float mode thresholds the singular values of
// the full Laplacian (threshold max(rows,cols)*eps*sigma_max, or
// rel_tol*sigma_max when rel_tol >= 0).
template <typename S>
long cohomology_dimension(const Sheaf<S>& F, int q, double rel_tol = -1.0,
                          bool assume_valid = false) {
  detail::require_valid(F, assume_valid);
  const SimplicialComplex& K = F.complex();
  if (q < 0 || q > K.dim()) throw std::out_of_range("cohomology degree out of range");

  if constexpr (scalar_traits<S>::exact) {
    const long n = F.total_dim(q);
    long r_up = 0, r_down = 0;
    if (q < K.dim()) r_up = exact_rank(coboundary_matrix(F, q, true));
    if (q > 0) r_down = exact_rank(coboundary_matrix(F, q - 1, true));
    return n - r_up - r_down;
  } else {
    const Matrix<S> L = hodge_laplacian(F, q, LaplacianPart::full, true);
    const long n = static_cast<long>(L.rows());
    if (n == 0) return 0;
    return n - numerical_rank(to_double_matrix(L), rel_tol);
  }
}

// Basis of the global-section space (the kernel of the degree-0 coboundary)
// as columns over the vertex cochain space. Orthonormal in float mode,
// echelon in rational mode. Covariant sheaves only.
template <typename S>
Matrix<S> global_sections(const Sheaf<S>& F, double rel_tol = -1.0, bool assume_valid = false) {
  detail::require_valid(F, assume_valid);
  if (F.variance() != Variance::covariant)
    throw std::invalid_argument("global sections are defined for covariant sheaves");

  const long n0 = F.total_dim(0);
  if (F.complex().dim() == 0) return identity<S>(n0);

  const Matrix<S> C0 = coboundary_matrix(F, 0, true);
  if constexpr (scalar_traits<S>::exact) {
    return exact_kernel_basis(C0);
  } else {
    return numerical_kernel_basis(to_double_matrix(C0), rel_tol);
  }
}

// Eigenvalues of (M + M^T)/2 in ascending order. M must be square and
// symmetric within 1e-9 relative to its largest entry.
std::vector<double> spectrum(const MatrixD& M);

// Exact alternating sums for the rank-nullity (Euler characteristic)
// identity; both sides agree on every validated sheaf.
template <typename S>
long euler_characteristic_cells(const Sheaf<S>& F) {
  long chi = 0;
  for (int q = 0; q <= F.complex().dim(); ++q)
    chi += (q % 2 == 0 ? 1 : -1) * F.total_dim(q);
  return chi;
}

template <typename S>
long euler_characteristic_cohomology(const Sheaf<S>& F, double rel_tol = -1.0,
                                     bool assume_valid = false) {
  long chi = 0;
  for (int q = 0; q <= F.complex().dim(); ++q)
    chi += (q % 2 == 0 ? 1 : -1) * cohomology_dimension(F, q, rel_tol, assume_valid);
  return chi;
}

// Per-degree cache of coboundary matrices and block offsets.
template <typename S>
class CochainSystem {
 public:
  explicit CochainSystem(const Sheaf<S>& F, bool assume_valid = false)
      : variance_(F.variance()), top_(F.complex().dim()) {
    detail::require_valid(F, assume_valid);
    for (int q = 0; q <= top_; ++q) {
      offsets_.push_back(F.offsets(q));
      if (q < top_) matrices_.push_back(coboundary_matrix(F, q, true));
    }
  }

  int top_degree() const { return top_; }
  Variance variance() const { return variance_; }
  const Matrix<S>& matrix(int q) const { return matrices_.at(q); }
  const std::vector<long>& offsets(int q) const { return offsets_.at(q); }
  long total_dim(int q) const { return offsets_.at(q).back(); }

  // Max-entry norm of the composite of consecutive operators; zero for a
  // valid complex.
  S composition_defect(int q) const {
    if (variance_ == Variance::covariant) return max_abs(Matrix<S>(matrix(q + 1) * matrix(q)));
    return max_abs(Matrix<S>(matrix(q) * matrix(q + 1)));
  }

 private:
  Variance variance_;
  int top_;
  std::vector<Matrix<S>> matrices_;
  std::vector<std::vector<long>> offsets_;
};

}  // namespace sheaflab
