#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <stdexcept>
#include <vector>

#include "sheaflab/rational.hpp"

namespace sheaflab {

template <typename S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatrixD = Matrix<double>;
using MatrixQ = Matrix<Rational>;
using MatrixZ = Matrix<Int>;

template <typename S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

template <typename S>
Matrix<S> identity(Eigen::Index n) {
  Matrix<S> m = Matrix<S>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <typename S>
S max_abs(const Matrix<S>& m) {
  S best(0);
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      S a = scalar_traits<S>::abs(m(i, j));
      if (a > best) best = a;
    }
  return best;
}

// Reduced row echelon form in place; returns the pivot columns.
template <typename S>
std::vector<Eigen::Index> rref_in_place(Matrix<S>& m) {
  static_assert(scalar_traits<S>::exact, "rref requires an exact scalar");
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r)
      if (m(r, col) != S(0)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    m.row(piv).swap(m.row(row));
    m.row(row) /= m(row, col);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == S(0)) continue;
      m.row(r) -= m(r, col) * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename S>
Eigen::Index exact_rank(Matrix<S> m) {
  return static_cast<Eigen::Index>(rref_in_place(m).size());
}

// Columns form an echelon basis of the null space (one basis vector per free
// column of the RREF).
template <typename S>
Matrix<S> exact_kernel_basis(Matrix<S> m) {
  const Eigen::Index n = m.cols();
  std::vector<Eigen::Index> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(n, false);
  for (Eigen::Index p : pivots) is_pivot[p] = true;

  Matrix<S> basis = Matrix<S>::Zero(n, n - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index k = 0;
  for (Eigen::Index col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    basis(col, k) = S(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(static_cast<Eigen::Index>(r), col);
    ++k;
  }
  return basis;
}

// Numerical-rank threshold: max(rows, cols) * machine epsilon * sigma_max,
// unless rel_tol >= 0 overrides the relative factor.
double rank_threshold(double sigma_max, Eigen::Index rows, Eigen::Index cols, double rel_tol = -1.0);

Eigen::Index numerical_rank(const MatrixD& m, double rel_tol = -1.0);

// Orthonormal basis of the null space (right singular vectors past the rank).
MatrixD numerical_kernel_basis(const MatrixD& m, double rel_tol = -1.0);

template <typename S>
MatrixD to_double_matrix(const Matrix<S>& m) {
  MatrixD out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = scalar_traits<S>::to_double(m(i, j));
  return out;
}

}  // namespace sheaflab
