#include "sheaflab/snf.hpp"

#include <stdexcept>

namespace sheaflab {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Quotient minimizing |a - q*b|, so repeated reduction shrinks entries fast.
Int nearest_quotient(const Int& a, const Int& b) {
  Int q = a / b;  // truncated
  Int best = q;
  Int best_rem = abs_int(a - q * b);
  for (const Int& cand : {Int(q - 1), Int(q + 1)}) {
    Int rem = abs_int(a - cand * b);
    if (rem < best_rem) {
      best = cand;
      best_rem = rem;
    }
  }
  return best;
}

struct Worker {
  MatrixZ A, V, Vinv;

  void swap_cols(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    A.col(a).swap(A.col(b));
    V.col(a).swap(V.col(b));
    Vinv.row(a).swap(Vinv.row(b));
  }

  // col_dst += c * col_src
  void add_col(Eigen::Index dst, Eigen::Index src, const Int& c) {
    A.col(dst) += c * A.col(src);
    V.col(dst) += c * V.col(src);
    Vinv.row(src) -= c * Vinv.row(dst);
  }

  void negate_col(Eigen::Index j) {
    A.col(j) = -A.col(j);
    V.col(j) = -V.col(j);
    Vinv.row(j) = -Vinv.row(j);
  }

  // Row operations do not touch V.
  void swap_rows(Eigen::Index a, Eigen::Index b) {
    if (a != b) A.row(a).swap(A.row(b));
  }
  void add_row(Eigen::Index dst, Eigen::Index src, const Int& c) { A.row(dst) += c * A.row(src); }
  void negate_row(Eigen::Index i) { A.row(i) = -A.row(i); }
};

}  // namespace

SmithNormalForm smith_normal_form(MatrixZ input) {
  const Eigen::Index m = input.rows();
  const Eigen::Index n = input.cols();

  Worker w{std::move(input), identity<Int>(n), identity<Int>(n)};

  const Eigen::Index steps = std::min(m, n);
  Eigen::Index t = 0;
  for (; t < steps; ++t) {
    // Smallest-magnitude nonzero pivot in the remaining block.
    Eigen::Index pi = -1, pj = -1;
    Int best;
    for (Eigen::Index i = t; i < m; ++i)
      for (Eigen::Index j = t; j < n; ++j) {
        if (w.A(i, j) == 0) continue;
        Int mag = abs_int(w.A(i, j));
        if (pi < 0 || mag < best) {
          pi = i;
          pj = j;
          best = mag;
        }
      }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    bool settled = false;
    while (!settled) {
      // Clear column t below the pivot.
      bool reduced = true;
      while (reduced) {
        reduced = false;
        for (Eigen::Index i = t + 1; i < m; ++i) {
          if (w.A(i, t) == 0) continue;
          w.add_row(i, t, -nearest_quotient(w.A(i, t), w.A(t, t)));
          if (w.A(i, t) != 0) {
            w.swap_rows(t, i);  // strictly smaller pivot; keep reducing
            reduced = true;
          }
        }
      }
      // Clear row t to the right of the pivot.
      reduced = true;
      while (reduced) {
        reduced = false;
        for (Eigen::Index j = t + 1; j < n; ++j) {
          if (w.A(t, j) == 0) continue;
          w.add_col(j, t, -nearest_quotient(w.A(t, j), w.A(t, t)));
          if (w.A(t, j) != 0) {
            w.swap_cols(t, j);
            reduced = true;
          }
        }
      }
      // Column clearing may have been undone by the row pass.
      bool column_clear = true;
      for (Eigen::Index i = t + 1; i < m; ++i)
        if (w.A(i, t) != 0) column_clear = false;
      if (!column_clear) continue;

      // Divisibility sweep: the pivot must divide every remaining entry.
      settled = true;
      for (Eigen::Index i = t + 1; i < m && settled; ++i)
        for (Eigen::Index j = t + 1; j < n && settled; ++j)
          if (w.A(i, j) % w.A(t, t) != 0) {
            w.add_row(t, i, Int(1));
            settled = false;
          }
    }
    if (w.A(t, t) < 0) w.negate_row(t);
  }

  SmithNormalForm out;
  out.rank = t;
  out.invariant_factors.reserve(t);
  for (Eigen::Index k = 0; k < t; ++k) out.invariant_factors.push_back(w.A(k, k));
  out.D = std::move(w.A);
  out.V = std::move(w.V);
  out.Vinv = std::move(w.Vinv);
  return out;
}

}  // namespace sheaflab
