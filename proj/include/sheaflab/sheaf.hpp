#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "sheaflab/complex.hpp"
#include "sheaflab/linalg.hpp"

namespace sheaflab {

enum class Variance { covariant, contravariant };

inline const char* variance_name(Variance v) {
  return v == Variance::covariant ? "covariant" : "contravariant";
}

struct SimplexRef {
  int q = 0;
  int index = 0;
};

// A cellular sheaf valued in finite-dimensional vector spaces over S
// (double or Rational). Only codimension-1 restriction maps are stored;
// an absent map is the zero map. For a covariant sheaf the matrix on the
// incident pair (sigma, tau), sigma a face of tau, sends the sigma-stalk to
// the tau-stalk; contravariant sheaves store the reversed-direction map on
// the same pair.
template <typename S>
class Sheaf {
 public:
  Sheaf(std::shared_ptr<const SimplicialComplex> complex, Variance variance)
      : complex_(std::move(complex)), variance_(variance) {
    if (!complex_) throw std::invalid_argument("sheaf requires a complex");
    stalk_dims_.resize(complex_->dim() + 1);
    for (int q = 0; q <= complex_->dim(); ++q) stalk_dims_[q].assign(complex_->count(q), 0);
  }

  const SimplicialComplex& complex() const { return *complex_; }
  std::shared_ptr<const SimplicialComplex> complex_ptr() const { return complex_; }
  Variance variance() const { return variance_; }

  int stalk_dim(int q, int idx) const { return stalk_dims_.at(q).at(idx); }

  void set_stalk_dim(int q, int idx, int d) {
    if (d < 0) throw std::invalid_argument("stalk dimension must be nonnegative");
    stalk_dims_.at(q).at(idx) = d;
    validated_ = false;
  }

  void set_uniform_stalk_dim(int q, int d) {
    for (int i = 0; i < complex_->count(q); ++i) set_stalk_dim(q, i, d);
  }

  long total_dim(int q) const {
    if (q < 0 || q > complex_->dim()) return 0;
    long total = 0;
    for (int d : stalk_dims_[q]) total += d;
    return total;
  }

  // Block start offsets in canonical order at degree q (one extra entry with
  // the total).
  std::vector<long> offsets(int q) const {
    std::vector<long> off;
    off.reserve(complex_->count(q) + 1);
    long at = 0;
    for (int i = 0; i < complex_->count(q); ++i) {
      off.push_back(at);
      at += stalk_dim(q, i);
    }
    off.push_back(at);
    return off;
  }

  Eigen::Index rows_for_pair(int q, int face_idx, int coface_idx) const {
    return variance_ == Variance::covariant ? stalk_dim(q + 1, coface_idx) : stalk_dim(q, face_idx);
  }
  Eigen::Index cols_for_pair(int q, int face_idx, int coface_idx) const {
    return variance_ == Variance::covariant ? stalk_dim(q, face_idx) : stalk_dim(q + 1, coface_idx);
  }

  void set_restriction(int q, int face_idx, int coface_idx, Matrix<S> m) {
    require_incident(q, face_idx, coface_idx);
    if (m.rows() != rows_for_pair(q, face_idx, coface_idx) ||
        m.cols() != cols_for_pair(q, face_idx, coface_idx))
      throw std::invalid_argument("restriction map shape mismatch on pair (" +
                                  simplex_to_string(complex_->simplex(q, face_idx)) + ", " +
                                  simplex_to_string(complex_->simplex(q + 1, coface_idx)) + ")");
    maps_[{q, face_idx, coface_idx}] = std::move(m);
    validated_ = false;
  }

  // nullptr means the zero map.
  const Matrix<S>* restriction(int q, int face_idx, int coface_idx) const {
    auto it = maps_.find({q, face_idx, coface_idx});
    return it == maps_.end() ? nullptr : &it->second;
  }

  Matrix<S> restriction_or_zero(int q, int face_idx, int coface_idx) const {
    const Matrix<S>* m = restriction(q, face_idx, coface_idx);
    if (m) return *m;
    return Matrix<S>::Zero(rows_for_pair(q, face_idx, coface_idx),
                           cols_for_pair(q, face_idx, coface_idx));
  }

  const std::map<std::tuple<int, int, int>, Matrix<S>>& restrictions() const { return maps_; }

  bool validated() const { return validated_; }
  void mark_validated(bool v = true) const { validated_ = v; }

 private:
  void require_incident(int q, int face_idx, int coface_idx) const {
    for (const auto& ref : complex_->faces_of(q + 1, coface_idx))
      if (ref.face == face_idx) return;
    throw std::invalid_argument("pair is not codimension-1 incident");
  }

  std::shared_ptr<const SimplicialComplex> complex_;
  Variance variance_;
  std::vector<std::vector<int>> stalk_dims_;
  std::map<std::tuple<int, int, int>, Matrix<S>> maps_;
  mutable bool validated_ = false;
};

using SheafD = Sheaf<double>;
using SheafQ = Sheaf<Rational>;

// One inconsistent pair of two-step compositions between sigma (degree q)
// and rho (degree q+2) through the two intermediate simplices.
struct PathViolation {
  SimplexRef sigma;
  SimplexRef rho;
  SimplexRef mid1;
  SimplexRef mid2;
  double discrepancy = 0.0;
};

struct ValidationReport {
  std::vector<PathViolation> violations;
  bool valid() const { return violations.empty(); }
};

// Checks path independence of all codim-1 compositions two dimensions apart;
// exact comparison in rational mode, max-entry tolerance otherwise. An empty
// report marks the sheaf validated.
template <typename S>
ValidationReport validate_sheaf(const Sheaf<S>& F, double tol = 1e-9) {
  const SimplicialComplex& K = F.complex();
  ValidationReport report;
  for (int q = 0; q + 2 <= K.dim(); ++q) {
    for (int rho = 0; rho < K.count(q + 2); ++rho) {
      const auto& mids = K.faces_of(q + 2, rho);
      for (std::size_t a = 0; a < mids.size(); ++a) {
        for (std::size_t b = a + 1; b < mids.size(); ++b) {
          const int t1 = mids[a].face;
          const int t2 = mids[b].face;
          // Two distinct codim-1 faces of rho meet in exactly one q-face.
          const Simplex& tau1 = K.simplex(q + 1, t1);
          const Simplex& tau2 = K.simplex(q + 1, t2);
          Simplex sig;
          std::set_intersection(tau1.begin(), tau1.end(), tau2.begin(), tau2.end(),
                                std::back_inserter(sig));
          const int sigma = K.index_of(sig);
          Matrix<S> via1, via2;
          if (F.variance() == Variance::covariant) {
            via1 = F.restriction_or_zero(q + 1, t1, rho) * F.restriction_or_zero(q, sigma, t1);
            via2 = F.restriction_or_zero(q + 1, t2, rho) * F.restriction_or_zero(q, sigma, t2);
          } else {
            via1 = F.restriction_or_zero(q, sigma, t1) * F.restriction_or_zero(q + 1, t1, rho);
            via2 = F.restriction_or_zero(q, sigma, t2) * F.restriction_or_zero(q + 1, t2, rho);
          }
          const Matrix<S> diff = via1 - via2;
          const S gap = max_abs(diff);
          const bool bad = scalar_traits<S>::exact ? (gap != S(0))
                                                   : (scalar_traits<S>::to_double(gap) > tol);
          if (bad)
            report.violations.push_back({{q, sigma},
                                         {q + 2, rho},
                                         {q + 1, t1},
                                         {q + 1, t2},
                                         scalar_traits<S>::to_double(gap)});
        }
      }
    }
  }
  if (report.valid()) F.mark_validated();
  return report;
}

// All stalks S^d, all codim-1 restrictions the d x d identity.
template <typename S>
Sheaf<S> constant_sheaf(std::shared_ptr<const SimplicialComplex> K, int d) {
  if (d < 1) throw std::invalid_argument("constant sheaf dimension must be >= 1");
  Sheaf<S> F(std::move(K), Variance::covariant);
  const SimplicialComplex& C = F.complex();
  for (int q = 0; q <= C.dim(); ++q) F.set_uniform_stalk_dim(q, d);
  const Matrix<S> eye = identity<S>(d);
  for (int q = 1; q <= C.dim(); ++q)
    for (int c = 0; c < C.count(q); ++c)
      for (const auto& ref : C.faces_of(q, c)) F.set_restriction(q - 1, ref.face, c, eye);
  return F;
}

// Stalks multiply, maps are Kronecker products. Both factors must live on
// the same complex with the same variance.
template <typename S>
Sheaf<S> tensor_product(const Sheaf<S>& F, const Sheaf<S>& G) {
  if (F.variance() != G.variance())
    throw std::invalid_argument("tensor_product: variance mismatch");
  if (F.complex_ptr() != G.complex_ptr() && !(F.complex() == G.complex()))
    throw std::invalid_argument("tensor_product: factors live on different complexes");

  Sheaf<S> H(F.complex_ptr(), F.variance());
  const SimplicialComplex& K = F.complex();
  for (int q = 0; q <= K.dim(); ++q)
    for (int i = 0; i < K.count(q); ++i)
      H.set_stalk_dim(q, i, F.stalk_dim(q, i) * G.stalk_dim(q, i));

  for (int q = 1; q <= K.dim(); ++q)
    for (int c = 0; c < K.count(q); ++c)
      for (const auto& ref : K.faces_of(q, c)) {
        const Matrix<S>* a = F.restriction(q - 1, ref.face, c);
        const Matrix<S>* b = G.restriction(q - 1, ref.face, c);
        if (!a || !b) continue;  // either factor zero => product zero
        H.set_restriction(q - 1, ref.face, c, kron(*a, *b));
      }
  return H;
}

}  // namespace sheaflab
