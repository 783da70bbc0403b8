#pragma once

#include <map>
#include <string>
#include <vector>

#include "sheaflab/sheaf.hpp"

namespace sheaflab {

// Nonzero weight per simplex with w(face) | w(coface) along codim-1 pairs.
// Rational inputs are lifted to integers by the common denominator; all
// arithmetic in this module is exact.
class WeightFunction {
 public:
  WeightFunction() = default;

  // Requires a value for every simplex of K.
  static WeightFunction from_map(const SimplicialComplex& K,
                                 const std::map<Simplex, Rational>& values);

  const Int& operator()(int q, int idx) const { return weights_.at(q).at(idx); }

 private:
  std::vector<std::vector<Int>> weights_;
};

struct WeightViolation {
  enum class Kind { zero_weight, divisibility };
  Kind kind;
  int q;          // dimension of the face (zero_weight: the simplex itself)
  int face;       // index at dimension q
  int coface;     // index at dimension q+1; -1 for zero_weight entries
};

struct WeightReport {
  std::vector<WeightViolation> violations;
  bool valid() const { return violations.empty(); }
};

WeightReport validate_weight(const SimplicialComplex& K, const WeightFunction& w);

// Boundary map from q-chains to (q-1)-chains with entries
// [d_k(sigma):sigma] * w(sigma)/w(d_k(sigma)); integral for valid integer
// weights. 1 <= q <= dim K.
MatrixQ weighted_boundary_matrix(const SimplicialComplex& K, const WeightFunction& w, int q);

// Same matrix over the integers (requires a valid weight).
MatrixZ weighted_boundary_matrix_int(const SimplicialComplex& K, const WeightFunction& w, int q);

enum class CoefficientRing { rationals, integers };

// Per-degree weighted boundary matrices over exact scalars, cached in
// canonical simplex order. Integer mode is available exactly when the
// weight is valid (divisibility makes every entry integral).
class WeightedChainSystem {
 public:
  WeightedChainSystem(std::shared_ptr<const SimplicialComplex> K, WeightFunction w,
                      CoefficientRing ring = CoefficientRing::rationals);

  const SimplicialComplex& complex() const { return *complex_; }
  CoefficientRing ring() const { return ring_; }
  int top_degree() const { return complex_->dim(); }
  const MatrixQ& boundary(int q) const;          // 1 <= q <= dim K
  MatrixZ boundary_int(int q) const;             // integer view of the same matrix

  // Max-entry norm of d_{q-1} * d_q; exactly zero for every valid weight.
  Rational composition_defect(int q) const;

 private:
  std::shared_ptr<const SimplicialComplex> complex_;
  WeightFunction weight_;
  CoefficientRing ring_;
  std::vector<MatrixQ> boundaries_;  // index q-1 holds d_q
};

// dim ker(d_q) - rank(d_{q+1}) by exact elimination.
long weighted_homology_rank_q(const SimplicialComplex& K, const WeightFunction& w, int q);

struct IntegralHomology {
  long free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, each dividing the next
};

// Integral homology via the two-matrix Smith procedure: restrict the image
// of d_{q+1} to an integer basis of ker(d_q), then read invariant factors.
IntegralHomology weighted_homology_z(const SimplicialComplex& K, const WeightFunction& w, int q);

// Contravariant rank-1 sheaf over the rationals: the codim-1 map on
// (sigma, tau) is multiplication by w(tau)/w(sigma).
Sheaf<Rational> weight_cosheaf(std::shared_ptr<const SimplicialComplex> K,
                               const WeightFunction& w);

struct EquivalenceReport {
  long dim_weighted = 0;  // dim H_q over Q from the boundary matrices
  long dim_sheaf = 0;     // dim H^q of the weight cosheaf
  bool equal = false;
};

// Computes both sides of the weighted-homology / sheaf-cohomology
// identification through their independent code paths.
EquivalenceReport verify_weighted_equivalence(std::shared_ptr<const SimplicialComplex> K,
                                              const WeightFunction& w, int q);

}  // namespace sheaflab
