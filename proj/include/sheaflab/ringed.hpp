#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sheaflab/complex.hpp"
#include "sheaflab/sheaf.hpp"

namespace sheaflab {

// Monomial ideal in F[x_1..x_n], held as a minimal set of exponent vectors.
// The zero ideal is the empty set; the unit ideal is the all-zeros vector.
class MonomialIdeal {
 public:
  MonomialIdeal(int n_vars, std::vector<std::vector<int>> generators);

  static MonomialIdeal zero(int n_vars) { return MonomialIdeal(n_vars, {}); }

  int n_vars() const { return n_vars_; }
  const std::vector<std::vector<int>>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  // Standard membership criterion: some generator divides the monomial.
  bool contains_monomial(const std::vector<int>& exponents) const;

  bool operator==(const MonomialIdeal& other) const = default;

  std::string to_string() const;

 private:
  int n_vars_ = 0;
  std::vector<std::vector<int>> generators_;  // minimal, lex-sorted
};

// I subseteq J, decided generator-by-generator via exponent divisibility.
bool monomial_ideal_contains(const MonomialIdeal& I, const MonomialIdeal& J);

enum class IdealSheafKind { vertex, edge_product, complement_prime };

IdealSheafKind ideal_sheaf_kind_from_string(const std::string& s);
const char* ideal_sheaf_kind_name(IdealSheafKind k);

// A per-simplex monomial ideal assignment in F[x_1..x_n] (n = vertex count),
// covariant (ideals grow up the face relation) or contravariant (prime
// ideals shrink).
struct IdealSheafAssignment {
  std::shared_ptr<const SimplicialComplex> complex;
  Variance variance = Variance::covariant;
  std::vector<std::vector<MonomialIdeal>> ideal;  // [q][idx], canonical order

  const MonomialIdeal& at(int q, int idx) const { return ideal.at(q).at(idx); }
};

// vertex:            I_sigma = (x_i : i in sigma), covariant
// edge_product:      I_sigma = (x_i x_j : {i,j} in sigma), covariant
// complement_prime:  P_sigma = (x_i : i not in sigma), contravariant
IdealSheafAssignment build_ideal_sheaf(std::shared_ptr<const SimplicialComplex> K,
                                       IdealSheafKind kind);

struct ContainmentViolation {
  int q;       // dimension of the face
  int face;    // index at dimension q
  int coface;  // index at dimension q+1
};

struct IdealFunctorReport {
  std::vector<ContainmentViolation> violations;
  bool valid() const { return violations.empty(); }
};

// Checks every codim-1 containment in the declared variance direction.
IdealFunctorReport validate_ideal_functor(const IdealSheafAssignment& A);

// Sheaf of rings Z/n_sigma: the reduction map Z/n_sigma -> Z/n_tau exists
// exactly when n_tau | n_sigma, which the factory enforces.
class ZnRingSheaf {
 public:
  ZnRingSheaf(std::shared_ptr<const SimplicialComplex> K,
              std::vector<std::vector<long>> moduli);

  static ZnRingSheaf from_map(std::shared_ptr<const SimplicialComplex> K,
                              const std::map<Simplex, long>& moduli);

  const SimplicialComplex& complex() const { return *complex_; }
  std::shared_ptr<const SimplicialComplex> complex_ptr() const { return complex_; }
  long modulus(int q, int idx) const { return moduli_.at(q).at(idx); }

 private:
  std::shared_ptr<const SimplicialComplex> complex_;
  std::vector<std::vector<long>> moduli_;
};

struct ZnGlobalSections {
  long size = 0;
  // One residue per vertex, in vertex order; lexicographically sorted.
  std::vector<std::vector<long>> elements;
};

// Enumerates all vertex residue tuples compatible through every edge
// (a_i = a_j mod n_e). The product of the vertex moduli must stay within
// the enumeration bound.
ZnGlobalSections zn_global_sections(const ZnRingSheaf& S, long enumeration_bound = 10'000'000);

// {(a, b) in Z/m x Z/n : a = b mod k}; requires k | m and k | n. Coincides
// with the global sections of the one-edge ring sheaf with these moduli.
std::vector<std::pair<long, long>> fibre_product_zn(long m, long n, long k);

}  // namespace sheaflab
