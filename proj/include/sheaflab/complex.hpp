#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sheaflab/linalg.hpp"

namespace sheaflab {

// A simplex is a strictly increasing tuple of 1-based vertex ids.
using Simplex = std::vector<int>;

std::string simplex_to_string(const Simplex& s);

// Finite abstract simplicial complex. Immutable after construction; every
// vertex 1..n is a 0-simplex and each dimension's list is sorted
// lexicographically, which fixes all matrix row/column indexing downstream.
class SimplicialComplex {
 public:
  struct FaceRef {
    int face;  // index into K_(q-1)
    int sign;  // incidence sign of (face, this simplex)
  };

  // Downward closure of the facets plus all singletons.
  static SimplicialComplex from_facets(int n_vertices, const std::vector<Simplex>& facets);

  int n_vertices() const { return n_vertices_; }
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  int count(int q) const {
    return (q < 0 || q > dim()) ? 0 : static_cast<int>(by_dim_[q].size());
  }
  const std::vector<Simplex>& simplices(int q) const;
  const Simplex& simplex(int q, int idx) const { return simplices(q).at(idx); }

  // -1 when the simplex is not stored.
  int index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s) >= 0; }
  long total_simplices() const;

  // Codimension-1 faces of the idx-th q-simplex with their signs; q >= 1.
  const std::vector<FaceRef>& faces_of(int q, int idx) const;

  // Maximal simplices in canonical order (the minimal facet description).
  std::vector<Simplex> maximal_simplices() const;

  bool operator==(const SimplicialComplex& other) const {
    return n_vertices_ == other.n_vertices_ && by_dim_ == other.by_dim_;
  }

 private:
  int n_vertices_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, int>> index_;
  std::vector<std::vector<std::vector<FaceRef>>> faces_;

  void build_index();
};

// (-1)^k when sigma is tau with its k-th vertex removed, else 0. Both
// simplices must belong to K.
int incidence_sign(const SimplicialComplex& K, const Simplex& sigma, const Simplex& tau);

// Sign computation on raw tuples (no membership check); shared by the
// incidence tables.
int incidence_sign_tuples(const Simplex& sigma, const Simplex& tau);

// A complex embedded in R^d: one coordinate row per vertex.
template <typename S>
struct GeometricComplex {
  std::shared_ptr<const SimplicialComplex> complex;
  Matrix<S> coords;  // n_vertices x d

  int ambient_dim() const { return static_cast<int>(coords.cols()); }
  Vector<S> point(int vertex) const { return coords.row(vertex - 1).transpose(); }
};

using GeometricComplexD = GeometricComplex<double>;
using GeometricComplexQ = GeometricComplex<Rational>;

// Vietoris-Rips complex: edge {i,j} iff |r_i - r_j| <= epsilon (ties
// included), higher simplices are cliques of the edge graph up to max_dim.
GeometricComplexD rips_complex(const MatrixD& points, double epsilon, int max_dim);

}  // namespace sheaflab
