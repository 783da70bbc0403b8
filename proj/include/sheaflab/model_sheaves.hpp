#pragma once

#include <array>
#include <cmath>
#include <map>
#include <optional>

#include "sheaflab/sheaf.hpp"

namespace sheaflab {

// Per-edge data for the geometric models: scalar weights w_ij for the
// extension sheaves, spring constant and equilibrium distances for the
// elastic-network ones.
template <typename S>
struct EdgeWeights {
  std::map<std::pair<int, int>, S> weight;
  S default_weight = S(1);
  double gamma = 1.0;
  std::map<std::pair<int, int>, double> rest_length;

  S weight_for(int i, int j) const {
    auto it = weight.find({std::min(i, j), std::max(i, j)});
    return it == weight.end() ? default_weight : it->second;
  }

  std::optional<double> rest_length_for(int i, int j) const {
    auto it = rest_length.find({std::min(i, j), std::max(i, j)});
    if (it == rest_length.end()) return std::nullopt;
    return it->second;
  }

  static EdgeWeights uniform(S w) {
    EdgeWeights e;
    e.default_weight = std::move(w);
    return e;
  }
};

// Per-face data: a normal vector per 2-simplex (perpendicular to its edge
// span) and, separately, the face vector used by the tensor-extension
// factor.
template <typename S>
struct FaceData {
  std::map<std::array<int, 3>, Vector<S>> normal;
  std::map<std::array<int, 3>, Vector<S>> face_vector;
};

namespace detail {

template <typename S>
void require_graph(const SimplicialComplex& K, const char* who) {
  if (K.dim() > 1)
    throw std::invalid_argument(std::string(who) + ": complex has 2-simplices (dimension " +
                                std::to_string(K.dim()) + ")");
}

inline void require_finite_weight(double w, const Simplex& edge) {
  if (!std::isfinite(w))
    throw std::invalid_argument("non-finite weight on edge " + simplex_to_string(edge));
}
inline void require_finite_weight(const Rational&, const Simplex&) {}

template <typename S>
void require_r3(const GeometricComplex<S>& G, const char* who) {
  if (G.ambient_dim() != 3)
    throw std::invalid_argument(std::string(who) + ": coordinates must lie in R^3");
  if (G.coords.rows() != G.complex->n_vertices())
    throw std::invalid_argument(std::string(who) + ": one coordinate row per vertex required");
}

}  // namespace detail

// All stalks S^3, every vertex-to-edge map lambda * I_3. Graph complexes
// only; the degree-0 Laplacian factors as lambda^2 * (graph Laplacian x I_3).
template <typename S>
Sheaf<S> gnm_sheaf(std::shared_ptr<const SimplicialComplex> K, const S& lambda) {
  if (lambda == S(0)) throw std::invalid_argument("gnm_sheaf: lambda must be nonzero");
  detail::require_graph<S>(*K, "gnm_sheaf");

  Sheaf<S> F(std::move(K), Variance::covariant);
  const SimplicialComplex& C = F.complex();
  for (int q = 0; q <= C.dim(); ++q) F.set_uniform_stalk_dim(q, 3);
  const Matrix<S> lam_eye = lambda * identity<S>(3);
  for (int e = 0; e < C.count(1); ++e)
    for (const auto& ref : C.faces_of(1, e)) F.set_restriction(0, ref.face, e, lam_eye);
  return F;
}

// Elastic-network sheaf on a geometric graph: vertex stalks R^3, edge stalks
// R, both endpoint maps (sqrt(gamma)/d_ij) * (r_j - r_i)^T. Equilibrium
// distances default to the embedded edge lengths.
Sheaf<double> anm_sheaf(const GeometricComplexD& G, const EdgeWeights<double>& params);

inline Sheaf<double> anm_sheaf(const GeometricComplexD& G, double gamma) {
  EdgeWeights<double> params;
  params.gamma = gamma;
  return anm_sheaf(G, params);
}

// The 3n x 3n Hessian assembled directly from the pairwise projection-block
// formula, with row-sum-zero diagonal blocks. Independent of the sheaf
// assembly path; used as its oracle.
MatrixD anm_hessian_direct(const GeometricComplexD& G, const EdgeWeights<double>& params);

inline MatrixD anm_hessian_direct(const GeometricComplexD& G, double gamma) {
  EdgeWeights<double> params;
  params.gamma = gamma;
  return anm_hessian_direct(G, params);
}

namespace detail {

// v must be perpendicular to both spanning edges of the face, within
// 1e-10 * |v| * |edge| (evaluated in squared form so rational inputs stay
// exact).
template <typename S>
void check_face_normal(const Vector<S>& v, const Vector<S>& e1, const Vector<S>& e2,
                       const Simplex& face) {
  const S tol = power_of_ten_reciprocal<S>(10);
  const S tol2 = tol * tol;
  const S v2 = v.dot(v);
  for (const Vector<S>* e : {&e1, &e2}) {
    const S d = v.dot(*e);
    if (d * d > tol2 * v2 * e->dot(*e))
      throw std::invalid_argument("face normal is not perpendicular to the edges of " +
                                  simplex_to_string(face));
  }
}

template <typename S>
Vector<S> cross3(const Vector<S>& a, const Vector<S>& b) {
  Vector<S> c(3);
  c(0) = a(1) * b(2) - a(2) * b(1);
  c(1) = a(2) * b(0) - a(0) * b(2);
  c(2) = a(0) * b(1) - a(1) * b(0);
  return c;
}

// Normal for face [i,j,k]: the supplied vector when present, otherwise the
// cross product (r_j - r_i) x (r_k - r_i). Magnitude is kept as given.
template <typename S>
Vector<S> face_normal(const GeometricComplex<S>& G, const FaceData<S>& data, const Simplex& f) {
  const Vector<S> e1 = G.point(f[1]) - G.point(f[0]);
  const Vector<S> e2 = G.point(f[2]) - G.point(f[0]);
  auto it = data.normal.find({f[0], f[1], f[2]});
  if (it != data.normal.end()) {
    check_face_normal(it->second, e1, e2, f);
    return it->second;
  }
  Vector<S> v = cross3(e1, e2);
  const S floor = power_of_ten_reciprocal<S>(12);
  if (v.dot(v) <= floor * floor)
    throw std::invalid_argument("degenerate (collinear) triangle " + simplex_to_string(f) +
                                "; supply an explicit normal or fix the coordinates");
  return v;
}

}  // namespace detail

// Face-extension sheaf on a geometric 2-complex: stalks R / R^3 / R on
// vertices / edges / faces, vertex-to-edge maps w_ij * (r_j - r_i), all
// three edge-to-face maps the transposed face normal. Vertex-to-face
// composites vanish because the normal is perpendicular to the edge span.
template <typename S>
Sheaf<S> face_extension_sheaf(const GeometricComplex<S>& G, const EdgeWeights<S>& w = {},
                              const FaceData<S>& faces = {}) {
  detail::require_r3(G, "face_extension_sheaf");
  const SimplicialComplex& K = *G.complex;
  if (K.dim() > 2) throw std::invalid_argument("face_extension_sheaf: complex dimension exceeds 2");

  Sheaf<S> F(G.complex, Variance::covariant);
  F.set_uniform_stalk_dim(0, 1);
  if (K.dim() >= 1) F.set_uniform_stalk_dim(1, 3);
  if (K.dim() >= 2) F.set_uniform_stalk_dim(2, 1);

  for (int e = 0; e < K.count(1); ++e) {
    const Simplex& edge = K.simplex(1, e);
    const S wij = w.weight_for(edge[0], edge[1]);
    detail::require_finite_weight(wij, edge);
    const Vector<S> dir = G.point(edge[1]) - G.point(edge[0]);
    const Matrix<S> column = wij * dir;
    for (const auto& ref : K.faces_of(1, e)) F.set_restriction(0, ref.face, e, column);
  }
  for (int f = 0; f < K.count(2); ++f) {
    const Simplex& face = K.simplex(2, f);
    const Matrix<S> row = detail::face_normal(G, faces, face).transpose();
    for (const auto& ref : K.faces_of(2, f)) F.set_restriction(1, ref.face, f, row);
  }
  return F;
}

// Second tensor factor for the extension: stalks R^3 / R^3 / R, vertex-to-
// edge maps one shared linear map (identity unless overridden, which keeps
// the composition axiom automatic), edge-to-face maps the transposed face
// vector w_tau.
template <typename S>
Sheaf<S> tensor_factor_sheaf(const GeometricComplex<S>& G, const FaceData<S>& faces,
                             const std::optional<Matrix<S>>& vertex_edge_map = std::nullopt) {
  detail::require_r3(G, "tensor_factor_sheaf");
  const SimplicialComplex& K = *G.complex;
  if (K.dim() > 2) throw std::invalid_argument("tensor_factor_sheaf: complex dimension exceeds 2");

  Matrix<S> vmap = vertex_edge_map.value_or(identity<S>(3));
  if (vmap.rows() != 3 || vmap.cols() != 3)
    throw std::invalid_argument("tensor_factor_sheaf: vertex-edge map must be 3x3");

  Sheaf<S> Gs(G.complex, Variance::covariant);
  Gs.set_uniform_stalk_dim(0, 3);
  if (K.dim() >= 1) Gs.set_uniform_stalk_dim(1, 3);
  if (K.dim() >= 2) Gs.set_uniform_stalk_dim(2, 1);

  for (int e = 0; e < K.count(1); ++e)
    for (const auto& ref : K.faces_of(1, e)) Gs.set_restriction(0, ref.face, e, vmap);

  for (int f = 0; f < K.count(2); ++f) {
    const Simplex& face = K.simplex(2, f);
    auto it = faces.face_vector.find({face[0], face[1], face[2]});
    if (it == faces.face_vector.end())
      throw std::invalid_argument("missing face vector for " + simplex_to_string(face));
    const Matrix<S> row = it->second.transpose();
    for (const auto& ref : K.faces_of(2, f)) Gs.set_restriction(1, ref.face, f, row);
  }
  return Gs;
}

// Tensor product of the face-extension sheaf with the factor above: stalk
// dimensions 3 / 9 / 1 and degree-0 operators equal to the face-extension
// ones Kronecker-extended by I_3.
template <typename S>
Sheaf<S> tensor_extension_sheaf(const GeometricComplex<S>& G, const EdgeWeights<S>& w,
                                const FaceData<S>& faces,
                                const std::optional<Matrix<S>>& vertex_edge_map = std::nullopt) {
  return tensor_product(face_extension_sheaf(G, w, faces),
                        tensor_factor_sheaf(G, faces, vertex_edge_map));
}

}  // namespace sheaflab
