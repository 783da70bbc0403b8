#include "sheaflab/model_sheaves.hpp"

namespace sheaflab {

namespace {

double edge_rest_length(const GeometricComplexD& G, const EdgeWeights<double>& params,
                        const Simplex& edge) {
  double d0;
  if (auto forced = params.rest_length_for(edge[0], edge[1]))
    d0 = *forced;
  else
    d0 = (G.point(edge[1]) - G.point(edge[0])).norm();
  if (!(d0 > 0.0))
    throw std::invalid_argument("coincident endpoints on edge " + simplex_to_string(edge) +
                                " (zero equilibrium distance)");
  return d0;
}

void check_anm_inputs(const GeometricComplexD& G, const EdgeWeights<double>& params,
                      const char* who) {
  detail::require_r3(G, who);
  detail::require_graph<double>(*G.complex, who);
  if (!(params.gamma > 0.0))
    throw std::invalid_argument(std::string(who) + ": spring constant must be positive");
}

}  // namespace

Sheaf<double> anm_sheaf(const GeometricComplexD& G, const EdgeWeights<double>& params) {
  check_anm_inputs(G, params, "anm_sheaf");
  const SimplicialComplex& K = *G.complex;

  Sheaf<double> F(G.complex, Variance::covariant);
  F.set_uniform_stalk_dim(0, 3);
  if (K.dim() >= 1) F.set_uniform_stalk_dim(1, 1);

  const double root_gamma = std::sqrt(params.gamma);
  for (int e = 0; e < K.count(1); ++e) {
    const Simplex& edge = K.simplex(1, e);
    const double d0 = edge_rest_length(G, params, edge);
    const MatrixD row = (root_gamma / d0) * (G.point(edge[1]) - G.point(edge[0])).transpose();
    for (const auto& ref : K.faces_of(1, e)) F.set_restriction(0, ref.face, e, row);
  }
  return F;
}

MatrixD anm_hessian_direct(const GeometricComplexD& G, const EdgeWeights<double>& params) {
  check_anm_inputs(G, params, "anm_hessian_direct");
  const SimplicialComplex& K = *G.complex;
  const int n = K.n_vertices();

  MatrixD H = MatrixD::Zero(3 * n, 3 * n);
  for (const Simplex& edge : K.simplices(1)) {
    const int i = edge[0], j = edge[1];
    const double d0 = edge_rest_length(G, params, edge);
    const Eigen::Vector3d diff = G.point(j) - G.point(i);
    const Eigen::Matrix3d block = (params.gamma / (d0 * d0)) * (diff * diff.transpose());
    H.block<3, 3>(3 * (i - 1), 3 * (j - 1)) -= block;
    H.block<3, 3>(3 * (j - 1), 3 * (i - 1)) -= block;
    H.block<3, 3>(3 * (i - 1), 3 * (i - 1)) += block;
    H.block<3, 3>(3 * (j - 1), 3 * (j - 1)) += block;
  }
  return H;
}

}  // namespace sheaflab
