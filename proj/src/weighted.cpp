#include "sheaflab/weighted.hpp"

#include <stdexcept>

#include "sheaflab/hodge.hpp"
#include "sheaflab/snf.hpp"

namespace sheaflab {

WeightFunction WeightFunction::from_map(const SimplicialComplex& K,
                                        const std::map<Simplex, Rational>& values) {
  // Common-denominator lift: scaling every weight by the same positive
  // integer changes neither divisibility nor any w(tau)/w(sigma) ratio.
  Int lift(1);
  for (const auto& [s, v] : values)
    lift = boost::multiprecision::lcm(lift, Int(boost::multiprecision::denominator(v)));

  WeightFunction w;
  w.weights_.resize(K.dim() + 1);
  for (int q = 0; q <= K.dim(); ++q) {
    w.weights_[q].resize(K.count(q));
    for (int i = 0; i < K.count(q); ++i) {
      auto it = values.find(K.simplex(q, i));
      if (it == values.end())
        throw std::invalid_argument("missing weight for simplex " +
                                    simplex_to_string(K.simplex(q, i)));
      const Rational& v = it->second;
      w.weights_[q][i] = Int(boost::multiprecision::numerator(v) *
                             (lift / boost::multiprecision::denominator(v)));
    }
  }
  return w;
}

WeightReport validate_weight(const SimplicialComplex& K, const WeightFunction& w) {
  WeightReport report;
  for (int q = 0; q <= K.dim(); ++q)
    for (int i = 0; i < K.count(q); ++i)
      if (w(q, i) == 0)
        report.violations.push_back({WeightViolation::Kind::zero_weight, q, i, -1});

  for (int q = 1; q <= K.dim(); ++q)
    for (int c = 0; c < K.count(q); ++c)
      for (const auto& ref : K.faces_of(q, c)) {
        const Int& wf = w(q - 1, ref.face);
        if (wf == 0) continue;  // already reported
        if (w(q, c) % wf != 0)
          report.violations.push_back({WeightViolation::Kind::divisibility, q - 1, ref.face, c});
      }
  return report;
}

namespace {

void require_valid_weight(const SimplicialComplex& K, const WeightFunction& w, const char* who) {
  if (!validate_weight(K, w).valid())
    throw std::invalid_argument(std::string(who) + ": weight function is invalid");
}

// Direct transcription of the alternating face sum; deliberately does not
// reuse the complex's precomputed incidence tables.
template <typename Scalar>
Matrix<Scalar> assemble_weighted_boundary(const SimplicialComplex& K, const WeightFunction& w,
                                          int q) {
  if (q < 1 || q > K.dim())
    throw std::out_of_range("weighted boundary degree must satisfy 1 <= q <= dim K");
  Matrix<Scalar> B = Matrix<Scalar>::Zero(K.count(q - 1), K.count(q));
  for (int col = 0; col < K.count(q); ++col) {
    const Simplex& sigma = K.simplex(q, col);
    for (std::size_t k = 0; k < sigma.size(); ++k) {
      Simplex face = sigma;
      face.erase(face.begin() + static_cast<long>(k));
      const int row = K.index_of(face);
      const Scalar ratio = Scalar(Rational(w(q, col), w(q - 1, row)));
      B(row, col) = (k % 2 == 0) ? ratio : Scalar(-ratio);
    }
  }
  return B;
}

}  // namespace

MatrixQ weighted_boundary_matrix(const SimplicialComplex& K, const WeightFunction& w, int q) {
  require_valid_weight(K, w, "weighted_boundary_matrix");
  return assemble_weighted_boundary<Rational>(K, w, q);
}

WeightedChainSystem::WeightedChainSystem(std::shared_ptr<const SimplicialComplex> K,
                                         WeightFunction w, CoefficientRing ring)
    : complex_(std::move(K)), weight_(std::move(w)), ring_(ring) {
  require_valid_weight(*complex_, weight_, "WeightedChainSystem");
  for (int q = 1; q <= complex_->dim(); ++q)
    boundaries_.push_back(assemble_weighted_boundary<Rational>(*complex_, weight_, q));
}

const MatrixQ& WeightedChainSystem::boundary(int q) const {
  if (q < 1 || q > top_degree())
    throw std::out_of_range("weighted boundary degree must satisfy 1 <= q <= dim K");
  return boundaries_[q - 1];
}

MatrixZ WeightedChainSystem::boundary_int(int q) const {
  const MatrixQ& B = boundary(q);
  MatrixZ Z(B.rows(), B.cols());
  for (Eigen::Index j = 0; j < B.cols(); ++j)
    for (Eigen::Index i = 0; i < B.rows(); ++i)
      Z(i, j) = Int(boost::multiprecision::numerator(B(i, j)));
  return Z;
}

Rational WeightedChainSystem::composition_defect(int q) const {
  return max_abs(MatrixQ(boundary(q - 1) * boundary(q)));
}

MatrixZ weighted_boundary_matrix_int(const SimplicialComplex& K, const WeightFunction& w, int q) {
  require_valid_weight(K, w, "weighted_boundary_matrix_int");
  const MatrixQ B = assemble_weighted_boundary<Rational>(K, w, q);
  MatrixZ Z(B.rows(), B.cols());
  for (Eigen::Index j = 0; j < B.cols(); ++j)
    for (Eigen::Index i = 0; i < B.rows(); ++i) {
      if (boost::multiprecision::denominator(B(i, j)) != 1)
        throw std::logic_error("weighted boundary has a non-integral entry");
      Z(i, j) = Int(boost::multiprecision::numerator(B(i, j)));
    }
  return Z;
}

long weighted_homology_rank_q(const SimplicialComplex& K, const WeightFunction& w, int q) {
  if (q < 0) throw std::out_of_range("homology degree must be nonnegative");
  require_valid_weight(K, w, "weighted_homology");
  if (q > K.dim()) return 0;

  const long n_q = K.count(q);
  const long rank_dq = (q >= 1) ? exact_rank(assemble_weighted_boundary<Rational>(K, w, q)) : 0;
  const long rank_dq1 =
      (q + 1 <= K.dim()) ? exact_rank(assemble_weighted_boundary<Rational>(K, w, q + 1)) : 0;
  return n_q - rank_dq - rank_dq1;
}

IntegralHomology weighted_homology_z(const SimplicialComplex& K, const WeightFunction& w, int q) {
  if (q < 0) throw std::out_of_range("homology degree must be nonnegative");
  require_valid_weight(K, w, "weighted_homology");
  if (q > K.dim()) return {};

  const Eigen::Index n_q = K.count(q);
  if (n_q == 0) return {};

  // Integer kernel basis of d_q: all of Z^{n_q} when q == 0, otherwise the
  // columns of V past the rank.
  Eigen::Index kernel_dim = n_q;
  MatrixZ vinv = identity<Int>(n_q);
  if (q >= 1) {
    SmithNormalForm snf = smith_normal_form(weighted_boundary_matrix_int(K, w, q));
    kernel_dim = n_q - snf.rank;
    vinv = std::move(snf.Vinv);
  }

  MatrixZ image_in_kernel(kernel_dim, 0);
  if (q + 1 <= K.dim()) {
    const MatrixZ Y = vinv * weighted_boundary_matrix_int(K, w, q + 1);
    // d_{q-1} d_q = 0 puts every column of d_{q+1} inside the kernel.
    for (Eigen::Index i = 0; i < n_q - kernel_dim; ++i)
      for (Eigen::Index j = 0; j < Y.cols(); ++j)
        if (Y(i, j) != 0)
          throw std::logic_error("boundary image escaped the kernel; chain complex is broken");
    image_in_kernel = Y.bottomRows(kernel_dim);
  }

  SmithNormalForm quotient = smith_normal_form(std::move(image_in_kernel));
  IntegralHomology out;
  out.free_rank = kernel_dim - quotient.rank;
  for (const Int& d : quotient.invariant_factors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

Sheaf<Rational> weight_cosheaf(std::shared_ptr<const SimplicialComplex> K,
                               const WeightFunction& w) {
  require_valid_weight(*K, w, "weight_cosheaf");
  Sheaf<Rational> F(std::move(K), Variance::contravariant);
  const SimplicialComplex& C = F.complex();
  for (int q = 0; q <= C.dim(); ++q) F.set_uniform_stalk_dim(q, 1);
  for (int q = 1; q <= C.dim(); ++q)
    for (int c = 0; c < C.count(q); ++c)
      for (const auto& ref : C.faces_of(q, c)) {
        Matrix<Rational> m(1, 1);
        m(0, 0) = Rational(w(q, c), w(q - 1, ref.face));
        F.set_restriction(q - 1, ref.face, c, std::move(m));
      }
  return F;
}

EquivalenceReport verify_weighted_equivalence(std::shared_ptr<const SimplicialComplex> K,
                                              const WeightFunction& w, int q) {
  EquivalenceReport report;
  report.dim_weighted = weighted_homology_rank_q(*K, w, q);

  Sheaf<Rational> F = weight_cosheaf(K, w);
  if (!validate_sheaf(F).valid())
    throw std::logic_error("weight cosheaf failed validation");
  report.dim_sheaf = cohomology_dimension(F, q);

  report.equal = report.dim_weighted == report.dim_sheaf;
  return report;
}

}  // namespace sheaflab
