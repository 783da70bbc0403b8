#include <doctest.h>

#include <random>
#include <numeric>

#include "oracles.hpp"
#include "sheaflab/hodge.hpp"
#include "sheaflab/snf.hpp"
#include "sheaflab/weighted.hpp"

using namespace sheaflab;

namespace {

std::shared_ptr<const SimplicialComplex> make(int n, const std::vector<Simplex>& facets) {
  return std::make_shared<SimplicialComplex>(SimplicialComplex::from_facets(n, facets));
}

WeightFunction uniform_weight(const SimplicialComplex& K, long value) {
  std::map<Simplex, Rational> vals;
  for (int q = 0; q <= K.dim(); ++q)
    for (const Simplex& s : K.simplices(q)) vals[s] = value;
  return WeightFunction::from_map(K, vals);
}

// The running 1 / 2 / 4 example on the full triangle.
WeightFunction triangle_124(const SimplicialComplex& K) {
  std::map<Simplex, Rational> vals;
  for (const Simplex& s : K.simplices(0)) vals[s] = 1;
  for (const Simplex& s : K.simplices(1)) vals[s] = 2;
  for (const Simplex& s : K.simplices(2)) vals[s] = 4;
  return WeightFunction::from_map(K, vals);
}

WeightFunction random_valid_weight(std::mt19937_64& rng, const SimplicialComplex& K) {
  static const std::vector<std::vector<long>> families{{1, 2, 4, 8}, {1, 3, 6}};
  const auto& family = families[rng() % families.size()];
  std::map<Simplex, Rational> vals;
  std::vector<std::vector<long>> chosen(K.dim() + 1);
  for (int q = 0; q <= K.dim(); ++q) {
    chosen[q].resize(K.count(q));
    for (int i = 0; i < K.count(q); ++i) {
      long need = 1;
      if (q > 0)
        for (const auto& ref : K.faces_of(q, i)) need = std::lcm(need, chosen[q - 1][ref.face]);
      std::vector<long> candidates;
      for (long v : family)
        if (v % need == 0) candidates.push_back(v);
      chosen[q][i] = candidates[rng() % candidates.size()];
      vals[K.simplex(q, i)] = Rational(chosen[q][i]);
    }
  }
  return WeightFunction::from_map(K, vals);
}

}  // namespace

TEST_CASE("weight validation accepts the uniform weight") {
  std::mt19937_64 rng(51);
  auto K = oracles::random_complex(rng, 7, 4, 0.2);
  CHECK(validate_weight(*K, uniform_weight(*K, 1)).valid());
}

TEST_CASE("weight validation on the 1/2/4 triangle") {
  auto K = make(3, {{1, 2, 3}});
  CHECK(validate_weight(*K, triangle_124(*K)).valid());
}

TEST_CASE("weight 3 on the face breaks all three edge pairs") {
  auto K = make(3, {{1, 2, 3}});
  std::map<Simplex, Rational> vals;
  for (const Simplex& s : K->simplices(0)) vals[s] = 1;
  for (const Simplex& s : K->simplices(1)) vals[s] = 2;
  vals[{1, 2, 3}] = 3;
  WeightFunction w = WeightFunction::from_map(*K, vals);
  WeightReport report = validate_weight(*K, w);
  CHECK(report.violations.size() == 3);
  for (const auto& v : report.violations) {
    CHECK(v.kind == WeightViolation::Kind::divisibility);
    CHECK(v.q == 1);  // edge -> face pairs
  }
}

TEST_CASE("zero weights are reported, missing weights throw") {
  auto K = make(2, {{1, 2}});
  std::map<Simplex, Rational> vals{{{1}, 0}, {{2}, 1}, {{1, 2}, 2}};
  WeightFunction w = WeightFunction::from_map(*K, vals);
  WeightReport report = validate_weight(*K, w);
  REQUIRE(report.violations.size() >= 1);
  CHECK(report.violations.front().kind == WeightViolation::Kind::zero_weight);

  vals.erase({1, 2});
  CHECK_THROWS_WITH_AS(WeightFunction::from_map(*K, vals), doctest::Contains("missing weight"),
                       std::invalid_argument);
}

TEST_CASE("rational weights lift by the common denominator") {
  auto K = make(2, {{1, 2}});
  std::map<Simplex, Rational> vals{{{1}, Rational(1, 2)}, {{2}, Rational(1, 2)}, {{1, 2}, 1}};
  WeightFunction w = WeightFunction::from_map(*K, vals);
  CHECK(w(0, 0) == 1);
  CHECK(w(1, 0) == 2);
  CHECK(validate_weight(*K, w).valid());
}

TEST_CASE("uniform weight gives the plain signed boundary matrix") {
  auto K = make(3, {{1, 2}, {1, 3}, {2, 3}});
  MatrixQ B = weighted_boundary_matrix(*K, uniform_weight(*K, 1), 1);
  MatrixQ expected(3, 3);
  expected << -1, -1, 0, 1, 0, -1, 0, 1, 1;
  CHECK(B == expected);
}

TEST_CASE("1/2/4 triangle boundary column carries the ratio 2 signs") {
  auto K = make(3, {{1, 2, 3}});
  MatrixQ B = weighted_boundary_matrix(*K, triangle_124(*K), 2);
  REQUIRE(B.rows() == 3);
  REQUIRE(B.cols() == 1);
  CHECK(B(K->index_of(Simplex{2, 3}), 0) == 2);
  CHECK(B(K->index_of(Simplex{1, 3}), 0) == -2);
  CHECK(B(K->index_of(Simplex{1, 2}), 0) == 2);
}

TEST_CASE("weighted boundary composes to zero exactly") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 10; ++trial) {
    auto K = oracles::random_complex(rng, 7, 4, 0.2);
    WeightFunction w = random_valid_weight(rng, *K);
    for (int q = 2; q <= K->dim(); ++q) {
      MatrixQ product =
          weighted_boundary_matrix(*K, w, q - 1) * weighted_boundary_matrix(*K, w, q);
      CHECK(max_abs(product) == 0);
    }
  }
}

TEST_CASE("weighted boundary degree bounds") {
  auto K = make(3, {{1, 2, 3}});
  WeightFunction w = uniform_weight(*K, 1);
  CHECK_THROWS_AS(weighted_boundary_matrix(*K, w, 0), std::out_of_range);
  CHECK_THROWS_AS(weighted_boundary_matrix(*K, w, 3), std::out_of_range);
}

TEST_CASE("invalid weights are rejected by the computations") {
  auto K = make(3, {{1, 2, 3}});
  std::map<Simplex, Rational> vals;
  for (int q = 0; q <= 2; ++q)
    for (const Simplex& s : K->simplices(q)) vals[s] = 3;
  vals[{1}] = 2;  // 2 does not divide 3
  WeightFunction w = WeightFunction::from_map(*K, vals);
  CHECK_THROWS_AS(weighted_boundary_matrix(*K, w, 1), std::invalid_argument);
  CHECK_THROWS_AS(weighted_homology_rank_q(*K, w, 0), std::invalid_argument);
  CHECK_THROWS_AS(weight_cosheaf(K, w), std::invalid_argument);
}

TEST_CASE("hollow triangle has one loop over Q") {
  auto K = make(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(weighted_homology_rank_q(*K, uniform_weight(*K, 1), 1) == 1);
  CHECK(weighted_homology_rank_q(*K, uniform_weight(*K, 1), 0) == 1);
}

TEST_CASE("1/2/4 triangle integral homology is pure 2-torsion at degree 1") {
  auto K = make(3, {{1, 2, 3}});
  IntegralHomology h = weighted_homology_z(*K, triangle_124(*K), 1);
  CHECK(h.free_rank == 0);
  CHECK(h.torsion == std::vector<Int>{Int(2)});
  CHECK(weighted_homology_rank_q(*K, triangle_124(*K), 1) == 0);
}

TEST_CASE("uniform weights reproduce Betti numbers over Q") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    auto K = oracles::random_complex(rng, 8, 4, 0.15);
    WeightFunction w = uniform_weight(*K, 1);
    for (int q = 0; q <= K->dim(); ++q)
      CHECK(weighted_homology_rank_q(*K, w, q) == oracles::betti(*K, q));
  }
}

TEST_CASE("strictly nonzero weights never change the Q dimensions") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 10; ++trial) {
    auto K = oracles::random_complex(rng, 7, 4, 0.2);
    WeightFunction w = random_valid_weight(rng, *K);
    for (int q = 0; q <= K->dim(); ++q)
      CHECK(weighted_homology_rank_q(*K, w, q) == oracles::betti(*K, q));
  }
}

TEST_CASE("integral free rank agrees with the Q dimension") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 8; ++trial) {
    auto K = oracles::random_complex(rng, 6, 4, 0.2);
    WeightFunction w = random_valid_weight(rng, *K);
    for (int q = 0; q <= K->dim(); ++q)
      CHECK(weighted_homology_z(*K, w, q).free_rank == weighted_homology_rank_q(*K, w, q));
  }
}

TEST_CASE("degrees past the top dimension vanish") {
  auto K = make(3, {{1, 2, 3}});
  WeightFunction w = uniform_weight(*K, 1);
  CHECK(weighted_homology_rank_q(*K, w, 5) == 0);
  IntegralHomology h = weighted_homology_z(*K, w, 5);
  CHECK(h.free_rank == 0);
  CHECK(h.torsion.empty());
  CHECK_THROWS_AS(weighted_homology_rank_q(*K, w, -1), std::out_of_range);
}

TEST_CASE("weight cosheaf of the uniform weight is the constant contravariant sheaf") {
  auto K = make(3, {{1, 2, 3}});
  Sheaf<Rational> F = weight_cosheaf(K, uniform_weight(*K, 1));
  CHECK(F.variance() == Variance::contravariant);
  for (const auto& [key, m] : F.restrictions()) CHECK(m(0, 0) == 1);
  CHECK(validate_sheaf(F).valid());
}

TEST_CASE("weight cosheaf maps are the codim-1 weight ratios") {
  auto K = make(3, {{1, 2, 3}});
  Sheaf<Rational> F = weight_cosheaf(K, triangle_124(*K));
  for (int e = 0; e < K->count(1); ++e)
    for (const auto& ref : K->faces_of(1, e))
      CHECK(F.restriction_or_zero(0, ref.face, e)(0, 0) == 2);  // x2 edge over vertex
  for (const auto& ref : K->faces_of(2, 0))
    CHECK(F.restriction_or_zero(1, ref.face, 0)(0, 0) == 2);  // x2 face over edge
}

TEST_CASE("weight cosheaves validate for random valid weights") {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 8; ++trial) {
    auto K = oracles::random_complex(rng, 7, 4, 0.2);
    CHECK(validate_sheaf(weight_cosheaf(K, random_valid_weight(rng, *K))).valid());
  }
}

TEST_CASE("equivalence report on the hollow triangle") {
  auto K = make(3, {{1, 2}, {1, 3}, {2, 3}});
  EquivalenceReport rep = verify_weighted_equivalence(K, uniform_weight(*K, 1), 1);
  CHECK(rep.dim_weighted == 1);
  CHECK(rep.dim_sheaf == 1);
  CHECK(rep.equal);
}

TEST_CASE("equivalence report on the 1/2/4 triangle at degree 1") {
  auto K = make(3, {{1, 2, 3}});
  EquivalenceReport rep = verify_weighted_equivalence(K, triangle_124(*K), 1);
  CHECK(rep.dim_weighted == 0);
  CHECK(rep.dim_sheaf == 0);
  CHECK(rep.equal);
}

TEST_CASE("equivalence holds across random weighted complexes") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 10; ++trial) {
    auto K = oracles::random_complex(rng, 8, 4, 0.15);
    WeightFunction w = random_valid_weight(rng, *K);
    for (int q = 0; q <= K->dim(); ++q) CHECK(verify_weighted_equivalence(K, w, q).equal);
  }
}

TEST_CASE("weighted chain system caches the boundary family") {
  std::mt19937_64 rng(59);
  auto K = oracles::random_complex(rng, 7, 4, 0.25);
  WeightFunction w = random_valid_weight(rng, *K);
  WeightedChainSystem chains(K, w, CoefficientRing::integers);
  CHECK(chains.ring() == CoefficientRing::integers);
  for (int q = 1; q <= chains.top_degree(); ++q) {
    CHECK(chains.boundary(q) == weighted_boundary_matrix(*K, w, q));
    MatrixZ Z = chains.boundary_int(q);
    for (Eigen::Index j = 0; j < Z.cols(); ++j)
      for (Eigen::Index i = 0; i < Z.rows(); ++i)
        CHECK(Rational(Z(i, j)) == chains.boundary(q)(i, j));
  }
  for (int q = 2; q <= chains.top_degree(); ++q) CHECK(chains.composition_defect(q) == 0);
  CHECK_THROWS_AS(chains.boundary(0), std::out_of_range);

  // An invalid weight cannot form a chain system.
  std::map<Simplex, Rational> bad;
  for (int q = 0; q <= K->dim(); ++q)
    for (const Simplex& s : K->simplices(q)) bad[s] = (q == 0) ? 5 : 3;
  if (K->dim() >= 1)
    CHECK_THROWS_AS(WeightedChainSystem(K, WeightFunction::from_map(*K, bad)),
                    std::invalid_argument);
}

TEST_CASE("smith normal form transforms are consistent") {
  std::mt19937_64 rng(58);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % 5);
    MatrixZ A(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = entry(rng);

    SmithNormalForm snf = smith_normal_form(A);
    // V and Vinv are mutually inverse and unimodular.
    CHECK(MatrixZ(snf.V * snf.Vinv) == identity<Int>(n));
    // Diagonal divisibility chain.
    for (std::size_t k = 1; k < snf.invariant_factors.size(); ++k)
      CHECK(snf.invariant_factors[k] % snf.invariant_factors[k - 1] == 0);
    // Invariant factors agree with the naive oracle.
    CHECK(snf.invariant_factors == oracles::snf_factors(A));
    // Kernel columns of V really lie in the kernel.
    for (Eigen::Index c = snf.rank; c < n; ++c)
      CHECK(max_abs(MatrixZ(A * snf.V.col(c))) == 0);
  }
}

TEST_CASE("smith normal form of a staircase example") {
  MatrixZ A(2, 2);
  A << 2, 4, 6, 8;
  SmithNormalForm snf = smith_normal_form(A);
  CHECK(snf.invariant_factors == std::vector<Int>{Int(2), Int(4)});
}
