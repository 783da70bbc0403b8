#include <doctest.h>

#include <random>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "sheaflab/ringed.hpp"

using namespace sheaflab;

namespace {

std::shared_ptr<const SimplicialComplex> make(int n, const std::vector<Simplex>& facets) {
  return std::make_shared<SimplicialComplex>(SimplicialComplex::from_facets(n, facets));
}

std::vector<int> expo(int n, std::initializer_list<std::pair<int, int>> terms) {
  std::vector<int> e(n, 0);
  for (auto [var, power] : terms) e[var - 1] = power;
  return e;
}

}  // namespace

TEST_CASE("monomial ideal minimality and canonical form") {
  // (x1, x1*x2, x2^2) minimalizes to (x1, x2^2)
  MonomialIdeal I(2, {expo(2, {{1, 1}}), expo(2, {{1, 1}, {2, 1}}), expo(2, {{2, 2}})});
  // Generators are kept lex-sorted on exponent vectors: [0,2] before [1,0].
  CHECK(I.generators() == std::vector<std::vector<int>>{expo(2, {{2, 2}}), expo(2, {{1, 1}})});
  CHECK(I.to_string() == "(x2^2, x1)");
  CHECK(MonomialIdeal::zero(3).is_zero());
  CHECK(MonomialIdeal(2, {expo(2, {})}).to_string() == "(1)");
  CHECK_THROWS_AS(MonomialIdeal(2, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(MonomialIdeal(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("containment examples") {
  MonomialIdeal x1(2, {expo(2, {{1, 1}})});
  MonomialIdeal x1x2_pair(2, {expo(2, {{1, 1}}), expo(2, {{2, 1}})});
  MonomialIdeal x1x2_prod(2, {expo(2, {{1, 1}, {2, 1}})});

  CHECK(monomial_ideal_contains(x1, x1x2_pair));        // (x1) in (x1,x2)
  CHECK(monomial_ideal_contains(x1x2_prod, x1));        // (x1 x2) in (x1)
  CHECK_FALSE(monomial_ideal_contains(x1, x1x2_prod));  // (x1) not in (x1 x2)
  CHECK(monomial_ideal_contains(MonomialIdeal::zero(2), x1));
  CHECK_THROWS_AS(monomial_ideal_contains(x1, MonomialIdeal::zero(3)), std::invalid_argument);
}

TEST_CASE("containment agrees with brute-force membership on random ideals") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> nvars(1, 5), ngens(0, 4), power(0, 3);
  auto random_ideal = [&](int n) {
    std::vector<std::vector<int>> gens;
    const int g = ngens(rng);
    for (int k = 0; k < g; ++k) {
      std::vector<int> e(n);
      for (int v = 0; v < n; ++v) e[v] = power(rng);
      gens.push_back(std::move(e));
    }
    return MonomialIdeal(n, gens);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int n = nvars(rng);
    MonomialIdeal I = random_ideal(n);
    MonomialIdeal J = random_ideal(n);
    // Brute force: every generator of I must be a member of J.
    bool expected = true;
    for (const auto& g : I.generators()) expected = expected && J.contains_monomial(g);
    CHECK(monomial_ideal_contains(I, J) == expected);
  }
}

TEST_CASE("vertex-kind ideals on the full triangle") {
  auto K = make(3, {{1, 2, 3}});
  IdealSheafAssignment A = build_ideal_sheaf(K, IdealSheafKind::vertex);
  CHECK(A.variance == Variance::covariant);
  CHECK(A.at(1, K->index_of(Simplex{1, 2})) ==
        MonomialIdeal(3, {expo(3, {{1, 1}}), expo(3, {{2, 1}})}));
  CHECK(A.at(2, 0) == MonomialIdeal(3, {expo(3, {{1, 1}}), expo(3, {{2, 1}}), expo(3, {{3, 1}})}));
  CHECK(validate_ideal_functor(A).valid());
}

TEST_CASE("edge-product ideals vanish on vertices") {
  auto K = make(3, {{1, 2, 3}});
  IdealSheafAssignment A = build_ideal_sheaf(K, IdealSheafKind::edge_product);
  CHECK(A.at(0, 0).is_zero());
  CHECK(A.at(2, 0) == MonomialIdeal(3, {expo(3, {{1, 1}, {2, 1}}), expo(3, {{1, 1}, {3, 1}}),
                                        expo(3, {{2, 1}, {3, 1}})}));
  CHECK(validate_ideal_functor(A).valid());
}

TEST_CASE("complement primes reverse the containments") {
  auto K = make(3, {{1, 2, 3}});
  IdealSheafAssignment A = build_ideal_sheaf(K, IdealSheafKind::complement_prime);
  CHECK(A.variance == Variance::contravariant);
  CHECK(A.at(2, 0).is_zero());  // full-support simplex
  CHECK(A.at(0, K->index_of(Simplex{1})) ==
        MonomialIdeal(3, {expo(3, {{2, 1}}), expo(3, {{3, 1}})}));
  CHECK(validate_ideal_functor(A).valid());
}

TEST_CASE("a shrunk edge ideal is caught by the validator") {
  auto K = make(3, {{1, 2, 3}});
  IdealSheafAssignment A = build_ideal_sheaf(K, IdealSheafKind::vertex);
  const int e12 = K->index_of(Simplex{1, 2});
  A.ideal[1][e12] = MonomialIdeal(3, {expo(3, {{1, 1}})});  // drop x2
  IdealFunctorReport report = validate_ideal_functor(A);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].q == 0);
  CHECK(report.violations[0].face == K->index_of(Simplex{2}));
  CHECK(report.violations[0].coface == e12);
}

TEST_CASE("single-vertex complex is trivially a valid functor") {
  auto K = make(1, {});
  for (auto kind :
       {IdealSheafKind::vertex, IdealSheafKind::edge_product, IdealSheafKind::complement_prime})
    CHECK(validate_ideal_functor(build_ideal_sheaf(K, kind)).valid());
}

TEST_CASE("all ideal functors validate on random complexes") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 15; ++trial) {
    auto K = oracles::random_complex(rng, 8, 4, 0.15);
    for (auto kind :
         {IdealSheafKind::vertex, IdealSheafKind::edge_product, IdealSheafKind::complement_prime})
      CHECK(validate_ideal_functor(build_ideal_sheaf(K, kind)).valid());
  }
}

TEST_CASE("Zn moduli must divide along the face relation") {
  auto K = make(2, {{1, 2}});
  CHECK_NOTHROW(ZnRingSheaf(K, {{12, 18}, {6}}));
  CHECK_THROWS_AS(ZnRingSheaf(K, {{12, 18}, {5}}), std::invalid_argument);
  CHECK_THROWS_AS(ZnRingSheaf(K, {{12, 18}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(ZnRingSheaf(K, {{12}, {6}}), std::invalid_argument);
}

TEST_CASE("one-edge global sections are the fibre product") {
  auto K = make(2, {{1, 2}});
  ZnRingSheaf S(K, {{12, 18}, {6}});
  ZnGlobalSections sections = zn_global_sections(S);
  CHECK(sections.size == 36);  // 12 * 18 / 6

  std::set<std::pair<long, long>> as_pairs;
  for (const auto& t : sections.elements) {
    CHECK((t[0] - t[1]) % 6 == 0);
    as_pairs.insert({t[0], t[1]});
  }
  const auto fib = fibre_product_zn(12, 18, 6);
  CHECK(as_pairs == std::set<std::pair<long, long>>(fib.begin(), fib.end()));
}

TEST_CASE("trivial moduli edge cases") {
  auto K = make(2, {{1, 2}});
  ZnGlobalSections all_ones = zn_global_sections(ZnRingSheaf(K, {{1, 1}, {1}}));
  CHECK(all_ones.size == 1);  // the zero-ring tuple

  auto disjoint = make(2, {});
  ZnGlobalSections prod = zn_global_sections(ZnRingSheaf(disjoint, {{2, 3}}));
  CHECK(prod.size == 6);  // no constraints: the product ring
}

TEST_CASE("global sections form a unital ring") {
  auto K = make(3, {{1, 2}, {2, 3}});
  ZnRingSheaf S(K, {{4, 8, 6}, {4, 2}});
  ZnGlobalSections sections = zn_global_sections(S);
  const std::vector<long> mods{4, 8, 6};

  std::set<std::vector<long>> elems(sections.elements.begin(), sections.elements.end());
  std::vector<long> ones{1, 1, 1};
  CHECK(elems.count(ones) == 1);
  for (const auto& a : sections.elements)
    for (const auto& b : sections.elements) {
      std::vector<long> sum(3), prod(3);
      for (int i = 0; i < 3; ++i) {
        sum[i] = (a[i] + b[i]) % mods[i];
        prod[i] = (a[i] * b[i]) % mods[i];
      }
      CHECK(elems.count(sum) == 1);
      CHECK(elems.count(prod) == 1);
    }
}

TEST_CASE("tree complexes multiply out the edge constraints") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 10; ++trial) {
    // Random tree on n vertices: parent[i] < i.
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<Simplex> edges;
    for (int v = 2; v <= n; ++v) {
      int parent = 1 + static_cast<int>(rng() % (v - 1));
      edges.push_back({parent, v});
    }
    auto K = make(n, edges);

    // Vertex moduli from a divisor-friendly pool, edge moduli dividing the
    // gcd of their endpoints.
    const std::vector<long> pool{2, 4, 6, 12};
    std::vector<std::vector<long>> moduli(2);
    moduli[0].resize(n);
    for (int v = 0; v < n; ++v) moduli[0][v] = pool[rng() % pool.size()];
    moduli[1].resize(K->count(1));
    for (int e = 0; e < K->count(1); ++e) {
      const Simplex& edge = K->simplex(1, e);
      long g = std::gcd(moduli[0][edge[0] - 1], moduli[0][edge[1] - 1]);
      // any divisor of g
      std::vector<long> divs;
      for (long d = 1; d <= g; ++d)
        if (g % d == 0) divs.push_back(d);
      moduli[1][e] = divs[rng() % divs.size()];
    }

    ZnGlobalSections sections = zn_global_sections(ZnRingSheaf(K, moduli));
    long expected = 1;
    for (int v = 0; v < n; ++v) expected *= moduli[0][v];
    for (int e = 0; e < K->count(1); ++e) expected /= moduli[1][e];
    CHECK(sections.size == expected);
  }
}

TEST_CASE("enumeration bound is enforced") {
  auto K = make(2, {});
  ZnRingSheaf S(K, {{100000, 100000}});
  CHECK_THROWS_AS(zn_global_sections(S, 1000000), std::invalid_argument);
}

TEST_CASE("fibre product counting and corner cases") {
  CHECK(fibre_product_zn(12, 18, 6).size() == 36);
  CHECK(fibre_product_zn(5, 7, 1).size() == 35);
  const auto diag = fibre_product_zn(4, 4, 4);
  REQUIRE(diag.size() == 4);
  for (const auto& [a, b] : diag) CHECK(a == b);
  CHECK_THROWS_AS(fibre_product_zn(12, 18, 5), std::invalid_argument);
  CHECK_THROWS_AS(fibre_product_zn(0, 2, 1), std::invalid_argument);
}
