#include "sheaflab/ringed.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sheaflab {

namespace {

// a divides b componentwise (monomial divisibility on exponent vectors).
bool divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int n_vars, std::vector<std::vector<int>> generators)
    : n_vars_(n_vars) {
  if (n_vars < 1) throw std::invalid_argument("monomial ideal needs at least one variable");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != n_vars)
      throw std::invalid_argument("generator length does not match the variable count");
    for (int e : g)
      if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // Minimality: drop any generator divisible by another.
  for (std::size_t i = 0; i < generators.size();) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
      redundant = i != j && divides(generators[j], generators[i]);
    if (redundant)
      generators.erase(generators.begin() + static_cast<long>(i));
    else
      ++i;
  }
  generators_ = std::move(generators);
}

bool MonomialIdeal::contains_monomial(const std::vector<int>& exponents) const {
  if (static_cast<int>(exponents.size()) != n_vars_)
    throw std::invalid_argument("monomial length does not match the variable count");
  for (const auto& g : generators_)
    if (divides(g, exponents)) return true;
  return false;
}

std::string MonomialIdeal::to_string() const {
  if (generators_.empty()) return "(0)";
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ", ";
    bool printed = false;
    for (int v = 0; v < n_vars_; ++v) {
      if (generators_[i][v] == 0) continue;
      if (printed) os << "*";
      os << "x" << (v + 1);
      if (generators_[i][v] > 1) os << "^" << generators_[i][v];
      printed = true;
    }
    if (!printed) os << "1";
  }
  os << ")";
  return os.str();
}

bool monomial_ideal_contains(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.n_vars() != J.n_vars())
    throw std::invalid_argument("ideal containment: variable counts differ");
  for (const auto& g : I.generators())
    if (!J.contains_monomial(g)) return false;
  return true;
}

IdealSheafKind ideal_sheaf_kind_from_string(const std::string& s) {
  if (s == "vertex") return IdealSheafKind::vertex;
  if (s == "edge-product" || s == "edge_product") return IdealSheafKind::edge_product;
  if (s == "complement-prime" || s == "complement_prime") return IdealSheafKind::complement_prime;
  throw std::invalid_argument("unknown ideal sheaf kind: " + s);
}

const char* ideal_sheaf_kind_name(IdealSheafKind k) {
  switch (k) {
    case IdealSheafKind::vertex: return "vertex";
    case IdealSheafKind::edge_product: return "edge-product";
    case IdealSheafKind::complement_prime: return "complement-prime";
  }
  return "?";
}

IdealSheafAssignment build_ideal_sheaf(std::shared_ptr<const SimplicialComplex> K,
                                       IdealSheafKind kind) {
  const int n = K->n_vertices();
  IdealSheafAssignment A;
  A.complex = K;
  A.variance =
      kind == IdealSheafKind::complement_prime ? Variance::contravariant : Variance::covariant;
  A.ideal.resize(K->dim() + 1);

  for (int q = 0; q <= K->dim(); ++q) {
    A.ideal[q].reserve(K->count(q));
    for (const Simplex& s : K->simplices(q)) {
      std::vector<std::vector<int>> gens;
      switch (kind) {
        case IdealSheafKind::vertex:
          for (int v : s) {
            std::vector<int> e(n, 0);
            e[v - 1] = 1;
            gens.push_back(std::move(e));
          }
          break;
        case IdealSheafKind::edge_product:
          for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b) {
              std::vector<int> e(n, 0);
              e[s[a] - 1] = 1;
              e[s[b] - 1] = 1;
              gens.push_back(std::move(e));
            }
          break;
        case IdealSheafKind::complement_prime:
          for (int v = 1; v <= n; ++v) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            std::vector<int> e(n, 0);
            e[v - 1] = 1;
            gens.push_back(std::move(e));
          }
          break;
      }
      A.ideal[q].emplace_back(n, std::move(gens));
    }
  }
  return A;
}

IdealFunctorReport validate_ideal_functor(const IdealSheafAssignment& A) {
  const SimplicialComplex& K = *A.complex;
  for (int q = 0; q <= K.dim(); ++q)
    if (static_cast<int>(A.ideal.size()) <= q ||
        static_cast<int>(A.ideal[q].size()) != K.count(q))
      throw std::invalid_argument("ideal assignment does not cover every simplex");

  IdealFunctorReport report;
  for (int q = 1; q <= K.dim(); ++q)
    for (int c = 0; c < K.count(q); ++c)
      for (const auto& ref : K.faces_of(q, c)) {
        const MonomialIdeal& low = A.at(q - 1, ref.face);
        const MonomialIdeal& high = A.at(q, c);
        const bool ok = A.variance == Variance::covariant ? monomial_ideal_contains(low, high)
                                                          : monomial_ideal_contains(high, low);
        if (!ok) report.violations.push_back({q - 1, ref.face, c});
      }
  return report;
}

ZnRingSheaf::ZnRingSheaf(std::shared_ptr<const SimplicialComplex> K,
                         std::vector<std::vector<long>> moduli)
    : complex_(std::move(K)), moduli_(std::move(moduli)) {
  const SimplicialComplex& C = *complex_;
  if (static_cast<int>(moduli_.size()) != C.dim() + 1)
    throw std::invalid_argument("moduli must cover every dimension");
  for (int q = 0; q <= C.dim(); ++q) {
    if (static_cast<int>(moduli_[q].size()) != C.count(q))
      throw std::invalid_argument("moduli must cover every simplex");
    for (long m : moduli_[q])
      if (m < 1) throw std::invalid_argument("moduli must be positive");
  }
  // The identity-preserving homomorphism Z/n_sigma -> Z/n_tau exists exactly
  // when n_tau | n_sigma.
  for (int q = 1; q <= C.dim(); ++q)
    for (int c = 0; c < C.count(q); ++c)
      for (const auto& ref : C.faces_of(q, c))
        if (moduli_[q - 1][ref.face] % moduli_[q][c] != 0)
          throw std::invalid_argument(
              "modulus of " + simplex_to_string(C.simplex(q, c)) + " must divide modulus of " +
              simplex_to_string(C.simplex(q - 1, ref.face)));
}

ZnRingSheaf ZnRingSheaf::from_map(std::shared_ptr<const SimplicialComplex> K,
                                  const std::map<Simplex, long>& moduli) {
  std::vector<std::vector<long>> table(K->dim() + 1);
  for (int q = 0; q <= K->dim(); ++q) {
    table[q].resize(K->count(q));
    for (int i = 0; i < K->count(q); ++i) {
      auto it = moduli.find(K->simplex(q, i));
      if (it == moduli.end())
        throw std::invalid_argument("missing modulus for simplex " +
                                    simplex_to_string(K->simplex(q, i)));
      table[q][i] = it->second;
    }
  }
  return ZnRingSheaf(std::move(K), std::move(table));
}

ZnGlobalSections zn_global_sections(const ZnRingSheaf& S, long enumeration_bound) {
  const SimplicialComplex& K = S.complex();
  const int n = K.n_vertices();

  double product = 1.0;
  for (int v = 0; v < n; ++v) {
    product *= static_cast<double>(S.modulus(0, v));
    if (product > static_cast<double>(enumeration_bound))
      throw std::invalid_argument("global-section enumeration bound exceeded");
  }

  // Edges indexed against vertex positions; vertices are their own canonical
  // indices at dimension 0.
  struct EdgeConstraint {
    int a, b;  // 0-based vertex positions, a < b
    long mod;
  };
  std::vector<std::vector<EdgeConstraint>> by_later_vertex(n);
  for (int e = 0; e < K.count(1); ++e) {
    const Simplex& edge = K.simplex(1, e);
    by_later_vertex[edge[1] - 1].push_back({edge[0] - 1, edge[1] - 1, S.modulus(1, e)});
  }

  ZnGlobalSections out;
  std::vector<long> tuple(n, 0);
  // Depth-first over vertex residues, pruning on each edge as soon as both
  // endpoints are assigned.
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.elements.push_back(tuple);
      return;
    }
    for (long r = 0; r < S.modulus(0, v); ++r) {
      tuple[v] = r;
      bool ok = true;
      for (const auto& c : by_later_vertex[v])
        if ((tuple[c.a] - r) % c.mod != 0) {
          ok = false;
          break;
        }
      if (ok) self(self, v + 1);
    }
  };
  dfs(dfs, 0);
  out.size = static_cast<long>(out.elements.size());
  return out;
}

std::vector<std::pair<long, long>> fibre_product_zn(long m, long n, long k) {
  if (m < 1 || n < 1 || k < 1) throw std::invalid_argument("moduli must be positive");
  if (m % k != 0 || n % k != 0)
    throw std::invalid_argument("fibre product requires k | m and k | n");
  std::vector<std::pair<long, long>> out;
  out.reserve(static_cast<std::size_t>(m / k * n));
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < n; ++b)
      if ((a - b) % k == 0) out.emplace_back(a, b);
  return out;
}

}  // namespace sheaflab
