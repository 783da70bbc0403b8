#include "sheaflab/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sheaflab {

std::string simplex_to_string(const Simplex& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << s[i];
  }
  os << "]";
  return os.str();
}

static void check_simplex_tuple(const Simplex& s, int n_vertices) {
  if (s.empty()) throw std::invalid_argument("empty facet");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n_vertices)
      throw std::invalid_argument("vertex out of range in " + simplex_to_string(s));
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument("simplex vertices must be strictly increasing: " +
                                  simplex_to_string(s));
  }
}

SimplicialComplex SimplicialComplex::from_facets(int n_vertices,
                                                 const std::vector<Simplex>& facets) {
  if (n_vertices < 1) throw std::invalid_argument("n_vertices must be positive");

  std::vector<std::set<Simplex>> closure;
  auto ensure_dim = [&](int q) {
    if (static_cast<int>(closure.size()) <= q) closure.resize(q + 1);
  };

  ensure_dim(0);
  for (int v = 1; v <= n_vertices; ++v) closure[0].insert({v});

  for (const Simplex& raw : facets) {
    Simplex f = raw;
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    check_simplex_tuple(f, n_vertices);
    // All nonempty subsets, via the bitmask enumeration.
    const int k = static_cast<int>(f.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      Simplex sub;
      for (int b = 0; b < k; ++b)
        if (mask & (1u << b)) sub.push_back(f[b]);
      ensure_dim(static_cast<int>(sub.size()) - 1);
      closure[sub.size() - 1].insert(std::move(sub));
    }
  }

  SimplicialComplex K;
  K.n_vertices_ = n_vertices;
  K.by_dim_.reserve(closure.size());
  for (auto& level : closure)
    K.by_dim_.emplace_back(level.begin(), level.end());  // std::set is already lex-sorted
  K.build_index();
  return K;
}

void SimplicialComplex::build_index() {
  index_.assign(by_dim_.size(), {});
  for (std::size_t q = 0; q < by_dim_.size(); ++q)
    for (std::size_t i = 0; i < by_dim_[q].size(); ++i)
      index_[q].emplace(by_dim_[q][i], static_cast<int>(i));

  faces_.assign(by_dim_.size(), {});
  for (std::size_t q = 1; q < by_dim_.size(); ++q) {
    faces_[q].resize(by_dim_[q].size());
    for (std::size_t i = 0; i < by_dim_[q].size(); ++i) {
      const Simplex& tau = by_dim_[q][i];
      for (std::size_t k = 0; k < tau.size(); ++k) {
        Simplex face = tau;
        face.erase(face.begin() + static_cast<long>(k));
        auto it = index_[q - 1].find(face);
        if (it == index_[q - 1].end())
          throw std::logic_error("complex is not downward closed at " + simplex_to_string(tau));
        faces_[q][i].push_back({it->second, (k % 2 == 0) ? 1 : -1});
      }
    }
  }
}

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const {
  static const std::vector<Simplex> empty;
  if (q < 0 || q > dim()) return empty;
  return by_dim_[q];
}

int SimplicialComplex::index_of(const Simplex& s) const {
  const int q = static_cast<int>(s.size()) - 1;
  if (q < 0 || q > dim()) return -1;
  auto it = index_[q].find(s);
  return it == index_[q].end() ? -1 : it->second;
}

long SimplicialComplex::total_simplices() const {
  long total = 0;
  for (const auto& level : by_dim_) total += static_cast<long>(level.size());
  return total;
}

const std::vector<SimplicialComplex::FaceRef>& SimplicialComplex::faces_of(int q, int idx) const {
  if (q < 1 || q > dim()) throw std::out_of_range("faces_of: dimension out of range");
  return faces_[q].at(idx);
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int q = 0; q <= dim(); ++q) {
    for (const Simplex& s : by_dim_[q]) {
      bool has_coface = false;
      if (q + 1 <= dim()) {
        for (std::size_t i = 0; i < by_dim_[q + 1].size() && !has_coface; ++i) {
          const Simplex& t = by_dim_[q + 1][i];
          has_coface = std::includes(t.begin(), t.end(), s.begin(), s.end());
        }
      }
      if (!has_coface) out.push_back(s);
    }
  }
  return out;
}

int incidence_sign_tuples(const Simplex& sigma, const Simplex& tau) {
  if (sigma.size() + 1 != tau.size()) return 0;
  int removed = -1;
  std::size_t si = 0;
  for (std::size_t ti = 0; ti < tau.size(); ++ti) {
    if (si < sigma.size() && sigma[si] == tau[ti]) {
      ++si;
    } else if (removed < 0) {
      removed = static_cast<int>(ti);
    } else {
      return 0;  // two mismatches: not a face
    }
  }
  if (si != sigma.size()) return 0;
  return (removed % 2 == 0) ? 1 : -1;
}

int incidence_sign(const SimplicialComplex& K, const Simplex& sigma, const Simplex& tau) {
  if (!K.contains(sigma)) throw std::invalid_argument("simplex not in complex: " + simplex_to_string(sigma));
  if (!K.contains(tau)) throw std::invalid_argument("simplex not in complex: " + simplex_to_string(tau));
  return incidence_sign_tuples(sigma, tau);
}

GeometricComplexD rips_complex(const MatrixD& points, double epsilon, int max_dim) {
  const int n = static_cast<int>(points.rows());
  if (n < 1) throw std::invalid_argument("rips_complex: need at least one point");
  if (epsilon <= 0) throw std::invalid_argument("rips_complex: epsilon must be positive");
  if (max_dim < 0) throw std::invalid_argument("rips_complex: max_dim must be >= 0");

  // Neighbor sets via squared distances, ties at epsilon included.
  const double eps2 = epsilon * epsilon;
  std::vector<std::vector<int>> nbrs(n + 1);
  std::vector<Simplex> facets;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      double d2 = (points.row(i - 1) - points.row(j - 1)).squaredNorm();
      if (d2 <= eps2) {
        nbrs[i].push_back(j);
        if (max_dim >= 1) facets.push_back({i, j});
      }
    }

  // Grow cliques one vertex at a time; candidates are common neighbors
  // larger than the current maximum, so each clique appears once.
  std::vector<std::pair<Simplex, std::vector<int>>> frontier;
  for (int i = 1; i <= n; ++i) frontier.push_back({{i}, nbrs[i]});
  for (int q = 1; q <= max_dim; ++q) {
    std::vector<std::pair<Simplex, std::vector<int>>> next;
    for (const auto& [clique, cands] : frontier) {
      for (std::size_t c = 0; c < cands.size(); ++c) {
        int v = cands[c];
        Simplex grown = clique;
        grown.push_back(v);
        std::vector<int> common;
        std::set_intersection(cands.begin(), cands.end(), nbrs[v].begin(), nbrs[v].end(),
                              std::back_inserter(common));
        if (static_cast<int>(grown.size()) - 1 == q && q >= 2) facets.push_back(grown);
        next.push_back({std::move(grown), std::move(common)});
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }

  GeometricComplexD out;
  out.complex = std::make_shared<SimplicialComplex>(SimplicialComplex::from_facets(n, facets));
  out.coords = points;
  return out;
}

}  // namespace sheaflab
