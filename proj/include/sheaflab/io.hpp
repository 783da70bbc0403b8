#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "sheaflab/model_sheaves.hpp"
#include "sheaflab/sheaf.hpp"
#include "sheaflab/weighted.hpp"

namespace sheaflab::io {

using nlohmann::json;  // std::map-backed: keys serialize in sorted order

// ---- complexes -----------------------------------------------------------

// {"facets": [[...], ...], "n_vertices": n}. Saving always emits the maximal
// simplices in canonical order, so load -> save is byte-identical on files
// this library wrote.
SimplicialComplex complex_from_json(const json& j);
json complex_to_json(const SimplicialComplex& K);
SimplicialComplex load_complex(const std::filesystem::path& path);
void save_complex(const SimplicialComplex& K, const std::filesystem::path& path);

// One row per vertex, d numeric columns, optional header row.
MatrixD load_points_csv(const std::filesystem::path& path);
MatrixQ load_points_csv_rational(const std::filesystem::path& path);

// ---- per-simplex tables ---------------------------------------------------

// Rows "dim,v0,...,vdim,value".
std::map<Simplex, Rational> load_weight_csv(const std::filesystem::path& path);
std::map<Simplex, long> load_moduli_csv(const std::filesystem::path& path);

// Rows "i,j,w".
template <typename S>
std::map<std::pair<int, int>, S> load_edge_weight_csv(const std::filesystem::path& path);

// Rows "i,j,k,x,y,z".
template <typename S>
std::map<std::array<int, 3>, Vector<S>> load_face_vector_csv(const std::filesystem::path& path);

// ---- sheaves ---------------------------------------------------------------

template <typename S>
json sheaf_to_json(const Sheaf<S>& F);
template <typename S>
Sheaf<S> sheaf_from_json(const json& j);
template <typename S>
void save_sheaf(const Sheaf<S>& F, const std::filesystem::path& path);
template <typename S>
Sheaf<S> load_sheaf(const std::filesystem::path& path);

// Scalar mode recorded in a sheaf file ("float" or "rational").
std::string sheaf_scalar_mode(const std::filesystem::path& path);

// ---- matrices ---------------------------------------------------------------

// Matrix Market coordinate format; rational matrices additionally get a
// sidecar "<path>.exact.json" carrying the entries as "p/q" strings.
void write_matrix_market(const MatrixD& m, const std::filesystem::path& path);
void write_matrix_market(const MatrixQ& m, const std::filesystem::path& path);
void write_matrix_csv(const MatrixD& m, const std::filesystem::path& path);
void write_matrix_csv(const MatrixQ& m, const std::filesystem::path& path);

void write_text(const std::string& text, const std::filesystem::path& path);
std::string format_double(double x);  // 17 significant digits

// ---- template definitions ---------------------------------------------------

namespace detail {
std::vector<std::vector<std::string>> read_csv_rows(const std::filesystem::path& path,
                                                    bool skip_header_if_non_numeric);
void write_json_file(const json& j, const std::filesystem::path& path);
json load_json_file(const std::filesystem::path& path);
}  // namespace detail

template <typename S>
std::map<std::pair<int, int>, S> load_edge_weight_csv(const std::filesystem::path& path) {
  std::map<std::pair<int, int>, S> out;
  for (const auto& row : detail::read_csv_rows(path, true)) {
    if (row.size() != 3)
      throw std::invalid_argument("edge weight rows must be 'i,j,w' in " + path.string());
    int i = std::stoi(row[0]), j = std::stoi(row[1]);
    out[{std::min(i, j), std::max(i, j)}] = scalar_traits<S>::parse(row[2]);
  }
  return out;
}

template <typename S>
std::map<std::array<int, 3>, Vector<S>> load_face_vector_csv(const std::filesystem::path& path) {
  std::map<std::array<int, 3>, Vector<S>> out;
  for (const auto& row : detail::read_csv_rows(path, true)) {
    if (row.size() != 6)
      throw std::invalid_argument("face vector rows must be 'i,j,k,x,y,z' in " + path.string());
    std::array<int, 3> key{std::stoi(row[0]), std::stoi(row[1]), std::stoi(row[2])};
    std::sort(key.begin(), key.end());
    Vector<S> v(3);
    for (int c = 0; c < 3; ++c) v(c) = scalar_traits<S>::parse(row[3 + c]);
    out[key] = std::move(v);
  }
  return out;
}

template <typename S>
json sheaf_to_json(const Sheaf<S>& F) {
  const SimplicialComplex& K = F.complex();
  json j;
  j["complex"] = complex_to_json(K);
  j["scalar"] = scalar_traits<S>::mode_name;
  j["variance"] = variance_name(F.variance());

  json stalks = json::array();
  for (int q = 0; q <= K.dim(); ++q)
    for (int i = 0; i < K.count(q); ++i)
      stalks.push_back({{"dim", F.stalk_dim(q, i)}, {"simplex", K.simplex(q, i)}});
  j["stalks"] = std::move(stalks);

  json restrictions = json::array();
  for (const auto& [key, m] : F.restrictions()) {
    const auto& [q, face, coface] = key;
    json entries = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(scalar_traits<S>::repr(m(r, c)));
    restrictions.push_back({{"coface", K.simplex(q + 1, coface)},
                            {"face", K.simplex(q, face)},
                            {"matrix", std::move(entries)}});
  }
  j["restrictions"] = std::move(restrictions);
  return j;
}

template <typename S>
Sheaf<S> sheaf_from_json(const json& j) {
  if (j.at("scalar").get<std::string>() != scalar_traits<S>::mode_name)
    throw std::invalid_argument("sheaf file is in " + j.at("scalar").get<std::string>() +
                                " mode, expected " + scalar_traits<S>::mode_name);
  auto K = std::make_shared<SimplicialComplex>(complex_from_json(j.at("complex")));
  const std::string var = j.at("variance").get<std::string>();
  if (var != "covariant" && var != "contravariant")
    throw std::invalid_argument("unknown variance: " + var);

  Sheaf<S> F(K, var == "covariant" ? Variance::covariant : Variance::contravariant);
  for (const auto& entry : j.at("stalks")) {
    const Simplex s = entry.at("simplex").get<Simplex>();
    const int idx = K->index_of(s);
    if (idx < 0) throw std::invalid_argument("stalk on unknown simplex " + simplex_to_string(s));
    F.set_stalk_dim(static_cast<int>(s.size()) - 1, idx, entry.at("dim").get<int>());
  }
  for (const auto& entry : j.at("restrictions")) {
    const Simplex face = entry.at("face").get<Simplex>();
    const Simplex coface = entry.at("coface").get<Simplex>();
    const int q = static_cast<int>(face.size()) - 1;
    const int fi = K->index_of(face);
    const int ci = K->index_of(coface);
    if (fi < 0 || ci < 0)
      throw std::invalid_argument("restriction on unknown pair " + simplex_to_string(face) +
                                  " <= " + simplex_to_string(coface));
    const Eigen::Index rows = F.rows_for_pair(q, fi, ci);
    const Eigen::Index cols = F.cols_for_pair(q, fi, ci);
    const auto& entries = entry.at("matrix");
    if (static_cast<Eigen::Index>(entries.size()) != rows * cols)
      throw std::invalid_argument("matrix entry count mismatch on pair " +
                                  simplex_to_string(face) + " <= " + simplex_to_string(coface));
    Matrix<S> m(rows, cols);
    Eigen::Index k = 0;
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c)
        m(r, c) = scalar_traits<S>::parse(entries.at(k++).template get<std::string>());
    F.set_restriction(q, fi, ci, std::move(m));
  }
  return F;
}

template <typename S>
void save_sheaf(const Sheaf<S>& F, const std::filesystem::path& path) {
  detail::write_json_file(sheaf_to_json(F), path);
}

template <typename S>
Sheaf<S> load_sheaf(const std::filesystem::path& path) {
  return sheaf_from_json<S>(detail::load_json_file(path));
}

}  // namespace sheaflab::io
