#include "sheaflab/io.hpp"

#include <fstream>
#include <sstream>

namespace sheaflab::io {

namespace detail {

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  json j;
  in >> j;
  return j;
}

void write_json_file(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

static std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) {
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos ? "" : field.substr(first, last - first + 1));
  }
  return fields;
}

static bool numeric_token(const std::string& s) {
  if (s.empty()) return false;
  char* end = nullptr;
  std::strtod(s.c_str(), &end);
  if (end == s.c_str()) return false;
  // allow rational literals "p/q"
  if (*end == '/') std::strtod(end + 1, &end);
  return *end == '\0';
}

std::vector<std::vector<std::string>> read_csv_rows(const std::filesystem::path& path,
                                                    bool skip_header_if_non_numeric) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[0] == '#') continue;
    auto fields = split_csv_line(line);
    if (first && skip_header_if_non_numeric) {
      first = false;
      bool all_numeric = true;
      for (const auto& f : fields) all_numeric = all_numeric && numeric_token(f);
      if (!all_numeric) continue;
    }
    first = false;
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace detail

std::string format_double(double x) { return scalar_traits<double>::repr(x); }

SimplicialComplex complex_from_json(const json& j) {
  const int n = j.at("n_vertices").get<int>();
  std::vector<Simplex> facets;
  for (const auto& f : j.at("facets")) facets.push_back(f.get<Simplex>());
  return SimplicialComplex::from_facets(n, facets);
}

json complex_to_json(const SimplicialComplex& K) {
  json j;
  j["n_vertices"] = K.n_vertices();
  json facets = json::array();
  for (const Simplex& s : K.maximal_simplices()) facets.push_back(s);
  j["facets"] = std::move(facets);
  return j;
}

SimplicialComplex load_complex(const std::filesystem::path& path) {
  return complex_from_json(detail::load_json_file(path));
}

void save_complex(const SimplicialComplex& K, const std::filesystem::path& path) {
  detail::write_json_file(complex_to_json(K), path);
}

template <typename S>
static Matrix<S> points_from_rows(const std::vector<std::vector<std::string>>& rows,
                                  const std::filesystem::path& path) {
  if (rows.empty()) throw std::invalid_argument("no points in " + path.string());
  const std::size_t d = rows.front().size();
  Matrix<S> pts(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != d)
      throw std::invalid_argument("ragged point row in " + path.string());
    for (std::size_t c = 0; c < d; ++c)
      pts(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          scalar_traits<S>::parse(rows[r][c]);
  }
  return pts;
}

MatrixD load_points_csv(const std::filesystem::path& path) {
  return points_from_rows<double>(detail::read_csv_rows(path, true), path);
}

MatrixQ load_points_csv_rational(const std::filesystem::path& path) {
  return points_from_rows<Rational>(detail::read_csv_rows(path, true), path);
}

template <typename V>
static std::map<Simplex, V> simplex_table_from_csv(const std::filesystem::path& path,
                                                   V (*parse)(const std::string&)) {
  std::map<Simplex, V> out;
  for (const auto& row : detail::read_csv_rows(path, true)) {
    if (row.size() < 3)
      throw std::invalid_argument("rows must be 'dim,v0,...,vdim,value' in " + path.string());
    const int q = std::stoi(row[0]);
    if (q < 0 || row.size() != static_cast<std::size_t>(q) + 3)
      throw std::invalid_argument("row has wrong vertex count in " + path.string());
    Simplex s;
    for (int k = 0; k <= q; ++k) s.push_back(std::stoi(row[1 + k]));
    std::sort(s.begin(), s.end());
    out[std::move(s)] = parse(row.back());
  }
  return out;
}

std::map<Simplex, Rational> load_weight_csv(const std::filesystem::path& path) {
  return simplex_table_from_csv<Rational>(path, +[](const std::string& s) {
    return rational_from_string(s);
  });
}

std::map<Simplex, long> load_moduli_csv(const std::filesystem::path& path) {
  return simplex_table_from_csv<long>(path, +[](const std::string& s) { return std::stol(s); });
}

template <typename S>
static void write_matrix_market_impl(const Matrix<S>& m, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "%%MatrixMarket matrix coordinate real general\n";
  long nnz = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != S(0)) ++nnz;
  os << m.rows() << " " << m.cols() << " " << nnz << "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != S(0))
        os << (i + 1) << " " << (j + 1) << " "
           << format_double(scalar_traits<S>::to_double(m(i, j))) << "\n";
  write_text(os.str(), path);
}

void write_matrix_market(const MatrixD& m, const std::filesystem::path& path) {
  write_matrix_market_impl(m, path);
}

void write_matrix_market(const MatrixQ& m, const std::filesystem::path& path) {
  write_matrix_market_impl(m, path);
  json sidecar;
  sidecar["cols"] = m.cols();
  sidecar["rows"] = m.rows();
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0)
        entries.push_back({i + 1, j + 1, scalar_traits<Rational>::repr(m(i, j))});
  sidecar["entries"] = std::move(entries);
  detail::write_json_file(sidecar, path.string() + ".exact.json");
}

template <typename S>
static void write_matrix_csv_impl(const Matrix<S>& m, const std::filesystem::path& path) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      if constexpr (scalar_traits<S>::exact)
        os << scalar_traits<S>::repr(m(i, j));
      else
        os << format_double(m(i, j));
    }
    os << "\n";
  }
  write_text(os.str(), path);
}

void write_matrix_csv(const MatrixD& m, const std::filesystem::path& path) {
  write_matrix_csv_impl(m, path);
}
void write_matrix_csv(const MatrixQ& m, const std::filesystem::path& path) {
  write_matrix_csv_impl(m, path);
}

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path.string());
  out << text;
}

std::string sheaf_scalar_mode(const std::filesystem::path& path) {
  return detail::load_json_file(path).at("scalar").get<std::string>();
}

}  // namespace sheaflab::io
