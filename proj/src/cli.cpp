#include "sheaflab/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "sheaflab/acceptance.hpp"
#include "sheaflab/hodge.hpp"
#include "sheaflab/io.hpp"
#include "sheaflab/model_sheaves.hpp"
#include "sheaflab/ringed.hpp"
#include "sheaflab/weighted.hpp"

namespace sheaflab::cli {

namespace {

struct Options {
  std::string facets_path, points_path, complex_path, sheaf_path, output_path;
  std::string edge_weights_path, face_vectors_path, normals_path, weights_path, moduli_path;
  std::string kind, scalar = "float", part = "full", coeff = "Q", format = "mm";
  double epsilon = 1.0;
  int max_dim = 2;
  int q = 0;
  bool q_given = false;
  int dim = 1;
  std::string lambda = "1";
  double gamma = 1.0;
  double tol = 1e-9;
  double rank_tol = -1.0;
  long bound = 10'000'000;
};

// SHEAFLAB_RANK_TOL takes precedence over --rank-tol.
double effective_rank_tol(const Options& opt) {
  if (const char* env = std::getenv("SHEAFLAB_RANK_TOL")) return std::stod(env);
  return opt.rank_tol;
}

std::shared_ptr<const SimplicialComplex> complex_from_options(const Options& opt,
                                                              std::ostream& err) {
  int sources = 0;
  if (!opt.complex_path.empty()) ++sources;
  if (!opt.facets_path.empty()) ++sources;
  if (sources != 1) throw std::invalid_argument("exactly one complex source is required");
  const std::string& path = opt.complex_path.empty() ? opt.facets_path : opt.complex_path;
  (void)err;
  return std::make_shared<SimplicialComplex>(io::load_complex(path));
}

// Geometric input: coordinates from --points, combinatorics from --complex
// when given, otherwise the Rips complex of the cloud.
GeometricComplexD geometric_from_options(const Options& opt) {
  if (opt.points_path.empty())
    throw std::invalid_argument("this construction needs --points coordinates");
  MatrixD pts = io::load_points_csv(opt.points_path);
  GeometricComplexD G;
  if (!opt.complex_path.empty()) {
    G.complex = std::make_shared<SimplicialComplex>(io::load_complex(opt.complex_path));
    if (G.complex->n_vertices() != pts.rows())
      throw std::invalid_argument("point count does not match the complex vertex count");
    G.coords = pts;
    return G;
  }
  return rips_complex(pts, opt.epsilon, opt.max_dim);
}

GeometricComplexQ to_rational_geometry(const Options& opt, const GeometricComplexD& shape) {
  GeometricComplexQ G;
  G.complex = shape.complex;
  G.coords = io::load_points_csv_rational(opt.points_path);
  return G;
}

int cmd_complex_build(const Options& opt, std::ostream& out) {
  SimplicialComplex K = [&] {
    if (!opt.points_path.empty())
      return *rips_complex(io::load_points_csv(opt.points_path), opt.epsilon, opt.max_dim).complex;
    if (!opt.facets_path.empty()) return io::load_complex(opt.facets_path);
    throw std::invalid_argument("complex build needs --facets or --points");
  }();
  if (opt.output_path.empty()) throw std::invalid_argument("--output is required");
  io::save_complex(K, opt.output_path);
  out << "complex with counts";
  for (int q = 0; q <= K.dim(); ++q) out << " " << K.count(q);
  out << " by dimension -> " << opt.output_path << "\n";
  return 0;
}

template <typename S>
Sheaf<S> build_geometric_sheaf(const Options& opt, const GeometricComplex<S>& G) {
  EdgeWeights<S> w;
  if (!opt.edge_weights_path.empty()) w.weight = io::load_edge_weight_csv<S>(opt.edge_weights_path);
  FaceData<S> fd;
  if (!opt.normals_path.empty()) fd.normal = io::load_face_vector_csv<S>(opt.normals_path);
  if (!opt.face_vectors_path.empty())
    fd.face_vector = io::load_face_vector_csv<S>(opt.face_vectors_path);

  if (opt.kind == "face-ext") return face_extension_sheaf(G, w, fd);
  if (opt.kind == "tensor-ext") return tensor_extension_sheaf(G, w, fd);
  throw std::invalid_argument("unknown geometric sheaf kind: " + opt.kind);
}

int cmd_sheaf_build(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.output_path.empty()) throw std::invalid_argument("--output is required");
  const bool rational = opt.scalar == "rational";
  if (!rational && opt.scalar != "float")
    throw std::invalid_argument("--scalar must be float or rational");

  if (opt.kind == "constant") {
    auto K = complex_from_options(opt, err);
    if (rational)
      io::save_sheaf(constant_sheaf<Rational>(K, opt.dim), opt.output_path);
    else
      io::save_sheaf(constant_sheaf<double>(K, opt.dim), opt.output_path);
  } else if (opt.kind == "gnm") {
    auto K = complex_from_options(opt, err);
    if (rational)
      io::save_sheaf(gnm_sheaf<Rational>(K, rational_from_string(opt.lambda)), opt.output_path);
    else
      io::save_sheaf(gnm_sheaf<double>(K, scalar_traits<double>::parse(opt.lambda)),
                     opt.output_path);
  } else if (opt.kind == "anm") {
    if (rational) throw std::invalid_argument("anm requires float mode (edge lengths)");
    GeometricComplexD G = geometric_from_options(opt);
    EdgeWeights<double> params;
    params.gamma = opt.gamma;
    io::save_sheaf(anm_sheaf(G, params), opt.output_path);
  } else if (opt.kind == "face-ext" || opt.kind == "tensor-ext") {
    GeometricComplexD G = geometric_from_options(opt);
    if (rational)
      io::save_sheaf(build_geometric_sheaf<Rational>(opt, to_rational_geometry(opt, G)),
                     opt.output_path);
    else
      io::save_sheaf(build_geometric_sheaf<double>(opt, G), opt.output_path);
  } else if (opt.kind == "weight-cosheaf") {
    auto K = complex_from_options(opt, err);
    if (opt.weights_path.empty()) throw std::invalid_argument("weight-cosheaf needs --weights");
    WeightFunction w = WeightFunction::from_map(*K, io::load_weight_csv(opt.weights_path));
    io::save_sheaf(weight_cosheaf(K, w), opt.output_path);
  } else {
    throw std::invalid_argument("unknown sheaf kind: " + opt.kind);
  }
  out << opt.kind << " sheaf -> " << opt.output_path << "\n";
  return 0;
}

template <typename S>
int validate_loaded_sheaf(const Options& opt, std::ostream& out) {
  Sheaf<S> F = io::load_sheaf<S>(opt.sheaf_path);
  ValidationReport report = validate_sheaf(F, opt.tol);
  if (report.valid()) {
    out << "valid\n";
    return 0;
  }
  out << report.violations.size() << " violation(s)\n";
  const SimplicialComplex& K = F.complex();
  for (const auto& v : report.violations)
    out << "  paths " << simplex_to_string(K.simplex(v.sigma.q, v.sigma.index)) << " -> "
        << simplex_to_string(K.simplex(v.rho.q, v.rho.index)) << " via "
        << simplex_to_string(K.simplex(v.mid1.q, v.mid1.index)) << " vs "
        << simplex_to_string(K.simplex(v.mid2.q, v.mid2.index))
        << " differ by " << io::format_double(v.discrepancy) << "\n";
  return 1;
}

int cmd_sheaf_validate(const Options& opt, std::ostream& out) {
  if (io::sheaf_scalar_mode(opt.sheaf_path) == "rational")
    return validate_loaded_sheaf<Rational>(opt, out);
  return validate_loaded_sheaf<double>(opt, out);
}

template <typename S>
void emit_matrix(const Matrix<S>& m, const Options& opt, std::ostream& out) {
  if (opt.output_path.empty()) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (j) out << ",";
        out << scalar_traits<S>::repr(m(i, j));
      }
      out << "\n";
    }
    return;
  }
  if (opt.format == "csv")
    io::write_matrix_csv(m, opt.output_path);
  else
    io::write_matrix_market(m, opt.output_path);
}

template <typename S>
int run_hodge(const std::string& verb, const Options& opt, std::ostream& out) {
  Sheaf<S> F = io::load_sheaf<S>(opt.sheaf_path);
  if (!validate_sheaf(F, opt.tol).valid())
    throw std::invalid_argument("sheaf failed validation; fix it or rebuild");
  const double rank_tol = effective_rank_tol(opt);

  if (verb == "coboundary") {
    emit_matrix(coboundary_matrix(F, opt.q), opt, out);
  } else if (verb == "laplacian") {
    emit_matrix(hodge_laplacian(F, opt.q, laplacian_part_from_string(opt.part)), opt, out);
  } else if (verb == "betti") {
    out << cohomology_dimension(F, opt.q, rank_tol) << "\n";
  } else if (verb == "sections") {
    emit_matrix(global_sections(F, rank_tol), opt, out);
  } else if (verb == "spectrum") {
    const MatrixD L =
        to_double_matrix(hodge_laplacian(F, opt.q, laplacian_part_from_string(opt.part)));
    std::ostringstream os;
    for (double ev : spectrum(L)) os << io::format_double(ev) << "\n";
    if (opt.output_path.empty())
      out << os.str();
    else
      io::write_text(os.str(), opt.output_path);
  } else {
    throw std::invalid_argument("unknown hodge verb: " + verb);
  }
  return 0;
}

int cmd_hodge(const std::string& verb, const Options& opt, std::ostream& out) {
  if (io::sheaf_scalar_mode(opt.sheaf_path) == "rational")
    return run_hodge<Rational>(verb, opt, out);
  return run_hodge<double>(verb, opt, out);
}

int cmd_weighted_homology(const Options& opt, std::ostream& out, std::ostream& err) {
  auto K = complex_from_options(opt, err);
  if (opt.weights_path.empty()) throw std::invalid_argument("--weights is required");
  WeightFunction w = WeightFunction::from_map(*K, io::load_weight_csv(opt.weights_path));
  WeightReport report = validate_weight(*K, w);
  if (!report.valid()) {
    err << report.violations.size() << " weight violation(s)\n";
    return 1;
  }

  const int q_lo = opt.q_given ? opt.q : 0;
  const int q_hi = opt.q_given ? opt.q : K->dim();
  out << "q,rank,torsion\n";
  for (int q = q_lo; q <= q_hi; ++q) {
    if (opt.coeff == "Z") {
      IntegralHomology h = weighted_homology_z(*K, w, q);
      out << q << "," << h.free_rank << ",";
      for (std::size_t i = 0; i < h.torsion.size(); ++i)
        out << (i ? ";" : "") << h.torsion[i].str();
      out << "\n";
    } else if (opt.coeff == "Q") {
      out << q << "," << weighted_homology_rank_q(*K, w, q) << ",\n";
    } else {
      throw std::invalid_argument("--coeff must be Q or Z");
    }
  }
  return 0;
}

int cmd_ringed_ideal_sheaf(const Options& opt, std::ostream& out, std::ostream& err) {
  auto K = complex_from_options(opt, err);
  IdealSheafAssignment A = build_ideal_sheaf(K, ideal_sheaf_kind_from_string(opt.kind));
  IdealFunctorReport report = validate_ideal_functor(A);

  io::json j;
  j["kind"] = ideal_sheaf_kind_name(ideal_sheaf_kind_from_string(opt.kind));
  j["variance"] = variance_name(A.variance);
  j["valid"] = report.valid();
  io::json pairs = io::json::array();
  for (int q = 1; q <= K->dim(); ++q)
    for (int c = 0; c < K->count(q); ++c)
      for (const auto& ref : K->faces_of(q, c)) {
        bool ok = true;
        for (const auto& v : report.violations)
          if (v.q == q - 1 && v.face == ref.face && v.coface == c) ok = false;
        pairs.push_back({{"coface", K->simplex(q, c)},
                         {"contained", ok},
                         {"face", K->simplex(q - 1, ref.face)},
                         {"face_ideal", A.at(q - 1, ref.face).to_string()},
                         {"coface_ideal", A.at(q, c).to_string()}});
      }
  j["pairs"] = std::move(pairs);

  if (opt.output_path.empty())
    out << j.dump(2) << "\n";
  else
    io::write_text(j.dump(2) + "\n", opt.output_path);
  return report.valid() ? 0 : 1;
}

int cmd_ringed_global_sections(const Options& opt, std::ostream& out, std::ostream& err) {
  auto K = complex_from_options(opt, err);
  if (opt.moduli_path.empty()) throw std::invalid_argument("--moduli is required");
  ZnRingSheaf S = ZnRingSheaf::from_map(K, io::load_moduli_csv(opt.moduli_path));
  ZnGlobalSections sections = zn_global_sections(S, opt.bound);

  io::json j;
  j["size"] = sections.size;
  if (sections.size <= 10'000) {
    io::json elems = io::json::array();
    for (const auto& tup : sections.elements) elems.push_back(tup);
    j["elements"] = std::move(elems);
  }
  if (opt.output_path.empty())
    out << j.dump(2) << "\n";
  else
    io::write_text(j.dump(2) + "\n", opt.output_path);
  return 0;
}

int cmd_verify_all(std::ostream& out) {
  auto results = acceptance::run_suite();
  out << acceptance::format_table(results);
  return acceptance::all_passed(results) ? 0 : 1;
}

void add_common_complex_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--complex", opt.complex_path, "complex JSON file");
  cmd->add_option("--facets", opt.facets_path, "facets JSON file");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"cellular sheaf toolkit"};
  app.require_subcommand(1);

  // complex build
  CLI::App* complex = app.add_subcommand("complex", "complex construction");
  complex->require_subcommand(1);
  CLI::App* complex_build = complex->add_subcommand("build", "build from facets or a point cloud");
  complex_build->add_option("--facets", opt.facets_path, "facets JSON file");
  complex_build->add_option("--points", opt.points_path, "point cloud CSV");
  complex_build->add_option("--epsilon", opt.epsilon, "Rips radius");
  complex_build->add_option("--max-dim", opt.max_dim, "maximum simplex dimension");
  complex_build->add_option("--output", opt.output_path, "output complex JSON")->required();

  // sheaf build / validate
  CLI::App* sheaf = app.add_subcommand("sheaf", "sheaf construction and validation");
  sheaf->require_subcommand(1);
  CLI::App* sheaf_build = sheaf->add_subcommand("build", "build a named sheaf model");
  sheaf_build
      ->add_option("--kind", opt.kind,
                   "constant | gnm | anm | face-ext | tensor-ext | weight-cosheaf")
      ->required();
  add_common_complex_flags(sheaf_build, opt);
  sheaf_build->add_option("--points", opt.points_path, "point cloud CSV");
  sheaf_build->add_option("--epsilon", opt.epsilon, "Rips radius when building from points");
  sheaf_build->add_option("--max-dim", opt.max_dim, "Rips dimension cap");
  sheaf_build->add_option("--dim", opt.dim, "stalk dimension (constant)");
  sheaf_build->add_option("--lambda", opt.lambda, "gnm scale factor");
  sheaf_build->add_option("--gamma", opt.gamma, "anm spring constant");
  sheaf_build->add_option("--edge-weights", opt.edge_weights_path, "edge weight CSV (i,j,w)");
  sheaf_build->add_option("--normals", opt.normals_path, "face normal CSV (i,j,k,x,y,z)");
  sheaf_build->add_option("--face-vectors", opt.face_vectors_path,
                          "face vector CSV (i,j,k,x,y,z)");
  sheaf_build->add_option("--weights", opt.weights_path, "simplex weight CSV");
  sheaf_build->add_option("--scalar", opt.scalar, "float | rational");
  sheaf_build->add_option("--output", opt.output_path, "output sheaf JSON")->required();

  CLI::App* sheaf_validate = sheaf->add_subcommand("validate", "check path independence");
  sheaf_validate->add_option("--sheaf", opt.sheaf_path, "sheaf JSON")->required();
  sheaf_validate->add_option("--tol", opt.tol, "float-mode tolerance");

  // hodge verbs
  CLI::App* hodge = app.add_subcommand("hodge", "coboundaries, Laplacians, cohomology");
  hodge->require_subcommand(1);
  std::vector<CLI::App*> hodge_verbs;
  for (const char* verb : {"coboundary", "laplacian", "betti", "sections", "spectrum"}) {
    CLI::App* v = hodge->add_subcommand(verb);
    v->add_option("--sheaf", opt.sheaf_path, "sheaf JSON")->required();
    v->add_option("--q", opt.q, "degree");
    v->add_option("--part", opt.part, "up | down | full");
    v->add_option("--rank-tol", opt.rank_tol, "relative rank threshold");
    v->add_option("--tol", opt.tol, "validation tolerance");
    v->add_option("--output", opt.output_path, "output file");
    v->add_option("--format", opt.format, "mm | csv");
    hodge_verbs.push_back(v);
  }

  // weighted homology
  CLI::App* weighted = app.add_subcommand("weighted", "weighted simplicial homology");
  weighted->require_subcommand(1);
  CLI::App* weighted_homology = weighted->add_subcommand("homology", "homology table");
  add_common_complex_flags(weighted_homology, opt);
  weighted_homology->add_option("--weights", opt.weights_path, "simplex weight CSV")->required();
  weighted_homology->add_option("--coeff", opt.coeff, "Q | Z");
  weighted_homology->add_option("--q", opt.q, "single degree")->trigger_on_parse();

  // ringed
  CLI::App* ringed = app.add_subcommand("ringed", "ring-valued sheaf constructions");
  ringed->require_subcommand(1);
  CLI::App* ideal = ringed->add_subcommand("ideal-sheaf", "monomial ideal functor report");
  add_common_complex_flags(ideal, opt);
  ideal->add_option("--kind", opt.kind, "vertex | edge-product | complement-prime")->required();
  ideal->add_option("--output", opt.output_path, "report JSON");
  CLI::App* gs = ringed->add_subcommand("global-sections", "ring of global sections of Z/n moduli");
  add_common_complex_flags(gs, opt);
  gs->add_option("--moduli", opt.moduli_path, "moduli CSV")->required();
  gs->add_option("--bound", opt.bound, "enumeration bound");
  gs->add_option("--output", opt.output_path, "output JSON");

  // verify
  CLI::App* verify = app.add_subcommand("verify", "identity verification driver");
  verify->require_subcommand(1);
  CLI::App* verify_all = verify->add_subcommand("all", "run the full verification suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  bool q_flag = false;
  if (weighted_homology->count("--q") > 0) q_flag = true;
  opt.q_given = q_flag;

  try {
    if (complex_build->parsed()) return cmd_complex_build(opt, out);
    if (sheaf_build->parsed()) return cmd_sheaf_build(opt, out, err);
    if (sheaf_validate->parsed()) return cmd_sheaf_validate(opt, out);
    for (std::size_t i = 0; i < hodge_verbs.size(); ++i)
      if (hodge_verbs[i]->parsed())
        return cmd_hodge(hodge_verbs[i]->get_name(), opt, out);
    if (weighted_homology->parsed()) return cmd_weighted_homology(opt, out, err);
    if (ideal->parsed()) return cmd_ringed_ideal_sheaf(opt, out, err);
    if (gs->parsed()) return cmd_ringed_global_sections(opt, out, err);
    if (verify_all->parsed()) return cmd_verify_all(out);
    err << "usage error: no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sheaflab::cli
