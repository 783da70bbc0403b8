#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sheaflab/cli.hpp"

namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "sheaflab-cli-tests";
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = sheaflab::cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

struct Fixtures {
  fs::path hollow = scratch_dir() / "hollow.json";
  fs::path full = scratch_dir() / "full.json";
  fs::path points = scratch_dir() / "right_triangle.csv";
  fs::path weights124 = scratch_dir() / "w124.csv";
  Fixtures() {
    spit(hollow, R"({"facets": [[1,2],[1,3],[2,3]], "n_vertices": 3})");
    spit(full, R"({"facets": [[1,2,3]], "n_vertices": 3})");
    spit(points, "0,0,0\n1,0,0\n0,1,0\n");
    spit(weights124, "0,1,1\n0,2,1\n0,3,1\n1,1,2,2\n1,1,3,2\n1,2,3,2\n2,1,2,3,4\n");
  }
};

const Fixtures& fx() {
  static Fixtures f;
  return f;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"hodge", "betti"}).exit_code == 2);  // missing --sheaf
}

TEST_CASE("complex build from facets and from points") {
  const fs::path out = scratch_dir() / "complex_out.json";
  RunResult r = run({"complex", "build", "--facets", fx().full.string(), "--output", out.string()});
  CHECK(r.exit_code == 0);
  CHECK(slurp(out).find("\"n_vertices\": 3") != std::string::npos);

  RunResult r2 = run({"complex", "build", "--points", fx().points.string(), "--epsilon", "1.5",
                      "--max-dim", "2", "--output", out.string()});
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("counts 3 3 1") != std::string::npos);

  // round-trip determinism through the CLI path
  const fs::path out2 = scratch_dir() / "complex_out2.json";
  RunResult r3 =
      run({"complex", "build", "--facets", out.string(), "--output", out2.string()});
  CHECK(r3.exit_code == 0);
  CHECK(slurp(out) == slurp(out2));
}

TEST_CASE("hollow-triangle betti through the CLI is 1") {
  const fs::path sheaf = scratch_dir() / "const_hollow.json";
  REQUIRE(run({"sheaf", "build", "--kind", "constant", "--complex", fx().hollow.string(), "--dim",
               "1", "--scalar", "rational", "--output", sheaf.string()})
              .exit_code == 0);
  RunResult betti = run({"hodge", "betti", "--sheaf", sheaf.string(), "--q", "1"});
  CHECK(betti.exit_code == 0);
  CHECK(betti.out == "1\n");

  RunResult validate = run({"sheaf", "validate", "--sheaf", sheaf.string()});
  CHECK(validate.exit_code == 0);
  CHECK(validate.out == "valid\n");
}

TEST_CASE("anm build on coincident points names the offending edge") {
  const fs::path bad = scratch_dir() / "bad_points.csv";
  spit(bad, "0,0,0\n0,0,0\n");
  RunResult r = run({"sheaf", "build", "--kind", "anm", "--points", bad.string(), "--epsilon",
                     "1", "--max-dim", "1", "--output", (scratch_dir() / "x.json").string()});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("[1,2]") != std::string::npos);
}

TEST_CASE("gnm in rational mode with a fractional lambda") {
  const fs::path sheaf = scratch_dir() / "gnm.json";
  RunResult r = run({"sheaf", "build", "--kind", "gnm", "--complex", fx().hollow.string(),
                     "--lambda", "1/2", "--scalar", "rational", "--output", sheaf.string()});
  CHECK(r.exit_code == 0);
  RunResult betti = run({"hodge", "betti", "--sheaf", sheaf.string(), "--q", "0"});
  CHECK(betti.out == "3\n");
}

TEST_CASE("face extension spectrum and laplacian outputs") {
  const fs::path sheaf = scratch_dir() / "fe.json";
  REQUIRE(run({"sheaf", "build", "--kind", "face-ext", "--complex", fx().full.string(),
               "--points", fx().points.string(), "--output", sheaf.string()})
              .exit_code == 0);

  RunResult spec = run({"hodge", "spectrum", "--sheaf", sheaf.string(), "--q", "0"});
  CHECK(spec.exit_code == 0);
  std::istringstream lines(spec.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 3);  // one eigenvalue per vertex stalk dimension

  const fs::path mtx = scratch_dir() / "lap.mtx";
  RunResult lap = run({"hodge", "laplacian", "--sheaf", sheaf.string(), "--q", "1", "--part",
                       "down", "--output", mtx.string()});
  CHECK(lap.exit_code == 0);
  CHECK(slurp(mtx).rfind("%%MatrixMarket", 0) == 0);

  RunResult cob = run({"hodge", "coboundary", "--sheaf", sheaf.string(), "--q", "5"});
  CHECK(cob.exit_code == 1);  // out of range -> invalid input
}

TEST_CASE("weighted homology table over Z") {
  RunResult r = run({"weighted", "homology", "--complex", fx().full.string(), "--weights",
                     fx().weights124.string(), "--coeff", "Z"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("q,rank,torsion\n") == 0);
  CHECK(r.out.find("1,0,2\n") != std::string::npos);

  RunResult single = run({"weighted", "homology", "--complex", fx().full.string(), "--weights",
                          fx().weights124.string(), "--coeff", "Q", "--q", "1"});
  CHECK(single.out == "q,rank,torsion\n1,0,\n");
}

TEST_CASE("ringed subcommands") {
  const fs::path edge = scratch_dir() / "edge.json";
  const fs::path moduli = scratch_dir() / "moduli.csv";
  spit(edge, R"({"facets": [[1,2]], "n_vertices": 2})");
  spit(moduli, "0,1,12\n0,2,18\n1,1,2,6\n");

  RunResult gs = run({"ringed", "global-sections", "--complex", edge.string(), "--moduli",
                      moduli.string()});
  CHECK(gs.exit_code == 0);
  CHECK(gs.out.find("\"size\": 36") != std::string::npos);

  RunResult ideal =
      run({"ringed", "ideal-sheaf", "--complex", fx().full.string(), "--kind", "vertex"});
  CHECK(ideal.exit_code == 0);
  CHECK(ideal.out.find("\"valid\": true") != std::string::npos);

  RunResult bad = run({"ringed", "ideal-sheaf", "--complex", fx().full.string(), "--kind", "x"});
  CHECK(bad.exit_code == 1);
}

TEST_CASE("weight cosheaf builds and its betti matches weighted homology") {
  const fs::path sheaf = scratch_dir() / "cosheaf.json";
  REQUIRE(run({"sheaf", "build", "--kind", "weight-cosheaf", "--complex", fx().full.string(),
               "--weights", fx().weights124.string(), "--output", sheaf.string()})
              .exit_code == 0);
  RunResult betti = run({"hodge", "betti", "--sheaf", sheaf.string(), "--q", "1"});
  CHECK(betti.exit_code == 0);
  CHECK(betti.out == "0\n");
}

TEST_CASE("rank tolerance environment override wins") {
  const fs::path sheaf = scratch_dir() / "const_edge.json";
  const fs::path edge = scratch_dir() / "edge2.json";
  spit(edge, R"({"facets": [[1,2]], "n_vertices": 2})");
  REQUIRE(run({"sheaf", "build", "--kind", "constant", "--complex", edge.string(), "--dim", "1",
               "--output", sheaf.string()})
              .exit_code == 0);

  setenv("SHEAFLAB_RANK_TOL", "10.0", 1);  // swallow every singular value
  RunResult inflated = run({"hodge", "betti", "--sheaf", sheaf.string(), "--q", "0",
                            "--rank-tol", "1e-12"});
  unsetenv("SHEAFLAB_RANK_TOL");
  CHECK(inflated.out == "2\n");

  RunResult normal = run({"hodge", "betti", "--sheaf", sheaf.string(), "--q", "0"});
  CHECK(normal.out == "1\n");
}

TEST_CASE("bundled fixtures drive the documented examples") {
  const fs::path fixtures{SHEAFLAB_FIXTURES_DIR};

  // Rips on the unit square keeps the four sides and no triangle.
  const fs::path square_out = scratch_dir() / "square.json";
  RunResult square =
      run({"complex", "build", "--points", (fixtures / "unit_square_points.csv").string(),
           "--epsilon", "1.05", "--max-dim", "2", "--output", square_out.string()});
  CHECK(square.exit_code == 0);
  CHECK(square.out.find("counts 4 4") != std::string::npos);

  // Tetrahedron constant sheaf is contractible in positive degrees.
  const fs::path tet_sheaf = scratch_dir() / "tet_const.json";
  REQUIRE(run({"sheaf", "build", "--kind", "constant", "--complex",
               (fixtures / "tetrahedron.json").string(), "--dim", "1", "--scalar", "rational",
               "--output", tet_sheaf.string()})
              .exit_code == 0);
  CHECK(run({"hodge", "betti", "--sheaf", tet_sheaf.string(), "--q", "1"}).out == "0\n");
  CHECK(run({"hodge", "betti", "--sheaf", tet_sheaf.string(), "--q", "2"}).out == "0\n");

  // K3 graph gnm sheaf has three global sections.
  const fs::path gnm = scratch_dir() / "k3_gnm.json";
  REQUIRE(run({"sheaf", "build", "--kind", "gnm", "--complex",
               (fixtures / "k3_graph.json").string(), "--lambda", "1", "--scalar", "rational",
               "--output", gnm.string()})
              .exit_code == 0);
  CHECK(run({"hodge", "betti", "--sheaf", gnm.string(), "--q", "0"}).out == "3\n");

  // Face extension on the bundled right triangle with unit weights.
  const fs::path fe = scratch_dir() / "fixture_fe.json";
  REQUIRE(run({"sheaf", "build", "--kind", "face-ext", "--complex",
               (fixtures / "triangle_full.json").string(), "--points",
               (fixtures / "right_triangle_points.csv").string(), "--edge-weights",
               (fixtures / "triangle_edge_weights_unit.csv").string(), "--output", fe.string()})
              .exit_code == 0);
  CHECK(run({"sheaf", "validate", "--sheaf", fe.string()}).out == "valid\n");

  // 1/2/4 weights on the full triangle: the documented torsion table.
  RunResult hom = run({"weighted", "homology", "--complex",
                       (fixtures / "triangle_full.json").string(), "--weights",
                       (fixtures / "triangle_full_weights_124.csv").string(), "--coeff", "Z"});
  CHECK(hom.out.find("1,0,2\n") != std::string::npos);

  // One-edge ring sheaf sections from the bundled moduli.
  RunResult gs = run({"ringed", "global-sections", "--complex",
                      (fixtures / "one_edge.json").string(), "--moduli",
                      (fixtures / "one_edge_moduli.csv").string()});
  CHECK(gs.out.find("\"size\": 36") != std::string::npos);
}

TEST_CASE("sheaf validate reports violations with exit 1") {
  // Hand-written float sheaf on the full triangle with an inconsistent map.
  const fs::path bad = scratch_dir() / "bad_sheaf.json";
  spit(bad, R"({
    "complex": {"facets": [[1,2,3]], "n_vertices": 3},
    "scalar": "float",
    "variance": "covariant",
    "stalks": [
      {"dim": 1, "simplex": [1]}, {"dim": 1, "simplex": [2]}, {"dim": 1, "simplex": [3]},
      {"dim": 1, "simplex": [1,2]}, {"dim": 1, "simplex": [1,3]}, {"dim": 1, "simplex": [2,3]},
      {"dim": 1, "simplex": [1,2,3]}
    ],
    "restrictions": [
      {"face": [1], "coface": [1,2], "matrix": ["1"]},
      {"face": [1], "coface": [1,3], "matrix": ["1"]},
      {"face": [1,2], "coface": [1,2,3], "matrix": ["1"]},
      {"face": [1,3], "coface": [1,2,3], "matrix": ["2"]}
    ]
  })");
  RunResult r = run({"sheaf", "validate", "--sheaf", bad.string()});
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("violation") != std::string::npos);
}
