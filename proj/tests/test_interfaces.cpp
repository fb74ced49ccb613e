#include "hyperbicomb/cli.hpp"
#include "hyperbicomb/json_io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

using namespace hyperbicomb;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path& scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "hyperbicomb-interface-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  fs::path p = scratch_dir() / name;
  std::ofstream f(p, std::ios::binary);
  f << content;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const RunConfig& cfg) {
  std::ostringstream out, err;
  RunResult r;
  r.code = dispatch(cfg, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

BaseSpace tripod() {
  return BaseSpace::tree(
      RTree({0, 1, 2, 3}, {{0, 0, 1, 1.0}, {1, 0, 2, 1.0}, {2, 0, 3, 1.0}}));
}

}  // namespace

TEST_CASE("space json round-trips") {
  for (const BaseSpace& s : {BaseSpace::line(), BaseSpace::plane(Norm::L1),
                             BaseSpace::plane(Norm::Linf), BaseSpace::euclidean(5), tripod()}) {
    json j = space_to_json(s);
    CHECK(space_to_json(space_from_json(j)) == j);
  }
}

TEST_CASE("point and body json round-trips") {
  BaseSpace plane = BaseSpace::plane(Norm::L2);
  BaseSpace tree = tripod();

  BasePoint v = BasePoint::planar(0.25, -3.5);
  CHECK(points_equal(plane, point_from_json(plane, point_to_json(v)), v));
  BasePoint tp = BasePoint::on_edge(2, 0.75);
  CHECK(points_equal(tree, point_from_json(tree, point_to_json(tp)), tp));

  BaseSpace line = BaseSpace::line();
  auto roundtrip_zero = [](const BaseSpace& s, const ConvexBody& A) {
    ConvexBody back = body_from_json(s, body_to_json(A));
    CHECK(hausdorff_distance(s, SetOperand(A), SetOperand(back)) == 0.0);
    CHECK(body_to_json(back) == body_to_json(A));
  };
  roundtrip_zero(line, ConvexBody::interval(-1.0, 3.0));
  roundtrip_zero(line, ConvexBody::interval(2.0, 2.0));
  roundtrip_zero(plane, ConvexBody::polygon({Eigen::Vector2d(0, 0), Eigen::Vector2d(2, 0),
                                             Eigen::Vector2d(1, 1.5)}));
  roundtrip_zero(tree, ConvexBody::subtree(tree, {{0, 0.0, 0.5}, {1, 0.0, 1.0}}));

  FiniteCompactSet fin(plane, {BasePoint::planar(1, 2), BasePoint::planar(-4, 0)});
  FiniteCompactSet back = finite_set_from_json(plane, finite_set_to_json(fin));
  CHECK(hausdorff_distance(plane, SetOperand(fin), SetOperand(back)) == 0.0);
}

TEST_CASE("operand json dispatches on the top-level key") {
  BaseSpace line = BaseSpace::line();
  SetOperand fin = operand_from_json(line, json::parse(R"({"points": [{"vec": [0.5]}]})"));
  CHECK(std::holds_alternative<FiniteCompactSet>(fin));
  SetOperand body = operand_from_json(line, json::parse(R"({"interval": [0, 1]})"));
  CHECK(std::holds_alternative<ConvexBody>(body));
}

TEST_CASE("malformed json carries a field diagnostic") {
  BaseSpace line = BaseSpace::line();
  BaseSpace plane = BaseSpace::plane(Norm::L2);

  CHECK_THROWS_WITH_AS(space_from_json(json::parse(R"({"dim": 2})")),
                       doctest::Contains("kind"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      space_from_json(json::parse(R"({"kind": "normed", "dim": 2, "norm": "l3"})")),
      doctest::Contains("norm"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      space_from_json(json::parse(R"({"kind": "normed", "dim": 3, "norm": "l1"})")),
      doctest::Contains("l2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(point_from_json(line, json::parse(R"({"coords": [1]})")),
                       doctest::Contains("vec"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(body_from_json(line, json::parse(R"({"interval": [1]})")),
                       doctest::Contains("interval"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(body_from_json(plane, json::parse(R"({"polygon": [[0, 0], [1]]})")),
                       doctest::Contains("polygon"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(finite_set_from_json(line, json::parse(R"({"points": []})")),
                       doctest::Contains("nonempty"), std::invalid_argument);
  // kind mismatches go through point validation
  CHECK_THROWS_AS(point_from_json(tripod(), json::parse(R"({"vec": [1, 2]})")),
                  std::invalid_argument);
}

TEST_CASE("file loading errors carry the path") {
  std::string missing = (scratch_dir() / "nope.json").string();
  CHECK_THROWS_WITH_AS(load_json_file(missing), doctest::Contains("nope.json"),
                       std::invalid_argument);
  std::string broken = write_file("broken.json", "{\"interval\": [1,");
  CHECK_THROWS_WITH_AS(load_json_file(broken), doctest::Contains("broken.json"),
                       std::invalid_argument);
}

TEST_CASE("hausdorff and sigma subcommands") {
  std::string line = write_file("line.json", R"({"kind": "normed", "dim": 1, "norm": "l2"})");
  std::string A = write_file("a.json", R"({"points": [{"vec": [0.0]}, {"vec": [1.0]}]})");
  std::string B = write_file("b.json", R"({"points": [{"vec": [0.3]}, {"vec": [0.4]}]})");

  RunConfig cfg;
  cfg.space_path = line;
  cfg.a_path = A;
  cfg.b_path = B;

  SUBCASE("hausdorff distance") {
    cfg.subcommand = "hausdorff";
    RunResult r = run(cfg);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out).at("d_h").get<double>() == doctest::Approx(0.6).epsilon(1e-15));
  }

  SUBCASE("sigma-k reproduces the projection midpoint") {
    cfg.subcommand = "sigma-k";
    cfg.t = 0.5;
    RunResult r = run(cfg);
    REQUIRE(r.code == 0);
    json pts = json::parse(r.out).at("points");
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].at("vec")[0].get<double>() == 0.15);
    CHECK(pts[1].at("vec")[0].get<double>() == 0.2);
    CHECK(pts[2].at("vec")[0].get<double>() == 0.7);
  }

  SUBCASE("sigma-k --naive keeps all four union points") {
    cfg.subcommand = "sigma-k";
    cfg.t = 0.5;
    cfg.naive = true;
    RunResult r = run(cfg);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out).at("points").size() == 4);
  }

  SUBCASE("sigma-cb at t = 0 echoes the first body") {
    cfg.subcommand = "sigma-cb";
    cfg.a_path = write_file("iv_a.json", R"({"interval": [-1, 1]})");
    cfg.b_path = write_file("iv_b.json", R"({"interval": [-2, 3]})");
    cfg.t = 0.0;
    RunResult r = run(cfg);
    REQUIRE(r.code == 0);
    json iv = json::parse(r.out).at("interval");
    CHECK(iv[0].get<double>() == -1.0);
    CHECK(iv[1].get<double>() == 1.0);
  }

  SUBCASE("out-of-range t is a validation error") {
    cfg.subcommand = "sigma-cb";
    cfg.t = 1.5;
    RunResult r = run(cfg);
    CHECK(r.code == 1);
    CHECK(r.err.find("--t") != std::string::npos);
  }
}

TEST_CASE("verify subcommand exit codes") {
  RunConfig cfg;
  cfg.subcommand = "verify";
  cfg.trials = 5;
  cfg.seed = 1;

  SUBCASE("a passing run exits 0") {
    cfg.suite = "geodesic";
    cfg.target = "linear";
    cfg.family = "line";
    RunResult r = run(cfg);
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS geodesic linear line", 0) == 0);
  }

  SUBCASE("the tree consistency failure is reported honestly") {
    cfg.suite = "consistent";
    cfg.target = "cb-tree";
    cfg.family = "rtree";
    cfg.trials = 100;
    cfg.seed = 42;
    RunResult r = run(cfg);
    CHECK(r.code == 2);
    CHECK(r.out.rfind("FAIL consistent cb-tree rtree", 0) == 0);

    cfg.expect_fail = {"consistent"};
    RunResult x = run(cfg);
    CHECK(x.code == 0);
    CHECK(x.out.rfind("XFAIL", 0) == 0);
  }

  SUBCASE("an unexpected pass under --expect-fail exits 2") {
    cfg.suite = "geodesic";
    cfg.target = "linear";
    cfg.family = "line";
    cfg.expect_fail = {"geodesic"};
    RunResult r = run(cfg);
    CHECK(r.code == 2);
    CHECK(r.out.rfind("XPASS", 0) == 0);
  }

  SUBCASE("validation failures exit 1") {
    cfg.suite = "nonsense";
    RunResult r = run(cfg);
    CHECK(r.code == 1);
    CHECK(r.err.find("unknown suite") != std::string::npos);

    cfg.suite = "geodesic";
    cfg.target = "cb-tree";
    cfg.family = "l2";
    RunResult rr = run(cfg);
    CHECK(rr.code == 1);
    CHECK(rr.err.find("unsupported") != std::string::npos);
  }

  SUBCASE("unknown subcommands exit 1") {
    cfg.subcommand = "frobnicate";
    RunResult r = run(cfg);
    CHECK(r.code == 1);
    CHECK(r.err.find("unknown subcommand") != std::string::npos);
  }
}

TEST_CASE("verify reports are written and byte-stable") {
  RunConfig cfg;
  cfg.subcommand = "verify";
  cfg.suite = "geodesic";
  cfg.target = "cb-minkowski";
  cfg.family = "l2";
  cfg.trials = 10;
  cfg.seed = 3;

  cfg.report_path = (scratch_dir() / "rep1.json").string();
  REQUIRE(run(cfg).code == 0);
  cfg.report_path = (scratch_dir() / "rep2.json").string();
  REQUIRE(run(cfg).code == 0);

  std::string one = slurp((scratch_dir() / "rep1.json").string());
  CHECK(one == slurp((scratch_dir() / "rep2.json").string()));

  json arr = json::parse(one);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 1);
  CHECK(arr[0].at("suite") == "geodesic");
  CHECK(arr[0].at("passed").get<bool>());
  CHECK(arr[0].at("seed").get<std::uint64_t>() == 3);
  CHECK(arr[0].contains("witness"));
}

TEST_CASE("paper-examples subcommand prints three passing regressions") {
  RunConfig cfg;
  cfg.subcommand = "paper-examples";
  RunResult r = run(cfg);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("PASS failed-bicombing") != std::string::npos);
  CHECK(r.out.find("PASS non-unique-geodesic") != std::string::npos);
  CHECK(r.out.find("PASS non-conical") != std::string::npos);
}

TEST_CASE("seed can be pinned through the environment") {
  RunConfig cfg;
  cfg.subcommand = "verify";
  cfg.suite = "geodesic";
  cfg.target = "linear";
  cfg.family = "line";
  cfg.trials = 5;
  cfg.seed = 0;
  cfg.report_path = (scratch_dir() / "env_rep.json").string();

  REQUIRE(setenv("HYPERBICOMB_SEED", "123", 1) == 0);
  RunResult r = run(cfg);
  REQUIRE(unsetenv("HYPERBICOMB_SEED") == 0);
  REQUIRE(r.code == 0);
  json arr = json::parse(slurp(cfg.report_path));
  CHECK(arr[0].at("seed").get<std::uint64_t>() == 123);

  REQUIRE(setenv("HYPERBICOMB_SEED", "not-a-number", 1) == 0);
  RunResult bad = run(cfg);
  REQUIRE(unsetenv("HYPERBICOMB_SEED") == 0);
  CHECK(bad.code == 1);
  CHECK(bad.err.find("HYPERBICOMB_SEED") != std::string::npos);
}

TEST_CASE("plot renders a deterministic svg") {
  std::string plane = write_file("plane.json", R"({"kind": "normed", "dim": 2, "norm": "l2"})");
  std::string A = write_file("poly_a.json", R"({"polygon": [[0, 0], [2, 0], [1, 1.5]]})");
  std::string B = write_file("poly_b.json", R"({"polygon": [[3, 3], [5, 3], [5, 5], [3, 5]]})");

  RunConfig cfg;
  cfg.subcommand = "plot";
  cfg.space_path = plane;
  cfg.a_path = A;
  cfg.b_path = B;
  cfg.t_steps = 4;

  cfg.out_path = (scratch_dir() / "trace1.svg").string();
  RunResult r = run(cfg);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("wrote") != std::string::npos);
  CHECK(r.out.find("(5 layers)") != std::string::npos);
  std::string svg = slurp(cfg.out_path);
  CHECK(svg.find("<svg") != std::string::npos);

  cfg.out_path = (scratch_dir() / "trace2.svg").string();
  REQUIRE(run(cfg).code == 0);
  CHECK(svg == slurp(cfg.out_path));

  SUBCASE("subtree snapshots are rejected") {
    cfg.space_path = write_file("tree.json", R"({"kind": "rtree",
      "vertices": [0, 1, 2, 3],
      "edges": [{"id": 0, "tail": 0, "head": 1, "length": 1.0},
                {"id": 1, "tail": 0, "head": 2, "length": 1.0},
                {"id": 2, "tail": 0, "head": 3, "length": 1.0}]})");
    cfg.a_path = write_file("sub_a.json", R"({"subtree": [{"edge": 0, "from": 0, "to": 1}]})");
    cfg.b_path = write_file("sub_b.json", R"({"subtree": [{"edge": 1, "from": 0, "to": 1}]})");
    cfg.out_path = (scratch_dir() / "trace3.svg").string();
    RunResult bad = run(cfg);
    CHECK(bad.code == 1);
    CHECK(bad.err.find("planar embedding") != std::string::npos);
  }
}
