#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "wallnorm/coorient.hpp"
#include "wallnorm/homology.hpp"
#include "wallnorm/surface_map.hpp"

using namespace wallnorm;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run wallnorm_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

struct Workspace {
  fs::path dir;
  Workspace() : dir(fs::temp_directory_path() / ("wallnorm_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir);
    for (const auto& [m, n] : {std::pair{1, 1}, {2, 2}, {2, 3}}) {
      const auto name = "G" + std::to_string(m) + std::to_string(n) + ".wall";
      REQUIRE(wallnorm_cli({"fixture", std::to_string(m), std::to_string(n), "--out", (dir / name).string()}).code == 0);
    }
  }
  ~Workspace() { fs::remove_all(dir); }
  std::string operator()(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("documented examples") {
  Workspace ws;
  const auto info = wallnorm_cli({"info", ws("G11.wall")});
  CHECK(info.code == 0);
  CHECK(has(info.out, "V=1 E=2 F=1 genus=1 curves=2 parity=(1,1)\n"));
  CHECK(has(info.out, "# basis: computed"));

  const auto norm = wallnorm_cli({"norm", ws("G22.wall"), "4", "1"});
  CHECK(norm.code == 0);
  CHECK(has(norm.out, "x = 10\n"));

  const auto b = wallnorm_cli({"birkhoff", ws("G11.wall")});
  CHECK(b.code == 0);
  CHECK(has(b.out, "sections: 0\n"));
}

TEST_CASE("subcommand outputs") {
  Workspace ws;
  CHECK(has(wallnorm_cli({"norm", ws("G22.wall"), "-3", "2"}).out, "x = 10\n"));
  CHECK(has(wallnorm_cli({"ball", ws("G22.wall"), "--area"}).out, "area = 16\n"));
  CHECK(has(wallnorm_cli({"ball", ws("G23.wall"), "--area"}).out, "area = 24\n"));
  const auto ball = wallnorm_cli({"ball", ws("G22.wall")}).out;
  CHECK(has(ball, "\n2 2\n-2 2\n-2 -2\n2 -2\nfacets: 4\n"));
  const auto all = wallnorm_cli({"ball", ws("G22.wall"), "--all-classes"}).out;
  CHECK(std::count(all.begin(), all.end(), '\n') == 2 + 9);
  CHECK(has(wallnorm_cli({"classes", ws("G11.wall")}).out, "-1 -1\n-1 1\n1 -1\n1 1\n"));
  CHECK(has(wallnorm_cli({"coorientations", ws("G22.wall")}).out, "count: 18\n"));
  CHECK(has(wallnorm_cli({"coorientations", ws("G22.wall"), "--classes"}).out, "0 0 count=6\n"));

  const auto oracle = wallnorm_cli({"oracle", ws("G22.wall"), "4", "1", "--certificate"});
  CHECK(oracle.code == 0);
  CHECK(has(oracle.out, "x = 10\n"));
  CHECK(has(oracle.out, "cycle 0: length="));
  const auto verify = wallnorm_cli({"verify", ws("G23.wall"), "--box", "2"});
  CHECK(has(verify.out, "checked: 25\n"));
  CHECK(has(verify.out, "discrepancies: 0\n"));

  const auto realized = wallnorm_cli({"realize", ws("G22.wall"), "0", "0", "--out", ws("zero.coor")});
  CHECK(realized.code == 0);
  CHECK(has(realized.out, "# method: eikonal\n"));
  const auto map = load_wall_system(ws("G22.wall"));
  const auto coor = parse_coorientation(slurp(ws("zero.coor")), map.edge_count());
  CHECK(class_of(map, coor, homology_basis(map)) == Coords{0, 0});
  CHECK(has(wallnorm_cli({"realize", ws("G22.wall"), "2", "0", "--method", "lookup"}).out, "# method: lookup\n"));

  CHECK(wallnorm_cli({"coorientations", ws("G22.wall"), "--list", ws("items")}).code == 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(ws("items"))) {
    ++files;
    CHECK(is_eulerian(map, parse_coorientation(slurp(entry.path()), map.edge_count())));
  }
  CHECK(files == 18);
}

TEST_CASE("user basis and report headers") {
  Workspace ws;
  {
    std::ofstream f(ws("grid.basis"));
    f << serialize_basis_walks(grid_basis_walks(2, 2));
  }
  const auto r = wallnorm_cli({"norm", ws("G22.wall"), "4", "1", "--basis", ws("grid.basis")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "# basis: user "));
  CHECK(has(r.out, "x = 10\n"));
  {
    std::ofstream f(ws("bad.basis"));
    f << "cycle 0: 1+ 3+\ncycle 1: 1+ 3+\n";
  }
  const auto bad = wallnorm_cli({"norm", ws("G22.wall"), "4", "1", "--basis", ws("bad.basis")});
  CHECK(bad.code == 1);
  CHECK(has(bad.err, "NotABasis"));
}

TEST_CASE("birkhoff report and svg are deterministic") {
  Workspace ws;
  const auto first = wallnorm_cli({"birkhoff", ws("G22.wall"), "--json-report", ws("report.json")});
  const auto second = wallnorm_cli({"birkhoff", ws("G22.wall")});
  CHECK(first.out == second.out);
  CHECK(has(first.out, "point=(0,0) status=interior chi=-8 boundary=8 genus=1\n"));
  CHECK(has(first.out, "sections: 1\n"));
  const auto json = nlohmann::json::parse(slurp(ws("report.json")));
  CHECK(json["sections"] == 1);
  CHECK(json["counts"]["boundary"] == 8);
  CHECK(json["points"].size() == 9);
  CHECK(json["invariants"]["chi"] == -8);

  CHECK(wallnorm_cli({"svg", ws("G22.wall"), "--out", ws("a.svg")}).code == 0);
  CHECK(wallnorm_cli({"svg", ws("G22.wall"), "--out", ws("b.svg")}).code == 0);
  CHECK(slurp(ws("a.svg")) == slurp(ws("b.svg")));
  CHECK(has(slurp(ws("a.svg")), "<svg"));
}

TEST_CASE("exit codes and error names") {
  Workspace ws;
  CHECK(wallnorm_cli({}).code == 2);
  CHECK(wallnorm_cli({"frobnicate"}).code == 2);
  CHECK(wallnorm_cli({"norm", ws("G22.wall")}).code == 2);
  CHECK(wallnorm_cli({"norm", ws("G22.wall"), "1"}).code == 2);
  CHECK(wallnorm_cli({"realize", ws("G22.wall"), "0", "0", "--method", "magic"}).code == 2);
  CHECK(wallnorm_cli({"ball", ws("G22.wall"), "--area", "--extreme"}).code == 2);
  CHECK(wallnorm_cli({"fixture", "0", "2"}).code == 2);

  const auto missing = wallnorm_cli({"info", ws("nope.wall")});
  CHECK(missing.code == 1);
  CHECK(has(missing.err, "MalformedInput"));
  CHECK(missing.out.empty());

  const auto parity = wallnorm_cli({"realize", ws("G11.wall"), "0", "0"});
  CHECK(parity.code == 1);
  CHECK(has(parity.err, "NotRealizable: parity"));
  const auto outside = wallnorm_cli({"realize", ws("G22.wall"), "4", "0"});
  CHECK(has(outside.err, "NotRealizable: outside-ball"));

  {
    std::ofstream f(ws("broken.wall"));
    f << "vertices 1\nvertex 0: 0 1 2\nedge 0: 0 2\nedge 1: 1 3\n";
  }
  CHECK(has(wallnorm_cli({"info", ws("broken.wall")}).err, "BadDegree"));

  ::setenv("WALLNORM_MAX_ENUM", "3", 1);
  const auto capped = wallnorm_cli({"coorientations", ws("G23.wall")});
  CHECK(capped.code == 1);
  CHECK(has(capped.err, "ResourceLimit"));
  ::setenv("WALLNORM_MAX_ENUM", "lots", 1);
  CHECK(wallnorm_cli({"coorientations", ws("G23.wall")}).code == 2);
  ::unsetenv("WALLNORM_MAX_ENUM");
  CHECK(wallnorm_cli({"coorientations", ws("G23.wall")}).code == 0);
}

TEST_CASE("svg needs genus one") {
  Workspace ws;
  std::mt19937_64 rng(8);
  for (;;) {
    auto map = random_wall_system(rng, 3);
    if (map.genus() != 2) continue;
    std::ofstream(ws("g2.wall")) << map.serialize();
    break;
  }
  const auto r = wallnorm_cli({"svg", ws("g2.wall")});
  CHECK(r.code == 1);
  CHECK(has(r.err, "WrongGenus"));
  CHECK(has(wallnorm_cli({"ball", ws("g2.wall")}).out, "facets: "));
  CHECK(wallnorm_cli({"ball", ws("g2.wall"), "--area"}).code == 1);
}

TEST_CASE("structured output and fixture on stdout") {
  Workspace ws;
  const auto norm = wallnorm_cli({"--format", "structured", "norm", ws("G22.wall"), "4", "1"});
  CHECK(norm.code == 0);
  CHECK(has(norm.out, "basis=computed\n"));
  CHECK(has(norm.out, "x=10\n"));
  // Every line is key=value with a plain key.
  std::istringstream lines(wallnorm_cli({"--format", "structured", "birkhoff", ws("G22.wall")}).out);
  int count = 0;
  for (std::string line; std::getline(lines, line); ++count) {
    const auto eq = line.find('=');
    REQUIRE(eq != std::string::npos);
    CHECK(line.substr(0, eq).find_first_not_of("abcdefghijklmnopqrstuvwxyz_.0123456789VEF") == std::string::npos);
  }
  CHECK(count > 9);
  CHECK(has(wallnorm_cli({"--format", "structured", "birkhoff", ws("G22.wall")}).out, "sections=1\n"));
  CHECK(wallnorm_cli({"--format", "xml", "info", ws("G11.wall")}).code == 2);

  const auto grid = wallnorm_cli({"fixture", "2", "2"});
  CHECK(grid.code == 0);
  CHECK(parse_wall_system(grid.out).serialize() == slurp(ws("G22.wall")));
}
