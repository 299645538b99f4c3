#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "medianforge/cli.hpp"
#include "medianforge/io.hpp"
#include "support.hpp"

using namespace medianforge;
using namespace testkit;

namespace {

const std::string kFixtures = MEDIANFORGE_FIXTURES;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a.rfind("@", 0) == 0) a = kFixtures + "/" + a.substr(1);
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

io::Json parsed(const Result& r) { return io::Json::parse(r.out); }

}  // namespace

TEST_CASE("check exit codes and reports") {
  const auto q3 = run_cli({"check", "@q3.json"});
  CHECK(q3.code == cli::kMedian);
  CHECK(parsed(q3)["median"] == true);

  const auto k23 = run_cli({"check", "@k23.json"});
  CHECK(k23.code == cli::kNotMedian);
  const auto j = parsed(k23);
  CHECK(j["median"] == false);
  CHECK(j["oracle"]["witness"]["triple"] == io::Json::array({"b0", "b1", "b2"}));
  CHECK(j["oracle"]["witness"]["medians"] == io::Json::array({"a0", "a1"}));

  CHECK(run_cli({"check", "@c6.json"}).code == cli::kNotMedian);
  CHECK(run_cli({"check", "--no-oracle", "@c6.json"}).code == cli::kNotMedian);
  CHECK(run_cli({"check", "--no-oracle", "@q3.json"}).code == cli::kMedian);
  CHECK(run_cli({"check", "--jobs", "3", "@q3_minus_vertex.json"}).code == cli::kNotMedian);
  const auto off = parsed(run_cli({"check", "--no-oracle", "@q3.json"}));
  CHECK(off["oracle"].is_null());
}

TEST_CASE("usage and data errors") {
  CHECK(run_cli({}).code == cli::kUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kUsage);
  CHECK(run_cli({"check"}).code == cli::kUsage);
  CHECK(run_cli({"check", "--oracle", "--no-oracle", "@q3.json"}).code == cli::kUsage);
  CHECK(run_cli({"--format", "yaml", "check", "@q3.json"}).code == cli::kUsage);
  CHECK(run_cli({"gen", "random_tree", "5"}).code == cli::kUsage);
  CHECK(run_cli({"--help"}).code == 0);

  CHECK(run_cli({"check", "@missing.json"}).code == cli::kDataError);
  CHECK(run_cli({"check", "@malformed.json"}).code == cli::kDataError);
  CHECK(run_cli({"check", "@disconnected.json"}).code == cli::kDataError);
  CHECK(run_cli({"check", "@duplicate_edge.json"}).code == cli::kDataError);
  CHECK(run_cli({"dualize", "@bad_wall.json"}).code == cli::kDataError);
  CHECK(run_cli({"pl-growth", "@bad_homeo.json"}).code == cli::kDataError);
  CHECK(run_cli({"fixed-cube", "@p4.json", "@bad_action.json"}).code == cli::kDataError);
  CHECK(run_cli({"hyperplanes", "@c6.json"}).code == cli::kDataError);
  CHECK(run_cli({"embed", "--basepoint", "zz", "@q3.json"}).code == cli::kDataError);
  CHECK(run_cli({"gen", "moebius", "3"}).code == cli::kDataError);
}

TEST_CASE("resource ceiling") {
  CHECK(run_cli({"cubes", "--ceiling", "10", "@q3.json"}).code == cli::kResource);
  setenv("MEDIANFORGE_CELL_CEILING", "10", 1);
  CHECK(run_cli({"cubes", "@q3.json"}).code == cli::kResource);
  setenv("MEDIANFORGE_CELL_CEILING", "27", 1);
  CHECK(run_cli({"cubes", "@q3.json"}).code == 0);
  setenv("MEDIANFORGE_CELL_CEILING", "lots", 1);
  CHECK(run_cli({"cubes", "@q3.json"}).code == cli::kUsage);
  unsetenv("MEDIANFORGE_CELL_CEILING");
}

TEST_CASE("module verbs") {
  const auto h = parsed(run_cli({"hyperplanes", "@grid3x3.json"}));
  CHECK(h.size() == 4);
  CHECK(h[0]["id"] == io::Json::array({"0_0", "0_1"}));

  const auto c = parsed(run_cli({"cubes", "@q3.json"}));
  CHECK(c["f_vector"] == io::Json::array({8, 12, 6, 1}));
  CHECK(c["cells"]["3"][0].size() == 8);
  CHECK(c["euler_characteristic"] == 1);

  const auto e = parsed(run_cli({"embed", "--basepoint", "v1", "@p4.json"}));
  CHECK(e["coordinates"]["v1"] == "000");
  CHECK(e["coordinates"]["v4"] == "111");

  const auto d = run_cli({"dualize", "@single_wall.json"});
  CHECK(d.code == 0);
  const auto dj = parsed(d);
  CHECK(dj["vertices"].size() == 2);
  CHECK(dj["edges"].size() == 1);
  CHECK(dj["wall_distance"]["violations"].empty());
  CHECK(parsed(run_cli({"dualize", "@transverse_walls.json"}))["edges"].size() == 4);

  const auto f = parsed(run_cli({"fixed-cube", "--flippable", "@p4.json", "@p4_reflection.json"}));
  CHECK(f["cube"] == io::Json::array({"v2", "v3"}));
  CHECK(f["flippable"].size() == 3);
  CHECK(parsed(run_cli({"fixed-cube", "@square.json", "@square_rotation.json"}))["dimension"] == 2);
  CHECK(parsed(run_cli({"fixed-cube", "@square.json", "@trivial_action.json"}))["cube"] == io::Json::array({"a"}));

  const auto g = parsed(run_cli({"pl-growth", "--n-max", "16", "@double_bump.json"}));
  CHECK(g["profile"]["growth"] == "linear");
  CHECK(g["profile"]["k"] == 4);
  CHECK(g["orbit_distance"] == 8);
  CHECK(parsed(run_cli({"pl-growth", "@rotation.json"}))["profile"]["growth"] == "bounded");

  const auto t = parsed(run_cli({"gen", "grid", "2", "3"}));
  CHECK(t["vertices"].size() == 6);
  CHECK(t["edges"].size() == 7);
  CHECK(run_cli({"gen", "random_tree", "9", "--seed", "4"}).out == run_cli({"gen", "random_tree", "9", "--seed", "4"}).out);
}

TEST_CASE("text rendering and output files") {
  const auto text = run_cli({"--format", "text", "check", "@q3.json"});
  CHECK(text.code == 0);
  CHECK(text.out.find("median: true") != std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "medianforge_cli_test.json";
  CHECK(run_cli({"--output", path.string(), "cubes", "@grid3x3.json"}).code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == run_cli({"cubes", "@grid3x3.json"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("DOT export") {
  const Graph edge = path_graph({"a", "b"});
  CHECK(io::export_dot(edge) == "graph G {\n  \"a\";\n  \"b\";\n  \"a\" -- \"b\";\n}\n");
  const Graph sq = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  const Hyperplanes h(sq);
  const std::string dot = io::export_dot(sq, &h);
  CHECK(dot == io::export_dot(sq, &h));
  std::map<std::string, int> colors;
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);) {
    const auto at = line.find("color=");
    if (at != std::string::npos) ++colors[line.substr(at, 16)];
  }
  CHECK(colors.size() == 2);
  for (const auto& [color, n] : colors) CHECK(n == 2);
  CHECK(run_cli({"hyperplanes", "--dot", "@grid3x3.json"}).out.find("hyperplane=3") != std::string::npos);
}

TEST_CASE("JSON round trips") {
  for (const auto& g : {gen("grid", {3, 2}), gen("random_tree", {20}, 1), cube_minus_vertex()}) {
    CHECK(io::graph_from_json(io::Json::parse(io::dump(io::to_json(g)))) == g);
  }
  for (const auto& ws : random_wallspaces(10, 5)) {
    CHECK(io::wallspace_from_json(io::Json::parse(io::dump(io::to_json(ws)))) == ws);
  }
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    const PLCircleHomeo g = homeo(random_pl(rng));
    CHECK(io::homeo_from_json(io::Json::parse(io::dump(io::to_json(g)))) == g);
  }
  const Graph p4 = path_graph({"v1", "v2", "v3", "v4"});
  const auto gens = to_generators(p4, {{{"v1", "v4"}, {"v2", "v3"}, {"v3", "v2"}, {"v4", "v1"}}});
  CHECK(io::action_from_json(p4, io::to_json(p4, gens)) == gens);
}
