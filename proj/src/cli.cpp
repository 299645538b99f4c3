#include "medianforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "medianforge/actions.hpp"
#include "medianforge/cubes.hpp"
#include "medianforge/cubulation.hpp"
#include "medianforge/errors.hpp"
#include "medianforge/generators.hpp"
#include "medianforge/hyperplanes.hpp"
#include "medianforge/io.hpp"
#include "medianforge/median.hpp"
#include "medianforge/plcircle.hpp"

namespace medianforge::cli {

namespace {

using io::Json;

constexpr std::size_t kOracleDefaultLimit = 1000;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::uint64_t cell_ceiling(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MEDIANFORGE_CELL_CEILING")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("MEDIANFORGE_CELL_CEILING is not a number: '") + env + "'");
  }
  return kDefaultCellCeiling;
}

struct Output {
  std::string body;
  int code = kMedian;
};

std::string text_of(const Json& j, const std::string& prefix = "") {
  std::ostringstream out;
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        out << prefix << key << ":\n" << text_of(value, prefix + "  ");
      } else {
        out << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else {
    out << prefix << j.dump() << "\n";
  }
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Median graph toolkit: medianness checks, hyperplanes, cube completions, wallspace duals, "
               "invariant cubes and PL circle growth."};
  app.require_subcommand(1);
  std::string output_path;
  std::string format = "json";
  app.add_option("-o,--output", output_path, "Write the report to a file instead of stdout");
  app.add_option("--format", format, "Report rendering")->check(CLI::IsMember({"json", "text"}));

  std::string graph_path;
  std::string second_path;
  bool oracle_on = false;
  bool oracle_off = false;
  unsigned jobs = 1;
  bool dot = false;
  std::optional<std::uint64_t> ceiling;
  std::string basepoint;
  std::size_t n_max = 64;
  bool flippable = false;
  std::string family;
  std::vector<int> params;
  std::optional<std::uint64_t> seed;

  auto* check = app.add_subcommand("check", "Medianness oracle plus the radius-3 local criterion");
  check->add_option("graph", graph_path, "Graph JSON")->required();
  auto* on = check->add_flag("--oracle", oracle_on, "Always run the O(n^3) oracle");
  check->add_flag("--no-oracle", oracle_off, "Skip the oracle")->excludes(on);
  check->add_option("--jobs", jobs, "Worker threads for the oracle")->check(CLI::Range(1u, 256u));

  auto* hyper = app.add_subcommand("hyperplanes", "Hyperplanes and halfspaces");
  hyper->add_option("graph", graph_path, "Graph JSON")->required();
  hyper->add_flag("--dot", dot, "Emit DOT with hyperplane-colored edges");

  auto* cubes = app.add_subcommand("cubes", "Cube completion");
  cubes->add_option("graph", graph_path, "Graph JSON")->required();
  cubes->add_option("--ceiling", ceiling, "Cell-count guard (default MEDIANFORGE_CELL_CEILING or 1000000)");
  cubes->add_flag("--dot", dot, "Emit DOT of the 1-skeleton with hyperplane colors");

  auto* embed = app.add_subcommand("embed", "Canonical hypercube embedding");
  embed->add_option("graph", graph_path, "Graph JSON")->required();
  embed->add_option("--basepoint", basepoint, "Basepoint vertex (default: least vertex)");

  auto* dualize_cmd = app.add_subcommand("dualize", "Dual median graph of a wallspace");
  dualize_cmd->add_option("wallspace", graph_path, "Wallspace JSON")->required();

  auto* fixed = app.add_subcommand("fixed-cube", "Cube stabilized by a finite action");
  fixed->add_option("graph", graph_path, "Graph JSON")->required();
  fixed->add_option("action", second_path, "Action JSON")->required();
  fixed->add_flag("--flippable", flippable, "Also report which hyperplanes are flippable");

  auto* growth = app.add_subcommand("pl-growth", "Singular-set growth of a PL circle homeomorphism");
  growth->add_option("homeo", graph_path, "Homeomorphism JSON")->required();
  growth->add_option("--n-max", n_max, "Largest power")->check(CLI::Range(std::size_t{8}, std::size_t{100000}));

  auto* gen = app.add_subcommand("gen", "Write a corpus graph");
  gen->add_option("family", family, "hypercube, grid, random_tree, cycle, complete_bipartite, star")->required();
  gen->add_option("params", params, "Integer parameters")->required();
  gen->add_option("--seed", seed, "Seed for randomized families");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  Output result;
  try {
    Json body;
    std::optional<std::string> raw;
    if (check->parsed()) {
      const Graph g = io::graph_from_json(io::read_json_file(graph_path));
      const bool use_oracle = oracle_on || (!oracle_off && g.order() < kOracleDefaultLimit);
      const LocalReport local = verylocal_check(g);
      body["vertices"] = g.order();
      body["verylocal"] = io::to_json(g, local);
      const bool local_fails = !local.condition2 || !local.condition3 || local.condition1.verdict == TriState::No;
      if (use_oracle) {
        const MedianReport report = medianness_oracle(g, jobs);
        body["oracle"] = io::to_json(g, report);
        body["median"] = report.verdict;
        result.code = report.verdict ? kMedian : kNotMedian;
        if (report.verdict && local_fails) throw InternalError("local criterion rejects a median graph");
        if (!report.verdict && local.all_yes()) throw InternalError("local criterion accepts a non-median graph");
      } else {
        body["oracle"] = nullptr;
        if (local.all_yes()) {
          body["median"] = true;
          result.code = kMedian;
        } else if (local_fails) {
          body["median"] = false;
          result.code = kNotMedian;
        } else {
          body["median"] = nullptr;
          result.code = kUndecided;
        }
      }
    } else if (hyper->parsed()) {
      const Hyperplanes h(io::graph_from_json(io::read_json_file(graph_path)));
      if (dot) {
        raw = io::export_dot(h.graph(), &h);
      } else {
        body = io::to_json(h);
      }
    } else if (cubes->parsed()) {
      const Graph g = io::graph_from_json(io::read_json_file(graph_path));
      const CubeComplex c = enumerate_cubes(g, cell_ceiling(ceiling));
      if (dot) {
        std::optional<Hyperplanes> h;
        try {
          h.emplace(g);
        } catch (const HalfspaceError&) {
        }
        raw = io::export_dot(g, h ? &*h : nullptr);
      } else {
        body = io::to_json(c);
        body["euler_characteristic"] = c.euler_characteristic();
        body["dimension"] = c.dimension();
      }
    } else if (embed->parsed()) {
      const Hyperplanes h(io::graph_from_json(io::read_json_file(graph_path)));
      const Vertex base = basepoint.empty() ? 0 : h.graph().index(basepoint);
      body = io::to_json(h, canonical_embedding(h, base));
    } else if (dualize_cmd->parsed()) {
      const Wallspace ws = io::wallspace_from_json(io::read_json_file(graph_path));
      const DualGraph dual = dualize(ws);
      body = io::to_json(dual.graph);
      Json map = Json::object();
      for (std::size_t p = 0; p < ws.points().size(); ++p) {
        map[ws.points()[p]] = dual.graph.name(dual.point_vertex[p]);
      }
      body["point_map"] = std::move(map);
      const auto check_report = wall_distance_check(ws, dual);
      Json violations = Json::array();
      for (const auto& v : check_report.violations) {
        violations.push_back({{"points", {ws.points()[v.p], ws.points()[v.q]}},
                              {"graph_distance", v.graph_distance},
                              {"separating_walls", v.separating_walls}});
      }
      body["wall_distance"] = {{"pairs_checked", check_report.pairs_checked}, {"violations", std::move(violations)}};
      if (!check_report.violations.empty()) throw InternalError("dual graph violates the wall distance law");
    } else if (fixed->parsed()) {
      const Hyperplanes h(io::graph_from_json(io::read_json_file(graph_path)));
      const Graph& g = h.graph();
      const ActionGenerators gens = io::action_from_json(g, io::read_json_file(second_path));
      std::optional<InvariantCubeTrace> traced;
      const Cube q = invariant_cube(h, gens, &traced);
      const InvariantCubeTrace& trace = *traced;
      body["cube"] = member_names(g, g.set_of(q.vertices));
      body["dimension"] = q.dimension;
      body["orbit"] = member_names(g, trace.orbit);
      body["hull"] = member_names(g, trace.hull);
      Json planes = Json::array();
      const Hyperplanes local(trace.balance.subgraph);
      for (const auto& entry : trace.balance.entries) {
        const Graph& sub = trace.balance.subgraph;
        const Edge& id = sub.edges()[local[entry.plane].id];
        Json item{{"id", {sub.name(id.u), sub.name(id.v)}}, {"balanced", entry.balanced}};
        if (entry.larger) item["larger"] = member_names(g, *entry.larger);
        planes.push_back(std::move(item));
      }
      body["hull_hyperplanes"] = std::move(planes);
      if (flippable) {
        Json flips = Json::array();
        for (std::size_t i = 0; i < h.count(); ++i) {
          if (is_flippable(h, i, gens)) {
            const Edge& id = g.edges()[h[i].id];
            flips.push_back({g.name(id.u), g.name(id.v)});
          }
        }
        body["flippable"] = std::move(flips);
      }
    } else if (growth->parsed()) {
      const PLCircleHomeo g = io::homeo_from_json(io::read_json_file(graph_path));
      Json singular = Json::array();
      for (const auto& x : sing(g)) singular.push_back(to_string(x));
      body["homeomorphism"] = io::to_json(g);
      body["sing"] = std::move(singular);
      body["orbit_distance"] = orbit_distance(g);
      body["profile"] = io::to_json(growth_profile(g, n_max));
    } else if (gen->parsed()) {
      if (family == "random_tree" && !seed) throw UsageError("gen random_tree requires --seed");
      body = io::to_json(generate(family, params, seed));
    }

    if (raw) {
      result.body = *raw;
    } else {
      result.body = format == "json" ? io::dump(body) : text_of(body);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "data error: " << e.what() << "\n";
    return kDataError;
  } catch (const HalfspaceError& e) {
    err << "data error (input is not median): " << e.what() << "\n";
    return kDataError;
  } catch (const ResourceError& e) {
    err << "resource ceiling: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }

  if (output_path.empty()) {
    out << result.body;
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
      err << "data error: cannot write '" << output_path << "'\n";
      return kDataError;
    }
    file << result.body;
  }
  return result.code;
}

}  // namespace medianforge::cli
