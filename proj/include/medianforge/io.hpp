#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "medianforge/actions.hpp"
#include "medianforge/cubes.hpp"
#include "medianforge/cubulation.hpp"
#include "medianforge/graph.hpp"
#include "medianforge/hyperplanes.hpp"
#include "medianforge/median.hpp"
#include "medianforge/plcircle.hpp"

namespace medianforge::io {

using Json = nlohmann::json;

// Parsers throw InputError on schema violations.

/// {"vertices": [...], "edges": [["u","v"], ...]}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// {"points": [...], "walls": [[["p1"], ["p2","p3"]], ...]}
Json to_json(const Wallspace& ws);
Wallspace wallspace_from_json(const Json& j);

/// {"breakpoints": ["0","1/3"], "values": ["1/4","2/3"]}; values are lift
/// values F(b) with F(x + 1) = F(x) + 1.
Json to_json(const PLCircleHomeo& g);
PLCircleHomeo homeo_from_json(const Json& j);

/// {"generators": [{"v0": "v3", ...}, ...]}
Json to_json(const Graph& g, const ActionGenerators& gens);
ActionGenerators action_from_json(const Graph& g, const Json& j);

/// [{"id": ["u","v"], "edges": [...], "halfspaces": [[...],[...]]}, ...]
Json to_json(const Hyperplanes& h);

/// {"f_vector": [...], "cells": {"2": [[...]], ...}}
Json to_json(const CubeComplex& c);

Json to_json(const Graph& g, const MedianReport& r);
Json to_json(const Graph& g, const LocalReport& r);
Json to_json(const Hyperplanes& h, const EmbeddingTable& t);
Json to_json(const GrowthReport& r);

/// Deterministic serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

Json read_json_file(const std::string& path);

/// DOT text of the 1-skeleton in lexicographic vertex order; with hyperplanes,
/// edges of one class share a color.
std::string export_dot(const Graph& g, const Hyperplanes* coloring = nullptr);

}  // namespace medianforge::io
