#pragma once

#include <string>

#include <json.hpp>

#include "dejonq/dual_graph.hpp"
#include "dejonq/twists.hpp"

namespace dejonq {

using Json = nlohmann::ordered_json;

// Dual-graph document:
// {
//   "vertices":   [{"id": 0, "genus": 3}, ...],
//   "edges":      [{"id": 0, "u": 0, "v": 1}, ...],
//   "markings":   [{"vertex": 0, "a": 2, "delta": 1}, ...],   (optional)
//   "multidegree": {"0": 5, "1": 1}                            (optional)
// }
DualGraph graph_from_json(const Json& doc);
DualGraph graph_from_string(const std::string& text);
DualGraph graph_from_file(const std::string& path);
Json graph_to_json(const DualGraph& graph);

// {"status": "feasible"|"infeasible", "particular": [...], "basis": [...],
//  "certificate": {...}|null} plus the variable table.
Json solution_to_json(const TwistSolution& solution);

Json twist_to_json(const Twist& twist);

}  // namespace dejonq
