#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "loopdeg/graphs.hpp"
#include "loopdeg/realize.hpp"
#include "loopdeg/sequences.hpp"

namespace loopdeg::io {

using nlohmann::json;

/// Accepts {"degrees": [...]} or whitespace/comma separated integers.
/// Blank text is the empty sequence. Throws ParseError.
std::vector<Degree> parse_degrees(std::string_view text);

// {"n": int, "edges": [[i,j],...], "loops": [i,...]}
json to_json(const GraphWithLoops& g);
GraphWithLoops graph_from_json(const json& j);

// {"n_left": int, "n_right": int, "edges": [[l,r],...]}
json to_json(const BipartiteGraph& b);
BipartiteGraph bipartite_from_json(const json& j);

// {"n": int, "edges": [[i,j,multiplicity],...]}
json to_json(const LoopMultigraph& m);
LoopMultigraph multigraph_from_json(const json& j);

json to_json(const DegreeSequence& d);
json to_json(const CheckReport& r);
json to_json(const PatchCase& p);
json to_json(const RealizationTrace& t);

/// Parses text as JSON; ParseError on malformed input, InvalidGraph on
/// schema violations.
json parse_json(std::string_view text);

std::string to_dot(const GraphWithLoops& g);
std::string to_dot(const BipartiteGraph& b);
std::string to_dot(const LoopMultigraph& m);

/// Human-readable per-k table.
std::string format_report(const CheckReport& r, std::string_view bound_label);

std::string format_sequence(const DegreeSequence& d);

}  // namespace loopdeg::io
