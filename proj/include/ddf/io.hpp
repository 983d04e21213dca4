#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ddf/distinguish.hpp"
#include "ddf/family.hpp"
#include "ddf/graph.hpp"

namespace ddf {

// Edge-list text format:
//   n 6
//   1 2
//   2 3
// one "u v" line per edge with u < v, ascending, newline-terminated.
std::string to_edge_list(const LabeledGraph& g);
LabeledGraph parse_edge_list(std::istream& in);
LabeledGraph parse_edge_list(const std::string& text);

// JSON-lines graph record: {"edges":[[u,v],...],"n":n} with edges sorted.
nlohmann::json graph_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

// Family serialization: header record then one graph record per member.
std::string family_jsonl(const Family& fam);
Family family_from_jsonl(std::istream& in);

// Single JSON object; timings only when include_timings (CLI data output
// keeps timings in a separate metadata record so runs stay byte-identical).
nlohmann::json solve_report_json(const SolveReport& report, bool include_timings);

nlohmann::json composition_report_json(const CompositionClassReport& report,
                                       bool include_timings);

// Channel CSV: header row of output symbols (first cell ignored), then one
// row per input symbol; entries are exact rationals ("1/3") or decimals.
Channel parse_channel_csv(std::istream& in);
Channel parse_channel_csv(const std::string& text);

}  // namespace ddf
