#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "branchwise/cover.hpp"
#include "branchwise/graph.hpp"
#include "branchwise/mod_decomp.hpp"
#include "branchwise/tree_builder.hpp"

namespace branchwise {

enum class GraphFormat { Auto, EdgeList, Dimacs };

struct ParsedGraph {
  WeightedGraph wg;
  bool weighted = false;  // at least one cost line was present
};

// Edge list: "n m", m lines "u v" (0-based), optional "w v c" cost lines.
// DIMACS: "p edge n m", "e u v" (1-based), optional "n v c" cost lines.
// '#' (edge list) and 'c' (DIMACS) start comments. Unlisted costs are 1.
// Throws Errc::ParseError with the line number, or Errc::OutOfRange.
ParsedGraph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

GraphFormat detect_format(std::string_view text);

std::string to_edge_list(const WeightedGraph& wg, bool with_costs);

using Json = nlohmann::ordered_json;

Json tree_to_json(const SpanningTreeResult& t);
Json cover_to_json(const Cover& cover);
Json parse_tree_to_json(const ParseNode& node);

// Inverses used by the verify command. Throw Errc::ParseError.
SpanningTreeResult tree_from_json(const Json& j);
Cover cover_from_json(const Json& j);

}  // namespace branchwise
