#pragma once

#include <vector>

#include "branchwise/cover.hpp"
#include "branchwise/cover_dp.hpp"
#include "branchwise/graph.hpp"
#include "branchwise/ilp.hpp"
#include "branchwise/tree_builder.hpp"

namespace branchwise {

struct MbvAnswer {
  int b = 0;
  SpanningTreeResult tree;
  std::vector<int> branch_modules;  // indices into the root's children
};

struct CbvAnswer {
  std::int64_t cost = 0;
  SpanningTreeResult tree;
  std::vector<int> branch_classes;  // indices into the type partition
};

// Spanning tree with the fewest branch vertices. Throws Errc::Disconnected.
MbvAnswer solve_mbv(const Graph& g, const SolveOptions& opts = {});

// Fewest pieces in a cover by one spider plus paths, with a witness.
CoverResult solve_psc(const Graph& g, const SolveOptions& opts = {});

// Fewest paths in a vertex-disjoint path partition, with a witness.
CoverResult solve_pp(const Graph& g, const SolveOptions& opts = {});

// Spanning tree of least total branch-vertex cost. Throws Errc::Disconnected.
CbvAnswer solve_cbv(const WeightedGraph& wg, const SolveOptions& opts = {});

}  // namespace branchwise
