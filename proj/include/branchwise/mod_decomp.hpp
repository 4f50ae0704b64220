#pragma once

#include <span>
#include <vector>

#include "branchwise/graph.hpp"

namespace branchwise {

// Kind of a parse-tree node. Internal nodes are named after the operation
// their quotient encodes: Parallel (edgeless quotient, disjoint union),
// Series (complete quotient, complete join) and Prime (substitution into a
// prime quotient).
enum class NodeKind { Leaf, Parallel, Series, Prime };

const char* node_kind_name(NodeKind kind);

// Modular-decomposition parse tree. A Leaf carries one original vertex; an
// internal node carries a quotient whose vertex i stands for children[i].
// Children i and j are fully joined in the graph iff {i, j} is a quotient edge.
struct ParseNode {
  NodeKind kind = NodeKind::Leaf;
  VertexId vertex = -1;
  Graph quotient;
  std::vector<ParseNode> children;
  std::vector<VertexId> vertices;  // sorted original ids covered by this node

  static ParseNode leaf(VertexId v);
  // Classifies the quotient: complete -> Series, edgeless -> Parallel, else
  // Prime. Vertices are gathered from the children.
  static ParseNode internal(Graph quotient, std::vector<ParseNode> children);

  bool is_leaf() const { return kind == NodeKind::Leaf; }
  int size() const { return static_cast<int>(vertices.size()); }
};

// Parse tree with canonical quotients; children ordered by minimum vertex id.
// Requires g.vertex_count() >= 1.
ParseNode decompose(const Graph& g);

// Largest child count over Prime nodes; 0 when the tree has none.
int width(const ParseNode& t);

// Rebuilds the graph the tree describes on ids 0..max leaf id. Throws
// Errc::MalformedTree when a structural invariant is violated.
Graph evaluate(const ParseNode& t);

// True iff every vertex outside `m` sees all of `m` or none of it.
bool is_module(const Graph& g, std::span<const VertexId> m);

// Partition of V(g) into maximal strong modules: connected components when g
// is disconnected, co-components when its complement is, and otherwise the
// maximal proper modules. Classes are sorted and ordered by minimum id.
std::vector<std::vector<VertexId>> maximal_modules(const Graph& g);

}  // namespace branchwise
