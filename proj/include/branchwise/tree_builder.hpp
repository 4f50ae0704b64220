#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "branchwise/cover.hpp"
#include "branchwise/graph.hpp"
#include "branchwise/ilp.hpp"

namespace branchwise {

// Spanning tree as a parent map with one root (parent -1).
struct SpanningTreeResult {
  std::vector<VertexId> parent;
  VertexId root = -1;
  std::vector<VertexId> branch;  // vertices of tree degree >= 3, ascending
  std::optional<std::int64_t> cost;
};

std::vector<int> tree_degrees(const std::vector<VertexId>& parent);
std::vector<VertexId> branch_vertices(const std::vector<VertexId>& parent);

// Builder input: module covers in a dense id space [0, vertex_count). Module
// i's cover must have exactly inflow_i pieces; for a branch module piece 0 is
// the spider whose center becomes the branch vertex. Exploration starts at
// covers[root][0].first(); with an empty branch set a reattachment round may
// pass the root role to another first endpoint of the root module.
struct TreeInput {
  int vertex_count = 0;
  const IlpInstance* instance = nullptr;
  std::vector<std::int64_t> x;
  std::vector<Cover> covers;
};

struct ExplorationState {
  std::vector<VertexId> parent;
  std::vector<char> explored;
  std::vector<char> pending;  // roots waiting to be reattached
  std::vector<VertexId> branch;
  std::vector<std::int64_t> alpha;
  std::vector<std::int64_t> beta;
  std::vector<std::int64_t> arc_budget;
  std::vector<int> adopted_via;  // arc index consumed by a first endpoint, -1 if none
  std::deque<VertexId> queue;
};

// Breadth-first explorations over the module covers, restarted by reattachment
// rounds until every vertex is placed. Ties: smallest module, then
// smallest piece index. Aborts with Errc::StuckExploration or
// Errc::NoAdoptableEndpoint instead of backtracking.
class TreeBuilder {
 public:
  explicit TreeBuilder(TreeInput input);

  // Explores from the root piece.
  void start();
  // One reattachment round; returns false once every vertex is explored.
  bool step();
  // Runs an exploration from the first endpoint u of some piece.
  void explore(VertexId u);

  const ExplorationState& state() const { return st_; }
  VertexId root() const { return root_; }  // current root of the main tree
  bool done() const;

  // Requires done(). Branch set recomputed from tree degrees.
  SpanningTreeResult result() const;

 private:
  struct PieceRef {
    int module = -1;
    int index = -1;
  };

  void mark_piece(const PathPiece& piece);
  void adopt(VertexId v, VertexId f, int arc);
  std::optional<VertexId> free_endpoint(int module, bool allow_pending) const;

  TreeInput in_;
  ExplorationState st_;
  std::vector<PieceRef> piece_of_first_;  // by vertex; module -1 if not a first endpoint
  std::vector<int> module_of_;
  VertexId root_ = -1;
  int rounds_ = 0;
};

// Convenience driver: start() then step() until done, then result().
SpanningTreeResult build_tree(TreeInput input);

}  // namespace branchwise
