#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace branchwise {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

// Undirected simple graph on the dense id space [0, vertex_count()).
// Immutable after construction; neighbor lists are sorted.
class Graph {
 public:
  Graph() = default;

  // Edgeless graph on n vertices.
  explicit Graph(int n);

  // Throws Errc::OutOfRange for endpoints outside [0, n) and Errc::SelfLoop
  // for pairs (v, v). Repeated pairs, in either orientation, collapse.
  static Graph from_edge_list(int n, std::span<const Edge> pairs);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(VertexId u, VertexId v) const;

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

struct WeightedGraph {
  Graph graph;
  std::vector<std::int64_t> cost;

  // Throws Errc::OutOfRange unless cost has one entry >= 1 per vertex.
  static WeightedGraph make(Graph g, std::vector<std::int64_t> cost);
  static WeightedGraph uniform(Graph g);
};

// Single traversal from vertex 0; graphs with at most one vertex count as connected.
bool is_connected(const Graph& g);

// g with `extra` new vertices n..n+extra-1, each adjacent to every original
// vertex and to none of the other new ones. Returns the new ids.
std::pair<Graph, std::vector<VertexId>> augment_join(const Graph& g, int extra);

// Subgraph induced by `vs`, relabelled 0..|vs|-1 in the given order. The second
// member maps each new id back to its original id. Throws Errc::OutOfRange.
std::pair<Graph, std::vector<VertexId>> induced_subgraph(const Graph& g, std::span<const VertexId> vs);

Graph complement(const Graph& g);

// Vertex sets of the connected components, each sorted, ordered by minimum id.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

// Named shapes used across tests, the CLI and the corpus generators.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // center 0
Graph edgeless_graph(int n);

}  // namespace branchwise
