#include "branchwise/graph.hpp"

#include <algorithm>
#include <string>

#include "branchwise/error.hpp"

namespace branchwise {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::ParseError: return "ParseError";
    case Errc::Disconnected: return "Disconnected";
    case Errc::TooLarge: return "TooLarge";
    case Errc::MalformedTree: return "MalformedTree";
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::InconsistentBounds: return "InconsistentBounds";
    case Errc::Unreachable: return "Unreachable";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::NoCover: return "NoCover";
    case Errc::StuckExploration: return "StuckExploration";
    case Errc::NoAdoptableEndpoint: return "NoAdoptableEndpoint";
    case Errc::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

bool is_internal(Errc code) {
  switch (code) {
    case Errc::NoCover:
    case Errc::StuckExploration:
    case Errc::NoAdoptableEndpoint:
    case Errc::InternalAssertion:
      return true;
    default:
      return false;
  }
}

Graph::Graph(int n) : adj_(static_cast<std::size_t>(std::max(n, 0))) {}

Graph Graph::from_edge_list(int n, std::span<const Edge> pairs) {
  if (n < 0) throw Error(Errc::OutOfRange, "negative vertex count");
  Graph g(n);
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(Errc::OutOfRange, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t twice = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    twice += nb.size();
  }
  g.edge_count_ = twice / 2;
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

WeightedGraph WeightedGraph::make(Graph g, std::vector<std::int64_t> cost) {
  if (cost.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw Error(Errc::OutOfRange, "cost vector length does not match the vertex count");
  }
  for (std::size_t v = 0; v < cost.size(); ++v) {
    if (cost[v] < 1) {
      throw Error(Errc::OutOfRange, "cost of vertex " + std::to_string(v) + " must be a positive integer");
    }
  }
  return WeightedGraph{std::move(g), std::move(cost)};
}

WeightedGraph WeightedGraph::uniform(Graph g) {
  std::vector<std::int64_t> cost(static_cast<std::size_t>(g.vertex_count()), 1);
  return WeightedGraph{std::move(g), std::move(cost)};
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

std::pair<Graph, std::vector<VertexId>> augment_join(const Graph& g, int extra) {
  if (extra <= 0) return {g, {}};
  const int n = g.vertex_count();
  std::vector<Edge> pairs = g.edges();
  std::vector<VertexId> added;
  for (int k = 0; k < extra; ++k) {
    VertexId a = n + k;
    added.push_back(a);
    for (VertexId v = 0; v < n; ++v) pairs.emplace_back(v, a);
  }
  return {Graph::from_edge_list(n + extra, pairs), std::move(added)};
}

std::pair<Graph, std::vector<VertexId>> induced_subgraph(const Graph& g, std::span<const VertexId> vs) {
  const int n = g.vertex_count();
  std::vector<int> local(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    VertexId v = vs[i];
    if (v < 0 || v >= n) throw Error(Errc::OutOfRange, "vertex " + std::to_string(v) + " out of range");
    if (local[static_cast<std::size_t>(v)] != -1) {
      throw Error(Errc::OutOfRange, "vertex " + std::to_string(v) + " listed twice");
    }
    local[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (VertexId w : g.neighbors(vs[i])) {
      int j = local[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) pairs.emplace_back(static_cast<int>(i), j);
    }
  }
  return {Graph::from_edge_list(static_cast<int>(vs.size()), pairs), std::vector<VertexId>(vs.begin(), vs.end())};
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) pairs.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, pairs);
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VertexId> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (VertexId v : g.neighbors(u)) {
        if (comp[static_cast<std::size_t>(v)] == -1) {
          comp[static_cast<std::size_t>(v)] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

Graph path_graph(int n) {
  std::vector<Edge> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, pairs);
}

Graph cycle_graph(int n) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, pairs);
}

Graph complete_graph(int n) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return Graph::from_edge_list(n, pairs);
}

Graph star_graph(int leaves) {
  std::vector<Edge> pairs;
  for (int i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
  return Graph::from_edge_list(leaves + 1, pairs);
}

Graph edgeless_graph(int n) { return Graph(n); }

}  // namespace branchwise
