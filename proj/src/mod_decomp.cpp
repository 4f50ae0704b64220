#include "branchwise/mod_decomp.hpp"

#include <algorithm>
#include <string>

#include "branchwise/error.hpp"

namespace branchwise {

namespace {

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n - 1) / 2;
}

// Smallest module of g containing both u and v: keep absorbing splitters,
// i.e. outside vertices adjacent to some but not all of the current set.
std::vector<char> module_closure(const Graph& g, VertexId u, VertexId v) {
  const int n = g.vertex_count();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  int size = 0;
  auto add = [&](VertexId x) {
    in[static_cast<std::size_t>(x)] = 1;
    ++size;
    for (VertexId y : g.neighbors(x)) ++hits[static_cast<std::size_t>(y)];
  };
  add(u);
  add(v);
  bool grew = true;
  while (grew && size < n) {
    grew = false;
    for (VertexId x = 0; x < n; ++x) {
      const auto h = hits[static_cast<std::size_t>(x)];
      if (!in[static_cast<std::size_t>(x)] && h > 0 && h < size) {
        add(x);
        grew = true;
      }
    }
  }
  return in;
}

std::vector<std::vector<VertexId>> prime_partition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId u = 0; u < n; ++u) {
    if (cls[static_cast<std::size_t>(u)] != -1) continue;
    const int id = static_cast<int>(out.size());
    std::vector<char> member(static_cast<std::size_t>(n), 0);
    member[static_cast<std::size_t>(u)] = 1;
    for (VertexId v = u + 1; v < n; ++v) {
      if (cls[static_cast<std::size_t>(v)] != -1 || member[static_cast<std::size_t>(v)]) continue;
      auto closure = module_closure(g, u, v);
      if (std::count(closure.begin(), closure.end(), 1) == n) continue;
      for (VertexId w = 0; w < n; ++w) {
        if (closure[static_cast<std::size_t>(w)]) member[static_cast<std::size_t>(w)] = 1;
      }
    }
    out.emplace_back();
    for (VertexId w = 0; w < n; ++w) {
      if (member[static_cast<std::size_t>(w)]) {
        cls[static_cast<std::size_t>(w)] = id;
        out.back().push_back(w);
      }
    }
  }
  return out;
}

ParseNode decompose_subset(const Graph& g, const std::vector<VertexId>& subset) {
  if (subset.size() == 1) return ParseNode::leaf(subset.front());
  auto [local, to_original] = induced_subgraph(g, subset);
  auto classes = maximal_modules(local);
  const int k = static_cast<int>(classes.size());
  if (k < 2) throw Error(Errc::InternalAssertion, "module partition of a multi-vertex set has one class");

  std::vector<Edge> qedges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (local.adjacent(classes[static_cast<std::size_t>(i)].front(), classes[static_cast<std::size_t>(j)].front())) {
        qedges.emplace_back(i, j);
      }
    }
  }
  std::vector<ParseNode> children;
  children.reserve(classes.size());
  for (const auto& cls : classes) {
    std::vector<VertexId> part;
    part.reserve(cls.size());
    for (VertexId w : cls) part.push_back(to_original[static_cast<std::size_t>(w)]);
    children.push_back(decompose_subset(g, part));
  }
  return ParseNode::internal(Graph::from_edge_list(k, qedges), std::move(children));
}

void collect_edges(const ParseNode& t, std::vector<Edge>& out) {
  if (t.is_leaf()) return;
  for (const auto& child : t.children) collect_edges(child, out);
  for (auto [i, j] : t.quotient.edges()) {
    for (VertexId u : t.children[static_cast<std::size_t>(i)].vertices) {
      for (VertexId v : t.children[static_cast<std::size_t>(j)].vertices) out.emplace_back(u, v);
    }
  }
}

void validate(const ParseNode& t) {
  if (t.is_leaf()) {
    if (t.vertex < 0 || t.vertices != std::vector<VertexId>{t.vertex}) {
      throw Error(Errc::MalformedTree, "leaf without a valid vertex");
    }
    return;
  }
  if (t.children.size() < 2) throw Error(Errc::MalformedTree, "internal node with fewer than two children");
  if (t.quotient.vertex_count() != static_cast<int>(t.children.size())) {
    throw Error(Errc::MalformedTree, "quotient size differs from the child count");
  }
  std::vector<VertexId> all;
  for (const auto& child : t.children) {
    validate(child);
    all.insert(all.end(), child.vertices.begin(), child.vertices.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw Error(Errc::MalformedTree, "children share a vertex");
  }
  if (all != t.vertices) throw Error(Errc::MalformedTree, "node vertex set differs from the union of its children");
}

}  // namespace

const char* node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Parallel: return "parallel";
    case NodeKind::Series: return "series";
    case NodeKind::Prime: return "prime";
  }
  return "unknown";
}

ParseNode ParseNode::leaf(VertexId v) {
  ParseNode node;
  node.kind = NodeKind::Leaf;
  node.vertex = v;
  node.quotient = Graph(1);
  node.vertices = {v};
  return node;
}

ParseNode ParseNode::internal(Graph quotient, std::vector<ParseNode> children) {
  ParseNode node;
  if (quotient.edge_count() == 0) {
    node.kind = NodeKind::Parallel;
  } else if (is_complete(quotient)) {
    node.kind = NodeKind::Series;
  } else {
    node.kind = NodeKind::Prime;
  }
  node.quotient = std::move(quotient);
  for (const auto& child : children) node.vertices.insert(node.vertices.end(), child.vertices.begin(), child.vertices.end());
  std::sort(node.vertices.begin(), node.vertices.end());
  node.children = std::move(children);
  return node;
}

ParseNode decompose(const Graph& g) {
  if (g.vertex_count() < 1) throw Error(Errc::OutOfRange, "cannot decompose the empty graph");
  std::vector<VertexId> all(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
  return decompose_subset(g, all);
}

int width(const ParseNode& t) {
  int best = t.kind == NodeKind::Prime ? static_cast<int>(t.children.size()) : 0;
  for (const auto& child : t.children) best = std::max(best, width(child));
  return best;
}

Graph evaluate(const ParseNode& t) {
  validate(t);
  std::vector<Edge> pairs;
  collect_edges(t, pairs);
  return Graph::from_edge_list(t.vertices.back() + 1, pairs);
}

bool is_module(const Graph& g, std::span<const VertexId> m) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId v : m) in[static_cast<std::size_t>(v)] = 1;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (in[static_cast<std::size_t>(x)]) continue;
    std::size_t hits = 0;
    for (VertexId v : m) hits += g.adjacent(x, v) ? 1 : 0;
    if (hits != 0 && hits != m.size()) return false;
  }
  return true;
}

std::vector<std::vector<VertexId>> maximal_modules(const Graph& g) {
  if (g.vertex_count() <= 1) {
    std::vector<std::vector<VertexId>> single;
    if (g.vertex_count() == 1) single.push_back({0});
    return single;
  }
  auto comps = connected_components(g);
  if (comps.size() > 1) return comps;
  auto cocomps = connected_components(complement(g));
  if (cocomps.size() > 1) return cocomps;
  return prime_partition(g);
}

}  // namespace branchwise
