#include "branchwise/nd_partition.hpp"

#include <algorithm>
#include <map>

#include "branchwise/error.hpp"

namespace branchwise {

namespace {

// Groups vertices by key; returns per-vertex group sizes and group ids.
template <typename KeyFn>
std::vector<int> group_sizes(const Graph& g, KeyFn key, std::vector<int>& group) {
  const int n = g.vertex_count();
  std::map<std::vector<VertexId>, int> ids;
  std::vector<int> count;
  group.assign(static_cast<std::size_t>(n), -1);
  for (VertexId v = 0; v < n; ++v) {
    auto [it, fresh] = ids.try_emplace(key(v), static_cast<int>(count.size()));
    if (fresh) count.push_back(0);
    group[static_cast<std::size_t>(v)] = it->second;
    ++count[static_cast<std::size_t>(it->second)];
  }
  std::vector<int> size(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) size[static_cast<std::size_t>(v)] = count[static_cast<std::size_t>(group[static_cast<std::size_t>(v)])];
  return size;
}

}  // namespace

const char* class_kind_name(ClassKind kind) { return kind == ClassKind::Clique ? "clique" : "independent"; }

TypePartition type_partition(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw Error(Errc::OutOfRange, "type partition of the empty graph");

  // False twins share N(v); true twins share N[v]. A vertex cannot have a
  // nontrivial class of both sorts.
  std::vector<int> open_group, closed_group;
  auto open_size = group_sizes(g, [&](VertexId v) { return g.neighbors(v); }, open_group);
  auto closed_size = group_sizes(
      g,
      [&](VertexId v) {
        auto nb = g.neighbors(v);
        nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
        return nb;
      },
      closed_group);

  TypePartition tp;
  tp.class_of.assign(static_cast<std::size_t>(n), -1);
  std::map<std::pair<int, int>, int> slot;  // (sort, group) -> class index
  for (VertexId v = 0; v < n; ++v) {
    const auto sv = static_cast<std::size_t>(v);
    std::pair<int, int> key{2, v};
    ClassKind kind = ClassKind::Clique;
    if (open_size[sv] >= 2) {
      key = {0, open_group[sv]};
      kind = ClassKind::Independent;
    } else if (closed_size[sv] >= 2) {
      key = {1, closed_group[sv]};
    }
    auto [it, fresh] = slot.try_emplace(key, tp.size());
    if (fresh) {
      tp.classes.emplace_back();
      tp.kind.push_back(kind);
      tp.representative.push_back(v);
    }
    tp.classes[static_cast<std::size_t>(it->second)].push_back(v);
    tp.class_of[sv] = it->second;
  }

  std::vector<Edge> edges;
  for (int i = 0; i < tp.size(); ++i) {
    for (int j = i + 1; j < tp.size(); ++j) {
      if (g.adjacent(tp.representative[static_cast<std::size_t>(i)], tp.representative[static_cast<std::size_t>(j)])) {
        edges.emplace_back(i, j);
      }
    }
  }
  tp.type_graph = Graph::from_edge_list(tp.size(), edges);
  return tp;
}

std::vector<VertexId> min_cost_representatives(const TypePartition& tp, const WeightedGraph& w) {
  if (w.cost.size() != tp.class_of.size()) throw Error(Errc::OutOfRange, "weights do not match the partition");
  std::vector<VertexId> reps;
  reps.reserve(tp.classes.size());
  for (const auto& cls : tp.classes) {
    VertexId best = cls.front();
    for (VertexId v : cls) {
      if (w.cost[static_cast<std::size_t>(v)] < w.cost[static_cast<std::size_t>(best)]) best = v;
    }
    reps.push_back(best);
  }
  return reps;
}

}  // namespace branchwise
