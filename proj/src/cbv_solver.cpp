#include <algorithm>
#include <tuple>

#include "branchwise/error.hpp"
#include "branchwise/nd_partition.hpp"
#include "branchwise/solver.hpp"

namespace branchwise {

namespace {

struct ClassCovers {
  Cover ham;
  Cover spi;
};

// Clique: one ascending path ending at the representative, and a star around
// it. Independent: singletons, representative first.
ClassCovers class_covers(const std::vector<VertexId>& cls, ClassKind kind, VertexId rep) {
  std::vector<VertexId> rest;
  for (VertexId v : cls) {
    if (v != rep) rest.push_back(v);
  }
  ClassCovers out;
  if (kind == ClassKind::Clique) {
    auto path = rest;
    path.push_back(rep);
    out.ham = {PathPiece::make_path(std::move(path))};
    std::vector<std::vector<VertexId>> legs;
    for (VertexId v : rest) legs.push_back({v});
    out.spi = {PathPiece::make_spider(rep, std::move(legs))};
  } else {
    out.ham = {PathPiece::make_path({rep})};
    out.spi = {PathPiece::make_spider(rep, {})};
    for (VertexId v : rest) {
      out.ham.push_back(PathPiece::make_path({v}));
      out.spi.push_back(PathPiece::make_path({v}));
    }
  }
  return out;
}

}  // namespace

CbvAnswer solve_cbv(const WeightedGraph& wg, const SolveOptions& opts) {
  const Graph& g = wg.graph;
  const int nv = g.vertex_count();
  if (nv < 1) throw Error(Errc::OutOfRange, "graph has no vertices");
  if (wg.cost.size() != static_cast<std::size_t>(nv)) throw Error(Errc::OutOfRange, "cost vector length mismatch");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "graph is disconnected");

  TypePartition tp = type_partition(g);
  auto reps = min_cost_representatives(tp, wg);
  const int nd = tp.size();
  if (nd > 24) throw Error(Errc::TooLarge, "neighborhood diversity too large for subset enumeration");
  std::vector<ClassCovers> covers;
  std::vector<int> sizes;
  for (int i = 0; i < nd; ++i) {
    const auto si = static_cast<std::size_t>(i);
    covers.push_back(class_covers(tp.classes[si], tp.kind[si], reps[si]));
    sizes.push_back(static_cast<int>(tp.classes[si].size()));
  }

  // Subsets by (representative cost, size, lexicographic).
  using Key = std::tuple<std::int64_t, int, std::vector<int>>;
  std::vector<Key> order;
  for (std::uint32_t mask = 0; mask < (1u << nd); ++mask) {
    std::vector<int> members;
    std::int64_t cost = 0;
    for (int i = 0; i < nd; ++i) {
      if (mask & (1u << i)) {
        members.push_back(i);
        cost += wg.cost[static_cast<std::size_t>(reps[static_cast<std::size_t>(i)])];
      }
    }
    order.emplace_back(cost, static_cast<int>(members.size()), std::move(members));
  }
  std::sort(order.begin(), order.end());

  for (const auto& [cost, count, branch] : order) {
    std::vector<int> roots;
    if (branch.empty()) {
      for (int r = 0; r < nd; ++r) roots.push_back(r);
    } else {
      roots.push_back(branch.front());
    }
    for (int r : roots) {
      IlpInstance inst;
      try {
        inst = build_cbv_instance(tp.type_graph, tp.kind, sizes, branch, r);
      } catch (const Error& e) {
        if (e.code() == Errc::InconsistentBounds) continue;
        throw;
      }
      auto sol = solve_feasibility(inst, opts);
      if (!sol) continue;
      auto in = inflow(inst, sol->x);
      TreeInput input;
      input.vertex_count = nv;
      input.instance = &inst;
      input.x = sol->x;
      for (int i = 0; i < nd; ++i) {
        const auto si = static_cast<std::size_t>(i);
        const Cover& src = inst.in_branch[si] ? covers[si].spi : covers[si].ham;
        input.covers.push_back(trim_cover(src, static_cast<int>(in[si])));
      }
      CbvAnswer ans;
      ans.tree = build_tree(std::move(input));
      std::int64_t total = 0;
      for (VertexId v : ans.tree.branch) total += wg.cost[static_cast<std::size_t>(v)];
      ans.tree.cost = total;
      ans.cost = total;
      ans.branch_classes = branch;
      return ans;
    }
  }
  throw Error(Errc::InternalAssertion, "no class subset admits a spanning tree");
}

}  // namespace branchwise
