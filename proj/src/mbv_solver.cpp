#include <algorithm>
#include <numeric>

#include "branchwise/error.hpp"
#include "branchwise/mod_decomp.hpp"
#include "branchwise/solver.hpp"

namespace branchwise {

namespace {

// Calls fn on every k-subset of {0..n-1} in lexicographic order until it
// returns true.
template <typename Fn>
bool for_each_subset(int n, int k, Fn fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (fn(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < k; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
}

SpanningTreeResult path_tree(const std::vector<VertexId>& path, int n) {
  SpanningTreeResult t;
  t.parent.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 1; i < path.size(); ++i) t.parent[static_cast<std::size_t>(path[i])] = path[i - 1];
  t.root = path.front();
  return t;
}

}  // namespace

MbvAnswer solve_mbv(const Graph& g, const SolveOptions& opts) {
  const int nv = g.vertex_count();
  if (nv < 1) throw Error(Errc::OutOfRange, "graph has no vertices");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "graph is disconnected");
  MbvAnswer ans;
  if (nv == 1) {
    ans.tree.parent = {-1};
    ans.tree.root = 0;
    return ans;
  }

  ParseNode root = decompose(g);
  auto kids = child_records(root, opts);
  if (auto path = ham_cover_with(root.quotient, kids, 1, opts)) {
    ans.tree = path_tree(path->front().path, nv);
    return ans;
  }

  const int n = root.quotient.vertex_count();
  std::vector<int> cap, spi, ham;
  for (const auto& rec : kids) {
    cap.push_back(rec.size);
    spi.push_back(rec.spi);
    ham.push_back(rec.ham);
  }
  for (int k = 1; k <= n; ++k) {
    const bool found = for_each_subset(n, k, [&](const std::vector<int>& branch) {
      IlpInstance inst;
      try {
        inst = build_mbv_instance(root.quotient, branch, branch.front(), cap, spi, ham);
      } catch (const Error& e) {
        if (e.code() == Errc::InconsistentBounds) return false;
        throw;
      }
      auto sol = solve_feasibility(inst, opts);
      if (!sol) return false;
      auto in = inflow(inst, sol->x);
      TreeInput input;
      input.vertex_count = nv;
      input.instance = &inst;
      input.x = sol->x;
      for (int i = 0; i < n; ++i) {
        const auto si = static_cast<std::size_t>(i);
        const Cover& src = inst.in_branch[si] ? kids[si].spi_cover : kids[si].ham_cover;
        input.covers.push_back(trim_cover(src, static_cast<int>(in[si])));
      }
      ans.tree = build_tree(std::move(input));
      ans.b = static_cast<int>(ans.tree.branch.size());
      ans.branch_modules = branch;
      return true;
    });
    if (found) return ans;
  }
  throw Error(Errc::InternalAssertion, "no branch set admits a spanning tree");
}

CoverResult solve_psc(const Graph& g, const SolveOptions& opts) {
  if (g.vertex_count() < 1) throw Error(Errc::OutOfRange, "graph has no vertices");
  ParseNode root = decompose(g);
  if (root.is_leaf()) return {1, {PathPiece::make_spider(root.vertex, {})}};
  auto kids = child_records(root, opts);
  return compute_spi(root.quotient, kids, opts);
}

CoverResult solve_pp(const Graph& g, const SolveOptions& opts) {
  if (g.vertex_count() < 1) throw Error(Errc::OutOfRange, "graph has no vertices");
  ParseNode root = decompose(g);
  if (root.is_leaf()) return {1, {PathPiece::make_path({root.vertex})}};
  auto kids = child_records(root, opts);
  return compute_ham(root.quotient, kids, opts);
}

}  // namespace branchwise
