#include "branchwise/reference.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>

#include "branchwise/error.hpp"

namespace branchwise {

namespace {

void check_cap(const Graph& g, const OracleOptions& opts) {
  if (g.vertex_count() > opts.max_vertices) {
    throw Error(Errc::TooLarge, "oracle limited to " + std::to_string(opts.max_vertices) + " vertices");
  }
}

void check_tree_cap(const Graph& g, const OracleOptions& opts) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto rank = static_cast<std::int64_t>(g.edge_count()) - n + 1;
  if (n > opts.max_vertices && rank > opts.max_cycle_rank) {
    throw Error(Errc::TooLarge, "oracle limited to " + std::to_string(opts.max_vertices) +
                                    " vertices or cycle rank " + std::to_string(opts.max_cycle_rank));
  }
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(static_cast<std::size_t>(n)) { std::iota(up.begin(), up.end(), 0); }
  int find(int v) {
    while (up[static_cast<std::size_t>(v)] != v) v = up[static_cast<std::size_t>(v)];
    return v;
  }
};

// Include/exclude enumeration of spanning trees with a branch-cost bound.
class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, std::vector<std::int64_t> cost) : g_(g), cost_(std::move(cost)), edges_(g.edges()) {}

  // Smallest objective over all spanning trees.
  OracleTree minimum() {
    best_ = std::numeric_limits<std::int64_t>::max();
    target_.reset();
    run();
    return {best_, tree_of(best_edges_)};
  }

  // First tree (in enumeration order) with objective `value` accepted by prefer.
  std::optional<SpanningTreeResult> find(std::int64_t value, const std::function<bool(const SpanningTreeResult&)>& prefer) {
    target_ = value;
    prefer_ = &prefer;
    found_.reset();
    run();
    return found_;
  }

 private:
  void run() {
    const int n = g_.vertex_count();
    deg_.assign(static_cast<std::size_t>(n), 0);
    comp_.assign(static_cast<std::size_t>(n), 0);
    std::iota(comp_.begin(), comp_.end(), 0);
    chosen_.clear();
    stop_ = false;
    recurse(0);
  }

  std::int64_t partial_cost() const {
    std::int64_t c = 0;
    for (std::size_t v = 0; v < deg_.size(); ++v) {
      if (deg_[v] >= 3) c += cost_[v];
    }
    return c;
  }

  // Connectivity of chosen edges plus edges[from..].
  bool can_span(std::size_t from) const {
    UnionFind uf(g_.vertex_count());
    int parts = g_.vertex_count();
    auto join = [&](Edge e) {
      int a = uf.find(e.first), b = uf.find(e.second);
      if (a != b) {
        uf.up[static_cast<std::size_t>(a)] = b;
        --parts;
      }
    };
    for (const Edge& e : chosen_) join(e);
    for (std::size_t i = from; i < edges_.size(); ++i) join(edges_[i]);
    return parts == 1;
  }

  SpanningTreeResult tree_of(const std::vector<Edge>& es) const {
    const int n = g_.vertex_count();
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : es) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    SpanningTreeResult t;
    t.parent.assign(static_cast<std::size_t>(n), -1);
    t.root = 0;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId v : adj[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          t.parent[static_cast<std::size_t>(v)] = u;
          stack.push_back(v);
        }
      }
    }
    t.branch = branch_vertices(t.parent);
    return t;
  }

  void recurse(std::size_t idx) {
    if (stop_) return;
    const auto need = static_cast<std::size_t>(g_.vertex_count() - 1);
    const std::int64_t c = partial_cost();
    if (target_ ? c > *target_ : c >= best_) return;
    if (chosen_.size() == need) {
      if (target_) {
        if (c != *target_) return;
        auto t = tree_of(chosen_);
        if ((*prefer_)(t)) {
          found_ = std::move(t);
          stop_ = true;
        }
      } else {
        best_ = c;
        best_edges_ = chosen_;
        if (best_ == 0) stop_ = true;
      }
      return;
    }
    if (idx == edges_.size() || need - chosen_.size() > edges_.size() - idx) return;

    auto [u, v] = edges_[idx];
    const int cu = comp_[static_cast<std::size_t>(u)], cv = comp_[static_cast<std::size_t>(v)];
    if (cu != cv) {
      auto saved = comp_;
      for (auto& x : comp_) {
        if (x == cu) x = cv;
      }
      ++deg_[static_cast<std::size_t>(u)];
      ++deg_[static_cast<std::size_t>(v)];
      chosen_.push_back(edges_[idx]);
      recurse(idx + 1);
      chosen_.pop_back();
      --deg_[static_cast<std::size_t>(u)];
      --deg_[static_cast<std::size_t>(v)];
      comp_ = std::move(saved);
    }
    if (can_span(idx + 1)) recurse(idx + 1);
  }

  const Graph& g_;
  std::vector<std::int64_t> cost_;
  std::vector<Edge> edges_;
  std::vector<int> deg_, comp_;
  std::vector<Edge> chosen_, best_edges_;
  std::int64_t best_ = 0;
  std::optional<std::int64_t> target_;
  const std::function<bool(const SpanningTreeResult&)>* prefer_ = nullptr;
  std::optional<SpanningTreeResult> found_;
  bool stop_ = false;
};

OracleTree oracle_tree(const Graph& g, std::vector<std::int64_t> cost, const OracleOptions& opts,
                       const std::function<bool(const SpanningTreeResult&)>& prefer) {
  check_tree_cap(g, opts);
  if (g.vertex_count() < 1) throw Error(Errc::OutOfRange, "graph has no vertices");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "graph is disconnected");
  if (g.vertex_count() == 1) {
    OracleTree t;
    t.tree.parent = {-1};
    t.tree.root = 0;
    return t;
  }
  TreeEnumerator en(g, std::move(cost));
  OracleTree best = en.minimum();
  if (prefer && !prefer(best.tree)) {
    if (auto t = en.find(best.value, prefer)) best.tree = std::move(*t);
  }
  return best;
}

using Mask = std::uint32_t;

// ends[mask]: vertices at which some path spanning exactly `mask` can end.
std::vector<Mask> path_ends(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Mask> nb(static_cast<std::size_t>(n), 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(v)) nb[static_cast<std::size_t>(v)] |= Mask{1} << w;
  }
  std::vector<Mask> ends(std::size_t{1} << n, 0);
  for (VertexId v = 0; v < n; ++v) ends[Mask{1} << v] = Mask{1} << v;
  for (Mask mask = 1; mask < (Mask{1} << n); ++mask) {
    for (Mask e = ends[mask]; e != 0; e &= e - 1) {
      const int v = std::countr_zero(e);
      for (Mask ext = nb[static_cast<std::size_t>(v)] & ~mask; ext != 0; ext &= ext - 1) {
        const int w = std::countr_zero(ext);
        ends[mask | (Mask{1} << w)] |= Mask{1} << w;
      }
    }
  }
  return ends;
}

// part[mask]: fewest paths partitioning `mask`.
std::vector<int> path_partition(const std::vector<Mask>& ends, int n) {
  std::vector<int> part(std::size_t{1} << n, std::numeric_limits<int>::max() / 2);
  part[0] = 0;
  for (Mask mask = 1; mask < (Mask{1} << n); ++mask) {
    const Mask low = mask & (~mask + 1);
    const Mask rest = mask ^ low;
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask piece = sub | low;
      if (ends[piece]) part[mask] = std::min(part[mask], 1 + part[mask ^ piece]);
      if (sub == 0) break;
    }
  }
  return part;
}

}  // namespace

OracleTree oracle_b(const Graph& g, const OracleOptions& opts,
                    const std::function<bool(const SpanningTreeResult&)>& prefer) {
  return oracle_tree(g, std::vector<std::int64_t>(static_cast<std::size_t>(g.vertex_count()), 1), opts, prefer);
}

OracleTree oracle_w(const WeightedGraph& wg, const OracleOptions& opts) {
  auto out = oracle_tree(wg.graph, wg.cost, opts, {});
  out.tree.cost = out.value;
  return out;
}

int oracle_ham(const Graph& g, const OracleOptions& opts) {
  check_cap(g, opts);
  const int n = g.vertex_count();
  if (n == 0) return 0;
  return path_partition(path_ends(g), n)[(Mask{1} << n) - 1];
}

int oracle_spi(const Graph& g, const OracleOptions& opts) {
  check_cap(g, opts);
  const int n = g.vertex_count();
  if (n == 0) return 0;
  const Mask full = (Mask{1} << n) - 1;
  auto ends = path_ends(g);
  auto part = path_partition(ends, n);
  std::vector<char> is_spider(std::size_t{1} << n, 0);
  for (VertexId c = 0; c < n; ++c) {
    Mask nbc = 0;
    for (VertexId w : g.neighbors(c)) nbc |= Mask{1} << w;
    const Mask cbit = Mask{1} << c;
    // reach[mask]: mask \ {c} splits into legs, each a path with an end next to c.
    std::vector<char> reach(std::size_t{1} << n, 0);
    reach[cbit] = 1;
    for (Mask mask = 1; mask <= full; ++mask) {
      if (!(mask & cbit) || mask == cbit) continue;
      const Mask others = mask ^ cbit;
      const Mask low = others & (~others + 1);
      const Mask rest = others ^ low;
      for (Mask sub = rest;; sub = (sub - 1) & rest) {
        const Mask leg = sub | low;
        if ((ends[leg] & nbc) && reach[mask ^ leg]) {
          reach[mask] = 1;
          break;
        }
        if (sub == 0) break;
      }
    }
    for (Mask mask = 0; mask <= full; ++mask) {
      if (reach[mask]) is_spider[mask] = 1;
    }
  }
  int best = std::numeric_limits<int>::max();
  for (Mask mask = 1; mask <= full; ++mask) {
    if (is_spider[mask]) best = std::min(best, 1 + part[full ^ mask]);
  }
  return best;
}

Diagnostics verify_spanning_tree(const Graph& g, const SpanningTreeResult& t, const std::vector<std::int64_t>* cost) {
  const int n = g.vertex_count();
  if (static_cast<int>(t.parent.size()) != n) return Diagnostics::fail("SizeMismatch", "parent map has the wrong length");
  if (t.root < 0 || t.root >= n || t.parent[static_cast<std::size_t>(t.root)] != -1) {
    return Diagnostics::fail("RootMismatch", "declared root is not a parentless vertex");
  }
  for (VertexId v = 0; v < n; ++v) {
    const VertexId p = t.parent[static_cast<std::size_t>(v)];
    if (p == -1 && v != t.root) return Diagnostics::fail("RootCount", "vertex " + std::to_string(v) + " is a second root");
    if (p == -1) continue;
    if (p < 0 || p >= n) return Diagnostics::fail("ParentOutOfRange", "parent of " + std::to_string(v) + " out of range");
    if (!g.adjacent(v, p)) {
      return Diagnostics::fail("EdgeNotInGraph", "edge " + std::to_string(p) + "-" + std::to_string(v) + " not in graph");
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    VertexId cur = v;
    int steps = 0;
    while (cur != t.root && steps <= n) {
      cur = t.parent[static_cast<std::size_t>(cur)];
      ++steps;
    }
    if (cur != t.root) return Diagnostics::fail("Cycle", "vertex " + std::to_string(v) + " does not reach the root");
  }
  auto branch = branch_vertices(t.parent);
  auto claimed = t.branch;
  std::sort(claimed.begin(), claimed.end());
  if (branch != claimed) return Diagnostics::fail("BranchMismatch", "declared branch set differs from tree degrees");
  if (cost != nullptr && t.cost) {
    std::int64_t total = 0;
    for (VertexId v : branch) total += (*cost)[static_cast<std::size_t>(v)];
    if (total != *t.cost) return Diagnostics::fail("CostMismatch", "declared cost differs from branch costs");
  }
  return Diagnostics::pass();
}

Diagnostics verify_cover(const Graph& g, const Cover& cover, CoverKind kind) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int spiders = 0;
  for (std::size_t k = 0; k < cover.size(); ++k) {
    const PathPiece& p = cover[k];
    if (p.is_spider()) {
      ++spiders;
      if (kind == CoverKind::PathSpider && k != 0) return Diagnostics::fail("SpiderCount", "spider is not the first piece");
      for (const auto& leg : p.legs) {
        if (leg.empty()) return Diagnostics::fail("BadPiece", "spider has an empty leg");
      }
    } else if (p.path.empty()) {
      return Diagnostics::fail("BadPiece", "empty path");
    }
    for (VertexId v : p.vertices()) {
      if (v < 0 || v >= n) return Diagnostics::fail("OutOfRange", "vertex " + std::to_string(v) + " out of range");
      if (seen[static_cast<std::size_t>(v)]) return Diagnostics::fail("Overlap", "vertex " + std::to_string(v) + " covered twice");
      seen[static_cast<std::size_t>(v)] = 1;
    }
    for (auto [a, b] : p.edges()) {
      if (!g.adjacent(a, b)) {
        return Diagnostics::fail("NotAdjacent", std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) return Diagnostics::fail("Uncovered", "vertex " + std::to_string(v) + " uncovered");
  }
  const int want = kind == CoverKind::PathSpider ? 1 : 0;
  if (spiders != want) {
    return Diagnostics::fail("SpiderCount", std::to_string(spiders) + " spiders, expected " + std::to_string(want));
  }
  return Diagnostics::pass();
}

Diagnostics replay_constraints(const IlpInstance& inst, const LoadAssignment& a) {
  const std::size_t m = inst.arcs.size();
  const auto n = static_cast<std::int64_t>(inst.module_count);
  if (a.x.size() != m || a.y.size() != m) return Diagnostics::fail("Shape", "variable vectors have the wrong length");
  for (std::size_t k = 0; k < m; ++k) {
    if (a.x[k] < 0 || a.y[k] < 0) return Diagnostics::fail("Integrality", "negative variable on arc " + std::to_string(k));
  }
  if (a.x[0] != 1) return Diagnostics::fail("SourceLoad", "x(s,r) must be 1");
  if (a.y[0] != n) return Diagnostics::fail("SourceFlow", "y(s,r) must equal the module count");
  std::vector<std::int64_t> xin(inst.module_count, 0), xout(inst.module_count, 0), yin(inst.module_count, 0),
      yout(inst.module_count, 0);
  for (std::size_t k = 0; k < m; ++k) {
    const Arc& arc = inst.arcs[k];
    xin[static_cast<std::size_t>(arc.head)] += a.x[k];
    yin[static_cast<std::size_t>(arc.head)] += a.y[k];
    if (arc.tail != kSource) {
      xout[static_cast<std::size_t>(arc.tail)] += a.x[k];
      yout[static_cast<std::size_t>(arc.tail)] += a.y[k];
    }
    if (a.y[k] > n * a.x[k]) return Diagnostics::fail("Coupling", "y exceeds n*x on arc " + std::to_string(k));
  }
  for (int i = 0; i < inst.module_count; ++i) {
    const auto si = static_cast<std::size_t>(i);
    const std::string mod = "module " + std::to_string(i);
    if (inst.mode == IlpMode::Mbv) {
      if (xin[si] > inst.capacity[si]) return Diagnostics::fail("Capacity", mod + " inflow above capacity");
      if (xin[si] < inst.lower_bound[si]) return Diagnostics::fail("LowerBound", mod + " inflow below its bound");
    } else if (inst.class_kind[si] == ClassKind::Independent) {
      if (xin[si] != inst.capacity[si]) return Diagnostics::fail("Capacity", mod + " inflow differs from class size");
    } else if (xin[si] > inst.capacity[si]) {
      return Diagnostics::fail("Capacity", mod + " inflow above class size");
    }
    if (!inst.in_branch[si] && xout[si] > xin[si]) return Diagnostics::fail("Outflow", mod + " outflow above inflow");
    if (yin[si] - yout[si] != 1) return Diagnostics::fail("Conservation", mod + " does not absorb one unit");
  }
  return Diagnostics::pass();
}

bool flow_exists(const IlpInstance& inst, const std::vector<std::int64_t>& x) {
  // Nodes: modules 0..n-1, source n, sink n+1.
  const int n = inst.module_count;
  const int src = n, sink = n + 1, total = n + 2;
  std::vector<std::vector<std::int64_t>> cap(static_cast<std::size_t>(total),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(total), 0));
  for (std::size_t k = 0; k < inst.arcs.size(); ++k) {
    const Arc& arc = inst.arcs[k];
    const int t = arc.tail == kSource ? src : arc.tail;
    cap[static_cast<std::size_t>(t)][static_cast<std::size_t>(arc.head)] += static_cast<std::int64_t>(n) * x[k];
  }
  for (int i = 0; i < n; ++i) cap[static_cast<std::size_t>(i)][static_cast<std::size_t>(sink)] = 1;
  std::int64_t flow = 0;
  while (true) {
    std::vector<int> prev(static_cast<std::size_t>(total), -1);
    prev[static_cast<std::size_t>(src)] = src;
    std::queue<int> q;
    q.push(src);
    while (!q.empty() && prev[static_cast<std::size_t>(sink)] == -1) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < total; ++v) {
        if (prev[static_cast<std::size_t>(v)] == -1 && cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > 0) {
          prev[static_cast<std::size_t>(v)] = u;
          q.push(v);
        }
      }
    }
    if (prev[static_cast<std::size_t>(sink)] == -1) break;
    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (int v = sink; v != src; v = prev[static_cast<std::size_t>(v)]) {
      push = std::min(push, cap[static_cast<std::size_t>(prev[static_cast<std::size_t>(v)])][static_cast<std::size_t>(v)]);
    }
    for (int v = sink; v != src; v = prev[static_cast<std::size_t>(v)]) {
      const auto u = static_cast<std::size_t>(prev[static_cast<std::size_t>(v)]);
      cap[u][static_cast<std::size_t>(v)] -= push;
      cap[static_cast<std::size_t>(v)][u] += push;
    }
    flow += push;
  }
  return flow == n;
}

}  // namespace branchwise
