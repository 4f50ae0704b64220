#include "branchwise/cover_dp.hpp"

#include <algorithm>
#include <string>

#include "branchwise/error.hpp"
#include "branchwise/tree_builder.hpp"

namespace branchwise {

namespace {

// Dense relabelling of the children's vertices; added vertices get ids from
// base upward.
struct Local {
  std::vector<VertexId> to_orig;
  std::vector<int> to_local;  // indexed by original id
  int base = 0;

  explicit Local(std::span<const CoverRecord> children) {
    for (const auto& rec : children) {
      for (const auto& piece : rec.ham_cover) {
        auto vs = piece.vertices();
        to_orig.insert(to_orig.end(), vs.begin(), vs.end());
      }
    }
    std::sort(to_orig.begin(), to_orig.end());
    base = static_cast<int>(to_orig.size());
    to_local.assign(to_orig.empty() ? 0 : static_cast<std::size_t>(to_orig.back()) + 1, -1);
    for (int i = 0; i < base; ++i) to_local[static_cast<std::size_t>(to_orig[static_cast<std::size_t>(i)])] = i;
  }

  template <typename Fn>
  static Cover map(const Cover& cover, Fn fn) {
    Cover out;
    for (const auto& p : cover) {
      if (p.is_spider()) {
        auto legs = p.legs;
        for (auto& leg : legs) {
          for (auto& v : leg) v = fn(v);
        }
        out.push_back(PathPiece::make_spider(fn(p.center), std::move(legs)));
      } else {
        auto vs = p.path;
        for (auto& v : vs) v = fn(v);
        out.push_back(PathPiece::make_path(std::move(vs)));
      }
    }
    return out;
  }

  Cover to_local_ids(const Cover& c) const {
    return map(c, [&](VertexId v) { return to_local[static_cast<std::size_t>(v)]; });
  }
  Cover to_original_ids(const Cover& c) const {
    return map(c, [&](VertexId v) { return to_orig[static_cast<std::size_t>(v)]; });
  }
};

// Solves the quotient, optionally joined with one universal module of `added`
// isolated vertices, and builds the tree in local ids.
std::optional<SpanningTreeResult> solve_augmented(const Graph& quotient, std::span<const CoverRecord> children,
                                                  const Local& local, int added, std::span<const int> branch,
                                                  int root, const SolveOptions& opts) {
  const int n = quotient.vertex_count();
  Graph q = added > 0 ? augment_join(quotient, 1).first : quotient;
  std::vector<int> cap, spi, ham;
  for (const auto& rec : children) {
    cap.push_back(rec.size);
    spi.push_back(rec.spi);
    ham.push_back(rec.ham);
  }
  if (added > 0) {
    cap.push_back(added);
    spi.push_back(added);
    ham.push_back(added);
  }
  IlpInstance inst;
  try {
    inst = build_mbv_instance(q, branch, root, cap, spi, ham);
  } catch (const Error& e) {
    if (e.code() == Errc::InconsistentBounds) return std::nullopt;
    throw;
  }
  auto sol = solve_feasibility(inst, opts);
  if (!sol) return std::nullopt;

  auto in = inflow(inst, sol->x);
  TreeInput input;
  input.vertex_count = local.base + added;
  input.instance = &inst;
  input.x = sol->x;
  for (int i = 0; i < n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    const Cover& src = inst.in_branch[si] ? children[si].spi_cover : children[si].ham_cover;
    input.covers.push_back(local.to_local_ids(trim_cover(src, static_cast<int>(in[si]))));
  }
  if (added > 0) {
    Cover singles;
    for (int k = 0; k < added; ++k) singles.push_back(PathPiece::make_path({local.base + k}));
    input.covers.push_back(std::move(singles));
  }
  return build_tree(std::move(input));
}

std::vector<std::vector<VertexId>> children_of(const std::vector<VertexId>& parent) {
  std::vector<std::vector<VertexId>> kids(parent.size());
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (parent[v] >= 0) kids[static_cast<std::size_t>(parent[v])].push_back(static_cast<VertexId>(v));
  }
  return kids;
}

// The tree is a path starting at the root; dropping the added vertices leaves
// the pieces, read top-down.
Cover cut_path(const SpanningTreeResult& tree, int base) {
  if (!tree.branch.empty()) throw Error(Errc::InternalAssertion, "path construction produced a branch vertex");
  auto kids = children_of(tree.parent);
  Cover out;
  std::vector<VertexId> run;
  VertexId cur = tree.root;
  std::size_t seen = 0;
  while (true) {
    ++seen;
    if (cur >= base) {
      if (!run.empty()) out.push_back(PathPiece::make_path(std::move(run)));
      run.clear();
    } else {
      run.push_back(cur);
    }
    const auto& next = kids[static_cast<std::size_t>(cur)];
    if (next.empty()) break;
    if (next.size() > 1) throw Error(Errc::InternalAssertion, "root of the path has two children");
    cur = next.front();
  }
  if (!run.empty()) out.push_back(PathPiece::make_path(std::move(run)));
  if (seen != tree.parent.size()) throw Error(Errc::InternalAssertion, "path construction did not span");
  return out;
}

// Removes the added vertices from a spider tree: the center's component
// becomes the spider, every other component a path.
Cover cut_spider(const SpanningTreeResult& tree, int base, VertexId center) {
  for (VertexId b : tree.branch) {
    if (b != center) throw Error(Errc::InternalAssertion, "spider construction has a second branch vertex");
  }
  const auto n = tree.parent.size();
  std::vector<std::vector<VertexId>> adj(n);
  for (std::size_t v = 0; v < n; ++v) {
    const VertexId p = tree.parent[v];
    if (p >= 0 && p < base && static_cast<VertexId>(v) < base) {
      adj[v].push_back(p);
      adj[static_cast<std::size_t>(p)].push_back(static_cast<VertexId>(v));
    }
  }
  std::vector<int> depth(n, -1);
  auto kids = children_of(tree.parent);
  std::vector<VertexId> order{tree.root};
  depth[static_cast<std::size_t>(tree.root)] = 0;
  for (std::size_t q = 0; q < order.size(); ++q) {
    for (VertexId c : kids[static_cast<std::size_t>(order[q])]) {
      depth[static_cast<std::size_t>(c)] = depth[static_cast<std::size_t>(order[q])] + 1;
      order.push_back(c);
    }
  }

  std::vector<char> used(n, 0);
  auto walk = [&](VertexId from, VertexId start) {
    std::vector<VertexId> seq;
    VertexId prev = from, cur = start;
    while (true) {
      seq.push_back(cur);
      used[static_cast<std::size_t>(cur)] = 1;
      VertexId next = -1;
      for (VertexId w : adj[static_cast<std::size_t>(cur)]) {
        if (w != prev) next = w;
      }
      if (next == -1) break;
      prev = cur;
      cur = next;
    }
    return seq;
  };

  std::vector<std::vector<VertexId>> legs;
  used[static_cast<std::size_t>(center)] = 1;
  for (VertexId w : adj[static_cast<std::size_t>(center)]) legs.push_back(walk(center, w));
  Cover out{PathPiece::make_spider(center, std::move(legs))};

  // Remaining components, each started from its shallowest endpoint.
  std::vector<VertexId> by_depth(order.begin(), order.end());
  for (VertexId v : by_depth) {
    const auto sv = static_cast<std::size_t>(v);
    if (v >= base || used[sv] || adj[sv].size() > 1) continue;
    out.push_back(PathPiece::make_path(walk(-1, v)));
  }
  for (VertexId v = 0; v < base; ++v) {
    if (!used[static_cast<std::size_t>(v)]) throw Error(Errc::InternalAssertion, "spider construction left a cycle");
  }
  return out;
}

int total_size(std::span<const CoverRecord> children) {
  int total = 0;
  for (const auto& rec : children) total += rec.size;
  return total;
}

}  // namespace

CoverRecord leaf_record(VertexId v) {
  CoverRecord rec;
  rec.size = rec.ham = rec.spi = 1;
  rec.ham_cover = {PathPiece::make_path({v})};
  rec.spi_cover = {PathPiece::make_spider(v, {})};
  return rec;
}

std::optional<Cover> ham_cover_with(const Graph& quotient, std::span<const CoverRecord> children, int pieces,
                                    const SolveOptions& opts) {
  if (static_cast<int>(children.size()) != quotient.vertex_count()) {
    throw Error(Errc::OutOfRange, "one record per quotient vertex is required");
  }
  Local local(children);
  auto tree = solve_augmented(quotient, children, local, pieces, {}, quotient.vertex_count(), opts);
  if (!tree) return std::nullopt;
  Cover cover = cut_path(*tree, local.base);
  // Added vertices at the end of the path leave fewer pieces than asked for.
  if (static_cast<int>(cover.size()) < pieces) cover = trim_cover(std::move(cover), pieces);
  if (static_cast<int>(cover.size()) != pieces) {
    throw Error(Errc::InternalAssertion, "path construction produced " + std::to_string(cover.size()) +
                                             " pieces instead of " + std::to_string(pieces));
  }
  return local.to_original_ids(cover);
}

CoverResult compute_ham(const Graph& quotient, std::span<const CoverRecord> children, const SolveOptions& opts) {
  const int total = total_size(children);
  for (int ell = 1; ell <= total; ++ell) {
    if (auto cover = ham_cover_with(quotient, children, ell, opts)) return {ell, std::move(*cover)};
  }
  throw Error(Errc::NoCover, "no partition into paths found");
}

CoverResult compute_spi(const Graph& quotient, std::span<const CoverRecord> children, const SolveOptions& opts) {
  const int n = quotient.vertex_count();
  if (static_cast<int>(children.size()) != n) throw Error(Errc::OutOfRange, "one record per quotient vertex is required");
  const int total = total_size(children);
  Local local(children);
  for (int ell = 1; ell <= total; ++ell) {
    for (int j = 0; j < n; ++j) {
      const int branch[] = {j};
      auto tree = solve_augmented(quotient, children, local, ell - 1, branch, j, opts);
      if (!tree) continue;
      Cover cover = cut_spider(*tree, local.base, tree->root);
      if (static_cast<int>(cover.size()) != ell) {
        throw Error(Errc::InternalAssertion, "spider construction produced " + std::to_string(cover.size()) +
                                                 " pieces instead of " + std::to_string(ell));
      }
      return {ell, local.to_original_ids(cover)};
    }
  }
  throw Error(Errc::NoCover, "no path-spider cover found");
}

std::vector<CoverRecord> child_records(const ParseNode& node, const SolveOptions& opts) {
  std::vector<CoverRecord> out;
  out.reserve(node.children.size());
  for (const auto& child : node.children) out.push_back(compute_record(child, opts));
  return out;
}

CoverRecord compute_record(const ParseNode& node, const SolveOptions& opts) {
  if (node.is_leaf()) return leaf_record(node.vertex);
  auto kids = child_records(node, opts);
  CoverRecord rec;
  rec.size = total_size(kids);
  auto ham = compute_ham(node.quotient, kids, opts);
  auto spi = compute_spi(node.quotient, kids, opts);
  rec.ham = ham.value;
  rec.ham_cover = std::move(ham.cover);
  rec.spi = spi.value;
  rec.spi_cover = std::move(spi.cover);
  return rec;
}

}  // namespace branchwise
