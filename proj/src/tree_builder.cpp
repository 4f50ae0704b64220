#include "branchwise/tree_builder.hpp"

#include <algorithm>
#include <string>

#include "branchwise/error.hpp"

namespace branchwise {

namespace {

[[noreturn]] void internal(const std::string& what) { throw Error(Errc::InternalAssertion, what); }

}  // namespace

std::vector<int> tree_degrees(const std::vector<VertexId>& parent) {
  std::vector<int> deg(parent.size(), 0);
  for (std::size_t v = 0; v < parent.size(); ++v) {
    const VertexId p = parent[v];
    if (p >= 0 && static_cast<std::size_t>(p) < parent.size()) {
      ++deg[v];
      ++deg[static_cast<std::size_t>(p)];
    }
  }
  return deg;
}

std::vector<VertexId> branch_vertices(const std::vector<VertexId>& parent) {
  std::vector<VertexId> out;
  auto deg = tree_degrees(parent);
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] >= 3) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

TreeBuilder::TreeBuilder(TreeInput input) : in_(std::move(input)) {
  if (in_.instance == nullptr) internal("tree builder needs an instance");
  const IlpInstance& inst = *in_.instance;
  const auto n = static_cast<std::size_t>(inst.module_count);
  const auto nv = static_cast<std::size_t>(in_.vertex_count);
  if (in_.x.size() != inst.arcs.size()) internal("load vector length differs from the arc count");
  if (in_.covers.size() != n) internal("one cover per module is required");

  auto alpha = inflow(inst, in_.x);
  module_of_.assign(nv, -1);
  piece_of_first_.assign(nv, PieceRef{});
  for (std::size_t i = 0; i < n; ++i) {
    const Cover& cover = in_.covers[i];
    if (static_cast<std::int64_t>(cover.size()) != alpha[i]) {
      internal("module " + std::to_string(i) + " has " + std::to_string(cover.size()) + " pieces but inflow " +
               std::to_string(alpha[i]));
    }
    for (std::size_t k = 0; k < cover.size(); ++k) {
      const bool want_spider = inst.in_branch[i] && k == 0;
      if (cover[k].is_spider() != want_spider) {
        internal("module " + std::to_string(i) + " piece " + std::to_string(k) + " has the wrong kind");
      }
      for (VertexId v : cover[k].vertices()) {
        if (v < 0 || static_cast<std::size_t>(v) >= nv) internal("cover vertex out of range");
        if (module_of_[static_cast<std::size_t>(v)] != -1) internal("vertex " + std::to_string(v) + " covered twice");
        module_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
      }
      piece_of_first_[static_cast<std::size_t>(cover[k].first())] = {static_cast<int>(i), static_cast<int>(k)};
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (module_of_[v] == -1) internal("vertex " + std::to_string(v) + " is in no piece");
  }

  st_.parent.assign(nv, -1);
  st_.explored.assign(nv, 0);
  st_.pending.assign(nv, 0);
  st_.adopted_via.assign(nv, -1);
  st_.alpha = alpha;
  st_.beta = outflow(inst, in_.x);
  for (std::size_t i = 0; i < n; ++i) {
    if (inst.in_branch[i]) st_.beta[i] = 1;
  }
  st_.arc_budget = in_.x;
  st_.arc_budget[0] = 0;
  root_ = in_.covers[static_cast<std::size_t>(inst.root)].at(0).first();
}

bool TreeBuilder::done() const {
  return std::all_of(st_.explored.begin(), st_.explored.end(), [](char c) { return c != 0; });
}

void TreeBuilder::mark_piece(const PathPiece& piece) {
  for (auto [p, c] : piece.edges()) st_.parent[static_cast<std::size_t>(c)] = p;
  for (VertexId v : piece.vertices()) {
    if (st_.explored[static_cast<std::size_t>(v)]) internal("vertex " + std::to_string(v) + " explored twice");
    st_.explored[static_cast<std::size_t>(v)] = 1;
  }
  --st_.alpha[static_cast<std::size_t>(module_of_[static_cast<std::size_t>(piece.first())])];
}

std::optional<VertexId> TreeBuilder::free_endpoint(int module, bool allow_pending) const {
  for (const PathPiece& piece : in_.covers[static_cast<std::size_t>(module)]) {
    const auto f = static_cast<std::size_t>(piece.first());
    if (st_.explored[f]) continue;
    if (st_.pending[f] && !allow_pending) continue;
    return piece.first();
  }
  return std::nullopt;
}

void TreeBuilder::adopt(VertexId v, VertexId f, int arc) {
  const auto sf = static_cast<std::size_t>(f);
  st_.parent[sf] = v;
  --st_.arc_budget[static_cast<std::size_t>(arc)];
  st_.adopted_via[sf] = arc;
  if (st_.pending[sf]) {
    st_.pending[sf] = 0;
    st_.explored[sf] = 1;
    --st_.alpha[static_cast<std::size_t>(module_of_[sf])];
    return;
  }
  const PieceRef ref = piece_of_first_[sf];
  const PathPiece& piece = in_.covers[static_cast<std::size_t>(ref.module)][static_cast<std::size_t>(ref.index)];
  mark_piece(piece);
  st_.queue.push_back(piece.second());
}

void TreeBuilder::explore(VertexId u) {
  const IlpInstance& inst = *in_.instance;
  const auto su = static_cast<std::size_t>(u);
  if (su >= piece_of_first_.size() || piece_of_first_[su].module == -1) {
    internal("exploration must start at a first endpoint");
  }
  if (st_.explored[su] || st_.pending[su]) internal("exploration start is already in the forest");
  const PieceRef ref = piece_of_first_[su];
  const PathPiece& start = in_.covers[static_cast<std::size_t>(ref.module)][static_cast<std::size_t>(ref.index)];
  mark_piece(start);
  st_.queue.push_back(start.second());

  while (!st_.queue.empty()) {
    const VertexId v = st_.queue.front();
    st_.queue.pop_front();
    const auto i = static_cast<std::size_t>(module_of_[static_cast<std::size_t>(v)]);
    if (!inst.in_branch[i] && st_.beta[i] >= 1) {
      bool adopted = false;
      for (int a : inst.out_arcs[i]) {
        if (st_.arc_budget[static_cast<std::size_t>(a)] < 1) continue;
        auto f = free_endpoint(inst.arcs[static_cast<std::size_t>(a)].head, true);
        if (!f) continue;
        adopt(v, *f, a);
        adopted = true;
        break;
      }
      if (!adopted) {
        throw Error(Errc::NoAdoptableEndpoint, "vertex " + std::to_string(v) + " of module " + std::to_string(i) +
                                                   " has no endpoint left to adopt");
      }
      --st_.beta[i];
    } else if (inst.in_branch[i] && st_.beta[i] == 1 && v == in_.covers[i][0].center) {
      st_.branch.push_back(v);
      for (int a : inst.out_arcs[i]) {
        const auto sa = static_cast<std::size_t>(a);
        while (st_.arc_budget[sa] > 0) {
          auto f = free_endpoint(inst.arcs[sa].head, true);
          if (!f) {
            throw Error(Errc::NoAdoptableEndpoint, "branch vertex " + std::to_string(v) + " cannot fill arc to module " +
                                                       std::to_string(inst.arcs[sa].head));
          }
          adopt(v, *f, a);
        }
      }
      st_.beta[i] = 0;
    }
  }
}

void TreeBuilder::start() {
  if (st_.explored[static_cast<std::size_t>(root_)]) internal("exploration already started");
  explore(root_);
}

bool TreeBuilder::step() {
  if (done()) return false;
  if (++rounds_ > 4 * in_.vertex_count + 4) throw Error(Errc::StuckExploration, "reattachment rounds do not terminate");
  const IlpInstance& inst = *in_.instance;
  for (int j = 0; j < inst.module_count; ++j) {
    if (st_.beta[static_cast<std::size_t>(j)] < 1) continue;
    auto u = free_endpoint(j, false);
    if (!u) continue;
    for (const PathPiece& piece : in_.covers[static_cast<std::size_t>(j)]) {
      const VertexId w = piece.first();
      const auto sw = static_cast<std::size_t>(w);
      if (!st_.explored[sw]) continue;
      const auto su = static_cast<std::size_t>(*u);
      // Swapping out the root hands the root role to u.
      if (w == root_) root_ = *u;
      st_.parent[su] = st_.parent[sw];
      st_.adopted_via[su] = st_.adopted_via[sw];
      st_.parent[sw] = -1;
      st_.adopted_via[sw] = -1;
      st_.explored[sw] = 0;
      st_.pending[sw] = 1;
      ++st_.alpha[static_cast<std::size_t>(j)];
      explore(*u);
      return true;
    }
  }
  throw Error(Errc::StuckExploration, "no module can restart the exploration");
}

SpanningTreeResult TreeBuilder::result() const {
  if (!done()) internal("tree requested before exploration finished");
  SpanningTreeResult out;
  out.parent = st_.parent;
  out.root = root_;
  for (std::size_t v = 0; v < out.parent.size(); ++v) {
    const bool is_root = static_cast<VertexId>(v) == root_;
    if ((out.parent[v] == -1) != is_root) internal("vertex " + std::to_string(v) + " has an inconsistent parent");
  }
  out.branch = branch_vertices(out.parent);
  return out;
}

SpanningTreeResult build_tree(TreeInput input) {
  TreeBuilder builder(std::move(input));
  builder.start();
  while (builder.step()) {
  }
  return builder.result();
}

}  // namespace branchwise
