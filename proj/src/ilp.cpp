#include "branchwise/ilp.hpp"

#include <algorithm>
#include <string>

#include "branchwise/error.hpp"

namespace branchwise {

namespace {

IlpInstance skeleton(const Graph& quotient, std::span<const int> branch, int root) {
  const int n = quotient.vertex_count();
  if (n < 1) throw Error(Errc::OutOfRange, "instance needs at least one module");
  if (root < 0 || root >= n) throw Error(Errc::OutOfRange, "root module " + std::to_string(root) + " out of range");
  IlpInstance inst;
  inst.module_count = n;
  inst.root = root;
  inst.in_branch.assign(static_cast<std::size_t>(n), 0);
  for (int i : branch) {
    if (i < 0 || i >= n) throw Error(Errc::OutOfRange, "branch module " + std::to_string(i) + " out of range");
    if (inst.in_branch[static_cast<std::size_t>(i)]) throw Error(Errc::OutOfRange, "branch module listed twice");
    inst.in_branch[static_cast<std::size_t>(i)] = 1;
  }
  if (!branch.empty() && !inst.in_branch[static_cast<std::size_t>(root)]) {
    throw Error(Errc::OutOfRange, "root module must belong to a nonempty branch set");
  }
  inst.arcs.push_back({kSource, root});
  for (int t = 0; t < n; ++t) {
    for (int h : quotient.neighbors(t)) inst.arcs.push_back({t, h});
  }
  inst.in_arcs.assign(static_cast<std::size_t>(n), {});
  inst.out_arcs.assign(static_cast<std::size_t>(n), {});
  for (std::size_t a = 0; a < inst.arcs.size(); ++a) {
    const Arc& arc = inst.arcs[a];
    inst.in_arcs[static_cast<std::size_t>(arc.head)].push_back(static_cast<int>(a));
    if (arc.tail != kSource) inst.out_arcs[static_cast<std::size_t>(arc.tail)].push_back(static_cast<int>(a));
  }
  return inst;
}

void check_bounds(const IlpInstance& inst) {
  for (int i = 0; i < inst.module_count; ++i) {
    const auto si = static_cast<std::size_t>(i);
    if (inst.lower_bound[si] < 1 || inst.capacity[si] < inst.lower_bound[si]) {
      throw Error(Errc::InconsistentBounds, "module " + std::to_string(i) + " has capacity " +
                                                std::to_string(inst.capacity[si]) + " below its bound " +
                                                std::to_string(inst.lower_bound[si]));
    }
  }
}

void check_length(std::size_t got, int n, const char* what) {
  if (got != static_cast<std::size_t>(n)) throw Error(Errc::OutOfRange, std::string(what) + " has the wrong length");
}

class Search {
 public:
  Search(const IlpInstance& inst, const SolveOptions& opts) : inst_(inst), budget_(opts.node_budget) {
    const auto n = static_cast<std::size_t>(inst.module_count);
    const auto m = inst.arcs.size();
    x_.assign(m, 0);
    ub_.assign(m, 0);
    in_.assign(n, 0);
    out_.assign(n, 0);
    rem_in_.assign(n, 0);
    for (std::size_t a = 1; a < m; ++a) {
      const Arc& arc = inst.arcs[a];
      std::int64_t cap = inst.capacity[static_cast<std::size_t>(arc.head)];
      if (!inst.in_branch[static_cast<std::size_t>(arc.tail)]) {
        cap = std::min<std::int64_t>(cap, inst.capacity[static_cast<std::size_t>(arc.tail)]);
      }
      ub_[a] = cap;
      rem_in_[static_cast<std::size_t>(arc.head)] += cap;
    }
    x_[0] = 1;
    in_[static_cast<std::size_t>(inst.root)] = 1;
  }

  std::optional<std::vector<std::int64_t>> run() {
    for (int i = 0; i < inst_.module_count; ++i) {
      const auto si = static_cast<std::size_t>(i);
      if (in_[si] > inst_.capacity[si] || in_[si] + rem_in_[si] < inst_.lower_bound[si]) return std::nullopt;
    }
    if (!reachable(0)) return std::nullopt;
    if (dfs(1)) return x_;
    return std::nullopt;
  }

 private:
  // Every module reachable from the root over arcs that are positive or not
  // yet decided (index >= first_open).
  bool reachable(std::size_t first_open) const {
    const auto n = static_cast<std::size_t>(inst_.module_count);
    std::vector<char> seen(n, 0);
    std::vector<int> stack{inst_.root};
    seen[static_cast<std::size_t>(inst_.root)] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int a : inst_.out_arcs[static_cast<std::size_t>(t)]) {
        const auto sa = static_cast<std::size_t>(a);
        if (sa < first_open && x_[sa] == 0) continue;
        const auto h = static_cast<std::size_t>(inst_.arcs[sa].head);
        if (!seen[h]) {
          seen[h] = 1;
          ++count;
          stack.push_back(static_cast<int>(h));
        }
      }
    }
    return count == n;
  }

  bool leaf_ok() const {
    for (int i = 0; i < inst_.module_count; ++i) {
      const auto si = static_cast<std::size_t>(i);
      if (in_[si] < inst_.lower_bound[si] || in_[si] > inst_.capacity[si]) return false;
      if (inst_.equality[si] && in_[si] != inst_.capacity[si]) return false;
      if (!inst_.in_branch[si] && out_[si] > in_[si]) return false;
    }
    return reachable(inst_.arcs.size());
  }

  bool dfs(std::size_t k) {
    if (k == inst_.arcs.size()) return leaf_ok();
    const Arc& arc = inst_.arcs[k];
    const auto t = static_cast<std::size_t>(arc.tail);
    const auto h = static_cast<std::size_t>(arc.head);
    rem_in_[h] -= ub_[k];
    std::int64_t hi = std::min<std::int64_t>(ub_[k], inst_.capacity[h] - in_[h]);
    const bool tail_free = inst_.in_branch[t] != 0;
    if (!tail_free) {
      hi = std::min<std::int64_t>(hi, inst_.capacity[t] - out_[t]);
      hi = std::min<std::int64_t>(hi, in_[t] + rem_in_[t] - out_[t]);
    }
    bool found = false;
    for (std::int64_t v = hi; v >= 0 && !found; --v) {
      if (++nodes_ > budget_) {
        throw Error(Errc::SearchBudgetExceeded, "search budget of " + std::to_string(budget_) + " nodes exceeded");
      }
      x_[k] = v;
      in_[h] += v;
      out_[t] += v;
      bool ok = in_[h] + rem_in_[h] >= inst_.lower_bound[h];
      if (ok && !inst_.in_branch[h]) ok = out_[h] <= in_[h] + rem_in_[h];
      if (ok && v == 0) ok = reachable(k + 1);
      if (ok) found = dfs(k + 1);
      if (!found) {
        in_[h] -= v;
        out_[t] -= v;
        x_[k] = 0;
      }
    }
    rem_in_[h] += ub_[k];
    return found;
  }

  const IlpInstance& inst_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<std::int64_t> x_, ub_, in_, out_, rem_in_;
};

}  // namespace

std::vector<int> IlpInstance::branch_set() const {
  std::vector<int> out;
  for (int i = 0; i < module_count; ++i) {
    if (in_branch[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

IlpInstance build_mbv_instance(const Graph& quotient, std::span<const int> branch, int root,
                               std::span<const int> capacity, std::span<const int> spi_lb,
                               std::span<const int> ham_lb) {
  const int n = quotient.vertex_count();
  check_length(capacity.size(), n, "capacity");
  check_length(spi_lb.size(), n, "spi bounds");
  check_length(ham_lb.size(), n, "ham bounds");
  IlpInstance inst = skeleton(quotient, branch, root);
  inst.mode = IlpMode::Mbv;
  inst.capacity.assign(capacity.begin(), capacity.end());
  inst.equality.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    inst.lower_bound.push_back(inst.in_branch[si] ? spi_lb[si] : ham_lb[si]);
  }
  check_bounds(inst);
  return inst;
}

IlpInstance build_cbv_instance(const Graph& type_graph, std::span<const ClassKind> kind,
                               std::span<const int> size, std::span<const int> branch, int root) {
  const int n = type_graph.vertex_count();
  check_length(kind.size(), n, "class kinds");
  check_length(size.size(), n, "class sizes");
  IlpInstance inst = skeleton(type_graph, branch, root);
  inst.mode = IlpMode::Cbv;
  inst.class_kind.assign(kind.begin(), kind.end());
  inst.capacity.assign(size.begin(), size.end());
  for (int i = 0; i < n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    const bool independent = kind[si] == ClassKind::Independent;
    inst.equality.push_back(independent ? 1 : 0);
    inst.lower_bound.push_back(independent ? size[si] : 1);
  }
  check_bounds(inst);
  return inst;
}

std::optional<LoadAssignment> solve_feasibility(const IlpInstance& inst, const SolveOptions& opts) {
  Search search(inst, opts);
  auto x = search.run();
  if (!x) return std::nullopt;
  LoadAssignment out;
  out.y = extract_flow(inst, *x);
  out.x = std::move(*x);
  return out;
}

bool support_reaches_all(const IlpInstance& inst, std::span<const std::int64_t> x) {
  const auto n = static_cast<std::size_t>(inst.module_count);
  if (x.size() != inst.arcs.size() || x[0] < 1) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{inst.root};
  seen[static_cast<std::size_t>(inst.root)] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (int a : inst.out_arcs[static_cast<std::size_t>(t)]) {
      const auto h = static_cast<std::size_t>(inst.arcs[static_cast<std::size_t>(a)].head);
      if (x[static_cast<std::size_t>(a)] >= 1 && !seen[h]) {
        seen[h] = 1;
        ++count;
        stack.push_back(static_cast<int>(h));
      }
    }
  }
  return count == n;
}

std::vector<std::int64_t> inflow(const IlpInstance& inst, std::span<const std::int64_t> x) {
  std::vector<std::int64_t> in(static_cast<std::size_t>(inst.module_count), 0);
  for (std::size_t a = 0; a < inst.arcs.size(); ++a) in[static_cast<std::size_t>(inst.arcs[a].head)] += x[a];
  return in;
}

std::vector<std::int64_t> outflow(const IlpInstance& inst, std::span<const std::int64_t> x) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(inst.module_count), 0);
  for (std::size_t a = 0; a < inst.arcs.size(); ++a) {
    if (inst.arcs[a].tail != kSource) out[static_cast<std::size_t>(inst.arcs[a].tail)] += x[a];
  }
  return out;
}

std::vector<std::int64_t> extract_flow(const IlpInstance& inst, std::span<const std::int64_t> x) {
  const auto n = static_cast<std::size_t>(inst.module_count);
  if (x.size() != inst.arcs.size()) throw Error(Errc::OutOfRange, "load vector has the wrong length");
  std::vector<int> via(n, -1);  // BFS tree arc into each module
  std::vector<int> order{inst.root};
  via[static_cast<std::size_t>(inst.root)] = 0;
  for (std::size_t q = 0; q < order.size(); ++q) {
    for (int a : inst.out_arcs[static_cast<std::size_t>(order[q])]) {
      const auto h = static_cast<std::size_t>(inst.arcs[static_cast<std::size_t>(a)].head);
      if (x[static_cast<std::size_t>(a)] >= 1 && via[h] == -1) {
        via[h] = a;
        order.push_back(static_cast<int>(h));
      }
    }
  }
  if (order.size() != n) throw Error(Errc::Unreachable, "support of x does not reach every module from the root");
  std::vector<std::int64_t> subtree(n, 1);
  std::vector<std::int64_t> y(inst.arcs.size(), 0);
  for (std::size_t q = order.size(); q-- > 1;) {
    const auto v = static_cast<std::size_t>(order[q]);
    const auto a = static_cast<std::size_t>(via[v]);
    y[a] = subtree[v];
    subtree[static_cast<std::size_t>(inst.arcs[a].tail)] += subtree[v];
  }
  y[0] = static_cast<std::int64_t>(n);
  return y;
}

}  // namespace branchwise
