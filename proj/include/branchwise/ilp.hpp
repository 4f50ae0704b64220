#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "branchwise/graph.hpp"
#include "branchwise/nd_partition.hpp"

namespace branchwise {

enum class IlpMode { Mbv, Cbv };

// Tail value marking the source s.
inline constexpr int kSource = -1;

struct Arc {
  int tail = kSource;
  int head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Arc-load program over the quotient digraph. Modules are 0-based. arcs[0] is
// (s, root); the remaining arcs are both orientations of every quotient edge,
// sorted by (tail, head).
struct IlpInstance {
  IlpMode mode = IlpMode::Mbv;
  int module_count = 0;
  int root = 0;
  std::vector<Arc> arcs;
  std::vector<char> in_branch;
  std::vector<int> capacity;
  std::vector<int> lower_bound;
  std::vector<char> equality;          // inflow must equal capacity
  std::vector<ClassKind> class_kind;   // Cbv mode only
  std::vector<std::vector<int>> in_arcs;   // arc indices by head, including (s, root)
  std::vector<std::vector<int>> out_arcs;  // arc indices by tail, modules only

  std::vector<int> branch_set() const;
};

struct LoadAssignment {
  std::vector<std::int64_t> x;  // indexed like IlpInstance::arcs
  std::vector<std::int64_t> y;
};

// Throws Errc::InconsistentBounds when some capacity is below its bound and
// Errc::OutOfRange for a bad root, a root outside a nonempty branch set, or
// mismatched vector lengths.
IlpInstance build_mbv_instance(const Graph& quotient, std::span<const int> branch, int root,
                               std::span<const int> capacity, std::span<const int> spi_lb,
                               std::span<const int> ham_lb);

// Independent classes get inflow == size; cliques get 1 <= inflow <= size.
IlpInstance build_cbv_instance(const Graph& type_graph, std::span<const ClassKind> kind,
                               std::span<const int> size, std::span<const int> branch, int root);

struct SolveOptions {
  std::int64_t node_budget = 10'000'000;
};

// Exact search over x with reachability from the root in support(x) standing
// in for the flow variables; y is rebuilt by extract_flow. Deterministic.
// Throws Errc::SearchBudgetExceeded when the node budget runs out.
std::optional<LoadAssignment> solve_feasibility(const IlpInstance& inst, const SolveOptions& opts = {});

// True iff every module is reachable from the root over arcs with x >= 1.
bool support_reaches_all(const IlpInstance& inst, std::span<const std::int64_t> x);

// Per-module totals of x over incoming / outgoing arcs (the source arc counts
// toward the root's inflow).
std::vector<std::int64_t> inflow(const IlpInstance& inst, std::span<const std::int64_t> x);
std::vector<std::int64_t> outflow(const IlpInstance& inst, std::span<const std::int64_t> x);

// Flow on a BFS tree of support(x) rooted at the root: subtree sizes on tree
// arcs, 0 elsewhere, module_count on the source arc. Throws Errc::Unreachable.
std::vector<std::int64_t> extract_flow(const IlpInstance& inst, std::span<const std::int64_t> x);

}  // namespace branchwise
