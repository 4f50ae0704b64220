#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "branchwise/cover.hpp"
#include "branchwise/graph.hpp"
#include "branchwise/ilp.hpp"
#include "branchwise/tree_builder.hpp"

namespace branchwise {

inline constexpr int kDefaultOracleCap = 9;
inline constexpr int kDefaultCycleRankCap = 3;

// The tree oracles also accept larger graphs whose cycle rank m - n + 1 is at
// most max_cycle_rank, since those have few spanning trees. The cover oracles
// only look at max_vertices.
struct OracleOptions {
  int max_vertices = kDefaultOracleCap;
  int max_cycle_rank = kDefaultCycleRankCap;
};

struct OracleTree {
  std::int64_t value = 0;  // branch count or branch cost
  SpanningTreeResult tree;
};

// Exhaustive spanning-tree enumeration minimising the number of branch
// vertices. When `prefer` is given, the returned witness is the first optimal
// tree it accepts (falling back to any optimal tree). Throws Errc::TooLarge
// above the cap and Errc::Disconnected for disconnected input.
OracleTree oracle_b(const Graph& g, const OracleOptions& opts = {},
                    const std::function<bool(const SpanningTreeResult&)>& prefer = {});

// Same enumeration with the total branch-vertex cost as objective.
OracleTree oracle_w(const WeightedGraph& wg, const OracleOptions& opts = {});

// Fewest paths partitioning V, by subset dynamic programming.
int oracle_ham(const Graph& g, const OracleOptions& opts = {});

// Fewest pieces in a cover by one spider plus paths.
int oracle_spi(const Graph& g, const OracleOptions& opts = {});

struct Diagnostics {
  bool ok = true;
  std::string failure;  // name of the first violated check
  std::string detail;

  static Diagnostics pass() { return {}; }
  static Diagnostics fail(std::string name, std::string detail) { return {false, std::move(name), std::move(detail)}; }
};

// Checks parent edges against g, a single root, acyclicity, coverage, the
// branch set and, when present, the cost.
Diagnostics verify_spanning_tree(const Graph& g, const SpanningTreeResult& t,
                                 const std::vector<std::int64_t>* cost = nullptr);

enum class CoverKind { PathSpider, Paths };

// Checks piece shape, adjacency along pieces, disjointness, coverage and the
// spider count (exactly one for PathSpider, none for Paths).
Diagnostics verify_cover(const Graph& g, const Cover& cover, CoverKind kind);

// Literal replay of every constraint of the instance's program on (x, y).
Diagnostics replay_constraints(const IlpInstance& inst, const LoadAssignment& a);

// Whether some integral y satisfies the flow constraints for the given x:
// source supply module_count, unit demand per module, y <= module_count * x.
// Decided with an augmenting-path max flow.
bool flow_exists(const IlpInstance& inst, const std::vector<std::int64_t>& x);

}  // namespace branchwise
