#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "branchwise/graph.hpp"

namespace branchwise {

// Seeded generator whose derived draws depend only on raw mt19937_64 output,
// so corpora are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  // True with probability num / den.
  bool chance(std::uint64_t num, std::uint64_t den);

 private:
  std::mt19937_64 eng_;
};

// Every connected labelled graph on n vertices, in edge-subset order.
std::vector<Graph> all_connected_graphs(int n);

// Random spanning tree plus each remaining pair with probability pct / 100.
Graph random_connected_graph(Rng& rng, int n, int pct);

// Each pair independently with probability pct / 100.
Graph random_graph(Rng& rng, int n, int pct);

// Built from single vertices by random disjoint unions and complete joins.
Graph random_cograph(Rng& rng, int n);

std::vector<std::int64_t> random_costs(Rng& rng, int n, std::int64_t lo, std::int64_t hi);

}  // namespace branchwise
