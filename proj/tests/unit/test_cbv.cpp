#include <doctest.h>

#include "branchwise/corpus.hpp"
#include "branchwise/error.hpp"
#include "branchwise/nd_partition.hpp"
#include "branchwise/reference.hpp"
#include "branchwise/solver.hpp"

using namespace branchwise;

TEST_CASE("a weighted path costs nothing") {
  auto wg = WeightedGraph::make(path_graph(5), {9, 3, 7, 1, 4});
  CbvAnswer a = solve_cbv(wg);
  CHECK(a.cost == 0);
  CHECK(a.tree.branch.empty());
  CHECK(a.tree.cost == 0);
}

TEST_CASE("star pays for its center") {
  auto wg = WeightedGraph::make(star_graph(3), {5, 1, 1, 1});
  CbvAnswer a = solve_cbv(wg);
  CHECK(a.cost == 5);
  CHECK(a.tree.branch == std::vector<VertexId>{0});
  CHECK(oracle_w(WeightedGraph::make(star_graph(3), {4, 1, 1, 1})).value == 4);
}

TEST_CASE("two joined stars pay for both hubs") {
  Graph g = Graph::from_edge_list(8, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {4, 6}, {4, 7}});
  auto wg = WeightedGraph::make(g, {2, 1, 1, 1, 9, 1, 1, 1});
  CHECK(oracle_w(wg).value == 11);
  CbvAnswer a = solve_cbv(wg);
  CHECK(a.cost == 11);
  CHECK(verify_spanning_tree(g, a.tree, &wg.cost).ok);
}

TEST_CASE("cheap twins carry the branching") {
  // K_{2,4}: hubs 0 and 1 are false twins; the cheaper one branches.
  std::vector<Edge> es;
  for (int h = 0; h < 2; ++h) {
    for (int l = 2; l < 6; ++l) es.emplace_back(h, l);
  }
  Graph g = Graph::from_edge_list(6, es);
  auto wg = WeightedGraph::make(g, {8, 3, 1, 1, 1, 1});
  CbvAnswer a = solve_cbv(wg);
  CHECK(a.cost == oracle_w(wg).value);
  CHECK(a.tree.branch == std::vector<VertexId>{1});
}

TEST_CASE("matches the oracle and uses class representatives") {
  Rng rng(31);
  for (int k = 0; k < 40; ++k) {
    const int n = static_cast<int>(rng.uniform(2, 8));
    Graph g = random_connected_graph(rng, n, static_cast<int>(rng.uniform(0, 50)));
    auto wg = WeightedGraph::make(g, random_costs(rng, n, 1, 10));
    CbvAnswer a = solve_cbv(wg);
    CHECK(a.cost == oracle_w(wg).value);
    CHECK(verify_spanning_tree(g, a.tree, &wg.cost).ok);
    TypePartition tp = type_partition(g);
    auto reps = min_cost_representatives(tp, wg);
    for (VertexId v : a.tree.branch) {
      CHECK(reps[static_cast<std::size_t>(tp.class_of[static_cast<std::size_t>(v)])] == v);
    }
  }
}

TEST_CASE("uniform costs reproduce the branch count") {
  Rng rng(41);
  for (int k = 0; k < 30; ++k) {
    Graph g = random_connected_graph(rng, static_cast<int>(rng.uniform(1, 8)), 30);
    CbvAnswer c = solve_cbv(WeightedGraph::uniform(g));
    CHECK(static_cast<int>(c.tree.branch.size()) == solve_mbv(g).b);
  }
}

TEST_CASE("disconnected input is rejected") {
  try {
    solve_cbv(WeightedGraph::uniform(edgeless_graph(2)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Disconnected);
  }
}
