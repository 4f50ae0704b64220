#include <doctest.h>

#include "branchwise/corpus.hpp"
#include "branchwise/error.hpp"
#include "branchwise/reference.hpp"
#include "branchwise/solver.hpp"

using namespace branchwise;

namespace {

// Center 0 with three legs of two vertices each.
Graph spider3x2() {
  return Graph::from_edge_list(7, std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

Errc error_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InternalAssertion;
}

}  // namespace

TEST_CASE("paths have no branch vertices") {
  for (int n = 1; n <= 9; ++n) {
    MbvAnswer a = solve_mbv(path_graph(n));
    CHECK(a.b == 0);
    CHECK(a.tree.branch.empty());
    CHECK(verify_spanning_tree(path_graph(n), a.tree).ok);
  }
}

TEST_CASE("star K_{1,4} has its center as the only branch vertex") {
  MbvAnswer a = solve_mbv(star_graph(4));
  CHECK(a.b == 1);
  CHECK(a.tree.branch == std::vector<VertexId>{0});
}

TEST_CASE("three-legged spider") {
  CHECK(oracle_b(spider3x2()).value == 1);
  MbvAnswer a = solve_mbv(spider3x2());
  CHECK(a.b == 1);
  CHECK(a.tree.branch == std::vector<VertexId>{0});
  CHECK(verify_spanning_tree(spider3x2(), a.tree).ok);
}

TEST_CASE("disconnected input is rejected") {
  CHECK(error_code([] { solve_mbv(edgeless_graph(3)); }) == Errc::Disconnected);
}

TEST_CASE("complete multipartite and cycle families") {
  CHECK(solve_mbv(cycle_graph(7)).b == 0);
  CHECK(solve_mbv(complete_graph(6)).b == 0);
  // K_{2,5}: two hubs, five leaves; the oracle finds one branch vertex.
  std::vector<Edge> es;
  for (int h = 0; h < 2; ++h) {
    for (int l = 2; l < 7; ++l) es.emplace_back(h, l);
  }
  Graph k25 = Graph::from_edge_list(7, es);
  CHECK(oracle_b(k25).value == 1);
  MbvAnswer a = solve_mbv(k25);
  CHECK(a.b == 1);
  CHECK(verify_spanning_tree(k25, a.tree).ok);
}

TEST_CASE("branch vertices sit in distinct root modules") {
  Rng rng(17);
  for (int k = 0; k < 40; ++k) {
    const int n = static_cast<int>(rng.uniform(2, 8));
    Graph g = random_connected_graph(rng, n, static_cast<int>(rng.uniform(0, 40)));
    MbvAnswer a = solve_mbv(g);
    CHECK(a.b == oracle_b(g).value);
    CHECK(verify_spanning_tree(g, a.tree).ok);
    CHECK(static_cast<int>(a.branch_modules.size()) == a.b);
  }
}

TEST_CASE("path-spider covers") {
  CoverResult s = solve_psc(star_graph(3));
  CHECK(s.value == 1);
  REQUIRE(s.cover.size() == 1);
  CHECK(s.cover[0].is_spider());
  CHECK(solve_psc(edgeless_graph(5)).value == 5);

  Graph triangles = Graph::from_edge_list(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(oracle_spi(triangles) == 2);
  CoverResult t = solve_psc(triangles);
  CHECK(t.value == 2);
  CHECK(verify_cover(triangles, t.cover, CoverKind::PathSpider).ok);
}

TEST_CASE("path partitions") {
  CoverResult k4 = solve_pp(complete_graph(4));
  CHECK(k4.value == 1);
  CHECK(verify_cover(complete_graph(4), k4.cover, CoverKind::Paths).ok);
  CHECK(oracle_ham(star_graph(3)) == 2);
  CHECK(solve_pp(star_graph(3)).value == 2);
  CHECK(solve_pp(edgeless_graph(5)).value == 5);
  CHECK(solve_pp(Graph(1)).value == 1);
}

TEST_CASE("a tiny budget fails loudly") {
  CHECK(error_code([] { solve_mbv(spider3x2(), SolveOptions{1}); }) == Errc::SearchBudgetExceeded);
}

TEST_CASE("answers are deterministic") {
  Rng rng(99);
  Graph g = random_connected_graph(rng, 8, 30);
  MbvAnswer a = solve_mbv(g);
  MbvAnswer b = solve_mbv(g);
  CHECK(a.tree.parent == b.tree.parent);
  CHECK(a.tree.root == b.tree.root);
}
