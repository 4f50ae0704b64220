#include <doctest.h>

#include "branchwise/error.hpp"
#include "branchwise/graph.hpp"

using namespace branchwise;

TEST_CASE("from_edge_list builds a simple graph") {
  const std::vector<Edge> one{{0, 1}};
  Graph p2 = Graph::from_edge_list(2, one);
  CHECK(p2.vertex_count() == 2);
  CHECK(p2.edge_count() == 1);
  CHECK(p2.adjacent(0, 1));
  CHECK(p2.adjacent(1, 0));
}

TEST_CASE("from_edge_list collapses repeated pairs") {
  const std::vector<Edge> twice{{0, 1}, {1, 0}};
  Graph g = Graph::from_edge_list(3, twice);
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(2) == 0);
}

TEST_CASE("from_edge_list on a path") {
  const std::vector<Edge> es{{0, 1}, {1, 2}, {2, 3}};
  Graph g = Graph::from_edge_list(4, es);
  CHECK(g == path_graph(4));
  CHECK(g.edges() == es);
}

TEST_CASE("from_edge_list rejects bad endpoints") {
  const std::vector<Edge> out{{0, 4}};
  const std::vector<Edge> loop{{2, 2}};
  const std::vector<Edge> neg{{-1, 0}};
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InternalAssertion;
  };
  CHECK(code([&] { Graph::from_edge_list(4, out); }) == Errc::OutOfRange);
  CHECK(code([&] { Graph::from_edge_list(4, neg); }) == Errc::OutOfRange);
  CHECK(code([&] { Graph::from_edge_list(4, loop); }) == Errc::SelfLoop);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(path_graph(4)));
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK_FALSE(is_connected(Graph::from_edge_list(4, two)));
  CHECK(is_connected(Graph(1)));
  CHECK(is_connected(Graph(0)));
}

TEST_CASE("augment_join adds universal vertices") {
  auto [k3, added] = augment_join(path_graph(2), 1);
  CHECK(k3 == complete_graph(3));
  CHECK(added == std::vector<VertexId>{2});

  auto [p3, a2] = augment_join(edgeless_graph(2), 1);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.degree(2) == 2);
  CHECK_FALSE(p3.adjacent(0, 1));

  auto [big, a4] = augment_join(path_graph(4), 2);
  CHECK(big.vertex_count() == 6);
  CHECK(big.edge_count() == 11);
  CHECK_FALSE(big.adjacent(4, 5));
  CHECK(a4 == std::vector<VertexId>{4, 5});
}

TEST_CASE("augment_join with no extra vertices is the identity") {
  auto [same, added] = augment_join(cycle_graph(5), 0);
  CHECK(same == cycle_graph(5));
  CHECK(added.empty());
}

TEST_CASE("induced_subgraph") {
  const std::vector<VertexId> mid{1, 2};
  auto [e, map] = induced_subgraph(path_graph(4), mid);
  CHECK(e == path_graph(2));
  CHECK(map == mid);

  const std::vector<VertexId> all{0, 1, 2, 3};
  auto [same, id] = induced_subgraph(cycle_graph(4), all);
  CHECK(same == cycle_graph(4));

  const std::vector<VertexId> three{0, 1, 2};
  CHECK(induced_subgraph(complete_graph(4), three).first == complete_graph(3));

  const std::vector<VertexId> dup{1, 1};
  CHECK_THROWS_AS(induced_subgraph(path_graph(4), dup), Error);
}

TEST_CASE("complement and components") {
  CHECK(complement(complete_graph(4)) == edgeless_graph(4));
  CHECK(complement(path_graph(4)) == Graph::from_edge_list(4, std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}}));
  const std::vector<Edge> es{{0, 3}, {1, 4}};
  auto comps = connected_components(Graph::from_edge_list(5, es));
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<VertexId>{0, 3});
  CHECK(comps[1] == std::vector<VertexId>{1, 4});
  CHECK(comps[2] == std::vector<VertexId>{2});
}

TEST_CASE("weighted graph costs must be positive") {
  CHECK_THROWS_AS(WeightedGraph::make(path_graph(2), {1}), Error);
  CHECK_THROWS_AS(WeightedGraph::make(path_graph(2), {1, 0}), Error);
  CHECK(WeightedGraph::uniform(path_graph(3)).cost == std::vector<std::int64_t>{1, 1, 1});
}
