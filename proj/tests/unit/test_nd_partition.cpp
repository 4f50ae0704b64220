#include <doctest.h>

#include "branchwise/corpus.hpp"
#include "branchwise/nd_partition.hpp"

using namespace branchwise;

namespace {

bool same_type(const Graph& g, VertexId u, VertexId v) {
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (w == u || w == v) continue;
    if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("star has a center class and an independent leaf class") {
  TypePartition tp = type_partition(star_graph(3));
  REQUIRE(tp.size() == 2);
  CHECK(tp.classes[0] == std::vector<VertexId>{0});
  CHECK(tp.classes[1] == std::vector<VertexId>{1, 2, 3});
  CHECK(tp.kind[1] == ClassKind::Independent);
  CHECK(tp.type_graph == path_graph(2));
}

TEST_CASE("K4 is one clique class") {
  TypePartition tp = type_partition(complete_graph(4));
  REQUIRE(tp.size() == 1);
  CHECK(tp.kind[0] == ClassKind::Clique);
  CHECK(tp.type_graph == Graph(1));
}

TEST_CASE("P4 has four singleton classes") {
  Graph p4 = path_graph(4);
  for (VertexId u = 0; u < 4; ++u) {
    for (VertexId v = u + 1; v < 4; ++v) CHECK_FALSE(same_type(p4, u, v));
  }
  TypePartition tp = type_partition(p4);
  CHECK(tp.size() == 4);
  CHECK(tp.type_graph == p4);
  CHECK(tp.class_of == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("classes match the pairwise type relation") {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const int n = static_cast<int>(rng.uniform(1, 9));
    Graph g = random_graph(rng, n, static_cast<int>(rng.uniform(0, 100)));
    TypePartition tp = type_partition(g);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        CHECK((tp.class_of[static_cast<std::size_t>(u)] == tp.class_of[static_cast<std::size_t>(v)]) == same_type(g, u, v));
      }
    }
    for (int c = 0; c < tp.size(); ++c) {
      const auto& cls = tp.classes[static_cast<std::size_t>(c)];
      if (cls.size() < 2) continue;
      CHECK((tp.kind[static_cast<std::size_t>(c)] == ClassKind::Clique) == g.adjacent(cls[0], cls[1]));
    }
  }
}

TEST_CASE("representatives minimise cost with ties to the smaller id") {
  // Classes {0}, {1..4}: the leaves of a star.
  TypePartition tp = type_partition(star_graph(4));
  auto uniform = min_cost_representatives(tp, WeightedGraph::uniform(star_graph(4)));
  CHECK(uniform == std::vector<VertexId>{0, 1});
  auto wg = WeightedGraph::make(star_graph(4), {4, 9, 7, 9, 3});
  CHECK(min_cost_representatives(tp, wg) == std::vector<VertexId>{0, 4});
}

TEST_CASE("class {2,5} picks the cheaper vertex") {
  // 2 and 5 are false twins attached to 0 and 1.
  Graph g = Graph::from_edge_list(6, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 5}, {1, 5}, {1, 3}, {3, 4}});
  TypePartition tp = type_partition(g);
  const int c = tp.class_of[2];
  REQUIRE(tp.classes[static_cast<std::size_t>(c)] == std::vector<VertexId>{2, 5});
  auto wg = WeightedGraph::make(g, {1, 1, 7, 1, 1, 3});
  CHECK(min_cost_representatives(tp, wg)[static_cast<std::size_t>(c)] == 5);
}

TEST_CASE("representatives agree with a direct scan") {
  Rng rng(9);
  for (int k = 0; k < 50; ++k) {
    const int n = static_cast<int>(rng.uniform(1, 9));
    Graph g = random_graph(rng, n, 50);
    auto wg = WeightedGraph::make(g, random_costs(rng, n, 1, 5));
    TypePartition tp = type_partition(g);
    auto reps = min_cost_representatives(tp, wg);
    for (int c = 0; c < tp.size(); ++c) {
      VertexId best = -1;
      for (VertexId v : tp.classes[static_cast<std::size_t>(c)]) {
        if (best < 0 || wg.cost[static_cast<std::size_t>(v)] < wg.cost[static_cast<std::size_t>(best)]) best = v;
      }
      CHECK(reps[static_cast<std::size_t>(c)] == best);
    }
  }
}
