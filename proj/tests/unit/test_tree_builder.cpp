#include <doctest.h>

#include <algorithm>

#include "branchwise/error.hpp"
#include "branchwise/ilp.hpp"
#include "branchwise/reference.hpp"
#include "branchwise/tree_builder.hpp"

using namespace branchwise;

namespace {

Cover singletons(std::initializer_list<VertexId> vs) {
  Cover c;
  for (VertexId v : vs) c.push_back(PathPiece::make_path({v}));
  return c;
}

// Modules r = {0}, a = {1, 2} (independent), y = {3}, z = {4}; quotient is a
// star centered at a. With one unit of load on a -> z and z -> a, the second
// vertex of a must replace the first under the root, and the first is later
// adopted back by 4.
struct Reattach {
  Graph g = Graph::from_edge_list(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
  IlpInstance inst;
  TreeInput input;

  Reattach() {
    const std::vector<int> branch{0};
    const std::vector<int> cap{1, 2, 1, 1};
    Graph q = Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}});
    inst = build_mbv_instance(q, branch, 0, cap, cap, cap);
    input.vertex_count = 5;
    input.instance = &inst;
    // (s,0) (0,1) (1,0) (1,2) (1,3) (2,1) (3,1)
    input.x = {1, 1, 0, 1, 1, 0, 1};
    input.covers = {Cover{PathPiece::make_spider(0, {})}, singletons({1, 2}), singletons({3}), singletons({4})};
  }
};

}  // namespace

TEST_CASE("star from a branch center and an independent class") {
  const std::vector<ClassKind> kind{ClassKind::Clique, ClassKind::Independent};
  const std::vector<int> size{1, 3};
  const std::vector<int> branch{0};
  IlpInstance inst = build_cbv_instance(path_graph(2), kind, size, branch, 0);
  TreeInput in{4, &inst, {1, 3, 0}, {Cover{PathPiece::make_spider(0, {})}, singletons({1, 2, 3})}};
  TreeBuilder b(in);
  b.start();
  // The first exploration already fills every arc out of the center.
  CHECK(b.state().branch == std::vector<VertexId>{0});
  CHECK(b.done());
  SpanningTreeResult t = b.result();
  CHECK(t.parent == std::vector<VertexId>{-1, 0, 0, 0});
  CHECK(t.branch == std::vector<VertexId>{0});
  CHECK(verify_spanning_tree(star_graph(3), t).ok);
}

TEST_CASE("single edge without branch modules") {
  const std::vector<int> one{1, 1};
  IlpInstance inst = build_mbv_instance(path_graph(2), {}, 0, one, one, one);
  TreeBuilder b(TreeInput{2, &inst, {1, 1, 0}, {singletons({0}), singletons({1})}});
  b.start();
  // Module 1 has no outgoing duty, so 1 is a leaf when dequeued.
  CHECK(b.state().beta[1] == 0);
  CHECK(b.state().queue.empty());
  CHECK(b.done());
  SpanningTreeResult t = b.result();
  CHECK(t.parent == std::vector<VertexId>{-1, 0});
  CHECK(t.branch.empty());
}

TEST_CASE("C5 with singleton modules gives a Hamiltonian path") {
  Graph c5 = cycle_graph(5);
  const std::vector<int> one{1, 1, 1, 1, 1};
  IlpInstance inst = build_mbv_instance(c5, {}, 0, one, one, one);
  auto a = solve_feasibility(inst);
  REQUIRE(a);
  SpanningTreeResult t = build_tree(TreeInput{5, &inst, a->x, {singletons({0}), singletons({1}), singletons({2}),
                                                              singletons({3}), singletons({4})}});
  CHECK(t.branch.empty());
  CHECK(verify_spanning_tree(c5, t).ok);
  auto deg = tree_degrees(t.parent);
  CHECK(std::count(deg.begin(), deg.end(), 1) == 2);
}

TEST_CASE("reattachment moves a first endpoint to the pending set") {
  Reattach r;
  TreeBuilder b(r.input);
  b.start();
  const ExplorationState& s = b.state();
  // 0 fills (r, a) with 1; 1 adopts 3 over (a, y); (a, z) is still owed.
  CHECK(s.branch == std::vector<VertexId>{0});
  CHECK(s.parent[1] == 0);
  CHECK(s.parent[3] == 1);
  CHECK_FALSE(s.explored[2]);
  CHECK_FALSE(s.explored[4]);
  CHECK(s.beta[1] == 1);
  CHECK_FALSE(b.done());

  REQUIRE(b.step());
  // 2 took 1's place under 0, adopted 4, and 4 reattached 1 without exploring it again.
  CHECK(s.parent[2] == 0);
  CHECK(s.parent[4] == 2);
  CHECK(s.parent[1] == 4);
  CHECK(s.parent[3] == 1);
  CHECK_FALSE(s.pending[1]);
  CHECK(s.queue.empty());
  CHECK(b.done());
  CHECK_FALSE(b.step());

  SpanningTreeResult t = b.result();
  CHECK(t.root == 0);
  CHECK(verify_spanning_tree(r.g, t).ok);
  CHECK(t.branch.empty());
}

TEST_CASE("input validation") {
  Reattach r;
  TreeInput wrong_size = r.input;
  wrong_size.covers[1] = singletons({1});
  CHECK_THROWS_AS(TreeBuilder{wrong_size}, Error);

  TreeInput overlap = r.input;
  overlap.covers[3] = singletons({3});
  CHECK_THROWS_AS(TreeBuilder{overlap}, Error);

  TreeInput misplaced = r.input;
  misplaced.covers[2] = Cover{PathPiece::make_spider(3, {})};
  CHECK_THROWS_AS(TreeBuilder{misplaced}, Error);
}

TEST_CASE("tree helpers") {
  const std::vector<VertexId> star{-1, 0, 0, 0, 1};
  CHECK(tree_degrees(star) == std::vector<int>{3, 2, 1, 1, 1});
  CHECK(branch_vertices(star) == std::vector<VertexId>{0});
}
