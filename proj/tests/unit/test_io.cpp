#include <doctest.h>

#include "branchwise/error.hpp"
#include "branchwise/io.hpp"
#include "branchwise/solver.hpp"

using namespace branchwise;

namespace {

Errc error_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InternalAssertion;
}

}  // namespace

TEST_CASE("edge list") {
  ParsedGraph p = parse_graph("2 1\n0 1\n", GraphFormat::EdgeList);
  CHECK(p.wg.graph == path_graph(2));
  CHECK_FALSE(p.weighted);
  CHECK(parse_graph("2 1\n0 1\n").wg.graph == path_graph(2));
}

TEST_CASE("DIMACS is 1-based") {
  ParsedGraph p = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::Dimacs);
  CHECK(p.wg.graph == path_graph(3));
  CHECK(detect_format("c hello\np edge 3 2\ne 1 2\ne 2 3\n") == GraphFormat::Dimacs);
  ParsedGraph w = parse_graph("p edge 2 1\ne 1 2\nn 2 6\n");
  CHECK(w.weighted);
  CHECK(w.wg.cost == std::vector<std::int64_t>{1, 6});
}

TEST_CASE("cost lines default unlisted vertices to 1") {
  ParsedGraph p = parse_graph("3 2\n0 1\n1 2\nw 0 5\n");
  CHECK(p.weighted);
  CHECK(p.wg.cost == std::vector<std::int64_t>{5, 1, 1});
}

TEST_CASE("comments are skipped") {
  ParsedGraph p = parse_graph("# a path\n3 2\n0 1 # first\n1 2\n");
  CHECK(p.wg.graph == path_graph(3));
}

TEST_CASE("malformed input") {
  CHECK(error_code([] { parse_graph("2 1\n0 x\n"); }) == Errc::ParseError);
  CHECK(error_code([] { parse_graph("2 2\n0 1\n"); }) == Errc::ParseError);
  CHECK(error_code([] { parse_graph("2 1\n0 2\n"); }) == Errc::OutOfRange);
  CHECK(error_code([] { parse_graph("2 1\n1 1\n"); }) == Errc::SelfLoop);
  CHECK(error_code([] { parse_graph("2 1\n0 1\nw 0 0\n"); }) == Errc::ParseError);
  CHECK(error_code([] { parse_graph("p edge 2 1\ne 0 1\n"); }) == Errc::OutOfRange);
  CHECK(error_code([] { parse_graph("e 1 2\n", GraphFormat::Dimacs); }) == Errc::ParseError);
  CHECK(error_code([] { parse_graph(""); }) == Errc::ParseError);
  try {
    parse_graph("3 2\n0 1\n1 two\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("edge list round trip") {
  auto wg = WeightedGraph::make(cycle_graph(4), {1, 2, 3, 4});
  ParsedGraph back = parse_graph(to_edge_list(wg, true));
  CHECK(back.wg.graph == wg.graph);
  CHECK(back.wg.cost == wg.cost);
}

TEST_CASE("tree JSON") {
  MbvAnswer a = solve_mbv(path_graph(3));
  Json j = tree_to_json(a.tree);
  CHECK(j["branch"] == Json::array());
  CHECK(j["b"] == 0);
  CHECK(j.dump() == R"({"root":0,"parent":[null,0,1],"branch":[],"b":0})");
  SpanningTreeResult back = tree_from_json(j);
  CHECK(back.parent == a.tree.parent);
  CHECK(back.root == a.tree.root);

  SpanningTreeResult priced = a.tree;
  priced.cost = 0;
  CHECK(tree_to_json(priced).contains("cost"));
  CHECK_FALSE(tree_to_json(priced).contains("b"));
  CHECK(error_code([] { tree_from_json(Json::parse(R"({"parent":[null]})")); }) == Errc::ParseError);
}

TEST_CASE("cover JSON") {
  CoverResult r = solve_psc(star_graph(3));
  Json j = cover_to_json(r.cover);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["kind"] == "spider");
  CHECK(cover_from_json(j) == r.cover);
  Cover paths{PathPiece::make_path({0, 1}), PathPiece::make_path({2})};
  CHECK(cover_to_json(paths).dump() == R"([{"kind":"path","vertices":[0,1]},{"kind":"path","vertices":[2]}])");
  CHECK(cover_from_json(cover_to_json(paths)) == paths);
  CHECK(error_code([] { cover_from_json(Json::parse(R"([{"kind":"blob"}])")); }) == Errc::ParseError);
}

TEST_CASE("parse tree JSON") {
  Json j = parse_tree_to_json(decompose(path_graph(4)));
  CHECK(j["kind"] == "prime");
  CHECK(j["quotient_edges"].dump() == "[[0,1],[1,2],[2,3]]");
  CHECK(j["children"].size() == 4);
  CHECK(j["children"][2].dump() == R"({"kind":"leaf","vertex":2})");
}
