#include "branchwise/io.hpp"

#include <sstream>

#include "branchwise/error.hpp"

namespace branchwise {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::int64_t to_int(const std::string& s, int line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    parse_fail(line, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) parse_fail(line, "expected an integer, got '" + s + "'");
  return v;
}

int to_vertex(const std::string& s, int line, std::int64_t offset, std::int64_t n) {
  const std::int64_t v = to_int(s, line) - offset;
  if (v < 0 || v >= n) {
    throw Error(Errc::OutOfRange, "line " + std::to_string(line) + ": vertex " + s + " out of range");
  }
  return static_cast<int>(v);
}

struct Builder {
  std::int64_t n = -1;
  std::vector<Edge> edges;
  std::vector<std::int64_t> cost;
  bool weighted = false;

  void header(std::int64_t count, int line) {
    if (n >= 0) parse_fail(line, "second header");
    if (count < 0 || count > 1'000'000) parse_fail(line, "bad vertex count");
    n = count;
    cost.assign(static_cast<std::size_t>(n), 1);
  }
  void set_cost(int v, std::int64_t c, int line) {
    if (c < 1) parse_fail(line, "vertex costs must be positive");
    cost[static_cast<std::size_t>(v)] = c;
    weighted = true;
  }
  ParsedGraph finish() {
    if (n < 0) throw Error(Errc::ParseError, "missing header");
    for (auto [u, v] : edges) {
      if (u == v) throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(u));
    }
    return {WeightedGraph::make(Graph::from_edge_list(static_cast<int>(n), edges), cost), weighted};
  }
};

ParsedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Builder b;
  std::int64_t expected = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto t = tokens(line);
    if (t.empty()) continue;
    if (b.n < 0) {
      if (t.size() != 2) parse_fail(lineno, "header must be 'n m'");
      b.header(to_int(t[0], lineno), lineno);
      expected = to_int(t[1], lineno);
      if (expected < 0) parse_fail(lineno, "bad edge count");
      continue;
    }
    if (t[0] == "w") {
      if (t.size() != 3) parse_fail(lineno, "cost line must be 'w v c'");
      b.set_cost(to_vertex(t[1], lineno, 0, b.n), to_int(t[2], lineno), lineno);
      continue;
    }
    if (t.size() != 2) parse_fail(lineno, "edge line must be 'u v'");
    b.edges.emplace_back(to_vertex(t[0], lineno, 0, b.n), to_vertex(t[1], lineno, 0, b.n));
  }
  if (b.n >= 0 && static_cast<std::int64_t>(b.edges.size()) != expected) {
    throw Error(Errc::ParseError, "header announces " + std::to_string(expected) + " edges but " +
                                      std::to_string(b.edges.size()) + " were given");
  }
  return b.finish();
}

ParsedGraph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Builder b;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = tokens(line);
    if (t.empty() || t[0] == "c") continue;
    if (t[0] == "p") {
      if (t.size() != 4) parse_fail(lineno, "header must be 'p edge n m'");
      b.header(to_int(t[2], lineno), lineno);
      continue;
    }
    if (b.n < 0) parse_fail(lineno, "line before the 'p' header");
    if (t[0] == "e") {
      if (t.size() != 3) parse_fail(lineno, "edge line must be 'e u v'");
      b.edges.emplace_back(to_vertex(t[1], lineno, 1, b.n), to_vertex(t[2], lineno, 1, b.n));
    } else if (t[0] == "n") {
      if (t.size() != 3) parse_fail(lineno, "cost line must be 'n v c'");
      b.set_cost(to_vertex(t[1], lineno, 1, b.n), to_int(t[2], lineno), lineno);
    } else {
      parse_fail(lineno, "unknown line type '" + t[0] + "'");
    }
  }
  return b.finish();
}

std::vector<VertexId> ids_from(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "expected an array of vertex ids");
  std::vector<VertexId> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(Errc::ParseError, "vertex ids must be integers");
    out.push_back(v.get<VertexId>());
  }
  return out;
}

}  // namespace

GraphFormat detect_format(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto t = tokens(line);
    if (t.empty() || t[0][0] == '#') continue;
    if (t[0] == "c" || t[0] == "p") return GraphFormat::Dimacs;
    return GraphFormat::EdgeList;
  }
  return GraphFormat::EdgeList;
}

ParsedGraph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Auto) format = detect_format(text);
  return format == GraphFormat::Dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

std::string to_edge_list(const WeightedGraph& wg, bool with_costs) {
  std::ostringstream out;
  const Graph& g = wg.graph;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  if (with_costs) {
    for (std::size_t v = 0; v < wg.cost.size(); ++v) out << "w " << v << ' ' << wg.cost[v] << '\n';
  }
  return out.str();
}

Json tree_to_json(const SpanningTreeResult& t) {
  Json j;
  j["root"] = t.root;
  Json parent = Json::array();
  for (VertexId p : t.parent) parent.push_back(p < 0 ? Json(nullptr) : Json(p));
  j["parent"] = std::move(parent);
  j["branch"] = t.branch;
  if (t.cost) {
    j["cost"] = *t.cost;
  } else {
    j["b"] = t.branch.size();
  }
  return j;
}

Json cover_to_json(const Cover& cover) {
  Json out = Json::array();
  for (const auto& p : cover) {
    Json piece;
    if (p.is_spider()) {
      piece["kind"] = "spider";
      piece["center"] = p.center;
      piece["legs"] = p.legs;
    } else {
      piece["kind"] = "path";
      piece["vertices"] = p.path;
    }
    out.push_back(std::move(piece));
  }
  return out;
}

Json parse_tree_to_json(const ParseNode& node) {
  Json j;
  if (node.is_leaf()) {
    j["kind"] = "leaf";
    j["vertex"] = node.vertex;
    return j;
  }
  j["kind"] = node_kind_name(node.kind);
  j["vertices"] = node.vertices;
  Json qe = Json::array();
  for (auto [a, b] : node.quotient.edges()) qe.push_back(Json::array({a, b}));
  j["quotient_edges"] = std::move(qe);
  Json kids = Json::array();
  for (const auto& c : node.children) kids.push_back(parse_tree_to_json(c));
  j["children"] = std::move(kids);
  return j;
}

SpanningTreeResult tree_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("parent") || !j.contains("root")) {
    throw Error(Errc::ParseError, "tree certificate needs 'root' and 'parent'");
  }
  SpanningTreeResult t;
  if (!j["root"].is_number_integer()) throw Error(Errc::ParseError, "'root' must be an integer");
  t.root = j["root"].get<VertexId>();
  if (!j["parent"].is_array()) throw Error(Errc::ParseError, "'parent' must be an array");
  for (const auto& p : j["parent"]) {
    if (p.is_null()) {
      t.parent.push_back(-1);
    } else if (p.is_number_integer()) {
      t.parent.push_back(p.get<VertexId>());
    } else {
      throw Error(Errc::ParseError, "parent entries must be integers or null");
    }
  }
  if (j.contains("branch")) t.branch = ids_from(j["branch"]);
  if (j.contains("cost")) {
    if (!j["cost"].is_number_integer()) throw Error(Errc::ParseError, "'cost' must be an integer");
    t.cost = j["cost"].get<std::int64_t>();
  }
  return t;
}

Cover cover_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "cover must be an array of pieces");
  Cover out;
  for (const auto& piece : j) {
    if (!piece.is_object() || !piece.contains("kind")) throw Error(Errc::ParseError, "piece needs a 'kind'");
    const auto kind = piece["kind"].get<std::string>();
    if (kind == "path") {
      auto vs = ids_from(piece.value("vertices", Json::array()));
      if (vs.empty()) throw Error(Errc::ParseError, "empty path piece");
      out.push_back(PathPiece::make_path(std::move(vs)));
    } else if (kind == "spider") {
      if (!piece.contains("center") || !piece["center"].is_number_integer()) {
        throw Error(Errc::ParseError, "spider needs an integer 'center'");
      }
      std::vector<std::vector<VertexId>> legs;
      for (const auto& leg : piece.value("legs", Json::array())) legs.push_back(ids_from(leg));
      PathPiece p;
      p.kind = PathPiece::Kind::Spider;
      p.center = piece["center"].get<VertexId>();
      p.legs = std::move(legs);
      out.push_back(std::move(p));
    } else {
      throw Error(Errc::ParseError, "unknown piece kind '" + kind + "'");
    }
  }
  return out;
}

}  // namespace branchwise
