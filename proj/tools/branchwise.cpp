#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "branchwise/corpus.hpp"
#include "branchwise/error.hpp"
#include "branchwise/io.hpp"
#include "branchwise/mod_decomp.hpp"
#include "branchwise/reference.hpp"
#include "branchwise/solver.hpp"

using namespace branchwise;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInternal = 2;
constexpr int kExitUsage = 64;

struct RunConfig {
  std::string command;
  std::string input;
  std::string certificate;
  std::string format = "auto";
  std::uint64_t seed = 1;
  int n = 8;
  int pct = 30;
  bool weighted = false;
  bool oracle_check = false;
  int oracle_cap = kDefaultOracleCap;
  std::optional<std::int64_t> budget;
  std::string output;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphFormat format_of(const std::string& name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "dimacs") return GraphFormat::Dimacs;
  return GraphFormat::Auto;
}

SolveOptions solve_options(const RunConfig& cfg) {
  SolveOptions opts;
  if (cfg.budget) {
    opts.node_budget = *cfg.budget;
  } else if (const char* env = std::getenv("BRANCHWISE_BUDGET")) {
    try {
      opts.node_budget = std::stoll(env);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "BRANCHWISE_BUDGET is not an integer");
    }
  }
  if (opts.node_budget < 1) throw Error(Errc::OutOfRange, "search budget must be positive");
  return opts;
}

// Null when the instance is beyond the oracle caps.
template <class F>
Json oracle_agrees(const RunConfig& cfg, F&& check) {
  try {
    return check(OracleOptions{cfg.oracle_cap});
  } catch (const Error& e) {
    if (e.code() != Errc::TooLarge) throw;
    return nullptr;
  }
}

Json run(const RunConfig& cfg) {
  if (cfg.command == "random") {
    Rng rng(cfg.seed);
    if (cfg.n < 1) throw Error(Errc::OutOfRange, "--n must be at least 1");
    Graph g = random_connected_graph(rng, cfg.n, cfg.pct);
    auto cost = cfg.weighted ? random_costs(rng, cfg.n, 1, 10) : std::vector<std::int64_t>(static_cast<std::size_t>(cfg.n), 1);
    return to_edge_list(WeightedGraph::make(std::move(g), std::move(cost)), cfg.weighted);
  }

  const ParsedGraph parsed = parse_graph(read_file(cfg.input), format_of(cfg.format));
  const Graph& g = parsed.wg.graph;
  const int n = g.vertex_count();
  const SolveOptions opts = solve_options(cfg);

  if (cfg.command == "mbv") {
    const MbvAnswer a = solve_mbv(g, opts);
    Json j = tree_to_json(a.tree);
    if (cfg.oracle_check) {
      j["oracle_agrees"] = oracle_agrees(cfg, [&](const OracleOptions& o) { return oracle_b(g, o).value == a.b; });
    }
    return j;
  }
  if (cfg.command == "cbv") {
    const CbvAnswer a = solve_cbv(parsed.wg, opts);
    Json j = tree_to_json(a.tree);
    if (cfg.oracle_check) {
      j["oracle_agrees"] =
          oracle_agrees(cfg, [&](const OracleOptions& o) { return oracle_w(parsed.wg, o).value == a.cost; });
    }
    return j;
  }
  if (cfg.command == "psc" || cfg.command == "pp") {
    const bool spi = cfg.command == "psc";
    const CoverResult r = spi ? solve_psc(g, opts) : solve_pp(g, opts);
    Json j;
    j[spi ? "spi" : "ham"] = r.value;
    j["pieces"] = cover_to_json(r.cover);
    if (cfg.oracle_check) {
      j["oracle_agrees"] = oracle_agrees(cfg, [&](const OracleOptions& o) {
        return (spi ? oracle_spi(g, o) : oracle_ham(g, o)) == r.value;
      });
    }
    return j;
  }
  if (cfg.command == "decompose") {
    if (n < 1) throw Error(Errc::OutOfRange, "cannot decompose the empty graph");
    const ParseNode t = decompose(g);
    Json j;
    j["width"] = width(t);
    j["tree"] = parse_tree_to_json(t);
    return j;
  }
  if (cfg.command == "oracle") {
    const OracleOptions o{cfg.oracle_cap};
    Json j;
    j["b"] = oracle_b(g, o).value;
    j["ham"] = oracle_ham(g, o);
    j["spi"] = oracle_spi(g, o);
    if (parsed.weighted) j["w"] = oracle_w(parsed.wg, o).value;
    return j;
  }
  if (cfg.command == "verify") {
    Json cert;
    try {
      cert = Json::parse(read_file(cfg.certificate));
    } catch (const Json::parse_error& e) {
      throw Error(Errc::ParseError, std::string("certificate is not JSON: ") + e.what());
    }
    Diagnostics d;
    if (cert.is_object() && cert.contains("pieces")) {
      const CoverKind kind = cert.contains("spi") ? CoverKind::PathSpider : CoverKind::Paths;
      const Cover cover = cover_from_json(cert["pieces"]);
      d = verify_cover(g, cover, kind);
      const char* key = kind == CoverKind::PathSpider ? "spi" : "ham";
      if (d.ok && cert.contains(key) && cert[key] != static_cast<int>(cover.size())) {
        d = Diagnostics::fail("PieceCount", "stated count differs from the number of pieces");
      }
    } else {
      const SpanningTreeResult t = tree_from_json(cert);
      d = verify_spanning_tree(g, t, t.cost ? &parsed.wg.cost : nullptr);
      if (d.ok && cert.contains("b") && cert["b"] != t.branch.size()) {
        d = Diagnostics::fail("BranchMismatch", "stated b differs from the branch set size");
      }
    }
    Json j;
    j["ok"] = d.ok;
    j["failure"] = d.ok ? Json(nullptr) : Json(d.failure);
    j["detail"] = d.ok ? Json(nullptr) : Json(d.detail);
    return j;
  }
  throw Error(Errc::InternalAssertion, "unhandled command '" + cfg.command + "'");
}

void emit(const RunConfig& cfg, const Json& result) {
  const std::string text = result.is_string() ? result.get<std::string>() : result.dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write '" + cfg.output + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Spanning trees with few branch vertices via modular decomposition"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool oracle_flag) {
    sub->add_option("input", cfg.input, "Graph file")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", cfg.format, "Input format")->check(CLI::IsMember({"auto", "edgelist", "dimacs"}));
    sub->add_option("--budget", cfg.budget, "Search node budget (overrides BRANCHWISE_BUDGET)");
    sub->add_option("--output,-o", cfg.output, "Write the result here instead of stdout");
    sub->add_option("--oracle-cap", cfg.oracle_cap, "Largest vertex count handed to the oracles");
    if (oracle_flag) sub->add_flag("--oracle-check", cfg.oracle_check, "Compare the answer with the brute-force oracle");
  };

  add_common(app.add_subcommand("mbv", "Minimum number of branch vertices"), true);
  add_common(app.add_subcommand("cbv", "Minimum total branch-vertex cost"), true);
  add_common(app.add_subcommand("psc", "Minimum path-spider cover"), true);
  add_common(app.add_subcommand("pp", "Minimum partition into paths"), true);
  add_common(app.add_subcommand("decompose", "Modular decomposition parse tree"), false);
  add_common(app.add_subcommand("oracle", "Brute-force reference values"), false);
  auto* verify = app.add_subcommand("verify", "Check a tree or cover certificate against a graph");
  add_common(verify, false);
  verify->add_option("certificate", cfg.certificate, "JSON certificate")->required()->check(CLI::ExistingFile);
  auto* random = app.add_subcommand("random", "Seeded random connected graph in edge-list form");
  random->add_option("--seed", cfg.seed, "Generator seed");
  random->add_option("--n", cfg.n, "Vertex count");
  random->add_option("--pct", cfg.pct, "Extra edge probability in percent")->check(CLI::Range(0, 100));
  random->add_flag("--weighted", cfg.weighted, "Append random costs in [1, 10]");
  random->add_option("--output,-o", cfg.output, "Write the graph here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  if (cfg.oracle_cap > kDefaultOracleCap) {
    std::cerr << "warning: oracle cap raised to " << cfg.oracle_cap << "; enumeration may take very long\n";
  }

  try {
    emit(cfg, run(cfg));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << " [" << errc_name(e.code()) << "]\n";
    if (is_internal(e.code()) || e.code() == Errc::SearchBudgetExceeded) return kExitInternal;
    return kExitInvalid;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed certificate: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
