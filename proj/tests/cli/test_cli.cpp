#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(BRANCHWISE_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(FIXTURES) + "/" + name; }

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "branchwise_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("mbv on a path") {
  Run r = cli("mbv " + fixture("path4.txt"));
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["b"] == 0);
  CHECK(j["branch"] == Json::array());
  CHECK(j["parent"][static_cast<std::size_t>(j["root"].get<int>())].is_null());
}

TEST_CASE("mbv with an oracle check on a large star") {
  Run r = cli("mbv " + fixture("star14.txt") + " --oracle-check");
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["b"] == 1);
  CHECK(j["oracle_agrees"] == true);
}

TEST_CASE("oracle check is null beyond the caps") {
  Run r = cli("mbv " + fixture("petersen.dimacs") + " --oracle-check");
  REQUIRE(r.status == 0);
  CHECK(Json::parse(r.out)["oracle_agrees"].is_null());
}

TEST_CASE("disconnected input exits with status 1") {
  Run r = cli("cbv " + fixture("disconnected.txt"), true);
  CHECK(r.status == 1);
  CHECK(r.out.find("disconnected") != std::string::npos);
}

TEST_CASE("cbv reads costs") {
  Run r = cli("cbv " + fixture("weighted.txt") + " --oracle-check");
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["cost"] == 11);
  CHECK(j["branch"] == Json::array({0, 4}));
  CHECK(j["oracle_agrees"] == true);
}

TEST_CASE("psc of a star is one spider") {
  const fs::path star = scratch("k13.txt");
  std::ofstream(star) << "4 3\n0 1\n0 2\n0 3\n";
  Run r = cli("psc " + star.string());
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["spi"] == 1);
  REQUIRE(j["pieces"].size() == 1);
  CHECK(j["pieces"][0]["kind"] == "spider");
}

TEST_CASE("pp and decompose") {
  Run pp = cli("pp " + fixture("prime.txt") + " --oracle-check");
  REQUIRE(pp.status == 0);
  CHECK(Json::parse(pp.out)["oracle_agrees"] == true);
  Run d = cli("decompose " + fixture("prime.txt"));
  REQUIRE(d.status == 0);
  Json j = Json::parse(d.out);
  CHECK(j["width"] == 4);
  CHECK(j["tree"]["kind"] == "prime");
  CHECK(j["tree"]["quotient_edges"] == Json::parse("[[0,1],[1,2],[2,3]]"));
}

TEST_CASE("oracle reports all values and w for weighted input") {
  Run r = cli("oracle " + fixture("weighted.dimacs"));
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j.contains("b"));
  CHECK(j.contains("ham"));
  CHECK(j.contains("spi"));
  CHECK(j.contains("w"));
}

TEST_CASE("verify accepts solver output and rejects tampering") {
  const fs::path cert = scratch("mbv.json");
  REQUIRE(cli("mbv " + fixture("weighted.txt") + " -o " + cert.string()).status == 0);
  Run ok = cli("verify " + fixture("weighted.txt") + " " + cert.string());
  REQUIRE(ok.status == 0);
  CHECK(Json::parse(ok.out)["ok"] == true);

  Json j;
  std::ifstream(cert) >> j;
  j["branch"] = Json::array();
  std::ofstream(cert) << j.dump();
  Json bad = Json::parse(cli("verify " + fixture("weighted.txt") + " " + cert.string()).out);
  CHECK(bad["ok"] == false);
  CHECK(bad["failure"] == "BranchMismatch");
}

TEST_CASE("budget from the environment") {
  Run r = cli("mbv " + fixture("weighted.txt"));
  CHECK(r.status == 0);
  Run starved = cli("mbv " + fixture("weighted.txt") + " --budget 1");
  CHECK(starved.status == 2);
  const std::string env = "BRANCHWISE_BUDGET=1 " + std::string(BRANCHWISE_CLI) + " mbv " + fixture("weighted.txt") +
                          " >/dev/null 2>&1";
  const int raw = std::system(env.c_str());
  CHECK(WEXITSTATUS(raw) == 2);
}

TEST_CASE("usage errors") {
  CHECK(cli("").status == 64);
  CHECK(cli("mbv").status == 64);
  CHECK(cli("frobnicate x").status == 64);
}

TEST_CASE("random is seeded") {
  Run a = cli("random --seed 5 --n 9 --weighted");
  Run b = cli("random --seed 5 --n 9 --weighted");
  Run c = cli("random --seed 6 --n 9 --weighted");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
}
