/*
 * Copyright 2026 The cycodes authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// End-to-end tests for the cycodes command-line tool.  The binary path
// arrives as the first program argument (wired up by CMake); every case
// spawns the tool and checks stdout/stderr text and the exit code
// contract: 0 success, 1 verification mismatch, 2 usage/precondition
// error.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cycodes/codes.hpp"
#include "cycodes/polyring.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string g_cli;

struct RunResult {
  int code = -1;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  REQUIRE_FALSE(g_cli.empty());
  static int seq = 0;
  fs::path dir = fs::temp_directory_path() / "cycodes-cli-test";
  fs::create_directories(dir);
  fs::path so = dir / ("out" + std::to_string(++seq) + ".txt");
  fs::path se = dir / ("err" + std::to_string(seq) + ".txt");
  std::string cmd = g_cli + " " + args + " > " + so.string() + " 2> " + se.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(so);
  r.err = slurp(se);
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("factor command matches the library factor list") {
  RunResult r = run_cli("factor 7 17 2");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["command"] == "factor");
  CHECK(j["count"] == 9);

  cycodes::FactorList fl = cycodes::factor_xn_minus_1(7, 17, 2);
  REQUIRE(j["factors"].size() == fl.factors.size());
  for (size_t i = 0; i < fl.factors.size(); ++i) {
    CHECK(j["factors"][i]["label"] == fl.factors[i].label);
    CHECK(j["factors"][i]["display"] == cycodes::to_display(fl.factors[i].poly));
  }

  RunResult c = run_cli("factor 7 17 2 --format csv");
  REQUIRE(c.code == 0);
  auto rows = lines_of(c.out);
  REQUIRE(rows.size() == 10);  // header + 9 factors
  CHECK(rows[0] == "label,degree,block,polynomial");
  CHECK(rows[1] == "f1,1,0,x + 1");
  CHECK(rows[2] == "f31,3,1,x^3 + x + 1");
}

TEST_CASE("construct emits the full code descriptor") {
  RunResult r = run_cli("construct U 7 17 2 000");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["label"] == "U(0,0,0)");
  CHECK(j["n"] == 119);
  CHECK(j["k"] == 60);
  CHECK(j["defining_set"].size() == 59);
  CHECK(j["triple"] == json::array({0, 0, 0}));

  cycodes::CodeContext ctx(7, 17, 2);
  cycodes::CyclicCode code = ctx.construct(cycodes::Family::U, {0, 0, 0});
  CHECK(j["generator"] == cycodes::to_display(code.gen));
  CHECK(j["defining_set"].get<std::vector<uint64_t>>() == code.defining_set);

  RunResult v = run_cli("construct V 5 7 4 111");
  REQUIRE(v.code == 0);
  json jv = json::parse(v.out);
  CHECK(jv["k"] == 18);
  CHECK(jv["label"] == "V(1,1,1)");
}

TEST_CASE("inadmissible constructions fail with the violated condition") {
  RunResult r = run_cli("construct D 5 11 2 000");
  CHECK(r.code == 2);
  CHECK(r.err.find("D_1, not D_0") != std::string::npos);

  // An oversized splitting field must not mask the admissibility answer.
  RunResult s = run_cli("construct U 7 17 3 000");
  CHECK(s.code == 2);
  CHECK(s.err.find("quadratic nonresidue") != std::string::npos);
  CHECK(s.err.find("field") == std::string::npos);
}

TEST_CASE("usage errors exit with code 2 and --help with 0") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate 1 2 3").code == 2);
  CHECK(run_cli("construct X 7 17 2 000").code == 2);
  CHECK(run_cli("construct U 7 17 2 007").code == 2);
  CHECK(run_cli("factor 8 17 2").code == 2);
  CHECK(run_cli("verify frobnicate").code == 2);
  CHECK(run_cli("verify tables 3 5 2").code == 2);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("minweight reports exact values and honors method selection") {
  RunResult r = run_cli("minweight V 5 7 4 000");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["min_weight"] == 8);
  CHECK(j["exact"] == true);
  CHECK(j["method"] == "bz");
  CHECK(j["certificate"].get<std::string>().size() == 35);

  // 4^18 messages blow the exhaustive budget.
  RunResult e = run_cli("minweight V 5 7 4 000 --method exhaustive");
  CHECK(e.code == 2);
  CHECK(e.err.find("budget") != std::string::npos);
}

TEST_CASE("a tight budget caps the search and marks the result an upper bound") {
  RunResult r = run_cli("minweight U 7 17 2 000 --budget 1000000");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["exact"] == false);
  CHECK(j["method"] == "upper_only");
  CHECK(j["levels_done"] == 3);
  CHECK(j["lower_bound"] == 7);
  CHECK(j["min_weight"].get<uint64_t>() >= 12);
}

TEST_CASE("family table reproduces the quaternary values") {
  RunResult r = run_cli("table U 5 7 4 --format csv");
  REQUIRE(r.code == 0);
  auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 9);
  const char* expected[] = {
      "U(0,0,0),000,8,exact",  "U(1,0,0),100,7,exact", "U(0,1,0),010,7,exact",
      "U(0,0,1),001,7,exact",  "U(1,1,0),110,8,exact", "U(1,0,1),101,8,exact",
      "U(0,1,1),011,8,exact",  "U(1,1,1),111,7,exact",
  };
  for (int i = 0; i < 8; ++i) CHECK(rows[i + 1] == expected[i]);

  RunResult m = run_cli("table U 5 7 4 --format md");
  REQUIRE(m.code == 0);
  CHECK(lines_of(m.out)[0] == "| label | triple | min_weight | status |");
}

TEST_CASE("census table rows come out sorted by label and fully exact") {
  RunResult r = run_cli("table census 5 7 4");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 24);
  CHECK(j["all_exact"] == true);
  CHECK(j["rows"][0]["label"] == "f21f31f61f62");
  CHECK(j["rows"][0]["min_weight"] == 4);
  std::vector<std::string> labels;
  for (const auto& row : j["rows"]) labels.push_back(row["label"].get<std::string>());
  CHECK(std::is_sorted(labels.begin(), labels.end()));
}

TEST_CASE("verification suites pass on the quaternary parameters") {
  CHECK(run_cli("verify factorizations 5 7 4").code == 0);
  CHECK(run_cli("verify splittings 5 7 4").code == 0);
  CHECK(run_cli("verify bounds 5 7 4").code == 0);
  CHECK(run_cli("verify tables 5 7 4").code == 0);
  CHECK(run_cli("verify propositions --max 20").code == 0);
}

TEST_CASE("scan reports a clean predicate sweep") {
  RunResult r = run_cli("scan --max 20");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["mismatches"].empty());
  CHECK(j["checks"].get<uint64_t>() > 0);
}

TEST_CASE("cache hits return byte-identical reports") {
  fs::path cache = fs::temp_directory_path() / "cycodes-cli-test" / "cache";
  fs::remove_all(cache);
  std::string args = "minweight D 5 7 4 000 --cache-dir " + cache.string();
  RunResult first = run_cli(args);
  RunResult second = run_cli(args);
  REQUIRE(first.code == 0);
  REQUIRE(second.code == 0);
  CHECK(first.out == second.out);
  json j = json::parse(first.out);
  CHECK(j["min_weight"] == 7);
  CHECK(j["exact"] == true);
}

int main(int argc, char** argv) {
  if (argc > 1 && argv[1][0] != '-') g_cli = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
