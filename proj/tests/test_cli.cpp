// Drives the installed CLI binary end to end and checks output and exit
// codes.  The binary path comes in through RVT_CLI_PATH.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run(const std::string& args) {
  const std::string command = std::string(RVT_CLI_PATH) + " " + args;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string golden(const std::string& name) {
  const std::string path = std::string(RVT_GOLDEN_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("validate exit codes and messages") {
  CHECK(run("validate RVVRVT1L1T2L3L2 2>/dev/null").exit_code == 0);

  const RunResult rule1 = run("validate VT2T1RT2 2>/dev/null");
  CHECK(rule1.exit_code == 1);
  CHECK(rule1.output.find("rule 1") != std::string::npos);
  CHECK(rule1.output.find("position 1") != std::string::npos);

  const RunResult rule4 = run("validate RVL1T2T1 2>/dev/null");
  CHECK(rule4.exit_code == 1);
  CHECK(rule4.output.find("rule 4") != std::string::npos);
  CHECK(rule4.output.find("position 5") != std::string::npos);

  CHECK(run("validate RVX 2>/dev/null").exit_code == 2);
  CHECK(run("validate '' 2>/dev/null").exit_code == 0);
}

TEST_CASE("validate json form") {
  const RunResult r = run("validate RT1 --format json 2>/dev/null");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("\"valid\": false") != std::string::npos);
  CHECK(r.output.find("\"rule\": 2") != std::string::npos);
  CHECK(r.output.find("\"position\": 2") != std::string::npos);
}

TEST_CASE("analyze matches the pinned renderings") {
  const RunResult text = run("analyze RVL1 2>/dev/null");
  CHECK(text.exit_code == 0);
  CHECK(text.output == golden("analyze_rvl1.txt"));

  const RunResult json = run("analyze RVL1 --format json 2>/dev/null");
  CHECK(json.exit_code == 0);
  CHECK(json.output == golden("analyze_rvl1.json"));

  const RunResult json2 = run("analyze RVL1T2 --format json 2>/dev/null");
  CHECK(json2.exit_code == 0);
  CHECK(json2.output == golden("analyze_rvl1t2.json"));

  CHECK(run("analyze RT1 2>/dev/null").exit_code == 1);
  CHECK(run("analyze 2>/dev/null").exit_code == 2);
}

TEST_CASE("trace matches the pinned renderings and signals absence") {
  const RunResult absent = run("trace RVL1T2 T1 2>/dev/null");
  CHECK(absent.exit_code == 1);
  CHECK(absent.output == golden("trace_rvl1t2_t1.txt"));

  const RunResult found = run("trace RVL1 T2 2>/dev/null");
  CHECK(found.exit_code == 0);
  CHECK(found.output.find("outcome: exists delta(1,2)") != std::string::npos);

  const RunResult json = run("trace RVL1T2 T1 --format json 2>/dev/null");
  CHECK(json.exit_code == 1);
  CHECK(json.output == golden("trace_rvl1t2_t1.json"));

  CHECK(run("trace R T1 2>/dev/null").exit_code == 1);
  CHECK(run("trace RVL1 X 2>/dev/null").exit_code == 2);
}

TEST_CASE("count and enumerate") {
  CHECK(run("count 1 2>/dev/null").output == "1\n");
  CHECK(run("count 4 --upto 2>/dev/null").output == "1\n2\n6\n23\n");
  CHECK(run("count 12 2>/dev/null").output == "3527096\n");

  const RunResult words = run("enumerate 3 2>/dev/null");
  CHECK(words.exit_code == 0);
  CHECK(words.output == "RRR\nRRV\nRVR\nRVV\nRVT1\nRVL1\n");

  const RunResult json = run("enumerate 2 --format json 2>/dev/null");
  CHECK(json.output == "[\n  \"RR\",\n  \"RV\"\n]\n");

  CHECK(run("enumerate 0 2>/dev/null").exit_code == 2);
}

TEST_CASE("successors command") {
  CHECK(run("successors RVL1T2 2>/dev/null").output == "R V T2 L3\n");
  CHECK(run("successors --letter L2 2>/dev/null").output ==
        "R V T1 T2 L1 L2 L3\n");
  CHECK(run("successors '' 2>/dev/null").output == "R\n");
  const RunResult json = run("successors R --format json 2>/dev/null");
  CHECK(json.output.find("\"successors\": [\"R\", \"V\"]") !=
        std::string::npos);
}

TEST_CASE("tables output is byte-stable across runs") {
  const RunResult first = run("tables 2>/dev/null");
  const RunResult second = run("tables 2>/dev/null");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output == golden("tables.md"));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("2>/dev/null").exit_code == 2);
  CHECK(run("frobnicate 2>/dev/null").exit_code == 2);
  CHECK(run("count 2>/dev/null").exit_code == 2);
}
