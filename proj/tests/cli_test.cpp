#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

// Drives the installed binary end to end: exit codes, JSON payloads, golden
// files, SVG output.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_shell(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    result.output.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

RunResult run_cli(const std::string& args) {
  return run_shell(std::string(CLI_BIN) + " " + args + " 2>/dev/null");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden_path(const std::string& name) {
  return std::string(GOLDEN_DIR) + "/" + name;
}

} // namespace

TEST_CASE("no arguments is a usage error") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("solve-basis --bogus").exit_code == 2);
  CHECK(run_cli("verify-moments --q-label Q9").exit_code == 2);
}

TEST_CASE("solve-basis output is byte-identical to the golden file") {
  RunResult r = run_cli("solve-basis");
  CHECK(r.exit_code == 0);
  CHECK(r.output == read_file(golden_path("solve_basis.json")));
}

TEST_CASE("check-group output is byte-identical to the golden file") {
  RunResult r = run_cli("check-group");
  CHECK(r.exit_code == 0);
  CHECK(r.output == read_file(golden_path("check_group.json")));
}

TEST_CASE("verify-moments matches the golden file up to elapsed time") {
  RunResult r = run_cli("verify-moments --q-label Q2");
  CHECK(r.exit_code == 0);
  auto actual = nlohmann::json::parse(r.output);
  auto expected = nlohmann::json::parse(read_file(golden_path("verify_moments_q2.json")));
  CHECK(actual.contains("elapsed_ms"));
  actual.erase("elapsed_ms");
  expected.erase("elapsed_ms");
  CHECK(actual == expected);
}

TEST_CASE("verify-moments flags a non-solution with exit code 1") {
  RunResult r = run_cli("verify-moments --q '(1/1)*z^1+(1/1)*z^2'");
  CHECK(r.exit_code == 1);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["all_zero"] == false);
  CHECK(j["first_nonzero_index"].get<long>() >= 1);
}

TEST_CASE("decompose identifies basis elements") {
  RunResult r = run_cli("decompose '(1/1)*z^-1+(1/1)*z^1'");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["is_solution"] == true);
  CHECK(j["r1"] == nlohmann::json::array({"1/1"}));
  CHECK(j["remainder"].empty());
}

TEST_CASE("count-maps reports the exact count") {
  RunResult r = run_cli("count-maps");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["count"] == "25401600");
  CHECK(j["multiple_of_10_factorial"] == "7");
  CHECK(j["per_lambda"].size() == 42);
}

TEST_CASE("verify-belyi certifies the three named functions") {
  for (const std::string label : {"F1", "F2", "L"}) {
    RunResult r = run_cli("verify-belyi --function " + label);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["certified"] == true);
    CHECK(j["profile"]["over_zero"] == nlohmann::json::array({6, 3, 1}));
    CHECK(j["profile"]["over_infinity"] == nlohmann::json::array({5, 5}));
  }
}

TEST_CASE("verify-belyi rejects a degenerate candidate") {
  RunResult r = run_cli("verify-belyi --K 1/1 --a 0/1 --b 0/1");
  CHECK(r.exit_code == 1);
}

TEST_CASE("render-dessin writes an SVG") {
  std::string path = "cli_test_dessin.svg";
  RunResult r = run_cli("render-dessin --function F1 --samples 64 --out " + path);
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["arcs"] == 10);
  CHECK(j["warnings"].empty());
  std::string svg = read_file(path);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<rect") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("plain mode and --out") {
  std::string path = "cli_test_basis.txt";
  RunResult r = run_cli("solve-basis --plain --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  std::string text = read_file(path);
  CHECK(text.find("Q4 = (1/1)*z^-4") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("deterministic output across runs") {
  RunResult a = run_cli("count-maps");
  RunResult b = run_cli("count-maps");
  CHECK(a.output == b.output);
}

TEST_CASE("thread cap does not change results") {
  RunResult many = run_cli("verify-moments --q-label Q3");
  RunResult one = run_shell("MOMENT_FORGE_THREADS=1 " + std::string(CLI_BIN) +
                            " verify-moments --q-label Q3 2>/dev/null");
  CHECK(many.exit_code == 0);
  CHECK(one.exit_code == 0);
  auto a = nlohmann::json::parse(many.output);
  auto b = nlohmann::json::parse(one.output);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(a == b);
}

TEST_CASE("malformed laurent input is a usage error") {
  CHECK(run_cli("decompose 'garbage'").exit_code == 2);
  CHECK(run_cli("verify-moments --q 'z^1'").exit_code == 2);
}

TEST_CASE("explicit candidate coefficients") {
  RunResult r = run_cli("verify-belyi --K 50000/27 --a 4 --b=-1");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["function"] == "candidate");
  CHECK(j["certified"] == true);
  CHECK(j["profile"]["over_one"] == nlohmann::json::array({2, 2, 2, 1, 1, 1, 1}));
  CHECK(run_cli("verify-belyi --K 1/1 --a 4").exit_code == 2);
}
