#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#ifndef COSTAS_CLI_PATH
#define COSTAS_CLI_PATH "costas"
#endif

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

CommandResult run_cli(const std::string& args) {
  const std::string command = std::string(COSTAS_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer;
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("verify verdicts and exit codes") {
  auto good = run_cli("verify \"1 2 4 8 5 10 9 7 3 6\"");
  CHECK(good.exit_code == 0);
  CHECK(good.output == "costas: true\n");

  auto bad = run_cli("verify \"1 2 3\"");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output == "costas: false\n");

  auto fast = run_cli("verify --fast \"1 2 4 8 5 10 9 7 3 6\"");
  CHECK(fast.exit_code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("verify").exit_code == 2);
  CHECK(run_cli("generate --method nope -p 7 --alpha 3").exit_code == 2);
  CHECK(run_cli("enumerate 40").exit_code == 2);  // beyond the order cap
}

TEST_CASE("enumerate json is stable") {
  auto result = run_cli("enumerate 7 --json");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "{\n  \"n\": 7,\n  \"symmetric\": 20,\n  \"total\": 200\n}\n");
}

TEST_CASE("generate single and family") {
  auto single = run_cli("generate --method w1exp -p 11 --alpha 2 -c 0");
  CHECK(single.exit_code == 0);
  CHECK(single.output == "1 2 4 8 5 10 9 7 3 6\n");

  auto family = run_cli("generate --family w1 -p 7");
  CHECK(family.exit_code == 0);
  // 2 * 6 * phi(6) lines
  CHECK(std::count(family.output.begin(), family.output.end(), '\n') == 24);
}

TEST_CASE("correlate family and classify") {
  auto sweep = run_cli("correlate --family w1 -p 13 --json");
  CHECK(sweep.exit_code == 0);
  CHECK(sweep.output.find("\"psi\": 6") != std::string::npos);

  auto classified = run_cli("classify -p 19 --json");
  CHECK(classified.exit_code == 0);
  CHECK(classified.output.find("\"kind\": \"nineteen\"") != std::string::npos);
  CHECK(classified.output.find("\"predicted\": 6") != std::string::npos);
}

TEST_CASE("estimate and probes") {
  auto estimate = run_cli("enumerate 16 --estimate 1 --json");
  CHECK(estimate.exit_code == 0);
  CHECK(estimate.output.find("\"estimate\"") != std::string::npos);

  auto probe = run_cli("correlate --family g2 -q 13 --probe --json");
  CHECK(probe.exit_code == 0);
  CHECK(probe.output.find("\"psi\": 5") != std::string::npos);
}

TEST_CASE("convert and analyze") {
  auto ruler = run_cli("convert \"2 1 3\"");
  CHECK(ruler.exit_code == 0);
  CHECK(ruler.output == "0 3 9\n");

  auto report = run_cli("analyze \"1 2 4 8 5 10 9 7 3 6\" --json");
  CHECK(report.exit_code == 0);
  CHECK(report.output.find("\"permutation_order\": 10") != std::string::npos);
  CHECK(report.output.find("\"single_periodic\": true") != std::string::npos);
}

TEST_CASE("database flow through the CLI") {
  const auto root = std::filesystem::temp_directory_path() / "costas_cli_db_test";
  std::filesystem::remove_all(root);

  auto stored = run_cli("enumerate 5 --store " + root.string() + " --json");
  CHECK(stored.exit_code == 0);

  auto check = run_cli("db --root " + root.string() + " check");
  CHECK(check.exit_code == 0);
  CHECK(check.output == "ok\n");

  auto listed = run_cli("db --root " + root.string() + " list -n 5");
  CHECK(listed.exit_code == 0);
  CHECK(std::count(listed.output.begin(), listed.output.end(), '\n') == 40);

  auto stats = run_cli("db --root " + root.string() + " stats");
  CHECK(stats.exit_code == 0);
  CHECK(stats.output == "5: 40 (enumerated)\n");

  std::filesystem::remove_all(root);
}

TEST_CASE("search respects the seed") {
  auto first = run_cli("search -n 6 --seed 5 --json");
  auto second = run_cli("search -n 6 --seed 5 --json");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("config file feeds defaults") {
  const auto config_path = std::filesystem::temp_directory_path() / "costas_cli_config_test";
  {
    std::FILE* f = std::fopen(config_path.c_str(), "w");
    REQUIRE(f);
    std::fputs("max_order=4\n", f);
    std::fclose(f);
  }
  const std::string prefix = "COSTAS_CONFIG=" + config_path.string() + " " COSTAS_CLI_PATH;
  std::array<char, 256> buffer;
  std::string output;
  FILE* pipe = popen((prefix + " enumerate 5 --json 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 2);  // 5 exceeds the configured cap of 4

  FILE* pipe2 = popen((prefix + " enumerate 5 --max-order 6 --json 2>/dev/null").c_str(), "r");
  REQUIRE(pipe2 != nullptr);
  output.clear();
  while (fgets(buffer.data(), buffer.size(), pipe2)) output += buffer.data();
  const int status2 = pclose(pipe2);
  CHECK(WEXITSTATUS(status2) == 0);  // the flag overrides the file
  std::filesystem::remove(config_path);
}
