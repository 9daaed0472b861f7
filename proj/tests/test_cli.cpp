// End-to-end checks of the qcopy binary: exit codes, output formats,
// run-to-run determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QCOPY_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) {
    res.output += buf.data();
  }
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/qcopy_cli_test_") + name;
}

}  // namespace

TEST_CASE("eval prints one json object") {
  const RunResult pretty = run_cli("eval --f 0.5 --copier uqcm");
  CHECK(pretty.exit_code == 0);
  CHECK(pretty.output.find("\"f_local\": 0.833333333333") != std::string::npos);
  CHECK(pretty.output.find("\"copier\": \"uqcm\"") != std::string::npos);

  const RunResult compact = run_cli("eval --f 0.5 --copier wz --json");
  CHECK(compact.exit_code == 0);
  CHECK(compact.output.find("{\"f\": 0.5, \"copier\": \"wz\"") !=
        std::string::npos);
  // Single line plus trailing newline.
  CHECK(compact.output.find('\n') == compact.output.size() - 1);
}

TEST_CASE("eval rejects bad domains with exit code 2") {
  CHECK(run_cli("eval --f 1.5 --copier wz").exit_code == 2);
  CHECK(run_cli("eval --f 0.5 --copier bogus").exit_code == 2);
  CHECK(run_cli("eval --copier wz").exit_code == 2);  // missing --f
}

TEST_CASE("sweep writes csv files") {
  const std::string path = temp_path("sweep.csv");
  const RunResult res = run_cli("sweep --steps 5 --copiers wz --out " + path);
  CHECK(res.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream content;
  content << in.rdbuf();
  const std::string text = content.str();
  CHECK(text.rfind("f,copier,i1,i1_ratio,ih,f_local,q,r,q_h\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == 6);  // header + 5 rows
  std::remove(path.c_str());
}

TEST_CASE("sweep reports unwritable paths with exit code 3") {
  CHECK(run_cli("sweep --steps 3 --out /nonexistent_dir/out.csv").exit_code == 3);
}

TEST_CASE("sweep rejects malformed configurations") {
  CHECK(run_cli("sweep --steps 1").exit_code == 2);
  CHECK(run_cli("sweep --f-min 0.9 --f-max 0.1").exit_code == 2);
  CHECK(run_cli("sweep --copiers wz,nope").exit_code == 2);
  CHECK(run_cli("sweep --format yaml").exit_code == 2);
}

TEST_CASE("sweep stdout runs are byte-identical") {
  const std::string args = "sweep --steps 21 --copiers all --baselines";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find(",input,") != std::string::npos);
}

TEST_CASE("verify reports pass lines and exit code zero") {
  const RunResult res = run_cli("verify --steps 5");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("PASS ") != std::string::npos);
  CHECK(res.output.find("FAIL ") == std::string::npos);
  CHECK(res.output.find("wz-losslessness") != std::string::npos);
  CHECK(res.output.find("feasibility-witness") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("sweep --help").exit_code == 0);
}
