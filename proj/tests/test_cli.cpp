// End-to-end checks of the howelab binary: exit codes, report files and
// byte-reproducible JSON output.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

const char* cli_path() { return HOWELAB_CLI_PATH; }

int run(const std::string& args, const std::string& redirect = "") {
  std::string cmd = std::string("\"") + cli_path() + "\" " + args;
  if (redirect.empty())
    cmd += " > /dev/null 2>&1";
  else
    cmd += " > " + redirect + " 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("passing suites exit 0") {
  CHECK(run("verify-moment --n 3 --m 2 --samples 10 --seed 42") == 0);
  CHECK(run("verify-correspondence --n 3 --m 2 --samples 10 --seed 1") == 0);
  CHECK(run("verify-correspondence --model cotangent --rank 2 --samples 10") ==
        0);
  CHECK(run("verify-correspondence --model projective --k 2 --n 2 "
            "--samples 10") == 0);
  CHECK(run("verify-duality --model matrix --n 2 --m 2 --k-max 4") == 0);
  CHECK(run("verify-duality --model projective --n 2 --k-max 4") == 0);
  CHECK(run("flow --n 2 --m 2 --steps 50 --starts 3 --seed 7") == 0);
  CHECK(run("flow --n 2 --m 2 --steps 50 --starts 3 --step-size 10") == 0);
}

TEST_CASE("parallel sampling is accepted") {
  CHECK(run("verify-moment --n 3 --m 2 --samples 16 --seed 5 --parallel") ==
        0);
}

TEST_CASE("failed checks exit 1") {
  // an unreachable tolerance makes the bracket-vanishing check fail
  CHECK(run("verify-moment --n 2 --m 2 --samples 5 --tol 1e-30") == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("verify-moment --n 2 --m 3") == 2);
  CHECK(run("verify-moment --no-such-flag") == 2);
  CHECK(run("verify-correspondence --model never-heard-of-it") == 2);
  CHECK(run("verify-correspondence --n 3 --m 2 --sigma-grid 1,2") == 2);
  CHECK(run("verify-duality --model cotangent") == 2);
  CHECK(run("") == 2);
}

TEST_CASE("help exits 0") {
  CHECK(run("--help") == 0);
  CHECK(run("verify-moment --help") == 0);
}

TEST_CASE("vacuous sample counts warn but pass") {
  const fs::path out = fs::temp_directory_path() / "howelab_cli_vacuous.txt";
  CHECK(run("verify-moment --n 2 --m 2 --samples 0", out.string()) == 0);
  CHECK(slurp(out).find("warning") != std::string::npos);
  fs::remove(out);
}

TEST_CASE("JSON output is reproducible for fixed flags and seed") {
  const fs::path first = fs::temp_directory_path() / "howelab_cli_a.json";
  const fs::path second = fs::temp_directory_path() / "howelab_cli_b.json";
  const std::string args =
      "verify-moment --n 2 --m 2 --samples 5 --seed 9 --print-json";
  std::string cmd = std::string("SOURCE_DATE_EPOCH=0 \"") + cli_path() +
                    "\" " + args + " > " + first.string() + " 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  cmd = std::string("SOURCE_DATE_EPOCH=0 \"") + cli_path() + "\" " + args +
        " > " + second.string() + " 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(slurp(first) == slurp(second));
  CHECK(slurp(first).find("\"suite\": \"verify-moment\"") !=
        std::string::npos);
  fs::remove(first);
  fs::remove(second);
}

TEST_CASE("HOWELAB_REPORT_DIR receives the JSON document") {
  const fs::path dir = fs::temp_directory_path() / "howelab_cli_reports";
  fs::create_directories(dir);
  const std::string cmd = "HOWELAB_REPORT_DIR=" + dir.string() + " \"" +
                          cli_path() +
                          "\" flow --n 2 --m 2 --steps 20 --starts 2 --seed 3 "
                          "> /dev/null 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(fs::exists(dir / "flow-seed3.json"));
  fs::remove_all(dir);
}

TEST_CASE("duality CSV emission") {
  const fs::path csv = fs::temp_directory_path() / "howelab_cli_table.csv";
  CHECK(run("verify-duality --model matrix --n 3 --m 2 --k-max 3 "
            "--emit-table " +
            csv.string()) == 0);
  const std::string contents = slurp(csv);
  CHECK(contents.find("matrix,3,TOTAL,,,,56,56") != std::string::npos);
  fs::remove(csv);
}
