#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Exercises the installed binary end to end: output tables, exit codes, and
// cache determinism.  The binary path comes from the build system.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>/dev/null";
  std::array<char, 512> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("degflag-cli-test-" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("sigma subcommand prints the tables") {
  const RunResult r5 = run("sigma -n 5");
  CHECK(r5.exit_code == 0);
  CHECK(r5.out.find("6 1 7 2 8 3 9 4 10 5") != std::string::npos);

  const RunResult rd = run("sigma -n 8 -d 2,5,7");
  CHECK(rd.exit_code == 0);
  CHECK(rd.out.find("1 9 10 2 3 4 11 12 13 5 6 14 15 7 8 16") != std::string::npos);

  const RunResult r1 = run("sigma -n 1");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out.find("2 1") != std::string::npos);
}

TEST_CASE("exit codes partition outcomes") {
  CHECK(run("sigma --bogus-flag").exit_code == 2);       // bad arguments
  CHECK(run("count interval -n 0 --no-cache").exit_code == 2);
  CHECK(run("count quotient -n 7 --no-cache").exit_code == 3);  // bound exceeded
  CHECK(run("verify iso -n 5 -p 2 --no-cache").exit_code == 3);
  CHECK(run("verify lemma -n 2 --no-cache").exit_code == 0);
}

TEST_CASE("count subcommand values") {
  const RunResult quotient = run("count quotient -n 2 --no-cache");
  CHECK(quotient.exit_code == 0);
  CHECK(quotient.out.find("12") != std::string::npos);

  const RunResult rn = run("count rn -n 2 -p 2 --no-cache");
  CHECK(rn.exit_code == 0);
  CHECK(rn.out.find("27") != std::string::npos);

  const RunResult interval = run("count interval -n 1 --no-cache --json");
  CHECK(interval.exit_code == 0);
  CHECK(interval.out.find("\"coeffs\"") != std::string::npos);
}

TEST_CASE("cached reports replay byte for byte") {
  TempDir tmp;
  const std::string args =
      "count degflag -n 2 -p 2 --json --cache-dir " + tmp.path.string();
  const RunResult first = run(args);
  const RunResult second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(second.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("\"count\": 25") != std::string::npos);
}

TEST_CASE("verify iso reports the n=2 landmark numbers") {
  const RunResult r = run("verify iso -n 2 -p 2 --no-cache --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"point_count\": 25") != std::string::npos);
  CHECK(r.out.find("\"bruhat_count\": 25") != std::string::npos);
}
