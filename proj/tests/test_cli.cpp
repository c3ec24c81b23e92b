// Runs the built binary; exit codes and output files.
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

int shell(const std::string& cmd) {
  const int status = std::system((cmd + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int run(const std::string& args) { return shell(std::string(MORSEBAND_CLI) + " " + args); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("--help") == 0);
  CHECK(run("spectrum --n-max 3") == 0);
  CHECK(run("") == 2);
  CHECK(run("no-such-command") == 2);
  CHECK(run("spectrum --n-max 0") == 2);
  CHECK(run("verify bogus") == 2);
  CHECK(run("--config /nonexistent/run.cfg spectrum") == 2);
  CHECK(run("--tol nope=1 spectrum") == 2);
  CHECK(run("--out /nonexistent/dir/out.csv spectrum") == 3);
  CHECK(run("verify specfun") == 0);
  CHECK(run("--tol wronskian=1e-30 verify specfun") == 1);
}

TEST_CASE("verify writes a JSON report") {
  const std::string path = "cli_verify_model.json";
  REQUIRE(run("--out " + path + " verify model") == 0);
  const auto j = nlohmann::json::parse(slurp(path));
  CHECK(j["title"] == "verify model");
  bool saw_pass = false;
  for (const auto& [k, v] : j["meta"].items()) saw_pass |= (k == "pass" && v == "true");
  CHECK(saw_pass);
  CHECK(j["rows"].size() > 3);
  std::remove(path.c_str());
}

TEST_CASE("config file and environment") {
  const std::string cfg = "cli_run.cfg", a = "cli_a.csv", b = "cli_b.csv";
  std::ofstream(cfg) << "B0 = 2\nformat = csv\n";
  REQUIRE(run("--config " + cfg + " --out " + a + " landau-limit --N 1") == 0);
  REQUIRE(shell("MORSEBAND_THREADS=1 " MORSEBAND_CLI " --config " + cfg + " --out " + b + " landau-limit --N 1") == 0);
  CHECK(shell("MORSEBAND_THREADS=many " MORSEBAND_CLI " spectrum") == 2);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("# B0: 2.0000000000000000e+00") != std::string::npos);
  CHECK(run("--out " + a + " export eigen --nx 32 --ny 8") == 0);
  CHECK(slurp(a).find("x,y,re_psi,im_psi,density,w") != std::string::npos);
  CHECK(run("--format json export eigen") == 2);
  std::remove(cfg.c_str());
  std::remove(a.c_str());
  std::remove(b.c_str());
}
