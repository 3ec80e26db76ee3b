#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef _WIN32
#include <sys/wait.h>
#endif

#include <doctest.h>

namespace {

namespace fs = std::filesystem;

const fs::path kScratch = fs::path("cli_scratch");

std::string scratch(const std::string& name) {
  fs::create_directories(kScratch);
  return (kScratch / name).string();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(GIDLAB_CLI_PATH) + " " + args;
  const int raw = std::system(cmd.c_str());
  if (raw == -1) return -1;
#ifdef _WIN32
  return raw;
#else
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
#endif
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("verdict subcommands map pass and fail onto exit codes") {
  CHECK(run_cli("gid-check --family gamma --shape 0.5 >/dev/null") == 0);
  CHECK(run_cli("gid-check --family gamma --shape 2 >/dev/null") == 1);
  CHECK(run_cli("cox-check --family gamma --shape 2 >/dev/null") == 1);
  CHECK(run_cli("cox-check --family exp >/dev/null") == 0);
}

TEST_CASE("exactly one verdict line is printed") {
  const std::string out = scratch("verdict.txt");
  REQUIRE(run_cli("gid-check --family gamma --shape 0.5 > " + out) == 0);
  const std::string text = slurp(out);
  CHECK(text.rfind("PASS", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1);

  REQUIRE(run_cli("gid-check --family gamma --shape 2 > " + out) == 1);
  const std::string fail = slurp(out);
  CHECK(fail.rfind("FAIL", 0) == 0);
  CHECK(std::count(fail.begin(), fail.end(), '\n') == 1);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("bogus-subcommand >/dev/null 2>&1") == 2);
  CHECK(run_cli(">/dev/null 2>&1") == 2);                                    // no subcommand
  CHECK(run_cli("sample --family ml --alpha 2 >/dev/null 2>&1") == 2);       // bad domain
  CHECK(run_cli("sample --family nosuch >/dev/null 2>&1") == 2);             // bad family
  CHECK(run_cli("--help >/dev/null 2>&1") == 0);
  CHECK(run_cli("sample --help >/dev/null 2>&1") == 0);
}

TEST_CASE("sampling output is byte-stable across runs and worker counts") {
  const std::string f1 = scratch("s1.csv"), f2 = scratch("s2.csv"), f3 = scratch("s3.csv");
  REQUIRE(run_cli("sample --family ml --alpha 0.6 --n 5000 --seed 7 --out " + f1 +
                  " >/dev/null") == 0);
  REQUIRE(run_cli("sample --family ml --alpha 0.6 --n 5000 --seed 7 --out " + f2 +
                  " >/dev/null") == 0);
  REQUIRE(run_cli("sample --family ml --alpha 0.6 --n 5000 --seed 7 --workers 3 --out " + f3 +
                  " >/dev/null") == 0);
  const std::string a = slurp(f1);
  CHECK(a == slurp(f2));
  CHECK(a == slurp(f3));
  CHECK(a.rfind("# descriptor=ml(alpha=0.6,scale=1) n=5000 seed=7\nvalue\n", 0) == 0);
}

TEST_CASE("config files fill in defaults but the command line wins") {
  const std::string cfg = scratch("sample.cfg");
  const std::string out = scratch("cfg_out.csv");
  spit(cfg, "# sampling defaults\nfamily = exp\nrate = 2\nseed = 7\n");
  REQUIRE(run_cli("sample --config " + cfg + " --seed 9 --n 10 --out " + out + " >/dev/null") == 0);
  const std::string text = slurp(out);
  CHECK(text.rfind("# descriptor=exp(rate=2) n=10 seed=9\n", 0) == 0);
}

TEST_CASE("malformed config files are rejected") {
  const std::string out = scratch("cfg_bad.csv");
  const std::string dup = scratch("dup.cfg");
  spit(dup, "seed = 1\nseed = 2\n");
  CHECK(run_cli("sample --config " + dup + " >/dev/null 2>&1") == 2);

  const std::string unknown = scratch("unknown.cfg");
  spit(unknown, "nonsense = 1\n");
  const std::string errfile = scratch("err.txt");
  CHECK(run_cli("sample --config " + unknown + " --out " + out + " >/dev/null 2> " + errfile) == 2);
  const std::string err = slurp(errfile);
  CHECK(err.find("nonsense") != std::string::npos);
  CHECK(err.find("family") != std::string::npos);  // the message lists valid keys

  const std::string missing = scratch("no_such.cfg");
  CHECK(run_cli("sample --config " + missing + " >/dev/null 2>&1") == 2);
}

TEST_CASE("grid reports from transform comparisons land on disk") {
  const std::string out = scratch("grid.csv");
  REQUIRE(run_cli("lt-compare --family exp --rate 1 --n 20000 --seed 3 --out " + out +
                  " >/dev/null") == 0);
  const std::string text = slurp(out);
  CHECK(text.rfind("lambda,value,reference,se,pass\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') >= 2);
}

TEST_CASE("the p-grid verdict table lands on disk") {
  const std::string out = scratch("cox.csv");
  REQUIRE(run_cli("cox-check --family exp --out " + out + " >/dev/null") == 0);
  const std::string text = slurp(out);
  CHECK(text.rfind("p,verdict,worst_lambda,worst_margin\n", 0) == 0);
  CHECK(text.find("PASS") != std::string::npos);
}
