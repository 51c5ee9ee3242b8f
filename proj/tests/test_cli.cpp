#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args, const std::string& cache_dir = "") {
  static int counter = 0;
  fs::path tmp = fs::path(OKIT_TEST_TMPDIR);
  fs::create_directories(tmp);
  fs::path outfile = tmp / ("cli-out-" + std::to_string(counter++) + ".txt");
  std::string cmd;
  if (!cache_dir.empty())
    cmd += "OKIT_CACHE=\"" + cache_dir + "\" ";
  else
    cmd += "OKIT_CACHE= ";
  cmd += std::string(OKIT_BIN_PATH) + " " + args + " > \"" + outfile.string() + "\" 2>/dev/null";
  int rc = std::system(cmd.c_str());
  RunResult r{WEXITSTATUS(rc), slurp(outfile)};
  fs::remove(outfile);
  return r;
}

}  // namespace

TEST_CASE("cli: group listing") {
  RunResult r = run("group --type A1 --list");
  CHECK(r.code == 0);
  CHECK(r.out == "\n1\n");  // identity prints as the empty word
}

TEST_CASE("cli: kl prints the known A3 value") {
  RunResult r = run("kl --type A3 --x 2 --y 2,1,3,2");
  CHECK(r.code == 0);
  CHECK(r.out == "1+q\n");
}

TEST_CASE("cli: verify subcommands exit zero on pass") {
  CHECK(run("verify tbgs --type A2 --G 1").code == 0);
  CHECK(run("verify t21 --type A2").code == 0);
  CHECK(run("verify t11 --type A2 --G 1 --H 2").code == 0);
  CHECK(run("verify s5c4 --type A2 --H 1").code == 0);
}

TEST_CASE("cli: usage errors exit with code 1") {
  CHECK(run("kl --type A3 --x 2 --y not-a-word").code == 1);
  CHECK(run("group").code == 1);                    // missing --type
  CHECK(run("frobnicate --type A1").code == 1);     // unknown command
  CHECK(run("group --type E8").code == 1);          // not finite-type support
  CHECK(run("group --type A5 --cap 10").code == 1); // refused by the cap
}

TEST_CASE("cli: deterministic output across repeated runs") {
  for (const char* args :
       {"cartan --type A2 --format json", "cartan --type B2 --format csv",
        "decmat --type A2 --flavor parabolic --H 1 --format json",
        "linres --type A2 --x \"\"", "ext --type A2 --H 1 --x 1,2,1 --y 1",
        "tilt --type A2 --format json", "bgg --type A2 --G 1 --x 1"}) {
    RunResult a = run(args);
    RunResult b = run(args);
    CAPTURE(args);
    CHECK(a.code == 0);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("cli: cold and warm cache runs are byte-identical") {
  fs::path cache = fs::path(OKIT_TEST_TMPDIR) / "cache";
  fs::remove_all(cache);
  fs::create_directories(cache);

  std::string args = "cartan --type A3 --format json";
  RunResult nocache = run(args);
  RunResult cold = run(args, cache.string());
  CHECK(fs::exists(cache / "kl-A3-v1.json"));  // table written on the cold run
  RunResult warm = run(args, cache.string());
  CHECK(cold.code == 0);
  CHECK(warm.code == 0);
  CHECK(cold.out == warm.out);
  CHECK(cold.out == nocache.out);

  // the verify path also goes through the cache
  RunResult v1 = run("verify tback --type A3 --G 1 --H 3", cache.string());
  RunResult v2 = run("verify tback --type A3 --G 1 --H 3", cache.string());
  CHECK(v1.code == 0);
  CHECK(v1.out == v2.out);
}

TEST_CASE("cli: matrix formats") {
  RunResult t = run("cartan --type A1");
  CHECK(t.out.find("1+v^2") != std::string::npos);
  RunResult c = run("cartan --type A1 --format csv");
  CHECK(c.out.find("index,\"\",\"1\"") == 0);
  RunResult j = run("cartan --type A1 --format json");
  CHECK(j.out.find("\"index\"") != std::string::npos);
  CHECK(j.out.find("\"rows\"") != std::string::npos);
}
