#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

const std::string kCli = PHASEPOINT_CLI;

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string out_path = "cli_stdout.txt";
  const std::string cmd = env + " " + kCli + " " + args + " > " + out_path + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  Run r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_path);
  std::ostringstream s;
  s << in.rdbuf();
  r.out = s.str();
  std::remove(out_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("verify wigner --p 3 --n 1").status == 0);
  CHECK(run("verify wigner --p 3 --tol 1e-30").status == 1);
  CHECK(run("verify wigner --p 2 --n 1").status == 2);
  CHECK(run("verify bogus").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("verify wigner --p 4").status == 2);
  CHECK(run("verify design --dim 8 --method potential").status == 2);
  CHECK(run("verify wigner --format yaml").status == 2);
}

TEST_CASE("json report on stdout") {
  const auto r = run("verify sic --name tetrahedron --format json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["scenario"] == "sic");
  CHECK(j["pass"] == true);
  const auto z = run("zsigmondy 2 6 --format json");
  REQUIRE(z.status == 0);
  CHECK(nlohmann::json::parse(z.out)["pass"] == true);
  const auto t = run("verify complement --p 3 --format text");
  CHECK(t.status == 0);
  CHECK(t.out.find("✓") != std::string::npos);
}

TEST_CASE("matrix dump") {
  const std::string path = "cli_dump.txt";
  REQUIRE(run("verify wigner --p 3 --dump " + path).status == 0);
  std::ifstream in(path);
  std::string header, row;
  std::getline(in, header);
  CHECK(header.rfind("# ", 0) == 0);
  std::getline(in, row);
  CHECK(row == "1+0i\t0+0i\t0+0i");
  std::remove(path.c_str());
}

TEST_CASE("thread cap from the environment") {
  CHECK(run("verify wigner --p 5", "PHASEPOINT_THREADS=1").status == 0);
  CHECK(run("verify wigner --p 5", "PHASEPOINT_THREADS=2").status == 0);
}
