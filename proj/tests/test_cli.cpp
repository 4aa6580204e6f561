#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "zagreb/cli.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/tree_io.hpp"

using namespace zagreb;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "zagreb_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write_file(const std::string& name, const std::string& body) {
  auto p = scratch(name);
  std::ofstream(p) << body;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("compute on a path") {
  auto in = write_file("p5.txt", "5 0 1 1 2 2 3 3 4\n");
  auto r = run_cli({"compute", "--input", in.string(), "--k", "2"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.rfind("index,n,m1,m2,pi1,pi2,f,h,gamma,diameter,code", 0) == 0);
  CHECK(r.out.find("0,5,14,12,64,64,") != std::string::npos);
  CHECK(r.out.find(",1,4,") != std::string::npos);
}

TEST_CASE("family output feeds back into the library") {
  auto out = scratch("tnks.txt");
  auto r = run_cli({"family", "t_nks", "--n", "9", "--k", "2", "--s", "2", "--out", out.string()});
  REQUIRE(r.code == cli::kExitOk);
  std::ifstream in(out);
  auto trees = read_trees(in);
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].order() == 9);
  CHECK(pi1(trees[0]) == ExactNat(1600));
}

TEST_CASE("enumerate with and without a gamma filter") {
  auto all = run_cli({"enumerate", "--n", "8"});
  REQUIRE(all.code == cli::kExitOk);
  std::istringstream a(all.out);
  CHECK(read_trees(a).size() == 23);
  auto one = run_cli({"enumerate", "--n", "8", "--k", "2", "--filter-gamma", "1"});
  REQUIRE(one.code == cli::kExitOk);
  std::istringstream b(one.out);
  for (const auto& t : read_trees(b)) CHECK(diameter(t) <= 4);
  CHECK(run_cli({"enumerate", "--n", "20"}).code == cli::kExitUsage);
}

TEST_CASE("transform contract") {
  auto in = write_file("p4.txt", "4 0 1 1 2 2 3\n");
  auto r = run_cli({"transform", "contract", "--input", in.string(), "--u", "1", "--v", "2"});
  REQUIRE(r.code == cli::kExitOk);
  std::istringstream s(r.out);
  auto trees = read_trees(s);
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].max_degree() == 3);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"compute"}).code == cli::kExitUsage);
  CHECK(run_cli({"compute", "--input", "x", "--bogus"}).code == cli::kExitUsage);
  CHECK(run_cli({"compute", "--input", scratch("missing.txt").string()}).code == cli::kExitUsage);
  CHECK(run_cli({"family", "wheel", "--n", "5"}).code == cli::kExitUsage);
  CHECK(run_cli({"verify", "--kmin", "3", "--kmax", "2"}).code == cli::kExitUsage);
  CHECK(run_cli({"verify", "--claims", "nope", "--nmax", "5"}).code == cli::kExitUsage);

  auto bad = write_file("bad.txt", "3 0 1 1 2\n# comment\n\n4 0 1 1 2 2 0\n");
  auto r = run_cli({"compute", "--input", bad.string()});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("line 4") != std::string::npos);
}

TEST_CASE("verify exit status and report files") {
  auto report = scratch("report.json");
  auto csv = scratch("report.csv");
  auto ok = run_cli({"verify", "--claims", "lemma24,lemma25", "--nmax", "8", "--report", report.string(), "--csv",
                     csv.string()});
  CHECK(ok.code == cli::kExitOk);
  CHECK(slurp(report).find("\"version\"") != std::string::npos);
  CHECK(slurp(csv).rfind("kind,", 0) == 0);
  CHECK(ok.out.find("lemma24") != std::string::npos);

  auto failing = run_cli({"verify", "--claims", "lemma23", "--nmax", "8"});
  CHECK(failing.code == cli::kExitClaimFailure);
}
