#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "epglab/cli.hpp"

using namespace epglab;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("group spec parsing") {
  auto sd = GroupSpec::parse("sd:3");
  CHECK(sd.family == GroupFamily::Semidihedral);
  CHECK(sd.n == 3);
  CHECK(GroupSpec::parse("q:2").family == GroupFamily::GeneralizedQuaternion);
  CHECK(GroupSpec::parse("d:5").family == GroupFamily::Dihedral);
  CHECK(GroupSpec::parse("file:/tmp/x").path == "/tmp/x");
  CHECK_THROWS_AS(GroupSpec::parse("nope"), parameter_error);
  CHECK_THROWS_AS(GroupSpec::parse("zz:3"), parameter_error);
  CHECK_THROWS_AS(GroupSpec::parse("sd:x"), parameter_error);
}

TEST_CASE("verify sd:2 passes every check") {
  auto r = run({"verify", "sd:2", "--all"});
  INFO(r.out << r.err);
  CHECK(r.code == 0);
  for (const char* name : {"nbd", "detour", "dds", "interior", "closure", "eccentric",
                           "dimension", "resolving", "spectrum", "trees"})
    CHECK(r.out.find(std::string("[PASS] ") + name) != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("verify q:2 passes with the decomposition note") {
  auto r = run({"verify", "q:2", "--all"});
  INFO(r.out << r.err);
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] decomposition") != std::string::npos);
  CHECK(r.out.find("2n-2") != std::string::npos);  // printed K_{n-2} discrepancy note
  CHECK(r.out.find("power graph = EPG") != std::string::npos);
}

TEST_CASE("verify d:4 passes") {
  auto r = run({"verify", "d:4", "--all"});
  INFO(r.out << r.err);
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] spectrum") != std::string::npos);
  CHECK(r.out.find("[PASS] trees") != std::string::npos);
  CHECK(r.out.find("[PASS] decomposition") != std::string::npos);
}

TEST_CASE("verify with explicit check subset") {
  auto r = run({"verify", "sd:2", "--check", "spectrum", "--check", "trees"});
  CHECK(r.code == 0);
  CHECK(r.out.find("spectrum") != std::string::npos);
  CHECK(r.out.find("nbd") == std::string::npos);
}

TEST_CASE("verify rejects bad input with exit code 2") {
  CHECK(run({"verify", "zz:9", "--all"}).code == 2);
  CHECK(run({"verify", "sd:2", "--check", "frobnicate"}).code == 2);
  CHECK(run({"verify", "q:2", "--check", "nbd"}).code == 2);   // sd-only check
  CHECK(run({"verify", "sd:1", "--all"}).code == 2);           // parameter out of range
  CHECK(run({"report", "sd:2", "graph", "--format", "csv"}).code == 2);
  CHECK(run({"report", "sd:2", "nonsense"}).code == 2);
}

TEST_CASE("checks above caps are reported skipped, not failed") {
  auto r = run({"verify", "sd:4", "--check", "detour", "--detour-cap", "26"});
  INFO(r.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("[SKIP] detour") != std::string::npos);
  CHECK(r.out.find("26") != std::string::npos);

  auto r2 = run({"verify", "sd:3", "--check", "resolving"});
  CHECK(r2.code == 0);
  CHECK(r2.out.find("[SKIP] resolving") != std::string::npos);
  CHECK(r2.out.find("16") != std::string::npos);
}

TEST_CASE("report graph dot has 16 nodes and 42 edges for sd:2") {
  auto r = run({"report", "sd:2", "graph", "--format", "dot"});
  REQUIRE(r.code == 0);
  int nodes = 0, edges = 0;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("label=") != std::string::npos) ++nodes;
    if (line.find("--") != std::string::npos) ++edges;
  }
  CHECK(nodes == 16);
  CHECK(edges == 42);
}

TEST_CASE("report spectrum json for d:3") {
  auto r = run({"report", "d:3", "spectrum", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["spectrum"] == json::parse("[[0,1],[1,3],[3,1],[6,1]]"));
  CHECK(j["trees"] == "3");
}

TEST_CASE("report detour csv is 17 lines for sd:2") {
  auto r = run({"report", "sd:2", "detour", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 17);
}

TEST_CASE("reports are deterministic across runs and thread counts") {
  auto a = run({"report", "sd:2", "detour", "--format", "json"});
  auto b = run({"report", "sd:2", "detour", "--format", "json"});
  CHECK(a.out == b.out);
  // force single-threaded and compare
  setenv("EPGLAB_THREADS", "1", 1);
  auto c = run({"report", "sd:2", "detour", "--format", "json"});
  unsetenv("EPGLAB_THREADS");
  CHECK(a.out == c.out);
}

TEST_CASE("oracle-only reports work beyond brute-force caps") {
  auto r = run({"report", "sd:6", "detour", "--format", "json", "--oracle-only"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["radius"] == 25);    // 4n+1
  CHECK(j["diameter"] == 27);  // 4n+3

  auto rp = run({"report", "sd:6", "resolving", "--format", "json", "--oracle-only"});
  REQUIRE(rp.code == 0);
  auto jp = json::parse(rp.out);
  CHECK(jp["dim"] == 38);  // 7n-4
}

TEST_CASE("oracle-only spectrum tree count for q:10") {
  // 2^{49} * 10^{18}
  BigInt expected = (BigInt(1) << 49);
  for (int i = 0; i < 18; ++i) expected *= 10;
  auto r = run({"report", "q:10", "spectrum", "--format", "json", "--oracle-only"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["trees"] == expected.str());
}

TEST_CASE("report to file") {
  std::string path = "/tmp/epglab_test_report.json";
  auto r = run({"report", "d:3", "spectrum", "--format", "json", "-o", path});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  auto j = json::parse(in);
  CHECK(j["trees"] == "3");
  std::remove(path.c_str());
}

TEST_CASE("group command") {
  auto r = run({"group", "sd:2", "--orders"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("order 16, maximal cyclic subgroups 7") != std::string::npos);
  CHECK(r.out.find("1 a 8") != std::string::npos);
  CHECK(r.out.find("9 ab 4") != std::string::npos);
}

TEST_CASE("verdicts fail exactly when expected differs from computed") {
  auto ok = detail::make_pass("x", "same", "same");
  CHECK(ok.status == VerdictStatus::Pass);
  auto bad = detail::make_pass("x", "a", "b");
  CHECK(bad.status == VerdictStatus::Fail);
  CHECK(std::string(status_word(VerdictStatus::Fail)) == "FAIL");
  CHECK(std::string(status_word(VerdictStatus::Skipped)) == "SKIP");
}

TEST_CASE("verify a custom group file is rejected for closed-form checks") {
  std::string path = "/tmp/epglab_test_group.txt";
  std::ofstream(path) << "2\n0 1\n1 0\n";
  auto r = run({"verify", "file:" + path, "--all"});
  CHECK(r.code == 2);
  auto g = run({"group", "file:" + path, "--orders"});
  CHECK(g.code == 0);
  CHECK(g.out.find("order 2") != std::string::npos);
  std::remove(path.c_str());
}
