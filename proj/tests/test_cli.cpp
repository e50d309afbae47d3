#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "support/oracles.hpp"
#include "tbt/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = tbt::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "tbt_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string value_of(const std::string& text, const std::string& key) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind(key + "\t", 0) == 0) return line.substr(key.size() + 1);
  }
  return "";
}

}  // namespace

TEST_CASE("solve on the running example") {
  const auto path = write_temp("example.txt", tbt::testing::kExampleEdges);
  const Run r = run({"solve", path});
  REQUIRE(r.code == 0);
  CHECK(value_of(r.out, "phase1_cost") == "33");
  CHECK(value_of(r.out, "final_cost") == "27");
  CHECK(value_of(r.out, "steiner_count") == "8");
  CHECK(r.out.find("# host\n") != std::string::npos);

  const Run p1 = run({"solve", "--phase1-only", "--labels"},
                     tbt::testing::kExampleEdges);
  REQUIRE(p1.code == 0);
  CHECK(value_of(p1.out, "final_cost") == "33");
  CHECK(p1.out.find("r:-\n") != std::string::npos);
}

TEST_CASE("solve --json") {
  const Run r = run({"solve", "--json"}, "0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n0 7\n0 8\n0 9\n");
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["report"]["schema_version"] == 1);
  CHECK(doc["report"]["lb"] == 15);
  CHECK(doc["report"]["n"] == 10);
  CHECK(doc["host"]["nodes"].size() == 10);
  CHECK(doc["ledger"].size() == 8);
}

TEST_CASE("solve then eval round trip") {
  const auto demand = write_temp("demand.txt", tbt::testing::kExampleEdges);
  const auto host = write_temp("host.txt", "");
  REQUIRE(run({"solve", demand, "--out", host}).code == 0);
  const Run e = run({"eval", demand, "--host", host});
  REQUIRE(e.code == 0);
  CHECK(value_of(e.out, "total") == "27");
  CHECK(value_of(e.out, "u") == "9");

  const auto labelled = write_temp("host_labels.txt", "");
  REQUIRE(run({"solve", demand, "--labels", "--phase1-only", "--out", labelled}).code == 0);
  const Run el = run({"eval", demand, "--host", labelled, "--labels", "--json"});
  REQUIRE(el.code == 0);
  const auto doc = nlohmann::json::parse(el.out);
  CHECK(doc["total"] == 33);
  CHECK(doc["per_vertex"]["w"] == 8);
}

TEST_CASE("gen, lb and table") {
  const Run g = run({"gen", "--kind", "star", "--n", "10"});
  REQUIRE(g.code == 0);
  const Run lb = run({"lb"}, g.out);
  REQUIRE(lb.code == 0);
  CHECK(value_of(lb.out, "lb") == "15");
  CHECK(value_of(lb.out, "trivial_lb") == "9");
  CHECK(run({"lb", "--delta", "2"}, g.out).code == 1);

  const Run a = run({"gen", "--kind", "random", "--n", "50", "--seed", "42"});
  const Run b = run({"gen", "--kind", "random", "--n", "50", "--seed", "42"});
  CHECK(a.out == b.out);

  const Run t = run({"table", "--tsv"});
  REQUIRE(t.code == 0);
  CHECK(t.out.rfind("c\tLB\tUB\tRatio\n", 0) == 0);
  CHECK(t.out.find("\n9\t15\t45\t3\n") != std::string::npos);
  CHECK(run({"table"}).code == 0);
}

TEST_CASE("oracle") {
  const Run r = run({"oracle"}, "0 1\n0 2\n0 3\n0 4\n");
  REQUIRE(r.code == 0);
  CHECK(value_of(r.out, "opt") == "5");
  CHECK(r.out.find("# optimal host") != std::string::npos);

  const Run big = run({"oracle"}, run({"gen", "--kind", "path", "--n", "11"}).out);
  CHECK(big.code == 3);
  CHECK(run({"solve", "--oracle"}, run({"gen", "--kind", "path", "--n", "11"}).out).code == 3);
}

TEST_CASE("check on random instances and on the running example") {
  const Run r = run({"check", "--random", "30", "--min-n", "3", "--max-n", "9", "--seed", "5"});
  REQUIRE(r.code == 0);
  CHECK(value_of(r.out, "verdict") == "PASS");
  CHECK(value_of(r.out, "instances") == "30");
  CHECK(std::stod(value_of(r.out, "max_ratio_vs_opt")) <= 4.0);

  const auto path = write_temp("example_check.txt", tbt::testing::kExampleEdges);
  const Run ex = run({"check", path});
  CHECK(ex.code == 0);
  CHECK(value_of(ex.out, "verdict") == "PASS");
}

TEST_CASE("check rejects a host with a one-child Steiner node") {
  const auto demand = write_temp("small.txt", "0 1\n0 2\n");
  // s3 hangs under vertex 0 with a single child: invariant (i) fails.
  const auto host = write_temp("bad_host.txt", "0:-\n1:s3\n2:0\ns3:0\n");
  const Run r = run({"check", demand, "--host", host});
  CHECK(r.code == 2);
  CHECK(r.out.find("invariant (i)") != std::string::npos);

  const auto good = write_temp("good_host.txt", "0:-\n1:s3\n2:s3\ns3:0\n");
  CHECK(run({"check", demand, "--host", good}).code == 0);
}

TEST_CASE("input errors") {
  CHECK(run({"solve"}, "a b\nb c\nc a\n").code == 1);
  CHECK(run({"solve"}, "").code == 1);
  CHECK(run({"solve", "/nonexistent/file"}).code == 1);
  CHECK(run({"solve", "--root", "zz"}, "a b\n").code == 1);
  CHECK(run({"solve", "--tiebreak", "coin"}, "a b\n").code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"gen", "--kind", "forest", "--n", "3"}).code == 1);
  CHECK(run({"bst-demo", "--n", "12"}).code == 1);
  CHECK(run({"bench", "--sizes", "64,32"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("bench and bst-demo") {
  const Run b = run({"bench", "--sizes", "2^6,2^7", "--reps", "2"});
  REQUIRE(b.code == 0);
  CHECK(b.out.find("\n64\t") != std::string::npos);
  CHECK(b.out.find("# mean growth") != std::string::npos);

  const Run d = run({"bst-demo", "--n", "4", "--n", "16"});
  REQUIRE(d.code == 0);
  CHECK(d.out.find("\n4\t") != std::string::npos);
  CHECK(d.out.find("\n16\t") != std::string::npos);
}
