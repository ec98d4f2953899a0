#include "mcshane/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json j() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mcshane::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify") {
  const Result r = run({"classify", "--matrix", "1,1,1,2"});
  REQUIRE(r.code == 0);
  const json j = r.j();
  CHECK(j["kind"] == "Hyperbolic");
  CHECK(j["trace"].get<double>() == doctest::Approx(3));
  CHECK(j.contains("schema"));
  CHECK(run({"classify", "--matrix", "0,-1,1,0"}).j()["kind"] == "Elliptic");
  CHECK(run({"classify", "--matrix", "1,1,1,1"}).code == 1);
  CHECK(run({"classify", "--matrix", "1,1,1"}).code == 1);
}

TEST_CASE("identity reports") {
  const Result r = run({"identity", "--depth", "0"});
  REQUIRE(r.code == 0);
  const json j = r.j();
  for (const char* key : {"sum", "residual", "terms", "depth", "schema", "surface"}) CHECK(j.contains(key));
  CHECK(j["sum"].get<double>() == doctest::Approx(0.381966011).epsilon(1e-8));
  CHECK(j["terms"] == 3);
  const json e = run({"identity", "--eps", "1e-8"}).j();
  CHECK(e["residual"].get<double>() < 1e-6);
  const json f = run({"--traces", "4,4,13.656854249492381", "identity", "--eps", "1e-8"}).j();
  CHECK(f["residual"].get<double>() < 1e-6);
  CHECK(run({"identity", "--eps", "1e-8", "--depth", "3"}).code == 1);
  CHECK(run({"identity", "--eps", "-1"}).code == 1);
  CHECK(run({"--traces", "3,3,4", "identity", "--depth", "1"}).code == 1);
}

TEST_CASE("deadzone at x = 0") {
  const Result r = run({"deadzone", "--x", "0"});
  REQUIRE(r.code == 0);
  const json j = r.j();
  CHECK(j["width"].get<double>() == doctest::Approx(0.127322004).epsilon(1e-8));
  CHECK(std::abs(j["gap_residual"].get<double>()) < 1e-9);
  CHECK(run({"deadzone", "--x", "1/50"}).code == 1);
  CHECK(run({"deadzone", "--x", "1/x"}).code == 1);
  CHECK(run({"deadzone", "--x", "1/0"}).code == 1);
  CHECK(run({"--traces", "4,4,13.656854249492381", "deadzone", "--x", "0"}).code == 1);
}

TEST_CASE("return point") {
  const Result r = run({"return-point", "--x", "1/7", "--ball", "8"});
  REQUIRE(r.code == 0);
  const json j = r.j();
  CHECK(j.contains("word"));
  CHECK(j.contains("center"));
  CHECK(run({"return-point", "--x", "0"}).code == 1);
}

TEST_CASE("coverage") {
  const Result r = run({"coverage", "--depth", "3", "--intervals"});
  REQUIRE(r.code == 0);
  const json j = r.j();
  CHECK(j["overlaps"] == 0);
  CHECK(j["total_width"].get<double>() >= 0.99);
  CHECK(j["deadzones"] == 48);
  CHECK(j["intervals"].size() == 48);
}

TEST_CASE("scan writes csv and a json summary") {
  const std::string path = "test_cli_scan.csv";
  const Result r = run({"scan", "--resolution", "0.01", "--ball", "6", "--format", "csv", "--out", path});
  REQUIRE(r.code == 0);
  const json j = r.j();
  CHECK(j.contains("schema"));
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "x,verdict,witness_length,deadzone_id");
  int rows = 0;
  for (std::string line; std::getline(f, line);) ++rows;
  CHECK(rows == 100);
  std::remove(path.c_str());
  const Result plain = run({"scan", "--resolution", "1/10", "--ball", "4"});
  REQUIRE(plain.code == 0);
  CHECK(plain.out.rfind("x,verdict,witness_length,deadzone_id\n0,cusp_center,", 0) == 0);
  const Result full = run({"scan", "--resolution", "1/10", "--ball", "4", "--format", "json"});
  REQUIRE(full.code == 0);
  CHECK(full.j()["grid"].size() == 10);
  CHECK(run({"coverage", "--format", "csv"}).code == 1);
  CHECK(run({"scan", "--resolution", "abc"}).code == 1);
  CHECK(run({"scan", "--resolution", "0"}).code == 1);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"coverage", "--depth", "4"};
  CHECK(run(args).out == run(args).out);
  CHECK(run({"identity", "--eps", "1e-9", "--threads", "1"}).out ==
        run({"identity", "--eps", "1e-9", "--threads", "3"}).out);
}

TEST_CASE("flags and help") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"identity", "--bogus"}).code == 1);
  CHECK(run({"--surface", "sphere", "identity"}).code == 1);
  CHECK(run({"--format", "xml", "identity"}).code == 1);
  const Result h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("identity") != std::string::npos);
  CHECK(run({"deadzone", "--help"}).code == 0);
  CHECK(mcshane::cli::resolve_threads(3) == 3);
  CHECK(mcshane::cli::resolve_threads(0) >= 1);
}
