#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "logsheaf/report.hpp"
#include "logsheaf/rootsys.hpp"

using namespace logsheaf;

TEST_CASE("arrangement JSON has the documented schema") {
  auto A = deformation_A(2, 0, 1);
  Json j = arrangement_to_json(A);
  CHECK(j["ambient_dim"] == 3);
  CHECK(j["forms"].size() == 7);
  CHECK(j["forms"][0].size() == 3);
  CHECK(j["labels"][0] == "infinity");
}

TEST_CASE("betti JSON for A2^[0,3]") {
  auto b = minimal_resolution(deformation_A(2, 0, 3));
  Json j = betti_to_json(b);
  CHECK(j["beta"]["0"]["7"] == 4);
  CHECK(j["beta"]["1"]["8"] == 2);
  CHECK(j["pdim"] == 1);
  CHECK(j.contains("hilbert"));
}

TEST_CASE("charpoly JSON uses rational strings and descending coefficients") {
  Json j = charpoly_to_json(deformation_A(2, 0, 1), Int(3));
  CHECK(j["chi"] == Json::array({"1", "-7", "15", "-9"}));
  CHECK(j["reduced"] == Json::array({"1", "-6", "9"}));
  CHECK(j["c1"] == "0");
  CHECK(j["c2"] == "0");
}

TEST_CASE("report: k=2 cell is recognized as the twisted tangent bundle") {
  ReportOptions opt;
  Json j = report(deformation_A(2, 1, 2), opt);
  CHECK(j["isomorphic_to_twisted_tangent"] == true);
  CHECK(j["betti"]["beta"]["0"]["8"] == 3);
  CHECK(j["betti"]["beta"]["1"]["9"] == 1);
}

TEST_CASE("report is byte-identical across runs") {
  ReportOptions opt;
  opt.with_unstable = true;
  opt.random_lines = 10;
  auto A = deformation_A(2, 0, 2);
  std::string s1 = report(A, opt).dump();
  std::string s2 = report(A, opt).dump();
  CHECK(s1 == s2);
}

TEST_CASE("sweep on a small grid: all conjecture parts pass") {
  SweepOptions opt;
  opt.random_lines = 10;
  auto rep = conjecture_sweep('A', 2, {0, 1}, {1, 3}, opt);
  REQUIRE(rep.cells.size() == 6);
  CHECK(rep.all_pass);
  for (const auto& c : rep.cells) {
    CHECK(c.shift_betti == Verdict::pass);
    CHECK(c.dual_betti == Verdict::pass);
    CHECK(c.pdim == Verdict::pass);
    CHECK(c.linear == Verdict::pass);
    CHECK(c.riemann_hypothesis == Verdict::pass);
  }
  Json j = sweep_to_json(rep);
  CHECK(j["all_pass"] == true);
  std::string csv = sweep_to_csv(rep);
  CHECK(csv.find("pass") != std::string::npos);
}

TEST_CASE("resource guard marks oversized cells as skipped") {
  SweepOptions opt;
  opt.matrix_budget = 10;  // absurdly small
  auto rep = conjecture_sweep('A', 2, {0, 0}, {2, 2}, opt);
  REQUIRE(rep.cells.size() == 1);
  CHECK(rep.cells[0].betti.is_null());
  CHECK(rep.cells[0].pdim == Verdict::skipped);
}

TEST_CASE("cache round trip is advisory and key-checked") {
  std::string dir = (std::filesystem::temp_directory_path() / "logsheaf_cache_test").string();
  std::filesystem::remove_all(dir);
  Json v;
  v["x"] = 42;
  cache_put(dir, "some-key", v);
  auto hit = cache_get(dir, "some-key");
  REQUIRE(hit.has_value());
  CHECK((*hit)["x"] == 42);
  CHECK(!cache_get(dir, "other-key").has_value());
  std::filesystem::remove_all(dir);
}
