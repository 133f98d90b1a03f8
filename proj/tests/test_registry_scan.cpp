#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <set>
#include <string>

#include "json.hpp"

#include "copwit/certify.hpp"
#include "copwit/matrix_core.hpp"
#include "copwit/registry.hpp"
#include "copwit/scan.hpp"
#include "copwit/symmetric_space.hpp"
#include "copwit/witness_factory.hpp"

using namespace copwit;
using symmetric_space::IndexPair;

TEST_CASE("the example registry lists six names and rejects unknown ones") {
  const auto& names = registry::example_names();
  CHECK(names.size() == 6);
  const std::set<std::string> expect{"horn5",       "hp7_ds7",      "toth_d3",
                                     "rational_d3", "appendixA_d4", "edge57"};
  CHECK(std::set<std::string>(names.begin(), names.end()) == expect);

  try {
    registry::run_example("nope");
    FAIL("expected std::invalid_argument");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("hp7_ds7") != std::string::npos);
    CHECK(msg.find("edge57") != std::string::npos);
  }
}

TEST_CASE("every registered example reproduces its recorded outcome") {
  for (const auto& name : registry::example_names()) {
    const auto rep = registry::run_example(name);
    INFO("example ", name);
    CHECK(rep.reproduced);
    CHECK_FALSE(rep.lines.empty());
  }
}

TEST_CASE("frozen detection values of the three coherent examples") {
  const double toth =
      witness_factory::expectation(registry::toth_witness(), registry::toth_state());
  CHECK(toth == doctest::Approx(-5.622247).epsilon(1e-4));
  const double rational = witness_factory::expectation(registry::rational_witness(),
                                                       registry::rational_state());
  CHECK(rational == doctest::Approx(-7.60138).epsilon(1e-4));
  const double d4 =
      witness_factory::expectation(registry::d4_witness(), registry::d4_state());
  CHECK(d4 == doctest::Approx(-5.047438).epsilon(1e-4));
}

TEST_CASE("the d = 4 weights are exactly normalized despite the radicals") {
  CHECK(std::abs(registry::d4_weights().total() - 1.0) <= 1e-13);
}

TEST_CASE("the d = 4 assignment search finds exactly the stored assignment") {
  const auto hits = registry::d4_assignment_search();
  REQUIRE(hits.size() == 1);
  const auto stored = registry::d4_stored_assignment();
  for (int k = 0; k < 3; ++k) {
    CHECK(hits[0].slots[k].first == stored[k].first);
    CHECK(hits[0].slots[k].second == stored[k].second);
  }
  CHECK(hits[0].value < -1.0);
  CHECK(hits[0].state_min_eig >= -1e-9);
  CHECK(hits[0].pt_min_eig >= -1e-9);
}

TEST_CASE("a tiny scan grid produces the expected row set") {
  const auto p = registry::toth_weights();
  scan::GridSpec grid;
  grid.alpha = {0.0, 0.1, 5};
  grid.beta = {-0.1, 0.0, 5};
  grid.gamma_slices = {0.0};
  const auto res = scan::scan_d3(p, registry::toth_witness(), grid);
  CHECK(res.rows.size() == 25);

  const std::string csv = scan::to_csv(res);
  CHECK(csv.rfind("alpha_re,alpha_im,beta_re,beta_im,gamma_re,gamma_im,"
                  "state_min_eig,pt_min_eig,witness_value,class\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 26);

  // Every class tag is one of the four known labels.
  for (const auto& row : res.rows) {
    const std::string cls = row.cls;
    CHECK((cls == "invalid" || cls == "NPT" || cls == "PPT-undetected" ||
           cls == "PPT-detected"));
  }

  // Determinism: a second scan serializes byte-identically.
  const auto res2 = scan::scan_d3(p, registry::toth_witness(), grid);
  CHECK(scan::to_csv(res2) == csv);
}

TEST_CASE("a centered grid classifies the registered d = 3 point as detected") {
  const auto p = registry::toth_weights();
  const auto pt = registry::toth_point();
  scan::GridSpec grid;
  grid.alpha = {pt[0], pt[0], 1};
  grid.beta = {pt[1], pt[1], 1};
  grid.gamma_slices = {pt[2]};
  const auto res = scan::scan_d3(p, registry::toth_witness(), grid);
  REQUIRE(res.rows.size() == 1);
  CHECK(std::string(res.rows[0].cls) == "PPT-detected");
  CHECK(res.rows[0].value == doctest::Approx(-5.622247).epsilon(1e-4));
}

TEST_CASE("grid JSON parsing: defaults, overrides, and validation") {
  const auto p = registry::toth_weights();
  const auto dflt = scan::parse_grid(nlohmann::json::object(), p);
  CHECK(dflt.alpha.lo == doctest::Approx(-0.2));
  CHECK(dflt.alpha.hi == doctest::Approx(0.2));
  CHECK(dflt.alpha.steps == 201);
  REQUIRE(dflt.gamma_slices.size() == 2);
  CHECK(dflt.gamma_slices[0] == doctest::Approx(0.0));
  CHECK(dflt.gamma_slices[1] == doctest::Approx(p.at(0, 1) / 4.0));

  const nlohmann::json j = {{"alpha", {{"min", -0.05}, {"max", 0.05}, {"steps", 11}}},
                            {"gamma", {{"slices", {0.0, 0.02}}}}};
  const auto g = scan::parse_grid(j, p);
  CHECK(g.alpha.lo == doctest::Approx(-0.05));
  CHECK(g.alpha.hi == doctest::Approx(0.05));
  CHECK(g.alpha.steps == 11);
  CHECK(g.beta.steps == 201);  // untouched axis keeps its default
  REQUIRE(g.gamma_slices.size() == 2);
  CHECK(g.gamma_slices[1] == doctest::Approx(0.02));

  CHECK_THROWS_AS(
      scan::parse_grid(nlohmann::json{{"alpha", {{"steps", 0}}}}, p),
      std::invalid_argument);
  CHECK_THROWS_AS(
      scan::parse_grid(nlohmann::json{{"gamma", {{"slices", nlohmann::json::array()}}}},
                       p),
      std::invalid_argument);
}

TEST_CASE("scan outputs land on disk with the documented names") {
  namespace fs = std::filesystem;
  const auto p = registry::toth_weights();
  scan::GridSpec grid;
  grid.alpha = {0.0, 0.05, 3};
  grid.beta = {0.0, 0.05, 3};
  grid.gamma_slices = {0.0, 0.01};
  const auto res = scan::scan_d3(p, registry::toth_witness(), grid);

  const fs::path dir = fs::temp_directory_path() / "copwit_scan_test";
  fs::remove_all(dir);
  const auto files = scan::write_outputs(res, dir.string());
  REQUIRE(files.size() == 3);
  CHECK(fs::path(files[0]).filename() == "scan.csv");
  CHECK(fs::path(files[1]).filename() == "scan_gamma_0.svg");
  CHECK(fs::path(files[2]).filename() == "scan_gamma_1.svg");
  for (const auto& f : files) CHECK(fs::exists(f));

  const auto svg = scan::slice_svg(res, 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("the edge-candidate example state is PPT with the recorded ranks") {
  const auto s = registry::edge57_state();
  CHECK(s.psd_ok);
  CHECK(certify::ppt(s).first);
  const auto pt = symmetric_space::partial_transpose(s.rho, s.d);
  CHECK(matrix_core::numerical_rank(s.rho, 1e-8) == 5);
  CHECK(matrix_core::numerical_rank(pt, 1e-8) == 7);
}
