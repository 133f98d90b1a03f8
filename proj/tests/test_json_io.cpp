#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "copwit/json_io.hpp"
#include "copwit/matrix_core.hpp"

using namespace copwit;
using nlohmann::json;

TEST_CASE("parse_entry accepts numbers, fractions, and decimal strings") {
  CHECK(json_io::parse_entry(json(0.25)) == doctest::Approx(0.25));
  CHECK(json_io::parse_entry(json(-3)) == doctest::Approx(-3.0));
  CHECK(json_io::parse_entry(json("1/4")) == doctest::Approx(0.25));
  CHECK(json_io::parse_entry(json("-5829/65")) == doctest::Approx(-5829.0 / 65.0));
  CHECK(json_io::parse_entry(json("0.117")) == doctest::Approx(0.117));
  CHECK(json_io::parse_entry(json("1/3")) == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(json_io::parse_entry(json("abc")), std::invalid_argument);
  CHECK_THROWS_AS(json_io::parse_entry(json("1/0x")), std::invalid_argument);
  CHECK_THROWS_AS(json_io::parse_entry(json(nullptr)), std::invalid_argument);
}

TEST_CASE("parse_matrix reads real and complex matrices and validates shape") {
  json j;
  j["dim"] = 2;
  j["re"] = {{1.0, 0.5}, {0.5, 2.0}};
  const CplxMat m = json_io::parse_matrix(j);
  CHECK(m(0, 1).real() == doctest::Approx(0.5));
  CHECK(m(0, 1).imag() == 0.0);

  j["im"] = {{0.0, 0.25}, {-0.25, 0.0}};
  const CplxMat c = json_io::parse_matrix(j);
  CHECK(c(0, 1).imag() == doctest::Approx(0.25));
  CHECK(c(1, 0).imag() == doctest::Approx(-0.25));

  json bad = j;
  bad["re"] = {{1.0, 0.5}};  // wrong row count
  CHECK_THROWS_AS(json_io::parse_matrix(bad), std::invalid_argument);

  json nonherm;
  nonherm["dim"] = 2;
  nonherm["re"] = {{1.0, 0.5}, {0.7, 2.0}};
  CHECK_THROWS_AS(json_io::parse_matrix(nonherm), std::invalid_argument);
}

TEST_CASE("parse_real_symmetric rejects complex input") {
  json j;
  j["dim"] = 2;
  j["re"] = {{1.0, 0.5}, {0.5, 2.0}};
  j["im"] = {{0.0, 0.25}, {-0.25, 0.0}};
  CHECK_THROWS_AS(json_io::parse_real_symmetric(j), std::invalid_argument);
  j.erase("im");
  const RealMat m = json_io::parse_real_symmetric(j);
  CHECK(m(1, 1) == doctest::Approx(2.0));
}

TEST_CASE("matrix_to_json round-trips and omits zero imaginary parts") {
  RealMat r(2, 2);
  r << 1, 0.5, 0.5, 2;
  const json jr = json_io::matrix_to_json(r);
  CHECK_FALSE(jr.contains("im"));
  const CplxMat back = json_io::parse_matrix(jr);
  CHECK(matrix_core::frob(CplxMat(back - r.cast<Cplx>())) == 0.0);

  CplxMat c(2, 2);
  c << Cplx(1, 0), Cplx(0, 0.25), Cplx(0, -0.25), Cplx(2, 0);
  const json jc = json_io::matrix_to_json(c);
  CHECK(jc.contains("im"));
  const CplxMat back2 = json_io::parse_matrix(jc);
  CHECK(matrix_core::frob(CplxMat(back2 - c)) == 0.0);
}

TEST_CASE("load_json_file reports the path on failure") {
  bool threw_with_path = false;
  try {
    json_io::load_json_file("/nonexistent/file.json");
  } catch (const std::invalid_argument& e) {
    threw_with_path =
        std::string(e.what()).find("/nonexistent/file.json") != std::string::npos;
  }
  CHECK(threw_with_path);
  const char* path = "/tmp/copwit_test_roundtrip.json";
  {
    std::ofstream f(path);
    f << "{\"dim\":1,\"re\":[[2.5]]}";
  }
  const CplxMat m = json_io::parse_matrix(json_io::load_json_file(path));
  CHECK(m(0, 0).real() == doctest::Approx(2.5));
  std::remove(path);
}
