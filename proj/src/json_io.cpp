#include "copwit/json_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "copwit/matrix_core.hpp"

namespace copwit::json_io {

double parse_entry(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash != std::string::npos) {
        const double num = std::stod(s.substr(0, slash));
        const double den = std::stod(s.substr(slash + 1));
        if (den == 0.0) throw std::invalid_argument("zero denominator");
        return num / den;
      }
      return std::stod(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("matrix entry not parseable: \"" + s + "\"");
    }
  }
  throw std::invalid_argument("matrix entry must be a number or a string");
}

namespace {

RealMat parse_part(const json& part, Eigen::Index dim, const char* name) {
  if (!part.is_array() || static_cast<Eigen::Index>(part.size()) != dim) {
    throw std::invalid_argument(std::string(name) + " must be a dim x dim array");
  }
  RealMat m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const json& row = part[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw std::invalid_argument(std::string(name) + " row has wrong length");
    }
    for (Eigen::Index j = 0; j < dim; ++j) {
      m(i, j) = parse_entry(row[static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

}  // namespace

CplxMat parse_matrix(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re")) {
    throw std::invalid_argument("matrix JSON must contain \"dim\" and \"re\"");
  }
  const auto dim = j.at("dim").get<Eigen::Index>();
  if (dim < 1) throw std::invalid_argument("matrix dim must be >= 1");
  const RealMat re = parse_part(j.at("re"), dim, "re");
  RealMat im = RealMat::Zero(dim, dim);
  if (j.contains("im")) im = parse_part(j.at("im"), dim, "im");
  CplxMat m(dim, dim);
  m.real() = re;
  m.imag() = im;
  const double scale = std::max(1.0, matrix_core::max_abs(m));
  if (matrix_core::hermiticity_residual(m) > 1e-12 * scale * dim) {
    throw std::invalid_argument("matrix JSON is not Hermitian");
  }
  return m;
}

RealMat parse_real_symmetric(const json& j) {
  const CplxMat m = parse_matrix(j);
  if (m.imag().cwiseAbs().maxCoeff() != 0.0) {
    throw std::invalid_argument("expected a real matrix but \"im\" is nonzero");
  }
  return m.real();
}

namespace {

json part_to_json(const RealMat& p) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < p.cols(); ++j) row.push_back(p(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json matrix_to_json(const CplxMat& m) {
  json j;
  j["dim"] = m.rows();
  j["re"] = part_to_json(m.real());
  if (m.imag().cwiseAbs().maxCoeff() != 0.0) j["im"] = part_to_json(m.imag());
  return j;
}

json matrix_to_json(const RealMat& m) {
  json j;
  j["dim"] = m.rows();
  j["re"] = part_to_json(m);
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const std::exception& e) {
    throw std::invalid_argument("JSON parse error in " + path + ": " + e.what());
  }
}

}  // namespace copwit::json_io
