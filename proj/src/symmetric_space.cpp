#include "copwit/symmetric_space.hpp"

#include <array>
#include <cmath>
#include <string>

#include "copwit/json_io.hpp"

namespace copwit::symmetric_space {

namespace {

constexpr double kSqrt2Inv = 0.7071067811865475244;  // 1/sqrt(2)

void check_dim(int d) {
  if (d < 1 || d > 16) {
    throw std::invalid_argument("local dimension must satisfy 1 <= d <= 16, got " +
                                std::to_string(d));
  }
}

}  // namespace

void DSProbabilities::validate() const {
  check_dim(d);
  for (const auto& [idx, w] : p) {
    if (idx.i < 0 || idx.j >= d) {
      throw std::invalid_argument("DS weight index out of range: (" +
                                  std::to_string(idx.i) + "," + std::to_string(idx.j) +
                                  ")");
    }
    if (!(w >= 0.0)) {
      throw std::invalid_argument("DS weights must be nonnegative, got p(" +
                                  std::to_string(idx.i) + "," + std::to_string(idx.j) +
                                  ") = " + std::to_string(w));
    }
  }
}

double DSProbabilities::total() const {
  double t = 0;
  for (const auto& [idx, w] : p) t += w;
  return t;
}

bool DSProbabilities::normalized(double tol) const { return std::abs(total() - 1.0) <= tol; }

double DSProbabilities::at(int i, int j) const {
  const auto it = p.find(IndexPair(i, j));
  return it == p.end() ? 0.0 : it->second;
}

void CoherenceMap::validate() const {
  check_dim(d);
  for (const auto& e : entries) {
    if (e.from.i < 0 || e.from.j >= d || e.to.i < 0 || e.to.j >= d) {
      throw std::invalid_argument("coherence Dicke index out of range");
    }
    if (e.from == e.to) {
      throw std::invalid_argument("coherence must couple two distinct Dicke vectors");
    }
  }
}

CplxVec dicke_vector(int i, int j, int d) {
  check_dim(d);
  if (i < 0 || i >= d || j < 0 || j >= d) {
    throw std::out_of_range("dicke_vector index out of range");
  }
  CplxVec v = CplxVec::Zero(static_cast<Eigen::Index>(d) * d);
  if (i == j) {
    v[static_cast<Eigen::Index>(i) * d + i] = 1.0;
  } else {
    v[static_cast<Eigen::Index>(i) * d + j] = kSqrt2Inv;
    v[static_cast<Eigen::Index>(j) * d + i] = kSqrt2Inv;
  }
  return v;
}

CplxMat flip_operator(int d) {
  check_dim(d);
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  CplxMat f = CplxMat::Zero(n, n);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      f(static_cast<Eigen::Index>(i) * d + j, static_cast<Eigen::Index>(j) * d + i) = 1.0;
    }
  }
  return f;
}

CplxMat sym_projector(int d) {
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  return (CplxMat::Identity(n, n) + flip_operator(d)) / 2.0;
}

SymmetricState make_state(int d, CplxMat rho) {
  check_dim(d);
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  if (rho.rows() != n || rho.cols() != n) {
    throw std::invalid_argument("state matrix has wrong dimension");
  }
  const double scale = std::max(1.0, matrix_core::frob(rho));
  if (matrix_core::hermiticity_residual(rho) > 1e-10 * scale) {
    throw std::logic_error("state construction produced a non-Hermitian matrix");
  }
  SymmetricState s;
  s.d = d;
  s.rho = std::move(rho);
  const CplxMat pi = sym_projector(d);
  s.sym_residual = matrix_core::frob(pi * s.rho * pi - s.rho);
  s.sym_ok = s.sym_residual <= 1e-10 * scale;
  const auto spec = matrix_core::eigh(s.rho);
  s.min_eig = spec.eigenvalues.minCoeff();
  const double eig_scale = std::max(1.0, spec.eigenvalues.cwiseAbs().maxCoeff());
  s.psd_ok = s.min_eig >= -kPsdTol * eig_scale;
  s.normalized = std::abs(s.rho.trace().real() - 1.0) <= 1e-12;
  return s;
}

SymmetricState build_ds(const DSProbabilities& p) {
  p.validate();
  const Eigen::Index n = static_cast<Eigen::Index>(p.d) * p.d;
  CplxMat rho = CplxMat::Zero(n, n);
  for (const auto& [idx, w] : p.p) {
    if (w == 0.0) continue;
    const CplxVec v = dicke_vector(idx.i, idx.j, p.d);
    rho += w * (v * v.adjoint());
  }
  return make_state(p.d, std::move(rho));
}

RealMat m_matrix(const DSProbabilities& p) {
  p.validate();
  RealMat m = RealMat::Zero(p.d, p.d);
  for (const auto& [idx, w] : p.p) {
    if (idx.i == idx.j) {
      m(idx.i, idx.i) = w;
    } else {
      m(idx.i, idx.j) = m(idx.j, idx.i) = w / 2.0;
    }
  }
  return m;
}

CplxMat partial_transpose(const CplxMat& rho, int d) {
  check_dim(d);
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  if (rho.rows() != n || rho.cols() != n) {
    throw std::invalid_argument("partial_transpose: matrix/dimension mismatch");
  }
  CplxMat out(n, n);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          out(static_cast<Eigen::Index>(i) * d + j, static_cast<Eigen::Index>(k) * d + l) =
              rho(static_cast<Eigen::Index>(i) * d + l,
                  static_cast<Eigen::Index>(k) * d + j);
        }
      }
    }
  }
  return out;
}

CplxMat partial_transpose(const SymmetricState& s) { return partial_transpose(s.rho, s.d); }

SymmetricState build_symmetric(const DSProbabilities& p, const CoherenceMap& c) {
  p.validate();
  c.validate();
  if (p.d != c.d) throw std::invalid_argument("build_symmetric: dimension mismatch");
  CplxMat rho = build_ds(p).rho;
  for (const auto& e : c.entries) {
    const CplxVec u = dicke_vector(e.from.i, e.from.j, p.d);
    const CplxVec v = dicke_vector(e.to.i, e.to.j, p.d);
    rho += e.amp * (u * v.adjoint());
    rho += std::conj(e.amp) * (v * u.adjoint());
  }
  return make_state(p.d, std::move(rho));
}

std::pair<SymmetricState, CplxMat> d3_blocks(const DSProbabilities& p, Cplx alpha,
                                             Cplx beta, Cplx gamma) {
  p.validate();
  if (p.d != 3) throw std::invalid_argument("d3_blocks requires local dimension 3");
  const double p00 = p.at(0, 0), p11 = p.at(1, 1), p22 = p.at(2, 2);
  const double p01 = p.at(0, 1), p02 = p.at(0, 2), p12 = p.at(1, 2);
  const Cplx ac = std::conj(alpha), bc = std::conj(beta), gc = std::conj(gamma);

  CplxMat rho = CplxMat::Zero(9, 9);
  const auto idx = [](int i, int j) { return static_cast<Eigen::Index>(i) * 3 + j; };
  const auto place3 = [&](CplxMat& target, const std::array<Eigen::Index, 3>& basis,
                          const std::array<std::array<Cplx, 3>, 3>& block) {
    for (int r = 0; r < 3; ++r) {
      for (int s = 0; s < 3; ++s) target(basis[r], basis[s]) = block[r][s];
    }
  };

  // Block on {|02>,|11>,|20>}.
  place3(rho, {idx(0, 2), idx(1, 1), idx(2, 0)},
         {{{Cplx(p02 / 2), alpha, Cplx(p02 / 2)},
           {ac, Cplx(p11), alpha},
           {Cplx(p02 / 2), ac, Cplx(p02 / 2)}}});
  // Block on {|00>,|12>,|21>}.
  place3(rho, {idx(0, 0), idx(1, 2), idx(2, 1)},
         {{{Cplx(p00), beta, beta},
           {bc, Cplx(p12 / 2), Cplx(p12 / 2)},
           {bc, Cplx(p12 / 2), Cplx(p12 / 2)}}});
  // Block on {|01>,|10>,|22>}.
  place3(rho, {idx(0, 1), idx(1, 0), idx(2, 2)},
         {{{Cplx(p01 / 2), Cplx(p01 / 2), gamma},
           {Cplx(p01 / 2), Cplx(p01 / 2), gamma},
           {gc, gc, Cplx(p22)}}});

  SymmetricState state = make_state(3, std::move(rho));
  CplxMat pt = partial_transpose(state);

  // Internal consistency guard: the analytic partial-transpose block form must
  // match the dense computation entrywise.
  CplxMat pt_blocks = CplxMat::Zero(9, 9);
  RealMat md = m_matrix(p);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) pt_blocks(idx(i, i), idx(j, j)) = md(i, j);
  }
  place3(pt_blocks, {idx(0, 1), idx(1, 2), idx(2, 0)},
         {{{Cplx(p01 / 2), alpha, beta},
           {ac, Cplx(p12 / 2), gamma},
           {bc, gc, Cplx(p02 / 2)}}});
  place3(pt_blocks, {idx(0, 2), idx(1, 0), idx(2, 1)},
         {{{Cplx(p02 / 2), beta, gamma},
           {bc, Cplx(p01 / 2), alpha},
           {gc, ac, Cplx(p12 / 2)}}});
  if (matrix_core::frob(pt - pt_blocks) > 1e-12 * std::max(1.0, matrix_core::frob(pt))) {
    throw std::logic_error("d3_blocks: partial-transpose block form mismatch");
  }
  return {std::move(state), std::move(pt)};
}

SymmetricState edge_candidate(const DSProbabilities& p) {
  p.validate();
  if (p.d != 3) throw std::invalid_argument("edge_candidate requires local dimension 3");
  const double p11 = p.at(1, 1), p01 = p.at(0, 1), p02 = p.at(0, 2), p12 = p.at(1, 2);
  const double disc = p01 * p12 - 2.0 * p02 * p11;
  if (disc < 0.0) {
    throw std::invalid_argument(
        "edge_candidate precondition violated: p01*p12 - 2*p02*p11 >= 0 (got " +
        std::to_string(disc) + ")");
  }
  if (!(p12 > 0.0)) {
    throw std::invalid_argument("edge_candidate precondition violated: p12 > 0");
  }
  const double alpha = std::sqrt(p11 * p02 / 2.0);
  const double beta = -std::sqrt(p02 * disc / (4.0 * p12));
  return d3_blocks(p, alpha, beta, 0.0).first;
}

DSProbabilities parse_ds(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("p")) {
    throw std::invalid_argument("DS JSON must contain \"d\" and \"p\"");
  }
  DSProbabilities p;
  p.d = j.at("d").get<int>();
  const auto& pj = j.at("p");
  if (!pj.is_object()) throw std::invalid_argument("\"p\" must be an object");
  for (const auto& [key, val] : pj.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("weight key must be \"i,j\", got \"" + key + "\"");
    }
    int i = 0, jdx = 0;
    try {
      i = std::stoi(key.substr(0, comma));
      jdx = std::stoi(key.substr(comma + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("weight key must be \"i,j\", got \"" + key + "\"");
    }
    p.p[IndexPair(i, jdx)] = json_io::parse_entry(val);
  }
  p.validate();
  return p;
}

namespace {

Cplx parse_complex_param(const nlohmann::json& v) {
  if (v.is_object()) {
    const double re = v.contains("re") ? json_io::parse_entry(v.at("re")) : 0.0;
    const double im = v.contains("im") ? json_io::parse_entry(v.at("im")) : 0.0;
    return {re, im};
  }
  return {json_io::parse_entry(v), 0.0};
}

}  // namespace

SymmetricState parse_state(const nlohmann::json& j) {
  if (j.is_object() && j.contains("d3")) {
    const auto& dj = j.at("d3");
    nlohmann::json pj;
    pj["d"] = 3;
    pj["p"] = dj.at("p");
    const DSProbabilities p = parse_ds(pj);
    const Cplx a = dj.contains("alpha") ? parse_complex_param(dj.at("alpha")) : Cplx(0);
    const Cplx b = dj.contains("beta") ? parse_complex_param(dj.at("beta")) : Cplx(0);
    const Cplx g = dj.contains("gamma") ? parse_complex_param(dj.at("gamma")) : Cplx(0);
    return d3_blocks(p, a, b, g).first;
  }
  const DSProbabilities p = parse_ds(j);
  CoherenceMap c;
  c.d = p.d;
  if (j.contains("coherences")) {
    const auto& cj = j.at("coherences");
    if (!cj.is_array()) throw std::invalid_argument("\"coherences\" must be an array");
    for (const auto& e : cj) {
      const auto& from = e.at("from");
      const auto& to = e.at("to");
      if (!from.is_array() || from.size() != 2 || !to.is_array() || to.size() != 2) {
        throw std::invalid_argument("coherence \"from\"/\"to\" must be index pairs");
      }
      CoherenceMap::Entry entry;
      entry.from = IndexPair(from[0].get<int>(), from[1].get<int>());
      entry.to = IndexPair(to[0].get<int>(), to[1].get<int>());
      const double re = e.contains("re") ? json_io::parse_entry(e.at("re")) : 0.0;
      const double im = e.contains("im") ? json_io::parse_entry(e.at("im")) : 0.0;
      entry.amp = Cplx(re, im);
      c.entries.push_back(entry);
    }
  }
  return build_symmetric(p, c);
}

}  // namespace copwit::symmetric_space
