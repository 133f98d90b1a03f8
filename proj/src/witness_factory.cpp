#include "copwit/witness_factory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "copwit/matrix_core.hpp"

namespace copwit::witness_factory {

namespace {

void check_source(const RealMat& h) {
  const int d = static_cast<int>(h.rows());
  if (d < 1 || d > 16 || h.cols() != h.rows()) {
    throw std::invalid_argument("witness source must be square with 1 <= d <= 16");
  }
  const double res = matrix_core::symmetry_residual(h);
  if (res > 1e-12 * std::max(1.0, matrix_core::max_abs(h))) {
    throw std::invalid_argument("witness source matrix must be symmetric");
  }
}

}  // namespace

RealMat extend(const RealMat& h) {
  check_source(h);
  const int d = static_cast<int>(h.rows());
  RealMat e = RealMat::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) e(i * d + i, j * d + j) = h(i, j);
  }
  return e;
}

Witness witness(const RealMat& h) {
  check_source(h);
  const int d = static_cast<int>(h.rows());
  CplxMat w = CplxMat::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) w(i * d + j, j * d + i) = h(i, j);
  }
  Witness out;
  out.d = d;
  out.w = std::move(w);
  out.source = h;
  return out;
}

Witness project_sym(const Witness& w) {
  const CplxMat pi = symmetric_space::sym_projector(w.d);
  Witness out = w;
  out.w = pi * w.w * pi;
  out.projected = true;
  return out;
}

std::pair<RealMat, RealMat> pq_split(const RealMat& h_psd, const RealMat& h_n) {
  check_source(h_psd);
  check_source(h_n);
  if (h_psd.rows() != h_n.rows()) {
    throw std::invalid_argument("pq_split parts must share a dimension");
  }
  if (h_n.minCoeff() < -kSplitEntryTol) {
    throw std::invalid_argument("pq_split: entrywise part has a negative entry");
  }
  if (const auto [ok, me] = matrix_core::is_psd(h_psd, kSplitPsdTol); !ok) {
    throw std::invalid_argument("pq_split: PSD part has eigenvalue " + std::to_string(me));
  }
  const int d = static_cast<int>(h_psd.rows());
  const RealMat pi = symmetric_space::sym_projector(d).real();
  // (extend(h_n))^{T_B} is the swap-embedded form of h_n.
  RealMat wn = RealMat::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) wn(i * d + j, j * d + i) = h_n(i, j);
  }
  RealMat p = pi * wn * pi;
  RealMat q = extend(h_psd);
  return {std::move(p), std::move(q)};
}

Witness coherent_witness(const RealMat& h, const CoeffMap& coeffs) {
  check_source(h);
  const int d = static_cast<int>(h.rows());
  for (const auto& [key, val] : coeffs) {
    const auto& [i, jk] = key;
    if (i < 0 || i >= d || jk.i < 0 || jk.j >= d || jk.i == jk.j || i == jk.i ||
        i == jk.j) {
      throw std::invalid_argument("coherent_witness: coupling indices must be three distinct values below d");
    }
    (void)val;
  }
  Witness out = project_sym(witness(h));
  for (const auto& [key, val] : coeffs) {
    const auto& [i, jk] = key;
    const CplxVec dii = symmetric_space::dicke_vector(i, i, d);
    const CplxVec djk = symmetric_space::dicke_vector(jk.i, jk.j, d);
    out.w += 2.0 * val * (dii * djk.adjoint() + djk * dii.adjoint());
  }
  out.coeffs = coeffs;
  return out;
}

double expectation(const Witness& w, const CplxMat& rho) {
  if (rho.rows() != w.w.rows() || rho.cols() != w.w.cols()) {
    throw std::invalid_argument("expectation: witness is " + std::to_string(w.w.rows()) +
                                "-dimensional but state is " + std::to_string(rho.rows()));
  }
  const Cplx tr = (w.w.cwiseProduct(rho.transpose())).sum();
  const double scale = std::max(1.0, matrix_core::frob(w.w) * matrix_core::frob(rho));
  if (std::abs(tr.imag()) > 1e-10 * scale) {
    throw std::logic_error("expectation: trace has imaginary residue " +
                           std::to_string(tr.imag()));
  }
  return tr.real();
}

double expectation(const Witness& w, const symmetric_space::SymmetricState& s) {
  return expectation(w, s.rho);
}

}  // namespace copwit::witness_factory
