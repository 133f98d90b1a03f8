#include "copwit/matrix_core.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace copwit::matrix_core {

namespace {

template <typename Mat, typename Spec>
Spec eigh_impl(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigh: eigendecomposition did not converge");
  }
  Spec s;
  s.eigenvalues = solver.eigenvalues();
  s.eigenvectors = solver.eigenvectors();
  return s;
}

template <typename Mat>
std::pair<bool, double> is_psd_abs(const Mat& m, double tol) {
  const auto spec = eigh(m);
  const double min_eig = m.rows() == 0 ? 0.0 : spec.eigenvalues.minCoeff();
  return {min_eig >= -tol, min_eig};
}

template <typename Mat>
std::pair<bool, double> is_psd_default(const Mat& m) {
  const auto spec = eigh(m);
  const double min_eig = m.rows() == 0 ? 0.0 : spec.eigenvalues.minCoeff();
  const double scale =
      m.rows() == 0 ? 1.0 : std::max(1.0, spec.eigenvalues.cwiseAbs().maxCoeff());
  return {min_eig >= -kPsdTol * scale, min_eig};
}

template <typename Mat>
int numerical_rank_impl(const Mat& m, double tol) {
  const auto spec = eigh(m);
  if (m.rows() == 0) return 0;
  const double floor = tol * std::max(1.0, spec.eigenvalues.cwiseAbs().maxCoeff());
  int rank = 0;
  for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
    if (std::abs(spec.eigenvalues[i]) > floor) ++rank;
  }
  return rank;
}

}  // namespace

SpectrumR eigh(const RealMat& m) { return eigh_impl<RealMat, SpectrumR>(m); }
SpectrumC eigh(const CplxMat& m) { return eigh_impl<CplxMat, SpectrumC>(m); }

std::pair<bool, double> is_psd(const RealMat& m, double tol) { return is_psd_abs(m, tol); }
std::pair<bool, double> is_psd(const CplxMat& m, double tol) { return is_psd_abs(m, tol); }
std::pair<bool, double> is_psd(const RealMat& m) { return is_psd_default(m); }
std::pair<bool, double> is_psd(const CplxMat& m) { return is_psd_default(m); }

int numerical_rank(const RealMat& m, double tol) { return numerical_rank_impl(m, tol); }
int numerical_rank(const CplxMat& m, double tol) { return numerical_rank_impl(m, tol); }

RealMat psd_project(const RealMat& m) {
  const auto spec = eigh(m);
  const RealVec clipped = spec.eigenvalues.cwiseMax(0.0);
  RealMat out = spec.eigenvectors * clipped.asDiagonal() * spec.eigenvectors.transpose();
  // Reassembly can leave ~1e-16 asymmetry; symmetrize so downstream symmetric
  // solvers see an exactly symmetric matrix.
  out = ((out + out.transpose()) / 2.0).eval();
  return out;
}

double hermiticity_residual(const CplxMat& m) { return (m - m.adjoint()).norm(); }

double symmetry_residual(const RealMat& m) { return (m - m.transpose()).norm(); }

}  // namespace copwit::matrix_core
