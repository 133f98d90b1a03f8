#pragma once
/// @file types.hpp
/// @brief Shared dense matrix aliases and tolerance constants.
///
/// The whole library works with dense Eigen matrices at desk scale
/// (local dimension d <= 16, state dimension d^2 <= 256).  Real symmetric
/// matrices carry copositivity candidates H and the M_d matrices of diagonal
/// symmetric states; complex Hermitian matrices carry states and witnesses.

#include <Eigen/Dense>
#include <complex>
#include <cstdlib>
#include <string>

namespace copwit {

using Real = double;
using Cplx = std::complex<double>;

using RealMat = Eigen::MatrixXd;
using CplxMat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;
using CplxVec = Eigen::VectorXcd;

/// Default relative tolerance for positive-semidefiniteness verdicts,
/// applied relative to the largest absolute eigenvalue (floored at 1).
inline constexpr double kPsdTol = 1e-9;

/// Accuracy contract of the eigendecomposition wrapper (reconstruction and
/// orthonormality residuals, relative to max(1, ||M||_F)).
inline constexpr double kEighTol = 1e-10;

/// Split-verifier bound on the minimum eigenvalue of the PSD part returned by
/// the PSD+N decomposition.
inline constexpr double kSplitPsdTol = 1e-7;

/// Split-verifier bound on the minimum entry of the nonnegative part.
inline constexpr double kSplitEntryTol = 1e-9;

/// Eligibility threshold in the copositivity sweep: an eigenvalue must be
/// below -kCopEig * ||H||_F (and the eigenvector strictly positive beyond
/// kCopEig componentwise) to count as a violation.
inline constexpr double kCopEig = 1e-12;

/// Detection threshold for "strictly negative" witness expectations.
/// The COPW_TOL environment variable overrides the default at run time.
inline double detection_tol() {
  if (const char* s = std::getenv("COPW_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end != s && v > 0.0) return v;
  }
  return 1e-9;
}

}  // namespace copwit
