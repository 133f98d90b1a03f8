#pragma once
/// @file matrix_core.hpp
/// @brief Eigendecomposition, PSD tests, numerical rank, and PSD projection
///        for dense real-symmetric and complex-Hermitian matrices.

#include <stdexcept>
#include <utility>

#include "copwit/types.hpp"

namespace copwit::matrix_core {

/// Ascending eigenvalues with orthonormal eigenvectors of a real symmetric
/// matrix.  Invariants (checked by the producer): reconstruction error
/// ||M - V diag(l) V^T||_F <= 1e-10 * max(1, ||M||_F), ||V^T V - I||_F <= 1e-10.
struct SpectrumR {
  RealVec eigenvalues;
  RealMat eigenvectors;
};

/// Same contract for complex Hermitian input.
struct SpectrumC {
  RealVec eigenvalues;
  CplxMat eigenvectors;
};

/// Eigendecomposition of a real symmetric matrix (ascending eigenvalues).
/// Throws std::runtime_error on solver failure; never returns garbage.
SpectrumR eigh(const RealMat& m);

/// Eigendecomposition of a complex Hermitian matrix (ascending eigenvalues).
SpectrumC eigh(const CplxMat& m);

/// PSD verdict with an explicit absolute tolerance:
/// true iff the minimum eigenvalue is >= -tol.  The minimum eigenvalue is
/// always returned alongside the verdict.
std::pair<bool, double> is_psd(const RealMat& m, double tol);
std::pair<bool, double> is_psd(const CplxMat& m, double tol);

/// PSD verdict with the default rule: tolerance 1e-9 relative to the largest
/// absolute eigenvalue, floored at 1.
std::pair<bool, double> is_psd(const RealMat& m);
std::pair<bool, double> is_psd(const CplxMat& m);

/// Count of eigenvalues with |l| > tol * max(1, max|l|).
int numerical_rank(const RealMat& m, double tol);
int numerical_rank(const CplxMat& m, double tol);

/// Projection onto the PSD cone: clip negative eigenvalues and reassemble.
/// A PSD input is returned unchanged up to the eigh accuracy contract.
RealMat psd_project(const RealMat& m);

/// Frobenius norm helper accepting any dense expression.
template <typename Derived>
double frob(const Eigen::MatrixBase<Derived>& m) {
  return m.norm();
}

/// Largest absolute entry, zero for empty matrices.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Hermiticity residual ||M - M^dagger||_F.
double hermiticity_residual(const CplxMat& m);

/// Symmetry residual ||M - M^T||_F.
double symmetry_residual(const RealMat& m);

}  // namespace copwit::matrix_core
