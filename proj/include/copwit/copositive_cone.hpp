#pragma once
/// @file copositive_cone.hpp
/// @brief Copositivity decisions with certificates, PSD+N membership
///        (decomposition into a PSD part plus an entrywise-nonnegative part),
///        and the classic exceptional matrix families.

#include <optional>
#include <utility>

#include "copwit/types.hpp"

namespace copwit::copositive_cone {

/// Certificate that a matrix is not copositive: a componentwise-nonnegative
/// vector with a strictly negative quadratic form value.
struct CopositivityCertificate {
  RealVec x;     ///< x >= 0 entrywise
  double value;  ///< x^T H x, below -1e-12 * ||H||_F * ||x||^2
};

struct CopositivityVerdict {
  bool copositive = false;
  std::optional<CopositivityCertificate> certificate;  ///< present iff not copositive
};

/// Outcome of the PSD+N membership test.  On Split the parts satisfy
/// H_psd + H_n = H (within 1e-7 Frobenius), min eig(H_psd) >= -1e-7 and
/// min entry(H_n) >= -1e-9.  Exceptional carries the residual infeasibility
/// depth: how far the best achievable minimum eigenvalue of H - N (over
/// entrywise-nonnegative N) lies below zero.
struct DecompositionResult {
  enum class Status { Split, Exceptional };
  Status status = Status::Exceptional;
  RealMat h_psd;
  RealMat h_n;
  double residual = 0.0;
};

/// Necessary condition scan: every diagonal entry must be nonnegative and
/// every negative off-diagonal entry H_ij must satisfy
/// sqrt(H_ii H_jj) >= -H_ij.  Returns (ok, first violating index pair),
/// scanning the diagonal first and then pairs (i, j), i < j, row-major.
std::pair<bool, std::optional<std::pair<int, int>>> check_necessary(const RealMat& h);

/// Exact copositivity decision for d <= 16 via the principal-submatrix
/// eigenvector criterion: H is copositive iff no principal submatrix has a
/// strictly positive eigenvector with negative eigenvalue.  Eigenvalues
/// qualify below -1e-12 * ||H||_F; components count as positive above 1e-12.
/// NotCopositive verdicts carry a certificate tightened by a 200-step
/// projected-gradient descent on the simplex (the polish only improves the
/// certificate value; the sweep alone decides).  A deterministic multistart
/// safety net may additionally flip the verdict to NotCopositive when it
/// finds a vector that certifies it outright.
CopositivityVerdict is_copositive(const RealMat& h);

/// PSD+N membership: decides feasibility of {X PSD, X <= H entrywise}.
/// Phase 1 runs alternating cone projections with correction terms (the
/// projections are psd_project and entrywise clipping at H) and accepts as
/// soon as the clipped candidate passes the Split verifier.  If that stalls,
/// phase 2 decides exactly by maximizing t = min eig(H - N) over entrywise-
/// nonnegative N with a small barrier interior-point method: Split iff the
/// optimum is >= -1e-7.  Exceptional is a numerical verdict, not a proof.
DecompositionResult decompose(const RealMat& h, double tol = 1e-7, int max_iter = 50000);

/// Verifies a split against the stated bounds; returns true iff
/// ||h - h_psd - h_n||_F <= 1e-7, min eig(h_psd) >= -1e-7 and
/// min entry(h_n) >= -1e-9.
bool verify_split(const RealMat& h, const RealMat& h_psd, const RealMat& h_n);

/// Banded cyclic +-1 family for odd d >= 5: diagonal 1, entries -1 exactly
/// when |i-j| is 1 or d-1 (cyclic adjacency), +1 otherwise.  These are the
/// classic copositive matrices with no PSD+N decomposition.
RealMat horn(int d);

/// The 7x7 circulant with first row (1,-1,1,0,0,1,-1); copositive and
/// outside PSD+N.
RealMat hoffman_pereira();

/// Internal but independently useful: maximize t = min eig(H - N) over
/// entrywise-nonnegative symmetric N via a logarithmic-barrier Newton method.
/// Returns (t, N) with N strictly positive entrywise; accuracy ~1e-9 relative
/// to max(1, max|H_ij|).
std::pair<double, RealMat> max_min_eig_shift(const RealMat& h);

}  // namespace copwit::copositive_cone
