#pragma once
/// @file symmetric_space.hpp
/// @brief Dicke-basis bookkeeping and construction of diagonal-symmetric (DS)
///        and coherence-augmented symmetric two-qudit states, their M_d
///        matrices, partial transposes, and the d=3 block decomposition.
///
/// Conventions.  Computational basis |ij> is ordered by i*d+j.  Dicke vectors
/// are |D_ii> = |ii> and |D_ij> = (|ij> + |ji>)/sqrt(2) for i != j.  A DS
/// state is rho_DS = sum_{i<=j} p_ij |D_ij><D_ij|; its M_d matrix has
/// diagonal p_ii and off-diagonal p_ij/2.  Coherences are stored as Dicke-
/// basis amplitudes: an entry ((a,b),(c,e)) -> z adds z|D_ab><D_ce| + h.c.
/// States are NOT rescaled to unit trace; a normalization flag is recorded.

#include <complex>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "copwit/matrix_core.hpp"
#include "copwit/types.hpp"
#include "json.hpp"

namespace copwit::symmetric_space {

/// Unordered index pair 0 <= i <= j < d (normalized at construction).
struct IndexPair {
  int i = 0;
  int j = 0;
  IndexPair() = default;
  IndexPair(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {}
  friend bool operator<(const IndexPair& l, const IndexPair& r) {
    return std::pair(l.i, l.j) < std::pair(r.i, r.j);
  }
  friend bool operator==(const IndexPair& l, const IndexPair& r) {
    return l.i == r.i && l.j == r.j;
  }
};

/// Weights p_ij of a DS state, indexed by unordered pairs.  All weights are
/// required nonnegative; the total weight is recorded and a flag marks
/// whether it equals 1 (the bundled examples are not all unit-trace).
struct DSProbabilities {
  int d = 0;
  std::map<IndexPair, double> p;

  /// Validates ranges and nonnegativity; throws std::invalid_argument.
  void validate() const;
  double total() const;
  bool normalized(double tol = 1e-12) const;
  /// Weight accessor defaulting to zero for absent pairs.
  double at(int i, int j) const;
};

/// Dicke-basis coherence amplitudes.  Only one orientation of each pair of
/// Dicke indices is stored; the Hermitian conjugate is implied.
struct CoherenceMap {
  struct Entry {
    IndexPair from;  ///< Dicke index (a,b) of the bra side |D_ab>
    IndexPair to;    ///< Dicke index (c,e), must differ from `from`
    Cplx amp;        ///< amplitude z of z|D_from><D_to| + h.c.
  };
  int d = 0;
  std::vector<Entry> entries;

  void validate() const;
};

/// A d^2 x d^2 Hermitian matrix together with its local dimension and the
/// outcome of the construction-time validity checks.  Symmetric-subspace
/// invariance and positivity are checked and reported, never silently
/// assumed.
struct SymmetricState {
  int d = 0;
  CplxMat rho;
  bool sym_ok = false;      ///< Pi_S rho Pi_S == rho within tolerance
  double sym_residual = 0;  ///< Frobenius residual of the projection check
  bool psd_ok = false;      ///< rho >= -1e-9 (relative scale)
  double min_eig = 0;       ///< smallest eigenvalue of rho
  bool normalized = false;  ///< trace == 1 within 1e-12
};

/// Unit Dicke vector of length d^2.  Throws std::out_of_range on bad indices.
CplxVec dicke_vector(int i, int j, int d);

/// The flip (swap) operator F with F|ij> = |ji>.
CplxMat flip_operator(int d);

/// Projector onto the symmetric subspace, (I + F)/2; rank d(d+1)/2.
CplxMat sym_projector(int d);

/// Validates flags and packages a readily assembled matrix as a state.
SymmetricState make_state(int d, CplxMat rho);

/// rho_DS = sum p_ij |D_ij><D_ij|; diagonal in the Dicke basis; trace equals
/// the total weight.
SymmetricState build_ds(const DSProbabilities& p);

/// M_d matrix: diagonal p_ii, off-diagonal p_ij/2.
RealMat m_matrix(const DSProbabilities& p);

/// Partial transpose on the second factor: <ij|rho^TB|kl> = <il|rho|kj>.
CplxMat partial_transpose(const CplxMat& rho, int d);
CplxMat partial_transpose(const SymmetricState& s);

/// rho_S = build_ds(p) + sum (z |D_ab><D_ce| + h.c.).  A coherence to an
/// off-diagonal Dicke vector |D_ce>, c != e, contributes z/sqrt(2) to each of
/// the computational entries <ab|rho|ce> and <ab|rho|ec>.
SymmetricState build_symmetric(const DSProbabilities& p, const CoherenceMap& c);

/// Assembles the 9x9 d=3 state from its three literal 3x3 blocks on the
/// ordered basis triples {|02>,|11>,|20>}, {|00>,|12>,|21>}, {|01>,|10>,|22>}:
///
///   [[p02/2, a, p02/2],    [[p00, b, b      ],    [[p01/2, p01/2, g],
///    [a*, p11, a     ],     [b*, p12/2, p12/2],    [p01/2, p01/2, g],
///    [p02/2, a*, p02/2]]    [b*, p12/2, p12/2]]    [g*, g*, p22    ]]
///
/// For real (a, b, g) this equals build_symmetric with Dicke amplitudes
/// sqrt(2)*a at (1,(0,2)), sqrt(2)*b at (0,(1,2)), sqrt(2)*g at (2,(0,1)).
/// Complex parameters produce a matrix outside the symmetric subspace (the
/// literal blocks break Pi_S-invariance); the state's sym_ok flag reports it.
/// The second return value is the partial transpose, which is block-diagonal:
/// M_d on {|00>,|11>,|22>}, then [[p01/2,a,b],[a*,p12/2,g],[b*,g*,p02/2]] on
/// {|01>,|12>,|20>}, then [[p02/2,b,g],[b*,p01/2,a],[g*,a*,p12/2]] on
/// {|02>,|10>,|21>}.
std::pair<SymmetricState, CplxMat> d3_blocks(const DSProbabilities& p, Cplx alpha,
                                             Cplx beta, Cplx gamma);

/// Rank-lowering d=3 construction: gamma = 0, alpha = +sqrt(p11 p02 / 2),
/// beta = -sqrt(p02 (p01 p12 - 2 p02 p11) / (4 p12)).  Requires
/// p01 p12 - 2 p02 p11 >= 0 and p12 > 0 (each reported by name when
/// violated).  For generic valid weights the result has numerical rank 5 and
/// its partial transpose rank 7 at tolerance 1e-8.
SymmetricState edge_candidate(const DSProbabilities& p);

/// Parse {"d": n, "p": {"i,j": w, ...}} (weights may be numbers or "a/b"
/// strings).  Throws std::invalid_argument on malformed input.
DSProbabilities parse_ds(const nlohmann::json& j);

/// Parse the full state JSON:
///   {"d": n, "p": {...}, "coherences": [{"from": [a,b], "to": [c,e],
///    "re": x, "im": y}, ...]}
/// or the d=3 family shortcut:
///   {"d3": {"p": {...}, "alpha": .., "beta": .., "gamma": ..}}
/// where the shortcut's parameters may be numbers or {"re": .., "im": ..}.
SymmetricState parse_state(const nlohmann::json& j);

}  // namespace copwit::symmetric_space
