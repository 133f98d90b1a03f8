#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "copwit/symmetric_space.hpp"
#include "copwit/types.hpp"
#include "copwit/witness_factory.hpp"

namespace copwit::certify {

enum class Verdict { NPTEntangled, PPTEntangled, SeparableProved, Undecided };

std::string to_string(Verdict v);

/// Outcome of certifying one state against one witness.
struct CertificationReport {
  bool state_valid = false;       ///< ρ ⪰ 0 within tolerance
  double state_min_eig = 0.0;
  bool ppt = false;               ///< ρ^{T_B} ⪰ 0 within tolerance
  double pt_min_eig = 0.0;
  std::optional<double> witness_value;
  Verdict verdict = Verdict::Undecided;
  /// Witness classification after certification (detection of a PPT state
  /// upgrades an unclassified witness to NonDecomposable).
  witness_factory::Classification witness_classification =
      witness_factory::Classification::Unclassified;
};

/// PPT test: true iff min eig(ρ^{T_B}) ≥ −1e−9 · max(1, max |eig|).
std::pair<bool, double> ppt(const symmetric_space::SymmetricState& s);

/// Separability decision for diagonal states at d ≤ 4, where the PPT
/// criterion is conclusive: Separable(proved) iff the companion matrix is PSD
/// (within −1e−9), otherwise NPT-entangled.  d > 4 raises.
Verdict ds_separable_lowdim(const symmetric_space::DSProbabilities& p);

/// Classify a plain witness by splitting its source matrix: Split →
/// Decomposable, Exceptional → NonDecomposable.  Requires a stored source and
/// no coherence couplings (coupled witnesses are classified through detection).
witness_factory::Witness classify_witness(const witness_factory::Witness& w);

/// Full pipeline: validity, PPT, witness expectation, verdict.
CertificationReport certify_state(const symmetric_space::SymmetricState& s,
                                  const witness_factory::Witness& w);

struct CorollaryResult {
  bool ppt = false;
  bool detected = false;
  std::optional<double> witness_value;
};

/// Boundary law for diagonal states dressed with |D_ii⟩⟨D_jj| coherences:
/// PPT ⟺ companion matrix PSD and |α_ij| ≤ p_ij/2 (+1e−12).  Detection, when
/// a witness is supplied, is evaluated on the diagonal part alone — these
/// coherences never change the expectation.
CorollaryResult corollary_family(const symmetric_space::DSProbabilities& p,
                                 const std::map<symmetric_space::IndexPair, Cplx>& alphas,
                                 const witness_factory::Witness* w = nullptr);

/// Threshold below which an expectation counts as detection for this
/// witness/state pair: detection_tol() · max(1, ‖w‖_F · max(1, ‖ρ‖_F)).
double detection_threshold(const witness_factory::Witness& w, const CplxMat& rho);

}  // namespace copwit::certify
