#include "copwit/certify.hpp"

#include <cmath>
#include <stdexcept>

#include "copwit/copositive_cone.hpp"
#include "copwit/matrix_core.hpp"

namespace copwit::certify {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NPTEntangled: return "NPT-entangled";
    case Verdict::PPTEntangled: return "PPT-entangled";
    case Verdict::SeparableProved: return "Separable(proved)";
    case Verdict::Undecided: return "Undecided";
  }
  return "Undecided";
}

std::pair<bool, double> ppt(const symmetric_space::SymmetricState& s) {
  const CplxMat pt = symmetric_space::partial_transpose(s);
  return matrix_core::is_psd(pt);
}

Verdict ds_separable_lowdim(const symmetric_space::DSProbabilities& p) {
  if (p.d > 4) {
    throw std::invalid_argument(
        "ds_separable_lowdim: PPT is conclusive only for d <= 4; got d = " +
        std::to_string(p.d));
  }
  const RealMat m = symmetric_space::m_matrix(p);
  const auto [psd, min_eig] = matrix_core::is_psd(m, kPsdTol);
  (void)min_eig;
  return psd ? Verdict::SeparableProved : Verdict::NPTEntangled;
}

witness_factory::Witness classify_witness(const witness_factory::Witness& w) {
  if (!w.coeffs.empty()) {
    throw std::invalid_argument(
        "classify_witness: witnesses with coherence couplings are classified "
        "by exhibiting a detected PPT state, not by source splitting");
  }
  if (!w.source.has_value()) {
    throw std::invalid_argument("classify_witness: witness has no stored source matrix");
  }
  const auto dec = copositive_cone::decompose(*w.source);
  witness_factory::Witness out = w;
  out.classification = (dec.status == copositive_cone::DecompositionResult::Status::Split)
                           ? witness_factory::Classification::Decomposable
                           : witness_factory::Classification::NonDecomposable;
  return out;
}

double detection_threshold(const witness_factory::Witness& w, const CplxMat& rho) {
  const double scale =
      std::max(1.0, matrix_core::frob(w.w) * std::max(1.0, matrix_core::frob(rho)));
  return detection_tol() * scale;
}

CertificationReport certify_state(const symmetric_space::SymmetricState& s,
                                  const witness_factory::Witness& w) {
  CertificationReport rep;
  rep.state_valid = s.psd_ok;
  rep.state_min_eig = s.min_eig;
  std::tie(rep.ppt, rep.pt_min_eig) = ppt(s);
  rep.witness_value = witness_factory::expectation(w, s.rho);
  rep.witness_classification = w.classification;

  if (!rep.state_valid) {
    rep.verdict = Verdict::Undecided;
    return rep;
  }
  if (!rep.ppt) {
    rep.verdict = Verdict::NPTEntangled;
    return rep;
  }
  const double thr = detection_threshold(w, s.rho);
  if (*rep.witness_value < -thr) {
    if (w.classification == witness_factory::Classification::Decomposable) {
      // A decomposable witness cannot detect a PPT state; a negative value
      // here means an inconsistent input, not a certification.
      rep.verdict = Verdict::Undecided;
      return rep;
    }
    rep.witness_classification = witness_factory::Classification::NonDecomposable;
    rep.verdict = Verdict::PPTEntangled;
    return rep;
  }
  rep.verdict = Verdict::Undecided;
  return rep;
}

CorollaryResult corollary_family(const symmetric_space::DSProbabilities& p,
                                 const std::map<symmetric_space::IndexPair, Cplx>& alphas,
                                 const witness_factory::Witness* w) {
  p.validate();
  for (const auto& [pair, amp] : alphas) {
    if (pair.i < 0 || pair.j >= p.d || pair.i == pair.j) {
      throw std::invalid_argument(
          "corollary_family: coherence keys must be distinct index pairs below d");
    }
    (void)amp;
  }
  CorollaryResult out;
  const RealMat m = symmetric_space::m_matrix(p);
  const auto [m_psd, m_min] = matrix_core::is_psd(m, kPsdTol);
  (void)m_min;
  bool bounded = true;
  for (const auto& [pair, amp] : alphas) {
    if (std::abs(amp) > p.at(pair.i, pair.j) / 2.0 + 1e-12) {
      bounded = false;
      break;
    }
  }
  out.ppt = m_psd && bounded;
  if (w != nullptr) {
    const auto ds = symmetric_space::build_ds(p);
    out.witness_value = witness_factory::expectation(*w, ds.rho);
    out.detected = *out.witness_value < -detection_threshold(*w, ds.rho);
  }
  return out;
}

}  // namespace copwit::certify
