#pragma once

#include <map>
#include <optional>
#include <utility>

#include "copwit/symmetric_space.hpp"
#include "copwit/types.hpp"

namespace copwit::witness_factory {

/// Coupling coefficients W^i_jk for coherence-augmented witnesses: the key is
/// (i, {j,k}) with i a diagonal Dicke index and {j,k} an off-diagonal pair.
using CoeffMap = std::map<std::pair<int, symmetric_space::IndexPair>, double>;

enum class Classification { Unclassified, Decomposable, NonDecomposable };

/// An entanglement-witness candidate on C^d ⊗ C^d with its provenance.
struct Witness {
  int d = 0;
  CplxMat w;                          ///< dense d² × d² Hermitian matrix
  std::optional<RealMat> source;      ///< generating symmetric d × d matrix, if built from one
  CoeffMap coeffs;                    ///< coherence couplings (empty for plain witnesses)
  bool projected = false;             ///< true once restricted to the symmetric subspace
  Classification classification = Classification::Unclassified;
};

/// Diagonal-pair extension: X = Σ_ij H_ij |ii⟩⟨jj| on C^{d²}.
RealMat extend(const RealMat& h);

/// The swap-embedded witness W = Σ_ij H_ij |ij⟩⟨ji| (the partial transpose of
/// extend(h)); spectrum is {H_ii} ∪ {±H_ij : i<j}.
Witness witness(const RealMat& h);

/// Restriction to the symmetric subspace: W_S = Π_S W Π_S (diagonal in the
/// Dicke basis with entries H_ij).
Witness project_sym(const Witness& w);

/// For a split H = H_psd + H_n of a decomposable source, the PSD pair
/// P = Π_S (extend(H_n))^{T_B} Π_S and Q = extend(H_psd); the decomposable
/// witness is P + Q^{T_B}.  Preconditions: H_psd ⪰ −1e−7, H_n ≥ −1e−9
/// entrywise; violations raise std::invalid_argument.
std::pair<RealMat, RealMat> pq_split(const RealMat& h_psd, const RealMat& h_n);

/// Coherence-augmented symmetric witness
///   W_S = Π_S (extend(H))^{T_B} Π_S + Σ 2·W^i_jk (|D_ii⟩⟨D_jk| + |D_jk⟩⟨D_ii|).
/// Each key (i, {j,k}) must satisfy i ∉ {j,k}, j ≠ k, all < d.
Witness coherent_witness(const RealMat& h, const CoeffMap& coeffs);

/// Tr(w·ρ), guaranteed real (imaginary residue checked against 1e−10·scale).
double expectation(const Witness& w, const CplxMat& rho);
double expectation(const Witness& w, const symmetric_space::SymmetricState& s);

}  // namespace copwit::witness_factory
