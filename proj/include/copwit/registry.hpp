#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "copwit/symmetric_space.hpp"
#include "copwit/types.hpp"
#include "copwit/witness_factory.hpp"

namespace copwit::registry {

/// Outcome of replaying one registered example end to end.
struct ExampleReport {
  std::string name;
  std::vector<std::string> lines;  ///< human-readable report, one fact per line
  bool reproduced = false;         ///< expected outcome reached
};

const std::vector<std::string>& example_names();

/// Replay a registered example by name; throws std::invalid_argument listing
/// the valid names when the name is unknown.
ExampleReport run_example(const std::string& name);

// ---- pinned ingredients, shared with the test suite ----

/// 3×3 copositive matrix whose coherent witness detects the registered
/// d = 3 PPT-entangled state with decimal weights.
RealMat toth_witness_matrix();
/// 3×3 copositive matrix (rational entries) for the rational d = 3 example.
RealMat rational_witness_matrix();
/// 4×4 copositive matrix for the d = 4 example.
RealMat d4_witness_matrix();
/// 3×3 copositive matrix with a known PSD + nonnegative split.
RealMat split_demo_matrix();
/// The published split of split_demo_matrix() as (psd part, nonnegative part).
std::pair<RealMat, RealMat> split_demo_printed_parts();

symmetric_space::DSProbabilities hp7_weights();
symmetric_space::DSProbabilities toth_weights();
symmetric_space::DSProbabilities rational_weights();
symmetric_space::DSProbabilities d4_weights();
symmetric_space::DSProbabilities edge57_weights();

/// Block parameters (alpha, beta, gamma) of the registered d = 3 points.
std::array<double, 3> toth_point();
std::array<double, 3> rational_point();

witness_factory::Witness toth_witness();
witness_factory::Witness rational_witness();
witness_factory::Witness d4_witness();

symmetric_space::SymmetricState toth_state();
symmetric_space::SymmetricState rational_state();
symmetric_space::SymmetricState d4_state();
symmetric_space::SymmetricState hp7_state();
symmetric_space::SymmetricState edge57_state();

/// One admissible assignment of the three d = 4 coherence amplitudes to
/// coupling slots (i, {j,k}): the state is PSD, PPT, and detected.
struct D4SearchHit {
  std::array<std::pair<int, symmetric_space::IndexPair>, 3> slots;
  double state_min_eig = 0.0;
  double pt_min_eig = 0.0;
  double value = 0.0;
};

/// Exhaustive search over the 1320 ordered assignments of the three labeled
/// d = 4 amplitudes to distinct coupling slots; returns every hit.
std::vector<D4SearchHit> d4_assignment_search();

/// The assignment the registry ships (the search finds exactly this one).
std::array<std::pair<int, symmetric_space::IndexPair>, 3> d4_stored_assignment();

}  // namespace copwit::registry
