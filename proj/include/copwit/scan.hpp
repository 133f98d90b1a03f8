#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "copwit/symmetric_space.hpp"
#include "copwit/types.hpp"
#include "copwit/witness_factory.hpp"

namespace copwit::scan {

/// One real scan axis: `steps` evenly spaced nodes from lo to hi inclusive.
struct AxisSpec {
  double lo = -0.2;
  double hi = 0.2;
  int steps = 201;
};

/// Grid over the three d = 3 block coherences: alpha and beta run over axes,
/// gamma takes the listed slice values (one CSV section and one SVG each).
struct GridSpec {
  AxisSpec alpha;
  AxisSpec beta;
  std::vector<double> gamma_slices;
};

struct ScanRow {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double state_min_eig = 0.0;
  double pt_min_eig = 0.0;
  double value = 0.0;
  const char* cls = "invalid";  // invalid | NPT | PPT-undetected | PPT-detected
};

struct ScanResult {
  GridSpec grid;
  std::vector<ScanRow> rows;  ///< gamma outer, alpha middle, beta inner
};

/// Default grid: alpha, beta in [−0.2, 0.2] with 201 nodes, gamma sliced at
/// {0, p_01/4}.
GridSpec default_grid(const symmetric_space::DSProbabilities& p);

/// Parse a grid JSON {"alpha": {"min","max","steps"}, "beta": {...},
/// "gamma": {"slices": [...]}}; absent keys fall back to default_grid(p).
GridSpec parse_grid(const nlohmann::json& j, const symmetric_space::DSProbabilities& p);

/// Evaluate the witness over the block-coherence grid of a d = 3 weight set;
/// deterministic row order, no randomness.
ScanResult scan_d3(const symmetric_space::DSProbabilities& p,
                   const witness_factory::Witness& w, const GridSpec& grid);

/// CSV serialization: fixed header, %.17g values, bit-stable across runs.
std::string to_csv(const ScanResult& r);

/// Minimal self-contained scatter of one gamma slice (alpha horizontal, beta
/// vertical, class-keyed colors).
std::string slice_svg(const ScanResult& r, std::size_t slice_index);

/// Write scan.csv and one scan_gamma_<k>.svg per slice into out_dir
/// (created if missing); returns the written file names.
std::vector<std::string> write_outputs(const ScanResult& r, const std::string& out_dir);

}  // namespace copwit::scan
