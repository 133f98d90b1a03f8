#include "copwit/registry.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "copwit/certify.hpp"
#include "copwit/copositive_cone.hpp"
#include "copwit/matrix_core.hpp"

namespace copwit::registry {

namespace {

using symmetric_space::DSProbabilities;
using symmetric_space::IndexPair;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

const double kSqrt2 = std::sqrt(2.0);

// The four d = 4 weight values; the radical parts cancel exactly in the total.
double d4_wa() { return (172.0 + 16.0 * kSqrt2) / 1817.0; }
double d4_wb() { return (32.0 + 172.0 * kSqrt2) / 1817.0; }
double d4_wc() { return (86.0 + 8.0 * kSqrt2) / 1817.0; }
double d4_wd() { return (721.0 - 440.0 * kSqrt2) / 1817.0; }

std::array<double, 3> d4_amplitudes() {
  return {d4_wa(), -d4_wb() / 2.0, d4_wb() / 4.0};
}

symmetric_space::CoherenceMap d4_coherences(
    const std::array<std::pair<int, IndexPair>, 3>& slots) {
  const auto amps = d4_amplitudes();
  symmetric_space::CoherenceMap c;
  c.d = 4;
  for (int k = 0; k < 3; ++k) {
    const auto& [i, jk] = slots[static_cast<std::size_t>(k)];
    c.entries.push_back({IndexPair(i, i), jk, Cplx(amps[static_cast<std::size_t>(k)], 0.0)});
  }
  return c;
}

}  // namespace

RealMat toth_witness_matrix() {
  RealMat h(3, 3);
  h << 0.003, 10.39, 100.57,
       10.39, 59.31, -21.02,
       100.57, -21.02, 14.22;
  return h;
}

RealMat rational_witness_matrix() {
  RealMat h(3, 3);
  h << 1.0 / 172.0, 1009.0 / 151.0, 11025.0 / 68.0,
       1009.0 / 151.0, 1803.0 / 22.0, -5829.0 / 65.0,
       11025.0 / 68.0, -5829.0 / 65.0, 1224.0 / 7.0;
  return h;
}

RealMat d4_witness_matrix() {
  RealMat h(4, 4);
  h << 21.0 / 3590.0, 9425.0 / 1571.0, 4853.0 / 464.0, 1111.0 / 28.0,
       9425.0 / 1571.0, 1293.0 / 88.0, 2122.0 / 145.0, 220.0 / 323.0,
       4853.0 / 464.0, 2122.0 / 145.0, 6.0 / 5951.0, 1355.0 / 3014.0,
       1111.0 / 28.0, 220.0 / 323.0, 1355.0 / 3014.0, 862.0 / 7403.0;
  return h;
}

RealMat split_demo_matrix() {
  RealMat h(3, 3);
  h << 1, 1, 1,
       1, 1, -1,
       1, -1, 1;
  return h;
}

std::pair<RealMat, RealMat> split_demo_printed_parts() {
  RealMat psd(3, 3);
  psd << 0, 0, 0,
         0, 1, -1,
         0, -1, 1;
  RealMat n(3, 3);
  n << 1, 1, 1,
       1, 0, 0,
       1, 0, 0;
  return {psd, n};
}

symmetric_space::DSProbabilities hp7_weights() {
  DSProbabilities p;
  p.d = 7;
  for (int i = 0; i < 7; ++i) p.p[IndexPair(i, i)] = (i == 0 || i == 6) ? 1.0 : 2.0;
  for (int i = 0; i < 6; ++i) p.p[IndexPair(i, i + 1)] = 2.0;
  p.p[IndexPair(0, 6)] = 0.25;
  p.p[IndexPair(2, 6)] = 0.25;
  return p;
}

symmetric_space::DSProbabilities toth_weights() {
  DSProbabilities p;
  p.d = 3;
  p.p[IndexPair(0, 0)] = 0.22;
  p.p[IndexPair(1, 1)] = 0.117;
  p.p[IndexPair(2, 2)] = 0.183;
  p.p[IndexPair(0, 1)] = 0.176;
  p.p[IndexPair(0, 2)] = 0.167 / 3.0;
  p.p[IndexPair(1, 2)] = 0.254;
  return p;
}

symmetric_space::DSProbabilities rational_weights() {
  DSProbabilities p;
  p.d = 3;
  p.p[IndexPair(0, 0)] = 1848.0 / 7625.0;
  p.p[IndexPair(1, 1)] = 1848.0 / 7625.0;
  p.p[IndexPair(2, 2)] = 464.0 / 7625.0;
  p.p[IndexPair(0, 1)] = 231.0 / 1525.0;
  p.p[IndexPair(0, 2)] = 462.0 / 7625.0;
  p.p[IndexPair(1, 2)] = 1848.0 / 7625.0;
  return p;
}

symmetric_space::DSProbabilities d4_weights() {
  DSProbabilities p;
  p.d = 4;
  p.p[IndexPair(0, 0)] = d4_wa();
  p.p[IndexPair(0, 2)] = d4_wa();
  p.p[IndexPair(0, 3)] = d4_wa();
  p.p[IndexPair(1, 1)] = d4_wa();
  p.p[IndexPair(2, 2)] = d4_wa();
  p.p[IndexPair(0, 1)] = d4_wb();
  p.p[IndexPair(1, 3)] = d4_wb();
  p.p[IndexPair(1, 2)] = d4_wc();
  p.p[IndexPair(2, 3)] = d4_wc();
  p.p[IndexPair(3, 3)] = d4_wd();
  return p;
}

symmetric_space::DSProbabilities edge57_weights() {
  DSProbabilities p;
  p.d = 3;
  p.p[IndexPair(0, 0)] = 1.0;
  p.p[IndexPair(1, 1)] = 0.3;
  p.p[IndexPair(2, 2)] = 0.8;
  p.p[IndexPair(0, 1)] = 0.8;
  p.p[IndexPair(0, 2)] = 0.2;
  p.p[IndexPair(1, 2)] = 0.7;
  return p;
}

std::array<double, 3> toth_point() {
  return {0.167 / 3.0, -0.059 / kSqrt2, 0.0};
}

std::array<double, 3> rational_point() {
  return {2.0 / 25.0, -1.0 / 50.0, 0.0};
}

witness_factory::Witness toth_witness() {
  witness_factory::CoeffMap c;
  c[{1, IndexPair(0, 2)}] = -37.40;
  c[{0, IndexPair(1, 2)}] = 23.20;
  return witness_factory::coherent_witness(toth_witness_matrix(), c);
}

witness_factory::Witness rational_witness() {
  witness_factory::CoeffMap c;
  c[{1, IndexPair(0, 2)}] = -6114.0 / 113.0;
  c[{0, IndexPair(1, 2)}] = 4595.0 / 191.0;
  return witness_factory::coherent_witness(rational_witness_matrix(), c);
}

witness_factory::Witness d4_witness() {
  witness_factory::CoeffMap c;
  c[{0, IndexPair(2, 3)}] = 6526.0 / 321.0;
  c[{1, IndexPair(0, 3)}] = -1896.0 / 107.0;
  c[{2, IndexPair(1, 3)}] = -549.0 / 1238.0;
  return witness_factory::coherent_witness(d4_witness_matrix(), c);
}

symmetric_space::SymmetricState toth_state() {
  const auto pt = toth_point();
  return symmetric_space::d3_blocks(toth_weights(), pt[0], pt[1], pt[2]).first;
}

symmetric_space::SymmetricState rational_state() {
  const auto pt = rational_point();
  return symmetric_space::d3_blocks(rational_weights(), pt[0], pt[1], pt[2]).first;
}

symmetric_space::SymmetricState d4_state() {
  return symmetric_space::build_symmetric(d4_weights(), d4_coherences(d4_stored_assignment()));
}

symmetric_space::SymmetricState hp7_state() {
  return symmetric_space::build_ds(hp7_weights());
}

symmetric_space::SymmetricState edge57_state() {
  return symmetric_space::edge_candidate(edge57_weights());
}

std::array<std::pair<int, IndexPair>, 3> d4_stored_assignment() {
  return {std::pair{1, IndexPair(0, 3)},
          std::pair{0, IndexPair(2, 3)},
          std::pair{2, IndexPair(1, 3)}};
}

std::vector<D4SearchHit> d4_assignment_search() {
  const auto p = d4_weights();
  const auto w = d4_witness();
  std::vector<std::pair<int, IndexPair>> slots;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        if (j != i && k != i) slots.emplace_back(i, IndexPair(j, k));
      }
    }
  }
  std::vector<D4SearchHit> hits;
  const std::size_t n = slots.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        const std::array<std::pair<int, IndexPair>, 3> assign{slots[a], slots[b], slots[c]};
        const auto s = symmetric_space::build_symmetric(p, d4_coherences(assign));
        if (!s.psd_ok) continue;
        const auto [is_ppt, pt_min] = certify::ppt(s);
        if (!is_ppt) continue;
        const double v = witness_factory::expectation(w, s.rho);
        if (v < -certify::detection_threshold(w, s.rho)) {
          hits.push_back({assign, s.min_eig, pt_min, v});
        }
      }
    }
  }
  return hits;
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{
      "horn5", "hp7_ds7", "toth_d3", "rational_d3", "appendixA_d4", "edge57"};
  return names;
}

namespace {

ExampleReport run_horn5() {
  ExampleReport rep;
  rep.name = "horn5";
  const RealMat h = copositive_cone::horn(5);
  const auto [nec_ok, pair] = copositive_cone::check_necessary(h);
  (void)pair;
  const auto cop = copositive_cone::is_copositive(h);
  const auto dec = copositive_cone::decompose(h);
  const bool exceptional =
      dec.status == copositive_cone::DecompositionResult::Status::Exceptional;
  const auto wit = certify::classify_witness(witness_factory::witness(h));
  const bool nondec =
      wit.classification == witness_factory::Classification::NonDecomposable;
  rep.lines.push_back("matrix: 5x5 cyclic sign pattern");
  rep.lines.push_back("necessary conditions: " + std::string(nec_ok ? "pass" : "fail"));
  rep.lines.push_back("copositive: " + yesno(cop.copositive));
  rep.lines.push_back(exceptional
                          ? "decomposition: exceptional (infeasibility " + num(dec.residual) + ")"
                          : "decomposition: split");
  rep.lines.push_back(std::string("witness classification: ") +
                      (nondec ? "non-decomposable" : "decomposable"));
  rep.reproduced = nec_ok && cop.copositive && exceptional && nondec;
  return rep;
}

ExampleReport run_hp7() {
  ExampleReport rep;
  rep.name = "hp7_ds7";
  const auto s = hp7_state();
  const auto w = witness_factory::witness(copositive_cone::hoffman_pereira());
  const auto cert = certify::certify_state(s, w);
  const double v = cert.witness_value.value();
  const auto cross = witness_factory::witness(copositive_cone::horn(7));
  const double v2 = witness_factory::expectation(cross, s.rho);
  rep.lines.push_back("state: diagonal symmetric, d=7, total weight " +
                      num(hp7_weights().total()));
  rep.lines.push_back("state min eigenvalue: " + num(cert.state_min_eig));
  rep.lines.push_back("ppt: " + yesno(cert.ppt) + " (min eigenvalue " +
                      num(cert.pt_min_eig) + ")");
  rep.lines.push_back("witness value: " + num(v) + " (expected -1/4)");
  rep.lines.push_back("cyclic-pattern witness value: " + num(v2) + " (expected 0)");
  rep.lines.push_back("verdict: " + certify::to_string(cert.verdict));
  rep.reproduced = cert.verdict == certify::Verdict::PPTEntangled &&
                   std::abs(v + 0.25) <= 1e-12 && std::abs(v2) <= 1e-12;
  return rep;
}

ExampleReport run_d3(const std::string& name,
                     const symmetric_space::SymmetricState& s,
                     const witness_factory::Witness& w, double strict_below) {
  ExampleReport rep;
  rep.name = name;
  const auto cert = certify::certify_state(s, w);
  rep.lines.push_back("state min eigenvalue: " + num(cert.state_min_eig));
  rep.lines.push_back("ppt: " + yesno(cert.ppt) + " (min eigenvalue " +
                      num(cert.pt_min_eig) + ")");
  rep.lines.push_back("witness value: " + num(cert.witness_value.value()));
  rep.lines.push_back("verdict: " + certify::to_string(cert.verdict));
  rep.reproduced = cert.verdict == certify::Verdict::PPTEntangled &&
                   cert.witness_value.value() < strict_below;
  return rep;
}

ExampleReport run_d4() {
  ExampleReport rep;
  rep.name = "appendixA_d4";
  const auto p = d4_weights();
  const double total = p.total();
  const auto s = d4_state();
  const auto w = d4_witness();
  const auto cert = certify::certify_state(s, w);
  rep.lines.push_back("total weight: " + num(total) + " (radical parts cancel exactly)");
  rep.lines.push_back("state min eigenvalue: " + num(cert.state_min_eig));
  rep.lines.push_back("ppt: " + yesno(cert.ppt) + " (min eigenvalue " +
                      num(cert.pt_min_eig) + ")");
  rep.lines.push_back("witness value: " + num(cert.witness_value.value()));
  rep.lines.push_back("verdict: " + certify::to_string(cert.verdict));
  rep.reproduced = std::abs(total - 1.0) <= 1e-12 &&
                   cert.verdict == certify::Verdict::PPTEntangled;
  if (!rep.reproduced) {
    rep.lines.push_back("UNREPRODUCED: the registered assignment did not certify");
  }
  return rep;
}

ExampleReport run_edge57() {
  ExampleReport rep;
  rep.name = "edge57";
  const auto s = edge57_state();
  const CplxMat pt = symmetric_space::partial_transpose(s);
  const int rank_state = matrix_core::numerical_rank(s.rho, 1e-8);
  const int rank_pt = matrix_core::numerical_rank(pt, 1e-8);
  const auto [is_ppt, pt_min] = matrix_core::is_psd(pt);
  rep.lines.push_back("state min eigenvalue: " + num(s.min_eig));
  rep.lines.push_back("ppt: " + yesno(is_ppt) + " (min eigenvalue " + num(pt_min) + ")");
  rep.lines.push_back("rank of state: " + std::to_string(rank_state) + " (expected 5)");
  rep.lines.push_back("rank of partial transpose: " + std::to_string(rank_pt) +
                      " (expected 7)");
  rep.reproduced = is_ppt && rank_state == 5 && rank_pt == 7;
  return rep;
}

}  // namespace

ExampleReport run_example(const std::string& name) {
  if (name == "horn5") return run_horn5();
  if (name == "hp7_ds7") return run_hp7();
  if (name == "toth_d3") return run_d3("toth_d3", toth_state(), toth_witness(), -1e-6);
  if (name == "rational_d3") return run_d3("rational_d3", rational_state(), rational_witness(), 0.0);
  if (name == "appendixA_d4") return run_d4();
  if (name == "edge57") return run_edge57();
  std::string msg = "unknown example '" + name + "'; valid names:";
  for (const auto& n : example_names()) msg += " " + n;
  throw std::invalid_argument(msg);
}

}  // namespace copwit::registry
