#include "copwit/scan.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string_view>

#include "copwit/certify.hpp"
#include "copwit/matrix_core.hpp"

namespace copwit::scan {

namespace {

double node(const AxisSpec& ax, int idx) {
  if (ax.steps == 1) return ax.lo;
  return ax.lo + static_cast<double>(idx) * (ax.hi - ax.lo) / static_cast<double>(ax.steps - 1);
}

void check_axis(const AxisSpec& ax, const char* name) {
  if (ax.steps < 1) {
    throw std::invalid_argument(std::string("scan: axis '") + name + "' has no nodes");
  }
  if (!(ax.lo <= ax.hi)) {
    throw std::invalid_argument(std::string("scan: axis '") + name + "' has lo > hi");
  }
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

AxisSpec parse_axis(const nlohmann::json& j, const AxisSpec& fallback, const char* name) {
  if (!j.contains(name)) return fallback;
  const auto& a = j.at(name);
  AxisSpec ax = fallback;
  if (a.contains("min")) ax.lo = a.at("min").get<double>();
  if (a.contains("max")) ax.hi = a.at("max").get<double>();
  if (a.contains("steps")) ax.steps = a.at("steps").get<int>();
  return ax;
}

}  // namespace

GridSpec default_grid(const symmetric_space::DSProbabilities& p) {
  GridSpec g;
  g.alpha = {-0.2, 0.2, 201};
  g.beta = {-0.2, 0.2, 201};
  g.gamma_slices = {0.0, p.at(0, 1) / 4.0};
  return g;
}

GridSpec parse_grid(const nlohmann::json& j, const symmetric_space::DSProbabilities& p) {
  GridSpec g = default_grid(p);
  g.alpha = parse_axis(j, g.alpha, "alpha");
  g.beta = parse_axis(j, g.beta, "beta");
  if (j.contains("gamma")) {
    const auto& gj = j.at("gamma");
    if (!gj.contains("slices") || !gj.at("slices").is_array()) {
      throw std::invalid_argument("scan: grid 'gamma' must hold a 'slices' array");
    }
    g.gamma_slices.clear();
    for (const auto& v : gj.at("slices")) g.gamma_slices.push_back(v.get<double>());
  }
  check_axis(g.alpha, "alpha");
  check_axis(g.beta, "beta");
  if (g.gamma_slices.empty()) {
    throw std::invalid_argument("scan: no gamma slices requested (empty grid)");
  }
  return g;
}

ScanResult scan_d3(const symmetric_space::DSProbabilities& p,
                   const witness_factory::Witness& w, const GridSpec& grid) {
  p.validate();
  if (p.d != 3) {
    throw std::invalid_argument("scan_d3 requires d = 3 weights, got d = " +
                                std::to_string(p.d));
  }
  if (w.w.rows() != 9) {
    throw std::invalid_argument("scan_d3 requires a 9-dimensional witness");
  }
  check_axis(grid.alpha, "alpha");
  check_axis(grid.beta, "beta");
  if (grid.gamma_slices.empty()) {
    throw std::invalid_argument("scan: no gamma slices requested (empty grid)");
  }

  ScanResult out;
  out.grid = grid;
  out.rows.reserve(grid.gamma_slices.size() *
                   static_cast<std::size_t>(grid.alpha.steps) *
                   static_cast<std::size_t>(grid.beta.steps));
  for (const double gamma : grid.gamma_slices) {
    for (int ia = 0; ia < grid.alpha.steps; ++ia) {
      const double alpha = node(grid.alpha, ia);
      for (int ib = 0; ib < grid.beta.steps; ++ib) {
        const double beta = node(grid.beta, ib);
        const auto [state, pt] = symmetric_space::d3_blocks(p, alpha, beta, gamma);
        ScanRow row;
        row.alpha = alpha;
        row.beta = beta;
        row.gamma = gamma;
        row.state_min_eig = state.min_eig;
        const auto [is_ppt, pt_min] = matrix_core::is_psd(pt);
        row.pt_min_eig = pt_min;
        row.value = witness_factory::expectation(w, state.rho);
        if (!state.psd_ok) {
          row.cls = "invalid";
        } else if (!is_ppt) {
          row.cls = "NPT";
        } else if (row.value < -certify::detection_threshold(w, state.rho)) {
          row.cls = "PPT-detected";
        } else {
          row.cls = "PPT-undetected";
        }
        out.rows.push_back(row);
      }
    }
  }
  return out;
}

std::string to_csv(const ScanResult& r) {
  std::string csv =
      "alpha_re,alpha_im,beta_re,beta_im,gamma_re,gamma_im,"
      "state_min_eig,pt_min_eig,witness_value,class\n";
  for (const auto& row : r.rows) {
    csv += g17(row.alpha);
    csv += ",0,";
    csv += g17(row.beta);
    csv += ",0,";
    csv += g17(row.gamma);
    csv += ",0,";
    csv += g17(row.state_min_eig);
    csv += ",";
    csv += g17(row.pt_min_eig);
    csv += ",";
    csv += g17(row.value);
    csv += ",";
    csv += row.cls;
    csv += "\n";
  }
  return csv;
}

std::string slice_svg(const ScanResult& r, std::size_t slice_index) {
  if (slice_index >= r.grid.gamma_slices.size()) {
    throw std::invalid_argument("slice_svg: slice index out of range");
  }
  const double gamma = r.grid.gamma_slices[slice_index];
  const std::size_t per_slice = static_cast<std::size_t>(r.grid.alpha.steps) *
                                static_cast<std::size_t>(r.grid.beta.steps);
  const std::size_t begin = slice_index * per_slice;

  const int margin = 60;
  const int plot = 520;
  const int width = plot + 2 * margin;
  const int height = plot + 2 * margin + 30;
  const double alo = r.grid.alpha.lo, ahi = r.grid.alpha.hi;
  const double blo = r.grid.beta.lo, bhi = r.grid.beta.hi;
  const auto xpix = [&](double a) {
    return margin + (ahi > alo ? (a - alo) / (ahi - alo) : 0.5) * plot;
  };
  const auto ypix = [&](double b) {
    return margin + (bhi > blo ? (bhi - b) / (bhi - blo) : 0.5) * plot;
  };
  const auto color = [](const char* cls) {
    if (std::string_view(cls) == "PPT-detected") return "#3a6fd8";
    if (std::string_view(cls) == "PPT-undetected") return "#f2a65a";
    if (std::string_view(cls) == "NPT") return "#e05555";
    return "#d8d8d8";
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<rect x=\"" + std::to_string(margin) + "\" y=\"" + std::to_string(margin) +
         "\" width=\"" + std::to_string(plot) + "\" height=\"" + std::to_string(plot) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + std::to_string(margin) + "\" y=\"30\" font-size=\"16\">"
         "block coherence scan, gamma = " + g17(gamma) + "</text>\n";

  char buf[160];
  for (std::size_t k = begin; k < begin + per_slice && k < r.rows.size(); ++k) {
    const auto& row = r.rows[k];
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"1.3\" fill=\"%s\"/>\n",
                  xpix(row.alpha), ypix(row.beta), color(row.cls));
    svg += buf;
  }

  // Axis tick labels at the grid bounds.
  std::snprintf(buf, sizeof buf,
                "<text x=\"%d\" y=\"%d\" font-size=\"12\" text-anchor=\"middle\">%s</text>\n",
                margin, margin + plot + 20, g17(alo).c_str());
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%d\" y=\"%d\" font-size=\"12\" text-anchor=\"middle\">%s</text>\n",
                margin + plot, margin + plot + 20, g17(ahi).c_str());
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%d\" y=\"%d\" font-size=\"12\" text-anchor=\"end\">%s</text>\n",
                margin - 6, margin + plot, g17(blo).c_str());
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%d\" y=\"%d\" font-size=\"12\" text-anchor=\"end\">%s</text>\n",
                margin - 6, margin + 12, g17(bhi).c_str());
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%d\" y=\"%d\" font-size=\"12\" text-anchor=\"middle\">alpha</text>\n",
                margin + plot / 2, margin + plot + 36);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%d\" y=\"%d\" font-size=\"12\">beta</text>\n", 8,
                margin + plot / 2);
  svg += buf;

  // Legend.
  const std::array<const char*, 4> classes{"invalid", "NPT", "PPT-undetected",
                                           "PPT-detected"};
  int ly = height - 18;
  int lx = margin;
  for (const char* cls : classes) {
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%d\" cy=\"%d\" r=\"4\" fill=\"%s\"/>"
                  "<text x=\"%d\" y=\"%d\" font-size=\"12\">%s</text>\n",
                  lx, ly, color(cls), lx + 8, ly + 4, cls);
    svg += buf;
    lx += 130;
  }
  svg += "</svg>\n";
  return svg;
}

std::vector<std::string> write_outputs(const ScanResult& r, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  std::vector<std::string> written;
  {
    const fs::path path = fs::path(out_dir) / "scan.csv";
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << to_csv(r);
    written.push_back(path.string());
  }
  for (std::size_t k = 0; k < r.grid.gamma_slices.size(); ++k) {
    const fs::path path = fs::path(out_dir) / ("scan_gamma_" + std::to_string(k) + ".svg");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << slice_svg(r, k);
    written.push_back(path.string());
  }
  return written;
}

}  // namespace copwit::scan
