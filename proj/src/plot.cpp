// Copyright 2026 The unicomp Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unicomp/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace unicomp {
namespace {

constexpr double kPanelW = 420.0, kPanelH = 300.0;
constexpr double kMarginL = 60.0, kMarginR = 15.0, kMarginT = 30.0, kMarginB = 40.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

std::string svg_panels(const std::vector<Panel>& panels, const std::string& x_label, bool log_x) {
  const int cols = panels.size() > 1 ? 2 : 1;
  const int rows = static_cast<int>((panels.size() + cols - 1) / cols);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * kPanelW << "\" height=\""
      << std::max(rows, 1) * kPanelH << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t pi = 0; pi < panels.size(); ++pi) {
    const Panel& panel = panels[pi];
    const double ox = (pi % cols) * kPanelW, oy = (pi / cols) * kPanelH;
    const double w = kPanelW - kMarginL - kMarginR, h = kPanelH - kMarginT - kMarginB;
    std::vector<std::pair<double, double>> pts;
    for (const auto& [x, y] : panel.points)
      if (std::isfinite(x) && std::isfinite(y) && y > 0.0 && (!log_x || x > 0.0))
        pts.emplace_back(log_x ? std::log10(x) : x, std::log10(y));
    out << "<g transform=\"translate(" << ox << ',' << oy << ")\">\n";
    out << "<text x=\"" << kPanelW / 2 << "\" y=\"18\" text-anchor=\"middle\">" << panel.title
        << " (log scale)</text>\n";
    out << "<rect x=\"" << kMarginL << "\" y=\"" << kMarginT << "\" width=\"" << w
        << "\" height=\"" << h << "\" fill=\"none\" stroke=\"#444\"/>\n";
    out << "<text x=\"" << kMarginL + w / 2 << "\" y=\"" << kPanelH - 8
        << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
    if (pts.size() >= 1) {
      double x0 = pts.front().first, x1 = x0, y0 = pts.front().second, y1 = y0;
      for (const auto& [x, y] : pts) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
      }
      if (x1 == x0) x1 = x0 + 1.0;
      if (y1 == y0) y1 = y0 + 1.0;
      auto sx = [&](double x) { return kMarginL + (x - x0) / (x1 - x0) * w; };
      auto sy = [&](double y) { return kMarginT + (y1 - y) / (y1 - y0) * h; };
      out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.2\" points=\"";
      for (const auto& [x, y] : pts) out << fmt(sx(x)) << ',' << fmt(sy(y)) << ' ';
      out << "\"/>\n";
      for (int t = 0; t <= 4; ++t) {
        const double yv = y0 + (y1 - y0) * t / 4.0;
        out << "<text x=\"" << kMarginL - 4 << "\" y=\"" << sy(yv) + 4
            << "\" text-anchor=\"end\">" << fmt(std::pow(10.0, yv)) << "</text>\n";
        const double xv = x0 + (x1 - x0) * t / 4.0;
        out << "<text x=\"" << sx(xv) << "\" y=\"" << kMarginT + h + 14
            << "\" text-anchor=\"middle\">" << fmt(log_x ? std::pow(10.0, xv) : xv)
            << "</text>\n";
      }
    } else {
      out << "<text x=\"" << kMarginL + w / 2 << "\" y=\"" << kMarginT + h / 2
          << "\" text-anchor=\"middle\">no positive data</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string trace_svg(const RunTrace& trace, bool by_bits) {
  std::vector<Panel> panels = {{"f_bar", {}}, {"grad_sq", {}}, {"consensus", {}}, {"e5", {}}};
  for (const TraceRow& r : trace.rows) {
    const double x = by_bits ? static_cast<double>(r.bits_cum) : static_cast<double>(r.k);
    panels[0].points.emplace_back(x, r.f_bar);
    panels[1].points.emplace_back(x, r.grad_sq);
    panels[2].points.emplace_back(x, r.consensus);
    panels[3].points.emplace_back(x, r.e5);
  }
  return svg_panels(panels, by_bits ? "cumulative bits" : "iteration k");
}

}  // namespace unicomp
