// Copyright 2026 The Trustmax Authors.
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

#include "trustmax/svg.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace trustmax {
namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 440;
constexpr double kLeft = 70;
constexpr double kRight = 70;
constexpr double kTop = 40;
constexpr double kBottom = 60;

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void Add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void Finish() {
    if (!std::isfinite(lo)) lo = hi = 0.0;
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string RenderSvg(const LineChart& chart) {
  Range xr, yr, y2r;
  bool has_right = false;
  for (const auto& s : chart.series) {
    for (double x : s.x) xr.Add(x);
    for (double y : s.y) (s.right_axis ? y2r : yr).Add(y);
    has_right = has_right || s.right_axis;
  }
  xr.Finish();
  yr.Finish();
  y2r.Finish();

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto py = [&](double y, const Range& r) {
    return kTop + plot_h - (y - r.lo) / (r.hi - r.lo) * plot_h;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" "
      << "font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" "
      << "font-size=\"14\">" << Escape(chart.title) << "</text>\n";
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int k = 0; k <= 4; ++k) {
    const double fx = xr.lo + (xr.hi - xr.lo) * k / 4.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * k / 4.0;
    out << "<text x=\"" << px(fx) << "\" y=\"" << kTop + plot_h + 16
        << "\" text-anchor=\"middle\">" << Num(fx) << "</text>\n";
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(fy, yr) + 4
        << "\" text-anchor=\"end\">" << Num(fy) << "</text>\n";
    if (has_right) {
      const double fy2 = y2r.lo + (y2r.hi - y2r.lo) * k / 4.0;
      out << "<text x=\"" << kLeft + plot_w + 6 << "\" y=\""
          << py(fy2, y2r) + 4 << "\">" << Num(fy2) << "</text>\n";
    }
  }
  out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 20
      << "\" text-anchor=\"middle\">" << Escape(chart.x_label) << "</text>\n";
  out << "<text transform=\"translate(16," << kTop + plot_h / 2
      << ") rotate(-90)\" text-anchor=\"middle\">" << Escape(chart.y_label)
      << "</text>\n";
  if (has_right) {
    out << "<text transform=\"translate(" << kWidth - 12 << ","
        << kTop + plot_h / 2 << ") rotate(90)\" text-anchor=\"middle\">"
        << Escape(chart.y2_label) << "</text>\n";
  }

  for (std::size_t k = 0; k < chart.series.size(); ++k) {
    const auto& s = chart.series[k];
    const char* color = kPalette[k % kPalette.size()];
    const Range& r = s.right_axis ? y2r : yr;
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\""
        << (s.right_axis ? " stroke-dasharray=\"5,3\"" : "") << " points=\"";
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      out << (i ? " " : "") << px(s.x[i]) << ',' << py(s.y[i], r);
    }
    out << "\"/>\n";
    const double ly = kTop + 14 + 14 * static_cast<double>(k);
    out << "<line x1=\"" << kLeft + 8 << "\" y1=\"" << ly - 4 << "\" x2=\""
        << kLeft + 28 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color
        << "\" stroke-width=\"2\""
        << (s.right_axis ? " stroke-dasharray=\"5,3\"" : "") << "/>\n";
    out << "<text x=\"" << kLeft + 32 << "\" y=\"" << ly << "\">"
        << Escape(s.name) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace trustmax
