// Copyright 2026 The cliffinit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "problem.hpp"

namespace cli {
namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 480;
constexpr double kLeft = 80;
constexpr double kRight = 150;
constexpr double kTop = 30;
constexpr double kBottom = 60;

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void settle() {
    if (!std::isfinite(lo)) lo = 0, hi = 1;
    if (lo == hi) lo -= 0.5, hi += 0.5;
  }
};

void header(std::ostringstream& out, const std::string& x_label, const std::string& y_label) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << num(kLeft + (kWidth - kLeft - kRight) / 2) << "\" y=\"" << num(kHeight - 15)
      << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n"
      << "<text x=\"20\" y=\"" << num(kTop + (kHeight - kTop - kBottom) / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << num(kTop + (kHeight - kTop - kBottom) / 2) << ")\">" << escape(y_label) << "</text>\n";
}

void axes(std::ostringstream& out, const Range& xr, const Range& yr) {
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  out << "<rect x=\"" << num(x0) << "\" y=\"" << num(y1) << "\" width=\"" << num(x1 - x0) << "\" height=\""
      << num(y0 - y1) << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double f = i / 4.0;
    const double px = x0 + f * (x1 - x0);
    const double py = y0 - f * (y0 - y1);
    out << "<text x=\"" << num(px) << "\" y=\"" << num(y0 + 16) << "\" text-anchor=\"middle\">"
        << label(xr.lo + f * (xr.hi - xr.lo)) << "</text>\n";
    out << "<text x=\"" << num(x0 - 6) << "\" y=\"" << num(py + 4) << "\" text-anchor=\"end\">"
        << label(yr.lo + f * (yr.hi - yr.lo)) << "</text>\n";
  }
}

}  // namespace

std::string line_plot_svg(const std::vector<Series>& series, const std::string& x_label, const std::string& y_label) {
  Range xr, yr;
  for (const auto& s : series) {
    for (double v : s.x) xr.add(v);
    for (double v : s.y) yr.add(v);
  }
  xr.settle();
  yr.settle();
  const auto px = [&](double v) { return kLeft + (v - xr.lo) / (xr.hi - xr.lo) * (kWidth - kLeft - kRight); };
  const auto py = [&](double v) {
    return kHeight - kBottom - (v - yr.lo) / (yr.hi - yr.lo) * (kHeight - kTop - kBottom);
  };
  std::ostringstream out;
  header(out, x_label, y_label);
  axes(out, xr, yr);
  for (size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    std::string points;
    for (size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.y[i])) continue;
      points += num(px(s.x[i])) + "," + num(py(s.y[i])) + " ";
      out << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(s.y[i])) << "\" r=\"3\" fill=\"" << color
          << "\"/>\n";
    }
    if (!points.empty()) points.pop_back();
    out << "<polyline points=\"" << points << "\" fill=\"none\" stroke=\"" << color << "\"/>\n";
    const double ly = kTop + 10 + 18 * static_cast<double>(k);
    out << "<rect x=\"" << num(kWidth - kRight + 10) << "\" y=\"" << num(ly - 8) << "\" width=\"10\" height=\"10\" fill=\""
        << color << "\"/>\n<text x=\"" << num(kWidth - kRight + 25) << "\" y=\"" << num(ly + 1) << "\">"
        << escape(s.name) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string heat_map_svg(const std::vector<double>& xs, const std::vector<double>& ys,
                         const std::vector<std::vector<double>>& values, const std::string& x_label,
                         const std::string& y_label) {
  Range vr;
  for (const auto& row : values) {
    for (double v : row) vr.add(v);
  }
  vr.settle();
  Range xr, yr;
  for (double v : xs) xr.add(v);
  for (double v : ys) yr.add(v);
  xr.settle();
  yr.settle();
  std::ostringstream out;
  header(out, x_label, y_label);
  const double cw = (kWidth - kLeft - kRight) / static_cast<double>(std::max<size_t>(1, xs.size()));
  const double ch = (kHeight - kTop - kBottom) / static_cast<double>(std::max<size_t>(1, ys.size()));
  for (size_t iy = 0; iy < ys.size(); ++iy) {
    for (size_t ix = 0; ix < xs.size(); ++ix) {
      const double v = values[iy][ix];
      if (!std::isfinite(v)) continue;
      const double f = (v - vr.lo) / (vr.hi - vr.lo);
      const int red = static_cast<int>(std::lround(255 * f));
      const int blue = 255 - red;
      char color[16];
      std::snprintf(color, sizeof color, "#%02x40%02x", red, blue);
      out << "<rect x=\"" << num(kLeft + cw * static_cast<double>(ix)) << "\" y=\""
          << num(kHeight - kBottom - ch * static_cast<double>(iy + 1)) << "\" width=\"" << num(cw) << "\" height=\""
          << num(ch) << "\" fill=\"" << color << "\"><title>" << format_double(v) << "</title></rect>\n";
    }
  }
  for (size_t ix = 0; ix < xs.size(); ++ix) {
    out << "<text x=\"" << num(kLeft + cw * (static_cast<double>(ix) + 0.5)) << "\" y=\"" << num(kHeight - kBottom + 16)
        << "\" text-anchor=\"middle\">" << label(xs[ix]) << "</text>\n";
  }
  for (size_t iy = 0; iy < ys.size(); ++iy) {
    out << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(kHeight - kBottom - ch * (static_cast<double>(iy) + 0.5) + 4)
        << "\" text-anchor=\"end\">" << label(ys[iy]) << "</text>\n";
  }
  out << "<text x=\"" << num(kWidth - kRight + 10) << "\" y=\"" << num(kTop + 10) << "\">min " << label(vr.lo)
      << "</text>\n<text x=\"" << num(kWidth - kRight + 10) << "\" y=\"" << num(kTop + 28) << "\">max "
      << label(vr.hi) << "</text>\n</svg>\n";
  return out.str();
}

}  // namespace cli
