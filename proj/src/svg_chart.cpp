// Copyright 2026 The ranksmooth Authors.
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

#include "ranksmooth/svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ranksmooth/io.hpp"

namespace ranksmooth::svg {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 460.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                    "#bcbd22", "#17becf"};

std::string fixed(double v, int precision = 2) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(precision);
  out << v;
  return out.str();
}

std::string tick_label(double v, double span) {
  const int digits = span <= 0.0 ? 3 : std::clamp(3 - static_cast<int>(std::floor(std::log10(span))), 0, 8);
  return fixed(v, digits);
}

}  // namespace

std::string escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string render(const LineChart& chart) {
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min;
  double y_min = x_min;
  double y_max = -x_min;
  for (const auto& s : chart.series) {
    for (double x : s.xs) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
    }
    for (double y : s.ys) {
      if (!std::isfinite(y)) continue;
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (!std::isfinite(x_min)) x_min = 0.0, x_max = 1.0;
  if (!std::isfinite(y_min)) y_min = 0.0, y_max = 1.0;
  if (x_max == x_min) x_min -= 0.5, x_max += 0.5;
  if (y_max == y_min) {
    const double pad = std::max(std::fabs(y_min) * 0.05, 1e-12);
    y_min -= pad;
    y_max += pad;
  } else {
    const double pad = 0.05 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;
  }

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return kTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n"
      << "<text x=\"" << fixed(kLeft + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << escape(chart.title) << "</text>\n";

  // Axes and ticks.
  out << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
      << "\" y2=\"" << kTop + plot_h << "\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + plot_h << "\"/>\n"
      << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
  constexpr int kTicks = 5;
  for (int t = 0; t <= kTicks; ++t) {
    const double xv = x_min + (x_max - x_min) * t / kTicks;
    const double yv = y_min + (y_max - y_min) * t / kTicks;
    out << "<line x1=\"" << fixed(px(xv)) << "\" y1=\"" << kTop + plot_h << "\" x2=\""
        << fixed(px(xv)) << "\" y2=\"" << kTop + plot_h + 5 << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << fixed(px(xv)) << "\" y=\"" << kTop + plot_h + 18
        << "\" text-anchor=\"middle\">" << tick_label(xv, x_max - x_min) << "</text>\n"
        << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fixed(py(yv)) << "\" x2=\"" << kLeft
        << "\" y2=\"" << fixed(py(yv)) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << fixed(py(yv) + 4)
        << "\" text-anchor=\"end\">" << tick_label(yv, y_max - y_min) << "</text>\n";
  }
  out << "<text x=\"" << fixed(kLeft + plot_w / 2) << "\" y=\"" << kHeight - 16
      << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(chart.x_label) << "</text>\n"
      << "<text x=\"18\" y=\"" << fixed(kTop + plot_h / 2)
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
      << fixed(kTop + plot_h / 2) << ")\">" << escape(chart.y_label) << "</text>\n</g>\n";

  for (std::size_t k = 0; k < chart.series.size(); ++k) {
    const auto& s = chart.series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    // Non-finite values break the line into separate runs.
    std::size_t p = 0;
    while (p < s.xs.size()) {
      if (!std::isfinite(s.ys[p])) {
        ++p;
        continue;
      }
      out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.8\" points=\"";
      for (bool first = true; p < s.xs.size() && std::isfinite(s.ys[p]); ++p, first = false) {
        if (!first) out << ' ';
        out << fixed(px(s.xs[p])) << ',' << fixed(py(s.ys[p]));
      }
      out << "\"/>\n";
    }
    if (s.marker && *s.marker < s.xs.size() && std::isfinite(s.ys[*s.marker])) {
      const double mx = s.xs[*s.marker];
      const double my = s.ys[*s.marker];
      const double cx = px(mx);
      const double cy = py(my);
      out << "<g class=\"optimum\" data-series=\"" << escape(s.name) << "\" data-x=\""
          << io::format_double(mx) << "\" data-y=\"" << io::format_double(my) << "\" stroke=\""
          << color << "\" stroke-width=\"2.5\">"
          << "<line x1=\"" << fixed(cx - 6) << "\" y1=\"" << fixed(cy - 6) << "\" x2=\""
          << fixed(cx + 6) << "\" y2=\"" << fixed(cy + 6) << "\"/>"
          << "<line x1=\"" << fixed(cx - 6) << "\" y1=\"" << fixed(cy + 6) << "\" x2=\""
          << fixed(cx + 6) << "\" y2=\"" << fixed(cy - 6) << "\"/></g>\n";
    }
    const double ly = kTop + 12 + 18.0 * static_cast<double>(k);
    out << "<line x1=\"" << kWidth - kRight + 16 << "\" y1=\"" << ly << "\" x2=\""
        << kWidth - kRight + 40 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << kWidth - kRight + 46 << "\" y=\"" << ly + 4
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(s.name) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ranksmooth::svg
