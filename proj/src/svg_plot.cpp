/*
 * Copyright 2026 The dolphin-los Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "dolphin/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "dolphin/csv.hpp"

namespace dolphin {
namespace {

constexpr double kPlotWidth = 800.0;     // [px]
constexpr double kMaxPlotHeight = 600.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 30.0;
constexpr double kTop = 40.0;
constexpr double kAxisBand = 50.0;       // tick labels and x label below the axes
constexpr double kLegendRow = 18.0;
constexpr double kStrokePx = 1.5;

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

struct Bounds {
  double min_x = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(const Vector2<double>& p) {
    if (!p.allFinite()) return;
    min_x = std::min(min_x, p.x());
    max_x = std::max(max_x, p.x());
    min_y = std::min(min_y, p.y());
    max_y = std::max(max_y, p.y());
  }
  bool empty() const { return !(min_x <= max_x); }
};

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string points_attribute(std::span<const Vector2<double>> points) {
  std::string out;
  for (const Vector2<double>& p : points) {
    if (!out.empty()) out += ' ';
    out += format_double(p.x()) + "," + format_double(p.y());
  }
  return out;
}

// Tick spacing of 1, 2 or 5 times a power of ten giving about `target` ticks.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double base = std::pow(10.0, std::floor(std::log10(raw)));
  for (double f : {1.0, 2.0, 5.0}) {
    if (f * base >= raw) return f * base;
  }
  return 10.0 * base;
}

}  // namespace

PlotTrace trace_from_log(std::string label, const TrialLog& log) {
  PlotTrace trace{std::move(label), {}};
  trace.points.reserve(log.size());
  for (const LogRow& row : log) trace.points.emplace_back(row.pose.x(), row.pose.y());
  return trace;
}

void write_svg_plot(std::ostream& out, std::span<const Vector2<double>> reference,
                    std::span<const PlotTrace> traces, const std::string& title) {
  Bounds b;
  for (const auto& p : reference) b.add(p);
  for (const PlotTrace& t : traces) {
    for (const auto& p : t.points) b.add(p);
  }
  if (b.empty()) b = Bounds{-1.0, 1.0, -1.0, 1.0};
  const double pad = 0.05 * std::max({b.max_x - b.min_x, b.max_y - b.min_y, 1e-3});
  b.min_x -= pad;
  b.max_x += pad;
  b.min_y -= pad;
  b.max_y += pad;

  // Equal aspect: one scale for both axes; the canvas height follows the data.
  const double span_x = b.max_x - b.min_x;
  const double span_y = b.max_y - b.min_y;
  const double scale = std::min(kPlotWidth / span_x, kMaxPlotHeight / span_y);
  const double plot_w = scale * span_x;
  const double plot_h = scale * span_y;
  const double x0 = kLeft + 0.5 * (kPlotWidth - plot_w);
  const double y_top = kTop;
  const double y0 = y_top + plot_h;
  const double x1 = x0 + plot_w;
  const double width = kLeft + kPlotWidth + kRight;
  const double height = y0 + kAxisBand + kLegendRow * static_cast<double>(traces.size() + 1) + 10.0;
  const double tx = x0 - scale * b.min_x;
  const double ty = y0 + scale * b.min_y;
  auto px = [&](double x) { return tx + scale * x; };
  auto py = [&](double y) { return ty - scale * y; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(width)
      << "\" height=\"" << format_double(height) << "\" viewBox=\"0 0 " << format_double(width)
      << ' ' << format_double(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << format_double(width / 2.0) << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << escape(title) << "</text>\n";

  // Axes with metre ticks.
  out << "<g class=\"axes\" stroke=\"#444\" fill=\"none\" font-family=\"sans-serif\" "
         "font-size=\"11\">\n";
  out << "<rect x=\"" << format_double(x0) << "\" y=\"" << format_double(y_top) << "\" width=\""
      << format_double(plot_w) << "\" height=\"" << format_double(plot_h) << "\"/>\n";
  const double step_x = nice_step(span_x, 8);
  for (double v = std::ceil(b.min_x / step_x) * step_x; v <= b.max_x; v += step_x) {
    out << "<line x1=\"" << format_double(px(v)) << "\" y1=\"" << format_double(y0)
        << "\" x2=\"" << format_double(px(v)) << "\" y2=\"" << format_double(y0 + 5.0) << "\"/>";
    out << "<text x=\"" << format_double(px(v)) << "\" y=\"" << format_double(y0 + 18.0)
        << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#000\">"
        << format_double(std::abs(v) < 1e-12 ? 0.0 : v, 4) << "</text>\n";
  }
  const double step_y = nice_step(span_y, std::max(4, static_cast<int>(plot_h / 60.0)));
  for (double v = std::ceil(b.min_y / step_y) * step_y; v <= b.max_y; v += step_y) {
    out << "<line x1=\"" << format_double(x0 - 5.0) << "\" y1=\"" << format_double(py(v))
        << "\" x2=\"" << format_double(x0) << "\" y2=\"" << format_double(py(v)) << "\"/>";
    out << "<text x=\"" << format_double(x0 - 8.0) << "\" y=\"" << format_double(py(v) + 4.0)
        << "\" text-anchor=\"end\" stroke=\"none\" fill=\"#000\">"
        << format_double(std::abs(v) < 1e-12 ? 0.0 : v, 4) << "</text>\n";
  }
  const double mid_y = 0.5 * (y_top + y0);
  out << "<text x=\"" << format_double(0.5 * (x0 + x1)) << "\" y=\"" << format_double(y0 + 36.0)
      << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#000\">x [m]</text>\n";
  out << "<text x=\"" << format_double(x0 - 44.0) << "\" y=\"" << format_double(mid_y)
      << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#000\" transform=\"rotate(-90 "
      << format_double(x0 - 44.0) << ' ' << format_double(mid_y) << ")\">y [m]</text>\n";
  out << "</g>\n";

  // Data in metres; the group transform flips y and scales to pixels, so
  // stroke widths are given in metres too.
  const std::string stroke_width = format_double(kStrokePx / scale);
  const std::string dash = format_double(6.0 / scale) + " " + format_double(4.0 / scale);
  out << "<g class=\"data\" transform=\"matrix(" << format_double(scale, 17) << " 0 0 "
      << format_double(-scale, 17) << ' ' << format_double(tx, 17) << ' ' << format_double(ty, 17)
      << ")\">\n";
  out << "<polyline class=\"reference\" fill=\"none\" stroke=\"#000\" stroke-width=\""
      << stroke_width << "\" stroke-dasharray=\"" << dash << "\" points=\""
      << points_attribute(reference) << "\"/>\n";
  for (std::size_t i = 0; i < traces.size(); ++i) {
    out << "<polyline class=\"trace\" fill=\"none\" stroke=\"" << kPalette[i % kPalette.size()]
        << "\" stroke-width=\"" << stroke_width << "\" points=\""
        << points_attribute(traces[i].points) << "\"><title>" << escape(traces[i].label)
        << "</title></polyline>\n";
  }
  out << "</g>\n";

  // Legend below the axes.
  out << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  const double lx = x0;
  double ly = y0 + kAxisBand + 4.0;
  out << "<line x1=\"" << format_double(lx) << "\" y1=\"" << format_double(ly - 4.0)
      << "\" x2=\"" << format_double(lx + 24.0) << "\" y2=\"" << format_double(ly - 4.0)
      << "\" stroke=\"#000\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>"
      << "<text x=\"" << format_double(lx + 30.0) << "\" y=\"" << format_double(ly)
      << "\">reference</text>\n";
  for (std::size_t i = 0; i < traces.size(); ++i) {
    ly += kLegendRow;
    out << "<line x1=\"" << format_double(lx) << "\" y1=\"" << format_double(ly - 4.0)
        << "\" x2=\"" << format_double(lx + 24.0) << "\" y2=\"" << format_double(ly - 4.0)
        << "\" stroke=\"" << kPalette[i % kPalette.size()] << "\" stroke-width=\"2\"/>"
        << "<text x=\"" << format_double(lx + 30.0) << "\" y=\"" << format_double(ly) << "\">"
        << escape(traces[i].label) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
}

void emit_plot(const std::filesystem::path& path, std::span<const Vector2<double>> reference,
               std::span<const PlotTrace> traces, const std::string& title) {
  std::ostringstream svg;
  write_svg_plot(svg, reference, traces, title);
  write_text_file(path, svg.str());
}

}  // namespace dolphin
