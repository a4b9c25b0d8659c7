// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 parcs contributors
//
// Deterministic SVG plots. Inputs are plain data already parsed from CSV
// files; nothing here touches solver or experiment state, so a plot can be
// regenerated from archived outputs alone.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "common.hpp"

namespace parcs {

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;  // NaN entries break the polyline
};

namespace detail {

inline std::string svg_num(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

inline void svg_open(std::string& out, int width, int height) {
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         ' ' + std::to_string(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
}

inline void svg_text(std::string& out, double x, double y, const std::string& text,
                     const std::string& anchor, int size) {
  out += "<text x=\"" + svg_num(x) + "\" y=\"" + svg_num(y) + "\" font-family=\"monospace\" " +
         "font-size=\"" + std::to_string(size) + "\" text-anchor=\"" + anchor + "\">" + text +
         "</text>\n";
}

inline const char* series_color(std::size_t index) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  return palette[index % (sizeof(palette) / sizeof(palette[0]))];
}

}  // namespace detail

// Line chart with linear axes, tick labels, and a legend.
inline std::string svg_line_chart(const std::string& title, const std::string& x_label,
                                  const std::string& y_label,
                                  const std::vector<PlotSeries>& series) {
  require(!series.empty(), "need at least one series");
  const int width = 640;
  const int height = 480;
  const double left = 70, right = 610, top = 50, bottom = 420;

  double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
  double y_min = x_min, y_max = -x_min;
  for (const auto& s : series) {
    require(s.x.size() == s.y.size(), "series coordinate lengths differ");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (std::isnan(s.x[i]) || std::isnan(s.y[i])) continue;
      x_min = std::min(x_min, s.x[i]);
      x_max = std::max(x_max, s.x[i]);
      y_min = std::min(y_min, s.y[i]);
      y_max = std::max(y_max, s.y[i]);
    }
  }
  if (!(x_min <= x_max)) {  // every point was NaN
    x_min = 0.0;
    x_max = 1.0;
    y_min = 0.0;
    y_max = 1.0;
  }
  if (x_max == x_min) x_max = x_min + 1.0;
  if (y_max == y_min) y_max = y_min + 1.0;
  const double y_pad = 0.05 * (y_max - y_min);
  y_min -= y_pad;
  y_max += y_pad;

  auto map_x = [&](double v) { return left + (v - x_min) / (x_max - x_min) * (right - left); };
  auto map_y = [&](double v) { return bottom - (v - y_min) / (y_max - y_min) * (bottom - top); };

  std::string out;
  detail::svg_open(out, width, height);
  detail::svg_text(out, (left + right) / 2, 28, title, "middle", 16);
  detail::svg_text(out, (left + right) / 2, 460, x_label, "middle", 13);
  out += "<g transform=\"translate(18," + detail::svg_num((top + bottom) / 2) +
         ") rotate(-90)\">\n";
  detail::svg_text(out, 0, 0, y_label, "middle", 13);
  out += "</g>\n";
  out += "<rect x=\"" + detail::svg_num(left) + "\" y=\"" + detail::svg_num(top) + "\" width=\"" +
         detail::svg_num(right - left) + "\" height=\"" + detail::svg_num(bottom - top) +
         "\" fill=\"none\" stroke=\"#000000\"/>\n";

  for (int tick = 0; tick <= 4; ++tick) {
    const double fx = x_min + (x_max - x_min) * tick / 4.0;
    const double fy = y_min + (y_max - y_min) * tick / 4.0;
    const double px = map_x(fx);
    const double py = map_y(fy);
    out += "<line x1=\"" + detail::svg_num(px) + "\" y1=\"" + detail::svg_num(bottom) +
           "\" x2=\"" + detail::svg_num(px) + "\" y2=\"" + detail::svg_num(bottom + 6) +
           "\" stroke=\"#000000\"/>\n";
    detail::svg_text(out, px, bottom + 20, detail::svg_num(fx), "middle", 11);
    out += "<line x1=\"" + detail::svg_num(left - 6) + "\" y1=\"" + detail::svg_num(py) +
           "\" x2=\"" + detail::svg_num(left) + "\" y2=\"" + detail::svg_num(py) +
           "\" stroke=\"#000000\"/>\n";
    detail::svg_text(out, left - 10, py + 4, detail::svg_num(fy), "end", 11);
  }

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    std::string points;
    auto flush = [&]() {
      if (!points.empty()) {
        out += "<polyline fill=\"none\" stroke=\"" + std::string(detail::series_color(k)) +
               "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
        points.clear();
      }
    };
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (std::isnan(s.x[i]) || std::isnan(s.y[i])) {
        flush();
        continue;
      }
      points += detail::svg_num(map_x(s.x[i])) + "," + detail::svg_num(map_y(s.y[i])) + " ";
      out += "<circle cx=\"" + detail::svg_num(map_x(s.x[i])) + "\" cy=\"" +
             detail::svg_num(map_y(s.y[i])) + "\" r=\"3\" fill=\"" +
             std::string(detail::series_color(k)) + "\"/>\n";
    }
    flush();
    const double ly = top + 18.0 * (static_cast<double>(k) + 1.0);
    out += "<line x1=\"" + detail::svg_num(right - 150) + "\" y1=\"" + detail::svg_num(ly - 4) +
           "\" x2=\"" + detail::svg_num(right - 120) + "\" y2=\"" + detail::svg_num(ly - 4) +
           "\" stroke=\"" + std::string(detail::series_color(k)) + "\" stroke-width=\"2\"/>\n";
    detail::svg_text(out, right - 114, ly, s.name, "start", 11);
  }

  out += "</svg>\n";
  return out;
}

// Heatmap over a regular grid; values in [0,1] shade from dark to light.
inline std::string svg_heatmap(const std::string& title, int rows, int cols,
                               const std::vector<double>& values,
                               const std::string& x_label, const std::string& y_label) {
  require(rows >= 1 && cols >= 1, "grid must be nonempty");
  require(values.size() == static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
          "value count does not match grid shape");
  const int width = 560;
  const int height = 560;
  const double left = 70, top = 50, right = 510, bottom = 490;
  const double cell_w = (right - left) / cols;
  const double cell_h = (bottom - top) / rows;

  std::string out;
  detail::svg_open(out, width, height);
  detail::svg_text(out, (left + right) / 2, 28, title, "middle", 16);
  detail::svg_text(out, (left + right) / 2, 530, x_label, "middle", 13);
  out += "<g transform=\"translate(18," + detail::svg_num((top + bottom) / 2) +
         ") rotate(-90)\">\n";
  detail::svg_text(out, 0, 0, y_label, "middle", 13);
  out += "</g>\n";

  for (int iy = 0; iy < rows; ++iy) {
    for (int ix = 0; ix < cols; ++ix) {
      const double v =
          std::clamp(values[static_cast<std::size_t>(iy) * cols + ix], 0.0, 1.0);
      // Low success: deep blue; high success: warm yellow.
      const int r = static_cast<int>(std::lround(68 + v * (253 - 68)));
      const int g = static_cast<int>(std::lround(1 + v * (231 - 1)));
      const int b = static_cast<int>(std::lround(84 + v * (37 - 84)));
      char color[8];
      std::snprintf(color, sizeof(color), "#%02x%02x%02x", r, g, b);
      // Row 0 is the smallest sparsity: draw it at the bottom.
      const double x0 = left + ix * cell_w;
      const double y0 = bottom - (iy + 1) * cell_h;
      out += "<rect x=\"" + detail::svg_num(x0) + "\" y=\"" + detail::svg_num(y0) +
             "\" width=\"" + detail::svg_num(cell_w) + "\" height=\"" + detail::svg_num(cell_h) +
             "\" fill=\"" + color + "\"/>\n";
    }
  }
  out += "<rect x=\"" + detail::svg_num(left) + "\" y=\"" + detail::svg_num(top) + "\" width=\"" +
         detail::svg_num(right - left) + "\" height=\"" + detail::svg_num(bottom - top) +
         "\" fill=\"none\" stroke=\"#000000\"/>\n";
  detail::svg_text(out, left, 530 - 18, "0", "middle", 11);
  detail::svg_text(out, right, 530 - 18, "1", "middle", 11);
  out += "</svg>\n";
  return out;
}

}  // namespace parcs
