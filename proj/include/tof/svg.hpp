#pragma once

// Static SVG line plots: axes, ticks, legend, several series. A NaN
// sample splits its series into separate segments, so unconverged points
// show up as gaps instead of interpolated lines. No scripting, no
// external assets; the files render anywhere.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "tof/csv.hpp"

namespace tof {

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f77b4";
    double stroke_width = 1.6;
    bool dashed = false;
};

inline std::string svg_palette(std::size_t i) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                   "#9467bd", "#ff7f0e", "#8c564b",
                                   "#17becf"};
    return colors[i % (sizeof colors / sizeof colors[0])];
}

namespace detail {

inline std::string svg_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '&')
            out += "&amp;";
        else if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else
            out += c;
    }
    return out;
}

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// Largest of 1/2/5 x 10^k not above the raw spacing target.
inline double nice_step(double span, int target_ticks) {
    const double raw = span / std::max(1, target_ticks);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    if (raw / mag >= 5.0) return 5.0 * mag;
    if (raw / mag >= 2.0) return 2.0 * mag;
    return mag;
}

}  // namespace detail

inline void write_line_svg(const std::string& path, const std::string& title,
                           const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<SvgSeries>& series,
                           int width = 880, int height = 540) {
    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (const SvgSeries& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            x_lo = std::min(x_lo, s.x[i]);
            x_hi = std::max(x_hi, s.x[i]);
            y_lo = std::min(y_lo, s.y[i]);
            y_hi = std::max(y_hi, s.y[i]);
        }
    if (!(x_lo < x_hi)) {
        x_lo -= 1.0;
        x_hi += 1.0;
    }
    if (!(y_lo < y_hi)) {
        y_lo -= 1.0;
        y_hi += 1.0;
    }
    y_lo = std::min(y_lo, 0.0);  // densities read best anchored at zero
    const double y_pad = 0.06 * (y_hi - y_lo);
    y_hi += y_pad;

    const double ml = 70, mr = 18, mt = 40, mb = 52;
    const double pw = width - ml - mr, ph = height - mt - mb;
    const auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * pw; };
    const auto py = [&](double y) {
        return mt + ph - (y - y_lo) / (y_hi - y_lo) * ph;
    };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">"
        << detail::svg_escape(title) << "</text>\n";

    // gridlines and tick labels
    const double xs = detail::nice_step(x_hi - x_lo, 7);
    const double ys = detail::nice_step(y_hi - y_lo, 6);
    out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (double x = std::ceil(x_lo / xs) * xs; x <= x_hi + 1e-9 * xs; x += xs) {
        out << "<line x1=\"" << detail::svg_num(px(x)) << "\" y1=\""
            << detail::svg_num(mt) << "\" x2=\"" << detail::svg_num(px(x))
            << "\" y2=\"" << detail::svg_num(mt + ph)
            << "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << detail::svg_num(px(x)) << "\" y=\""
            << detail::svg_num(mt + ph + 16) << "\" text-anchor=\"middle\">"
            << detail::tick_label(x) << "</text>\n";
    }
    for (double y = std::ceil(y_lo / ys) * ys; y <= y_hi + 1e-9 * ys; y += ys) {
        out << "<line x1=\"" << detail::svg_num(ml) << "\" y1=\""
            << detail::svg_num(py(y)) << "\" x2=\"" << detail::svg_num(ml + pw)
            << "\" y2=\"" << detail::svg_num(py(y))
            << "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << detail::svg_num(ml - 6) << "\" y=\""
            << detail::svg_num(py(y) + 4) << "\" text-anchor=\"end\">"
            << detail::tick_label(y) << "</text>\n";
    }
    out << "</g>\n";

    // axes frame
    out << "<rect x=\"" << detail::svg_num(ml) << "\" y=\""
        << detail::svg_num(mt) << "\" width=\"" << detail::svg_num(pw)
        << "\" height=\"" << detail::svg_num(ph)
        << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\">"
        << detail::svg_escape(x_label) << "</text>\n";
    out << "<text x=\"18\" y=\"" << mt + ph / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\" transform=\"rotate(-90 18 "
        << mt + ph / 2 << ")\">" << detail::svg_escape(y_label)
        << "</text>\n";

    // series, split at non-finite samples
    for (const SvgSeries& s : series) {
        std::string seg;
        int points = 0;
        const auto flush = [&] {
            if (points >= 2)
                out << "<polyline fill=\"none\" stroke=\"" << s.color
                    << "\" stroke-width=\"" << s.stroke_width << "\""
                    << (s.dashed ? " stroke-dasharray=\"6 4\"" : "")
                    << " points=\"" << seg << "\"/>\n";
            seg.clear();
            points = 0;
        };
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                flush();
                continue;
            }
            seg += detail::svg_num(px(s.x[i])) + "," +
                   detail::svg_num(py(s.y[i])) + " ";
            ++points;
        }
        flush();
    }

    // legend, top right
    out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double lx = ml + pw - 170, ly = mt + 14 + 18.0 * i;
        out << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\""
            << lx + 26 << "\" y2=\"" << ly << "\" stroke=\""
            << series[i].color << "\" stroke-width=\""
            << series[i].stroke_width << "\""
            << (series[i].dashed ? " stroke-dasharray=\"6 4\"" : "")
            << "/>\n";
        out << "<text x=\"" << lx + 32 << "\" y=\"" << ly + 4 << "\">"
            << detail::svg_escape(series[i].label) << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    if (!out) throw IoFailure("write failed: " + path);
}

}  // namespace tof
