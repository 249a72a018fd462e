#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace gphase::svg {

struct Series {
    std::string label;
    std::vector<double> x, y;
    std::string color = "#c62828";
    bool dashed = false;
};

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Tick spacing of the 1/2/5 * 10^n family covering `span` with ~n_target steps.
inline double nice_step(double span, int n_target) {
    const double raw = span / std::max(1, n_target);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    if (r < 1.5) return mag;
    if (r < 3.5) return 2.0 * mag;
    if (r < 7.5) return 5.0 * mag;
    return 10.0 * mag;
}

} // namespace detail

// Minimal self-contained vector plot: axes, 1/2/5 ticks, polyline per series,
// legend. No external plotting dependency.
inline void write_line_plot(std::ostream& os, const std::string& title, const std::string& xlabel,
                            const std::string& ylabel, const std::vector<Series>& series) {
    const double W = 720, H = 480, ml = 76, mr = 24, mt = 44, mb = 56;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (first) {
                xmin = xmax = s.x[i];
                ymin = ymax = s.y[i];
                first = false;
            }
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    if (xmax - xmin <= 0) xmax = xmin + 1;
    if (ymax - ymin <= 0) {
        ymax = ymin + (std::abs(ymin) > 0 ? std::abs(ymin) : 1.0);
        ymin -= (ymax - ymin);
    }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto X = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto Y = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
          "font-family=\"sans-serif\">"
       << title << "</text>\n";

    // axes frame
    os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << (W - ml - mr) << "\" height=\""
       << (H - mt - mb) << "\" fill=\"none\" stroke=\"black\"/>\n";

    const double xs = detail::nice_step(xmax - xmin, 6);
    for (double t = std::ceil(xmin / xs) * xs; t <= xmax + 1e-12 * xs; t += xs) {
        os << "<line x1=\"" << detail::num(X(t)) << "\" y1=\"" << (H - mb) << "\" x2=\""
           << detail::num(X(t)) << "\" y2=\"" << (H - mb + 5) << "\" stroke=\"black\"/>\n"
           << "<text x=\"" << detail::num(X(t)) << "\" y=\"" << (H - mb + 20)
           << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">"
           << detail::num(t) << "</text>\n";
    }
    const double ys = detail::nice_step(ymax - ymin, 6);
    for (double t = std::ceil(ymin / ys) * ys; t <= ymax + 1e-12 * ys; t += ys) {
        os << "<line x1=\"" << (ml - 5) << "\" y1=\"" << detail::num(Y(t)) << "\" x2=\"" << ml
           << "\" y2=\"" << detail::num(Y(t)) << "\" stroke=\"black\"/>\n"
           << "<text x=\"" << (ml - 8) << "\" y=\"" << detail::num(Y(t) + 4)
           << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << detail::num(t)
           << "</text>\n";
    }
    os << "<text x=\"" << (ml + (W - ml - mr) / 2) << "\" y=\"" << (H - 14)
       << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << xlabel
       << "</text>\n";
    os << "<text x=\"18\" y=\"" << (mt + (H - mt - mb) / 2)
       << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" transform=\"rotate(-90 "
          "18 "
       << (mt + (H - mt - mb) / 2) << ")\">" << ylabel << "</text>\n";

    for (const auto& s : series) {
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.6\"";
        if (s.dashed) os << " stroke-dasharray=\"7,4\"";
        os << " points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            os << detail::num(X(s.x[i])) << ',' << detail::num(Y(s.y[i])) << ' ';
        }
        os << "\"/>\n";
    }

    double ly = mt + 16;
    for (const auto& s : series) {
        os << "<line x1=\"" << (W - mr - 150) << "\" y1=\"" << ly << "\" x2=\"" << (W - mr - 110)
           << "\" y2=\"" << ly << "\" stroke=\"" << s.color << "\" stroke-width=\"1.6\"";
        if (s.dashed) os << " stroke-dasharray=\"7,4\"";
        os << "/>\n<text x=\"" << (W - mr - 104) << "\" y=\"" << (ly + 4)
           << "\" font-size=\"12\" font-family=\"sans-serif\">" << s.label << "</text>\n";
        ly += 18;
    }
    os << "</svg>\n";
}

} // namespace gphase::svg
