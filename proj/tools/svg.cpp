#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "kgwell/potential.hpp"

namespace kgwell::cli {

namespace {

constexpr double width = 800.0;
constexpr double height = 600.0;
constexpr double margin = 50.0;

const char* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

} // namespace

std::string render_svg(double m_bar, double v_bar, const std::vector<BoundState>& states,
                       double y_plot) {
    double e_lo = -v_bar;
    double e_hi = 0.0;
    for (const auto& s : states) {
        e_lo = std::min(e_lo, s.e_bar);
        e_hi = std::max(e_hi, s.e_bar);
    }
    // Amplitude of the drawn curves: a fraction of the closest level spacing.
    double spacing = std::max(0.25 * (e_hi - e_lo), 0.05 * m_bar);
    for (std::size_t i = 1; i < states.size(); ++i) {
        const double gap = states[i].e_bar - states[i - 1].e_bar;
        if (gap > 0.0) spacing = std::min(spacing, gap);
    }
    const double amplitude = 0.45 * spacing;
    const double pad = amplitude + 0.05 * (e_hi - e_lo + 1e-12);
    e_lo -= pad;
    e_hi += pad;

    const auto px = [&](double y) { return margin + (y + y_plot) / (2.0 * y_plot) * (width - 2 * margin); };
    const auto py = [&](double e) { return height - margin - (e - e_lo) / (e_hi - e_lo) * (height - 2 * margin); };

    std::string out;
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
        "viewBox=\"0 0 {:.0f} {:.0f}\">\n",
        width, height, width, height);
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += fmt::format("<text x=\"{:.0f}\" y=\"30\" font-family=\"sans-serif\" font-size=\"16\">"
                       "m = {:.6g}, V0 = {:.6g}, {} state(s)</text>\n",
                       margin, m_bar, v_bar, states.size());
    out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#999\"/>\n",
                       px(-y_plot), py(0.0), px(y_plot), py(0.0));

    const TriangularWell well(v_bar);
    out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (double y : {-y_plot, -1.0, 0.0, 1.0, y_plot}) {
        out += fmt::format("{:.2f},{:.2f} ", px(y), py(potential_value(y, well)));
    }
    out += "\"/>\n";

    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& s = states[i];
        const char* colour = palette[i % std::size(palette)];
        double peak = 0.0;
        for (const auto& smp : s.samples) peak = std::max(peak, std::abs(smp.psi));
        const double scale = peak > 0.0 ? amplitude / peak : 0.0;

        out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" "
                           "stroke=\"{}\" stroke-dasharray=\"4 3\"/>\n",
                           px(-y_plot), py(s.e_bar), px(y_plot), py(s.e_bar), colour);
        out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"", colour);
        for (const auto& smp : s.samples) {
            out += fmt::format("{:.2f},{:.2f} ", px(smp.y), py(s.e_bar + scale * smp.psi));
        }
        out += "\"/>\n";
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"12\" "
                           "fill=\"{}\">n={} {} E={:.6g}</text>\n",
                           px(y_plot) - 150.0, py(s.e_bar) - 4.0, colour, s.n, to_string(s.parity), s.e_bar);
    }
    out += "</svg>\n";
    return out;
}

} // namespace kgwell::cli
