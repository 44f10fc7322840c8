#include "netbounds/render.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace netbounds {

namespace {

struct Point {
    double x;
    double y;
};

// Position 1 at the top, later positions counterclockwise on screen.
Point on_circle(double turns, double radius) {
    const double angle = std::numbers::pi / 2 + 2 * std::numbers::pi * turns;
    return {radius * std::cos(angle), -radius * std::sin(angle)};
}

std::string num(double v) {
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << v;
    return s.str();
}

}  // namespace

std::string render_net_svg(const ChordDiagram& g, int k) {
    const int n = g.points();
    if (k != 0 && (k < 1 || k > 2 * g.d() - 4))
        throw std::invalid_argument("render: k must satisfy 1 <= k <= 2d-4");

    const double radius = 100.0;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-130 -130 260 260\">\n";
    svg << "  <rect x=\"-130\" y=\"-130\" width=\"260\" height=\"260\" fill=\"white\"/>\n";

    if (k > 0) {
        // Marked points: s sits between positions 2d-2 and 1, r between
        // positions 2d-2-k and 2d-1-k; the arc (r,s) holds the last k
        // positions.
        const double s_turns = -0.5 / n;
        const double r_turns = -(static_cast<double>(k) + 0.5) / n;
        const Point arc_from = on_circle(r_turns, radius);
        const Point arc_to = on_circle(s_turns, radius);
        svg << "  <path d=\"M " << num(arc_from.x) << " " << num(arc_from.y) << " A " << num(radius)
            << " " << num(radius) << " 0 " << (k + 1 > n / 2 ? 1 : 0) << " 1 " << num(arc_to.x)
            << " " << num(arc_to.y) << "\" fill=\"none\" stroke=\"#fbbf24\" stroke-width=\"8\""
            << " stroke-linecap=\"round\" opacity=\"0.6\"/>\n";
        for (const auto& [turns, label] : {std::pair{r_turns, "r"}, std::pair{s_turns, "s"}}) {
            const Point tick_in = on_circle(turns, radius - 6);
            const Point tick_out = on_circle(turns, radius + 6);
            const Point text = on_circle(turns, radius + 18);
            svg << "  <line x1=\"" << num(tick_in.x) << "\" y1=\"" << num(tick_in.y) << "\" x2=\""
                << num(tick_out.x) << "\" y2=\"" << num(tick_out.y)
                << "\" stroke=\"#b45309\" stroke-width=\"2\"/>\n";
            svg << "  <text x=\"" << num(text.x) << "\" y=\"" << num(text.y)
                << "\" font-size=\"12\" font-style=\"italic\" fill=\"#b45309\""
                << " text-anchor=\"middle\" dominant-baseline=\"middle\">" << label << "</text>\n";
        }
    }

    svg << "  <circle cx=\"0\" cy=\"0\" r=\"" << num(radius)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    for (const auto& [a, b] : g.chords()) {
        const Point pa = on_circle(static_cast<double>(a - 1) / n, radius);
        const Point pb = on_circle(static_cast<double>(b - 1) / n, radius);
        svg << "  <line x1=\"" << num(pa.x) << "\" y1=\"" << num(pa.y) << "\" x2=\"" << num(pb.x)
            << "\" y2=\"" << num(pb.y) << "\" stroke=\"#1d4ed8\" stroke-width=\"1.5\"/>\n";
    }

    for (int p = 1; p <= n; ++p) {
        const double turns = static_cast<double>(p - 1) / n;
        const Point v = on_circle(turns, radius);
        const Point t = on_circle(turns, radius + 12);
        svg << "  <circle cx=\"" << num(v.x) << "\" cy=\"" << num(v.y) << "\" r=\""
            << (p == 1 ? 5 : 3) << "\" fill=\"" << (p == 1 ? "#dc2626" : "black") << "\"/>\n";
        svg << "  <text x=\"" << num(t.x) << "\" y=\"" << num(t.y)
            << "\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << p
            << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace netbounds
