#include "packsep/svg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "packsep/io.hpp"

namespace packsep {

namespace {

const char* color_of(Classification c) {
    switch (c) {
        case Classification::Inside: return "#1f77b4";
        case Classification::Crossing: return "#d62728";
        case Classification::Outside: return "#7f7f7f";
    }
    return "#000000";
}

}  // namespace

std::string render_svg(const SegmentSet& set, const SeparatorResult* result, int canvas) {
    if (set.dim() != 2) throw std::invalid_argument("svg: only planar segment sets can be rendered");
    if (canvas < 16) throw std::invalid_argument("svg: canvas too small");

    double x0 = set.endpoints().front()[0], x1 = x0;
    double y0 = set.endpoints().front()[1], y1 = y0;
    auto include = [&](double x, double y) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    };
    for (const Point& p : set.endpoints()) include(p[0], p[1]);
    if (result) {
        const Sphere& s = result->sphere;
        include(s.center[0] - s.radius, s.center[1] - s.radius);
        include(s.center[0] + s.radius, s.center[1] + s.radius);
    }
    const double span = std::max({x1 - x0, y1 - y0, 1e-12});
    const double margin = 0.03 * span;
    const double scale = canvas / (span + 2.0 * margin);
    // SVG y grows downwards.
    auto sx = [&](double x) { return format_double((x - x0 + margin) * scale); };
    auto sy = [&](double y) { return format_double((y1 - y + margin) * scale); };

    std::vector<Classification> labels(set.size(), Classification::Outside);
    if (result) {
        for (std::size_t i : result->inside) labels.at(i) = Classification::Inside;
        for (std::size_t i : result->crossing) labels.at(i) = Classification::Crossing;
        for (std::size_t i : result->outside) labels.at(i) = Classification::Outside;
    }

    const double width = (x1 - x0 + 2.0 * margin) * scale;
    const double height = (y1 - y0 + 2.0 * margin) * scale;
    const double stroke = std::max(0.5, canvas / 800.0);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(width) << "\" height=\""
        << format_double(height) << "\" viewBox=\"0 0 " << format_double(width) << ' ' << format_double(height)
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < set.size(); ++i) {
        const Segment& s = set[i];
        out << "<line x1=\"" << sx(s.a[0]) << "\" y1=\"" << sy(s.a[1]) << "\" x2=\"" << sx(s.b[0]) << "\" y2=\""
            << sy(s.b[1]) << "\" stroke=\"" << (result ? color_of(labels[i]) : "#000000") << "\" stroke-width=\""
            << stroke << "\"/>\n";
    }
    if (result) {
        const Sphere& s = result->sphere;
        out << "<circle cx=\"" << sx(s.center[0]) << "\" cy=\"" << sy(s.center[1]) << "\" r=\""
            << format_double(s.radius * scale) << "\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"" << 2 * stroke
            << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace packsep
