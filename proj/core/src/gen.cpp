#include "packsep/gen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "packsep/random.hpp"

namespace packsep {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

SegmentSet gen_grid(int rows, int cols, double spacing) {
    require(rows >= 1 && cols >= 1, "gen_grid: rows and cols must be >= 1");
    require(spacing > 0.0 && std::isfinite(spacing), "gen_grid: spacing must be positive");
    std::vector<Segment> out;
    out.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const double x = j * spacing;
            const double y = i * spacing;
            out.push_back({Point{x, y}, Point{x + 1.0, y}});
        }
    }
    return SegmentSet(std::move(out));
}

SegmentSet gen_star(int spokes, double length) {
    require(spokes >= 1, "gen_star: spokes must be >= 1");
    require(length > 0.0 && std::isfinite(length), "gen_star: length must be positive");
    std::vector<Segment> out;
    out.reserve(static_cast<std::size_t>(spokes));
    for (int i = 0; i < spokes; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / spokes;
        out.push_back({Point{0.0, 0.0}, Point{length * std::cos(angle), length * std::sin(angle)}});
    }
    return SegmentSet(std::move(out));
}

SegmentSet gen_koch(int depth, double scale) {
    require(depth >= 0 && depth <= 8, "gen_koch: depth must be in [0, 8]");
    require(scale > 0.0 && std::isfinite(scale), "gen_koch: scale must be positive");

    // Clockwise triangle, so every bump points away from the interior.
    const double h = scale * std::sqrt(3.0) / 2.0;
    std::vector<Point> ring{Point{0.0, 0.0}, Point{0.5 * scale, h}, Point{scale, 0.0}};

    const double c = 0.5;
    const double s = std::sqrt(3.0) / 2.0;  // left turn by 60 degrees
    for (int level = 0; level < depth; ++level) {
        std::vector<Point> next;
        next.reserve(ring.size() * 4);
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const Point& p = ring[i];
            const Point& q = ring[(i + 1) % ring.size()];
            const double dx = (q[0] - p[0]) / 3.0;
            const double dy = (q[1] - p[1]) / 3.0;
            const Point a{p[0] + dx, p[1] + dy};
            const Point b{p[0] + 2.0 * dx, p[1] + 2.0 * dy};
            const Point tip{a[0] + c * dx - s * dy, a[1] + s * dx + c * dy};
            next.push_back(p);
            next.push_back(a);
            next.push_back(tip);
            next.push_back(b);
        }
        ring = std::move(next);
    }

    std::vector<Segment> out;
    out.reserve(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i) out.push_back({ring[i], ring[(i + 1) % ring.size()]});
    return SegmentSet(std::move(out));
}

SegmentSet gen_polyline_walk(int steps, double step_len, std::uint64_t seed) {
    require(steps >= 1, "gen_polyline_walk: steps must be >= 1");
    require(step_len > 0.0 && std::isfinite(step_len), "gen_polyline_walk: step_len must be positive");
    Rng rng(seed);
    std::vector<Segment> out;
    out.reserve(static_cast<std::size_t>(steps));
    Point cur{0.0, 0.0};
    for (int i = 0; i < steps; ++i) {
        const double angle = 2.0 * std::numbers::pi * rng.uniform();
        Point next{cur[0] + step_len * std::cos(angle), cur[1] + step_len * std::sin(angle)};
        out.push_back({cur, next});
        cur = std::move(next);
    }
    return SegmentSet(std::move(out));
}

}  // namespace packsep
