#include "packsep/geom.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace packsep {

bool Point::all_finite() const {
    return std::all_of(coords_.begin(), coords_.end(), [](double v) { return std::isfinite(v); });
}

const char* to_string(Classification c) {
    switch (c) {
        case Classification::Inside: return "inside";
        case Classification::Crossing: return "crossing";
        case Classification::Outside: return "outside";
    }
    return "?";
}

double squared_distance(const Point& p, const Point& q) {
    assert(p.dim() == q.dim());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const double d = p[i] - q[i];
        acc += d * d;
    }
    return acc;
}

double distance(const Point& p, const Point& q) { return std::sqrt(squared_distance(p, q)); }

double length(const Segment& s) { return distance(s.a, s.b); }

namespace {

// Coefficients of |a + t(b-a) - p|^2 = dd*t^2 + 2*fd*t + ff.
struct LineTerms {
    double dd = 0.0;
    double fd = 0.0;
    double ff = 0.0;
};

LineTerms line_terms(const Segment& s, const Point& p) {
    LineTerms t;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const double d = s.b[i] - s.a[i];
        const double f = s.a[i] - p[i];
        t.dd += d * d;
        t.fd += f * d;
        t.ff += f * f;
    }
    return t;
}

double closest_parameter(const LineTerms& t) {
    if (t.dd <= 0.0) return 0.0;
    return std::clamp(-t.fd / t.dd, 0.0, 1.0);
}

double distance_at(const Segment& s, const Point& p, double t) {
    double acc = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const double q = s.a[i] + t * (s.b[i] - s.a[i]) - p[i];
        acc += q * q;
    }
    return std::sqrt(acc);
}

}  // namespace

QuadraticRoots solve_quadratic(double a, double b, double c) {
    assert(a > 0.0);
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return {};
    if (disc == 0.0) {
        const double t = -b / (2.0 * a);
        return {1, t, t};
    }
    const double root = std::sqrt(disc);
    const double q = -0.5 * (b + std::copysign(root, b));
    double t1 = q / a;
    double t2 = c / q;
    if (t1 > t2) std::swap(t1, t2);
    return {2, t1, t2};
}

DistanceRange distance_range(const Segment& s, const Point& p) {
    const LineTerms t = line_terms(s, p);
    const double da = std::sqrt(t.ff);
    const double db = distance(s.b, p);
    const double dmin = std::min({distance_at(s, p, closest_parameter(t)), da, db});
    return {dmin, std::max(da, db)};
}

double clip_length(const Segment& s, const Ball& ball) {
    const LineTerms t = line_terms(s, ball.center);
    if (t.dd <= 0.0) return 0.0;
    const QuadraticRoots roots = solve_quadratic(t.dd, 2.0 * t.fd, t.ff - ball.radius * ball.radius);
    if (roots.count < 2) return 0.0;
    const double lo = std::max(0.0, roots.lo);
    const double hi = std::min(1.0, roots.hi);
    if (hi <= lo) return 0.0;
    const double len = std::sqrt(t.dd);
    return std::min((hi - lo) * len, std::min(len, 2.0 * ball.radius));
}

int crossing_count(const Segment& s, const Sphere& sphere) {
    const LineTerms t = line_terms(s, sphere.center);
    const double r = sphere.radius;
    const double eps = sphere_tolerance(r);
    const double da = std::sqrt(t.ff);
    if (t.dd <= 0.0) return std::abs(da - r) <= eps ? 1 : 0;

    const double dmin = distance_at(s, sphere.center, closest_parameter(t));
    if (dmin > r + eps) return 0;
    // The sphere only touches the segment: tangency or a grazing endpoint.
    if (dmin >= r - eps) return 1;

    // The segment enters the open ball, so the line meets the sphere twice.
    const QuadraticRoots roots = solve_quadratic(t.dd, 2.0 * t.fd, t.ff - r * r);
    const double db = distance(s.b, sphere.center);
    int count = 0;
    if (roots.lo >= 0.0 || da >= r - eps) ++count;
    if (roots.hi <= 1.0 || db >= r - eps) ++count;
    return count;
}

Classification classify(const Segment& s, const Sphere& sphere) {
    const DistanceRange range = distance_range(s, sphere.center);
    const double eps = sphere_tolerance(sphere.radius);
    if (range.max < sphere.radius - eps) return Classification::Inside;
    if (range.min > sphere.radius + eps) return Classification::Outside;
    return Classification::Crossing;
}

}  // namespace packsep
