#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace packsep {

/// A point in R^d. The dimension is carried at runtime; every point of one
/// dataset has the same dimension.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {}
    Point(std::initializer_list<double> coords) : coords_(coords) {}

    std::size_t dim() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    double& operator[](std::size_t i) { return coords_[i]; }
    std::span<const double> coords() const { return coords_; }

    bool all_finite() const;

    friend bool operator==(const Point&, const Point&) = default;
    /// Lexicographic order on coordinates; used for deterministic tie-breaks.
    friend auto operator<=>(const Point& a, const Point& b) { return a.coords_ <=> b.coords_; }

private:
    std::vector<double> coords_;
};

struct Segment {
    Point a;
    Point b;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Closed ball.
struct Ball {
    Point center;
    double radius = 0.0;
};

struct Sphere {
    Point center;
    double radius = 0.0;
};

enum class Classification { Inside, Crossing, Outside };

const char* to_string(Classification c);

struct DistanceRange {
    double min = 0.0;
    double max = 0.0;
};

double squared_distance(const Point& p, const Point& q);
double distance(const Point& p, const Point& q);

double length(const Segment& s);

/// Closest distance from p to any point of s, and the larger endpoint distance.
DistanceRange distance_range(const Segment& s, const Point& p);

/// Length of s intersected with the closed ball.
double clip_length(const Segment& s, const Ball& ball);

/// Number of distinct points of s on the sphere (0, 1 or 2). Tangency and an
/// endpoint lying on the sphere each count once.
int crossing_count(const Segment& s, const Sphere& sphere);

Classification classify(const Segment& s, const Sphere& sphere);

/// Tolerance for every on-sphere decision at the given radius.
inline double sphere_tolerance(double radius) { return 1e-9 * (radius > 1.0 ? radius : 1.0); }

struct QuadraticRoots {
    int count = 0;  // 0, 1 (double root) or 2
    double lo = 0.0;
    double hi = 0.0;
};

/// Real roots of a*t^2 + b*t + c with a > 0, using the cancellation-free form.
QuadraticRoots solve_quadratic(double a, double b, double c);

}  // namespace packsep
