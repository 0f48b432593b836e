#pragma once

// Brute-force references used only by the tests. Nothing here calls into the
// library's geometry kernels, so agreement between the two is meaningful.

#include <cstdint>
#include <random>
#include <vector>

#include "packsep/geom.hpp"
#include "packsep/packed.hpp"

namespace packsep::oracle {

/// Number of sign changes of |s(t) - c| - r over `samples` uniform steps in t.
int scanned_crossing_count(const Segment& s, const Sphere& sphere, int samples = 100000);

/// Length of s inside the ball, from the chord of the supporting line.
double chord_clip_length(const Segment& s, const Ball& ball);

struct SweepResult {
    double c_hat = 0.0;
    Point center;
    double radius = 0.0;
};

/// Exhaustive packedness sweep for planar sets: a grid_per_axis^2 lattice of
/// centers over the bounding box, and `radii` geometric radii from the box
/// diagonal down ten octaves.
SweepResult sweep_packedness(const SegmentSet& set, int grid_per_axis = 200, int radii = 64);

/// The point-centered k-th-distance minimum, by plain O(n^2 log n) sorting.
Ball point_centered_keb(const std::vector<Point>& points, std::size_t k);

/// Random planar segment soup inside [-extent, extent]^2.
SegmentSet random_segments(std::mt19937_64& rng, int n, double extent);

Point random_point(std::mt19937_64& rng, std::size_t dim, double extent);

}  // namespace packsep::oracle
