#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "packsep/geom.hpp"

namespace packsep {

/// An ordered, validated set of segments together with its endpoint
/// multiset V(S): endpoints()[2i] and endpoints()[2i+1] are the two ends of
/// segment i.
class SegmentSet {
public:
    /// Throws std::invalid_argument on an empty set, mixed or too small
    /// dimensions, non-finite coordinates or zero-length segments.
    explicit SegmentSet(std::vector<Segment> segments);

    std::size_t size() const { return segments_.size(); }
    std::size_t dim() const { return dim_; }
    const Segment& operator[](std::size_t i) const { return segments_[i]; }
    std::span<const Segment> segments() const { return segments_; }
    std::span<const Point> endpoints() const { return endpoints_; }

    /// The sub-collection selected by `indices`, in that order.
    SegmentSet subset(std::span<const std::size_t> indices) const;

    /// Diagonal of the axis-aligned bounding box; an upper bound on the diameter.
    double extent() const;

    friend bool operator==(const SegmentSet& a, const SegmentSet& b) { return a.segments_ == b.segments_; }

private:
    std::vector<Segment> segments_;
    std::vector<Point> endpoints_;
    std::size_t dim_ = 0;
};

struct PackednessEstimate {
    double c_hat = 0.0;
    Point witness_center;
    double witness_radius = 0.0;
};

enum class CenterStrategy { Endpoints, Midpoints, EndpointsAndMidpoints };

/// len(S ⊓ B): total length of the segments inside the closed ball.
double intrusion(const SegmentSet& set, const Ball& ball);

/// intrusion(S, B(p, r)) / r. Throws std::invalid_argument for r <= 0.
double packedness_ratio(const SegmentSet& set, const Point& p, double r);

/// Lower bound on the packedness constant: the largest packedness_ratio over
/// candidate centers and a geometric radius grid (8 radii per octave, going
/// down from the extent of the set).
PackednessEstimate estimate_packedness(const SegmentSet& set,
                                       CenterStrategy centers = CenterStrategy::EndpointsAndMidpoints,
                                       int radii_per_center = 128);

/// #(p, x, S): number of points where the segments meet the sphere S(p, x).
long crossings_at(const SegmentSet& set, const Point& p, double x);

/// Midpoint-rule estimate of the integral of crossings_at(S, p, x) over x in [0, r].
double integrated_crossings(const SegmentSet& set, const Point& p, double r, int steps);

/// Monte Carlo mean of crossings_at(S, p, x) for x uniform in (a, b].
double mean_crossings(const SegmentSet& set, const Point& p, double a, double b, int samples,
                      std::uint64_t seed);

/// crossings_at evaluated repeatedly for one center. Segments whose distance
/// range excludes the radius are skipped without solving the quadratic.
class CrossingProfile {
public:
    CrossingProfile(const SegmentSet& set, const Point& center);
    long operator()(double x) const;

private:
    const SegmentSet* set_;
    Point center_;
    std::vector<DistanceRange> ranges_;
};

}  // namespace packsep
