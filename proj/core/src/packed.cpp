#include "packsep/packed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "packsep/random.hpp"

namespace packsep {

SegmentSet::SegmentSet(std::vector<Segment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) throw std::invalid_argument("segment set is empty");
    dim_ = segments_.front().a.dim();
    if (dim_ < 2) throw std::invalid_argument("dimension must be at least 2");
    endpoints_.reserve(2 * segments_.size());
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const Segment& s = segments_[i];
        if (s.a.dim() != dim_ || s.b.dim() != dim_)
            throw std::invalid_argument("segment " + std::to_string(i) + ": dimension mismatch");
        if (!s.a.all_finite() || !s.b.all_finite())
            throw std::invalid_argument("segment " + std::to_string(i) + ": non-finite coordinate");
        if (!(length(s) > 0.0))
            throw std::invalid_argument("segment " + std::to_string(i) + ": zero length");
        endpoints_.push_back(s.a);
        endpoints_.push_back(s.b);
    }
}

SegmentSet SegmentSet::subset(std::span<const std::size_t> indices) const {
    std::vector<Segment> picked;
    picked.reserve(indices.size());
    for (std::size_t i : indices) picked.push_back(segments_.at(i));
    return SegmentSet(std::move(picked));
}

double SegmentSet::extent() const {
    double acc = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) {
        double lo = endpoints_.front()[k];
        double hi = lo;
        for (const Point& p : endpoints_) {
            lo = std::min(lo, p[k]);
            hi = std::max(hi, p[k]);
        }
        acc += (hi - lo) * (hi - lo);
    }
    return std::sqrt(acc);
}

double intrusion(const SegmentSet& set, const Ball& ball) {
    double total = 0.0;
    for (const Segment& s : set.segments()) total += clip_length(s, ball);
    return total;
}

double packedness_ratio(const SegmentSet& set, const Point& p, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("packedness_ratio: radius must be positive");
    return intrusion(set, Ball{p, r}) / r;
}

namespace {

std::vector<Point> candidate_centers(const SegmentSet& set, CenterStrategy strategy) {
    std::vector<Point> centers;
    if (strategy != CenterStrategy::Midpoints) {
        centers.assign(set.endpoints().begin(), set.endpoints().end());
    }
    if (strategy != CenterStrategy::Endpoints) {
        for (const Segment& s : set.segments()) {
            std::vector<double> mid(set.dim());
            for (std::size_t k = 0; k < set.dim(); ++k) mid[k] = 0.5 * (s.a[k] + s.b[k]);
            centers.emplace_back(std::move(mid));
        }
    }
    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
    return centers;
}

}  // namespace

PackednessEstimate estimate_packedness(const SegmentSet& set, CenterStrategy strategy, int radii_per_center) {
    if (radii_per_center < 1) throw std::invalid_argument("estimate_packedness: radii_per_center must be >= 1");

    const double top = set.extent();
    const auto count = static_cast<std::size_t>(radii_per_center);
    std::vector<double> radii(count);
    for (std::size_t j = 0; j < count; ++j) radii[j] = top * std::exp2(-static_cast<double>(j) / 8.0);

    std::vector<double> lengths(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) lengths[i] = length(set[i]);

    PackednessEstimate best;
    best.witness_center = set.endpoints().front();
    best.witness_radius = radii.front();

    std::vector<double> full_bucket(count + 1);
    std::vector<double> partial(count);
    for (const Point& center : candidate_centers(set, strategy)) {
        std::fill(full_bucket.begin(), full_bucket.end(), 0.0);
        std::fill(partial.begin(), partial.end(), 0.0);
        for (std::size_t i = 0; i < set.size(); ++i) {
            const DistanceRange range = distance_range(set[i], center);
            // radii[0, covered) contain the whole segment; radii[covered, touched) cut it.
            const auto covered = static_cast<std::size_t>(
                std::partition_point(radii.begin(), radii.end(), [&](double r) { return r >= range.max; }) -
                radii.begin());
            const auto touched = static_cast<std::size_t>(
                std::partition_point(radii.begin(), radii.end(), [&](double r) { return r > range.min; }) -
                radii.begin());
            full_bucket[covered] += lengths[i];
            for (std::size_t j = covered; j < touched; ++j) partial[j] += clip_length(set[i], Ball{center, radii[j]});
        }
        double full = 0.0;
        for (std::size_t j = count; j-- > 0;) {
            full += full_bucket[j + 1];
            const double ratio = (full + partial[j]) / radii[j];
            if (ratio > best.c_hat) {
                best.c_hat = ratio;
                best.witness_center = center;
                best.witness_radius = radii[j];
            }
        }
    }
    if (best.c_hat > 0.0) best.c_hat = packedness_ratio(set, best.witness_center, best.witness_radius);
    return best;
}

CrossingProfile::CrossingProfile(const SegmentSet& set, const Point& center) : set_(&set), center_(center) {
    ranges_.reserve(set.size());
    for (const Segment& s : set.segments()) ranges_.push_back(distance_range(s, center));
}

long CrossingProfile::operator()(double x) const {
    const double eps = sphere_tolerance(x);
    const Sphere sphere{center_, x};
    long total = 0;
    for (std::size_t i = 0; i < ranges_.size(); ++i) {
        if (ranges_[i].min > x + eps || ranges_[i].max < x - eps) continue;
        total += crossing_count((*set_)[i], sphere);
    }
    return total;
}

long crossings_at(const SegmentSet& set, const Point& p, double x) {
    if (!(x > 0.0)) throw std::invalid_argument("crossings_at: radius must be positive");
    long total = 0;
    const Sphere sphere{p, x};
    for (const Segment& s : set.segments()) total += crossing_count(s, sphere);
    return total;
}

double integrated_crossings(const SegmentSet& set, const Point& p, double r, int steps) {
    if (!(r > 0.0)) throw std::invalid_argument("integrated_crossings: radius must be positive");
    if (steps < 100) throw std::invalid_argument("integrated_crossings: steps must be >= 100");
    const CrossingProfile profile(set, p);
    const double h = r / steps;
    double total = 0.0;
    for (int i = 0; i < steps; ++i) total += static_cast<double>(profile((i + 0.5) * h));
    return total * h;
}

double mean_crossings(const SegmentSet& set, const Point& p, double a, double b, int samples, std::uint64_t seed) {
    if (!(a >= 0.0) || !(a < b)) throw std::invalid_argument("mean_crossings: need 0 <= a < b");
    if (samples < 1) throw std::invalid_argument("mean_crossings: samples must be >= 1");
    const CrossingProfile profile(set, p);
    Rng rng(seed);
    double total = 0.0;
    for (int i = 0; i < samples; ++i) total += static_cast<double>(profile(a + (b - a) * rng.uniform_open_closed()));
    return total / samples;
}

}  // namespace packsep
