#include "packsep/keb.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace packsep {

namespace {

void check_k(std::span<const Point> points, std::size_t k) {
    if (k < 1 || k > points.size()) throw std::invalid_argument("k-enclosing ball: k out of range");
}

double kth_squared_distance(std::span<const Point> points, const Point& center, std::size_t k,
                            std::vector<double>& scratch) {
    scratch.clear();
    for (const Point& q : points) scratch.push_back(squared_distance(center, q));
    std::nth_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(k - 1), scratch.end());
    return scratch[k - 1];
}

struct Best {
    double sq = 0.0;
    std::size_t index = 0;

    void offer(double candidate_sq, std::size_t i, std::span<const Point> points) {
        if (candidate_sq < sq || (candidate_sq == sq && points[i] < points[index])) {
            sq = candidate_sq;
            index = i;
        }
    }
};

// Uniform grid over the points, cell side `h`, used to enumerate every point
// within distance h of a query center.
class CellGrid {
public:
    CellGrid(std::span<const Point> points, double h) : h_(h), dim_(points.front().dim()) {
        for (std::size_t i = 0; i < points.size(); ++i) cells_[key_of(points[i])].push_back(i);
    }

    template <typename Visit>
    void for_each_near(const Point& c, double reach, Visit&& visit) const {
        std::vector<std::int64_t> lo(dim_), hi(dim_), cur(dim_);
        for (std::size_t k = 0; k < dim_; ++k) {
            lo[k] = cell_coord(c[k] - reach);
            hi[k] = cell_coord(c[k] + reach);
        }
        cur = lo;
        while (true) {
            if (auto it = cells_.find(cur); it != cells_.end())
                for (std::size_t i : it->second) visit(i);
            std::size_t k = 0;
            while (k < dim_ && cur[k] == hi[k]) {
                cur[k] = lo[k];
                ++k;
            }
            if (k == dim_) break;
            ++cur[k];
        }
    }

private:
    struct KeyHash {
        std::size_t operator()(const std::vector<std::int64_t>& key) const {
            std::uint64_t h = 1469598103934665603ull;
            for (std::int64_t v : key) {
                h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            }
            return static_cast<std::size_t>(h);
        }
    };

    std::int64_t cell_coord(double v) const { return static_cast<std::int64_t>(std::floor(v / h_)); }

    std::vector<std::int64_t> key_of(const Point& p) const {
        std::vector<std::int64_t> key(dim_);
        for (std::size_t k = 0; k < dim_; ++k) key[k] = cell_coord(p[k]);
        return key;
    }

    double h_;
    std::size_t dim_;
    std::unordered_map<std::vector<std::int64_t>, std::vector<std::size_t>, KeyHash> cells_;
};

Ball approx_brute_force(std::span<const Point> points, std::size_t k) {
    std::vector<double> scratch;
    Best best{kth_squared_distance(points, points[0], k, scratch), 0};
    for (std::size_t i = 1; i < points.size(); ++i) best.offer(kth_squared_distance(points, points[i], k, scratch), i, points);
    return Ball{points[best.index], std::sqrt(best.sq)};
}

// Radius zero: the answer is the smallest point with at least k copies.
std::size_t smallest_repeated(std::span<const Point> points, std::size_t k) {
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    std::size_t run = 1;
    for (std::size_t i = 1; i <= order.size(); ++i) {
        if (run >= k) return order[i - 1];
        if (i < order.size() && points[order[i]] == points[order[i - 1]]) {
            ++run;
        } else {
            run = 1;
        }
    }
    return order.front();
}

}  // namespace

Ball approx_k_enclosing_ball(std::span<const Point> points, std::size_t k) {
    check_k(points, k);
    const std::size_t n = points.size();
    const std::size_t dim = points.front().dim();
    if (n <= 256 || dim > 4) return approx_brute_force(points, k);

    // Seed the bound from a handful of evenly spaced centers.
    std::vector<double> scratch;
    Best best{kth_squared_distance(points, points[0], k, scratch), 0};
    for (std::size_t s = 1; s < 16; ++s) {
        const std::size_t i = s * n / 16;
        best.offer(kth_squared_distance(points, points[i], k, scratch), i, points);
    }
    if (best.sq == 0.0) {
        const std::size_t i = smallest_repeated(points, k);
        return Ball{points[i], 0.0};
    }

    // Every center that can match or beat the bound has its k nearest points
    // within the bound, so only nearby cells need to be scanned.
    const CellGrid grid(points, std::sqrt(best.sq));
    for (std::size_t i = 0; i < n; ++i) {
        const Point& c = points[i];
        const double bound_sq = best.sq;
        scratch.clear();
        grid.for_each_near(c, std::sqrt(bound_sq), [&](std::size_t j) {
            const double sq = squared_distance(c, points[j]);
            if (sq <= bound_sq) scratch.push_back(sq);
        });
        if (scratch.size() < k) continue;
        std::nth_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(k - 1), scratch.end());
        best.offer(scratch[k - 1], i, points);
    }
    return Ball{points[best.index], std::sqrt(best.sq)};
}

std::size_t count_covered(std::span<const Point> points, const Ball& ball) {
    const double limit = ball.radius + sphere_tolerance(ball.radius);
    return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [&](const Point& p) {
        return distance(p, ball.center) <= limit;
    }));
}

Ball exact_k_enclosing_ball(std::span<const Point> points, std::size_t k) {
    check_k(points, k);
    if (points.front().dim() != 2) throw std::invalid_argument("exact k-enclosing ball: planar input only");
    if (points.size() > 60) throw std::invalid_argument("exact k-enclosing ball: at most 60 points");

    Ball best{points[0], std::numeric_limits<double>::infinity()};
    auto offer = [&](Ball candidate) {
        if (!(candidate.radius <= best.radius)) return;
        if (candidate.radius == best.radius && !(candidate.center < best.center)) return;
        if (count_covered(points, candidate) >= k) best = std::move(candidate);
    };

    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) offer(Ball{points[i], 0.0});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point& p = points[i];
            const Point& q = points[j];
            offer(Ball{Point{0.5 * (p[0] + q[0]), 0.5 * (p[1] + q[1])}, 0.5 * distance(p, q)});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t l = j + 1; l < n; ++l) {
                const Point& p = points[i];
                const double bx = points[j][0] - p[0];
                const double by = points[j][1] - p[1];
                const double cx = points[l][0] - p[0];
                const double cy = points[l][1] - p[1];
                const double det = 2.0 * (bx * cy - by * cx);
                if (det == 0.0) continue;
                const double b2 = bx * bx + by * by;
                const double c2 = cx * cx + cy * cy;
                const double ux = (cy * b2 - by * c2) / det;
                const double uy = (bx * c2 - cx * b2) / det;
                const Point center{p[0] + ux, p[1] + uy};
                const double radius = std::max({distance(center, p), distance(center, points[j]),
                                                distance(center, points[l])});
                offer(Ball{center, radius});
            }
        }
    }
    return best;
}

}  // namespace packsep
