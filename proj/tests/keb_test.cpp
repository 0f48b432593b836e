#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "packsep/keb.hpp"

namespace packsep {
namespace {

std::vector<Point> line_points() { return {Point{0, 0}, Point{1, 0}, Point{2, 0}, Point{10, 0}}; }
std::vector<Point> unit_square() { return {Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}}; }

std::vector<Point> random_planar(std::mt19937_64& rng, std::size_t n) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(oracle::random_point(rng, 2, 10.0));
    return pts;
}

TEST(ApproxKeb, Examples) {
    const auto pts = line_points();
    const Ball b = approx_k_enclosing_ball(pts, 3);
    EXPECT_EQ(b.center, (Point{1, 0}));
    EXPECT_DOUBLE_EQ(b.radius, 1.0);

    const Ball one = approx_k_enclosing_ball(pts, 1);
    EXPECT_EQ(one.radius, 0.0);

    const auto sq = unit_square();
    const Ball corner = approx_k_enclosing_ball(sq, 4);
    EXPECT_DOUBLE_EQ(corner.radius, std::sqrt(2.0));
    EXPECT_EQ(corner.center, (Point{0, 0}));  // lexicographically smallest corner
    EXPECT_LE(corner.radius, 2.0 * exact_k_enclosing_ball(sq, 4).radius + 1e-12);
}

TEST(ApproxKeb, RejectsKOutOfRange) {
    const auto pts = line_points();
    EXPECT_THROW(approx_k_enclosing_ball(pts, 0), std::invalid_argument);
    EXPECT_THROW(approx_k_enclosing_ball(pts, 5), std::invalid_argument);
}

TEST(ExactKeb, Examples) {
    const auto pts = line_points();
    const Ball b = exact_k_enclosing_ball(pts, 3);
    EXPECT_NEAR(b.radius, 1.0, 1e-12);
    EXPECT_NEAR(b.center[0], 1.0, 1e-12);
    EXPECT_NEAR(b.center[1], 0.0, 1e-12);

    const std::vector<Point> tri{Point{0, 0}, Point{1, 0}, Point{0.5, std::sqrt(3.0) / 2.0}};
    EXPECT_NEAR(exact_k_enclosing_ball(tri, 3).radius, 1.0 / std::sqrt(3.0), 1e-12);

    EXPECT_EQ(exact_k_enclosing_ball(pts, 1).radius, 0.0);
    EXPECT_NEAR(exact_k_enclosing_ball(unit_square(), 4).radius, std::sqrt(2.0) / 2.0, 1e-12);
}

TEST(ExactKeb, RejectsUnsupportedInput) {
    const std::vector<Point> spatial{Point{0, 0, 0}, Point{1, 0, 0}};
    EXPECT_THROW(exact_k_enclosing_ball(spatial, 1), std::invalid_argument);
    std::mt19937_64 rng(1);
    EXPECT_THROW(exact_k_enclosing_ball(random_planar(rng, 61), 3), std::invalid_argument);
    EXPECT_THROW(exact_k_enclosing_ball(line_points(), 0), std::invalid_argument);
}

TEST(Keb, ApproximationFactorAgainstExact) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 39;
        const std::size_t k = 1 + rng() % n;
        const auto pts = random_planar(rng, n);
        const Ball exact = exact_k_enclosing_ball(pts, k);
        const Ball approx = approx_k_enclosing_ball(pts, k);
        ASSERT_GE(approx.radius, exact.radius - 1e-9);
        ASSERT_LE(approx.radius, 2.0 * exact.radius + 1e-9);
        ASSERT_GE(count_covered(pts, exact), k);
        ASSERT_GE(count_covered(pts, approx), k);
    }
}

TEST(ExactKeb, RadiusMonotoneInK) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = random_planar(rng, 25);
        double prev = exact_k_enclosing_ball(pts, pts.size()).radius;
        for (std::size_t k = pts.size() - 1; k >= 1; --k) {
            const double r = exact_k_enclosing_ball(pts, k).radius;
            ASSERT_LE(r, prev + 1e-12);
            prev = r;
        }
    }
}

// The grid-accelerated path must return exactly what the quadratic scan does,
// including the tie-break, on inputs large enough to take it.
TEST(ApproxKeb, AcceleratedPathMatchesPlainScan) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        const auto pts = random_planar(rng, 400 + 50 * static_cast<std::size_t>(trial));
        const std::size_t k = 1 + rng() % 60;
        const Ball fast = approx_k_enclosing_ball(pts, k);
        const Ball plain = oracle::point_centered_keb(pts, k);
        ASSERT_EQ(fast.center, plain.center);
        ASSERT_EQ(fast.radius, plain.radius);
    }
}

TEST(ApproxKeb, AcceleratedPathHandlesLatticeTies) {
    std::vector<Point> pts;
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) {
            pts.push_back(Point{2.0 * j, 2.0 * i});
            pts.push_back(Point{2.0 * j + 1.0, 2.0 * i});
        }
    for (std::size_t k : {1u, 2u, 7u, 16u, 50u}) {
        const Ball fast = approx_k_enclosing_ball(pts, k);
        const Ball plain = oracle::point_centered_keb(pts, k);
        ASSERT_EQ(fast.center, plain.center) << "k=" << k;
        ASSERT_EQ(fast.radius, plain.radius) << "k=" << k;
    }
}

TEST(ApproxKeb, RepeatedPointsGiveZeroRadius) {
    std::vector<Point> pts;
    for (int i = 0; i < 300; ++i) pts.push_back(Point{static_cast<double>(i % 7), 0.0});
    for (int i = 0; i < 40; ++i) pts.push_back(Point{-3.0, 1.0});
    const Ball b = approx_k_enclosing_ball(pts, 30);
    EXPECT_EQ(b.radius, 0.0);
    EXPECT_EQ(b.center, (Point{-3.0, 1.0}));
}

}  // namespace
}  // namespace packsep
