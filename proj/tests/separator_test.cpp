#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "packsep/gen.hpp"
#include "packsep/separator.hpp"

namespace packsep {
namespace {

SeparatorConfig min_of_m(int m, std::uint64_t seed, int c_bal = 50) {
    SeparatorConfig cfg;
    cfg.c_bal = c_bal;
    cfg.mode = MinOfM{m};
    cfg.seed = seed;
    return cfg;
}

SeparatorConfig paper(double c_pack, std::uint64_t seed, int c_bal = 50) {
    SeparatorConfig cfg;
    cfg.c_bal = c_bal;
    cfg.mode = PaperFaithful{c_pack};
    cfg.seed = seed;
    return cfg;
}

const SegmentSet& big_grid() {
    static const SegmentSet grid = gen_grid(100, 200, 2.0);
    return grid;
}

bool same_result(const SeparatorResult& a, const SeparatorResult& b) {
    return a.sphere.center == b.sphere.center && a.sphere.radius == b.sphere.radius && a.inside == b.inside &&
           a.crossing == b.crossing && a.outside == b.outside && a.base_radius == b.base_radius &&
           a.rounds_used == b.rounds_used && a.radii_tried == b.radii_tried &&
           a.guarantee_applies == b.guarantee_applies && a.accepted == b.accepted;
}

TEST(SeparatorConfig, Validation) {
    SeparatorConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.c_bal = 1;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    EXPECT_THROW(paper(0.0, 1).validate(), std::invalid_argument);
    EXPECT_THROW(min_of_m(0, 1).validate(), std::invalid_argument);
    cfg = SeparatorConfig{};
    cfg.max_rounds = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Separator, BaseBallSizeArithmetic) {
    EXPECT_EQ(base_ball_size(20000, 50), 800u);
    EXPECT_EQ(base_ball_size(8, 50), 1u);
    EXPECT_EQ(base_ball_size(26, 50), 2u);  // ceil(52 / 50)
    EXPECT_EQ(base_ball_size(3, 2), 3u);
    EXPECT_TRUE(guarantee_applies(20000, 50));
    EXPECT_FALSE(guarantee_applies(19999, 50));
}

TEST(Separator, DeterministicGivenSeed) {
    const SegmentSet grid = gen_grid(20, 30, 2.0);
    const auto a = find_separator(grid, min_of_m(8, 7, 4));
    const auto b = find_separator(grid, min_of_m(8, 7, 4));
    EXPECT_TRUE(same_result(a, b));
    const auto c = find_separator(grid, min_of_m(8, 8, 4));
    EXPECT_NE(a.radii_tried, c.radii_tried);
}

TEST(Separator, RejectsTinyInput) {
    EXPECT_THROW(find_separator(gen_star(1, 1.0), SeparatorConfig{}), std::invalid_argument);
}

TEST(Separator, SmallInputIsBestEffort) {
    const SegmentSet star = gen_star(8, 1.0);
    const auto res = find_separator(star, min_of_m(8, 1));
    EXPECT_FALSE(res.guarantee_applies);
    EXPECT_GT(res.base_radius, 0.0);
    EXPECT_TRUE(verify_separator(star, res, 50).partition_consistent);
}

TEST(Separator, GridPassesVerificationAndCrossingBound) {
    const SegmentSet& grid = big_grid();
    const auto res = find_separator(grid, min_of_m(8, 7));
    ASSERT_TRUE(res.guarantee_applies);
    const auto report = verify_separator(grid, res, 50);
    EXPECT_TRUE(report.passed(true));
    // Any witnessed ratio is a lower bound on the packedness constant.
    const double lower = packedness_ratio(grid, Point{200.0, 100.0}, 100.0);
    EXPECT_LE(static_cast<double>(res.crossing.size()), 4.0 * lower);
}

TEST(Separator, ResultInvariants) {
    const SegmentSet grid = gen_grid(30, 30, 2.0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto res = find_separator(grid, min_of_m(4, seed, 5));
        ASSERT_EQ(res.inside.size() + res.crossing.size() + res.outside.size(), grid.size());
        ASSERT_GE(res.sphere.radius, res.base_radius);
        ASSERT_LE(res.sphere.radius, 2.0 * res.base_radius);
        const double eps = sphere_tolerance(res.sphere.radius);
        for (std::size_t i : res.inside) {
            ASSERT_LE(distance(grid[i].a, res.sphere.center), res.sphere.radius + eps);
            ASSERT_LE(distance(grid[i].b, res.sphere.center), res.sphere.radius + eps);
        }
        for (std::size_t i : res.outside)
            ASSERT_GT(distance_range(grid[i], res.sphere.center).min, res.sphere.radius - eps);
    }
}

TEST(Separator, MinOfMKeepsFewestCrossings) {
    const SegmentSet grid = gen_grid(30, 40, 2.0);
    const auto res = find_separator(grid, min_of_m(6, 3, 5));
    ASSERT_EQ(res.radii_tried.size(), 6u);
    EXPECT_EQ(res.rounds_used, 6);
    for (double x : res.radii_tried) {
        const Sphere s{res.sphere.center, x};
        const auto count = std::count_if(grid.segments().begin(), grid.segments().end(),
                                         [&](const Segment& seg) { return classify(seg, s) == Classification::Crossing; });
        EXPECT_GE(static_cast<std::size_t>(count), res.crossing.size());
    }
}

TEST(Separator, PaperModeAcceptsUnderThreshold) {
    const SegmentSet grid = gen_grid(30, 40, 2.0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto res = find_separator(grid, paper(3.0, seed, 5));
        if (res.accepted) {
            ASSERT_LE(res.crossing.size(), 12u);
            ASSERT_EQ(res.sphere.radius, res.radii_tried.back());
        }
    }
}

TEST(Separator, PaperModeExhaustionFallsBackToBestSeen) {
    const SegmentSet grid = gen_grid(30, 40, 2.0);
    SeparatorConfig cfg = paper(0.01, 9, 5);
    cfg.max_rounds = 5;
    const auto res = find_separator(grid, cfg);
    EXPECT_FALSE(res.accepted);
    EXPECT_EQ(res.rounds_used, 5);
    EXPECT_EQ(res.radii_tried.size(), 5u);
    EXPECT_NE(std::find(res.radii_tried.begin(), res.radii_tried.end(), res.sphere.radius), res.radii_tried.end());
    EXPECT_TRUE(verify_separator(grid, res, 5).partition_consistent);
}

TEST(Verify, DetectsCorruption) {
    const SegmentSet grid = gen_grid(20, 20, 2.0);
    auto res = find_separator(grid, min_of_m(8, 2, 4));
    ASSERT_TRUE(verify_separator(grid, res, 4).partition_consistent);
    ASSERT_FALSE(res.inside.empty());

    auto moved = res;
    moved.outside.push_back(moved.inside.back());
    moved.inside.pop_back();
    EXPECT_FALSE(verify_separator(grid, moved, 4).partition_consistent);

    auto duplicated = res;
    duplicated.outside.push_back(duplicated.inside.front());
    EXPECT_FALSE(verify_separator(grid, duplicated, 4).partition_consistent);

    auto dropped = res;
    dropped.inside.pop_back();
    EXPECT_FALSE(verify_separator(grid, dropped, 4).partition_consistent);

    auto out_of_range = res;
    out_of_range.inside.push_back(grid.size());
    EXPECT_THROW(verify_separator(grid, out_of_range, 4), std::out_of_range);

    auto shrunk = res;
    shrunk.sphere.radius = 0.5 * res.base_radius;
    EXPECT_FALSE(verify_separator(grid, shrunk, 4).radius_in_range);
}

TEST(Verify, BalanceFlags) {
    const SegmentSet grid = gen_grid(20, 20, 2.0);
    const auto res = find_separator(grid, min_of_m(8, 2, 4));
    const auto report = verify_separator(grid, res, 4);
    EXPECT_DOUBLE_EQ(report.balance_threshold, 400.0 / 8.0);
    EXPECT_EQ(report.inside_balanced, report.inside_count >= 50);
    EXPECT_EQ(report.outside_balanced, report.outside_count >= 50);
}

std::size_t count_stored(const SeparatorTreeNode& node) {
    std::size_t total = node.stored.size();
    if (node.inside) total += count_stored(*node.inside);
    if (node.outside) total += count_stored(*node.outside);
    return total;
}

TEST(Tree, SmallInputIsOneLeaf) {
    const SegmentSet grid = gen_grid(4, 4, 2.0);
    const auto root = build_tree(grid, min_of_m(8, 1, 2), 16);
    EXPECT_TRUE(root->is_leaf());
    EXPECT_EQ(root->stored.size(), 16u);
    EXPECT_EQ(tree_depth(*root), 0);
}

TEST(Tree, RejectsZeroLeafSize) {
    EXPECT_THROW(build_tree(gen_grid(4, 4, 2.0), SeparatorConfig{}, 0), std::invalid_argument);
}

TEST(Tree, EveryIndexStoredExactlyOnce) {
    const SegmentSet grid = gen_grid(40, 50, 2.0);
    const auto root = build_tree(grid, min_of_m(8, 5, 3), 32);
    EXPECT_EQ(count_stored(*root), grid.size());
    const TreeVerification check = verify_tree(grid, *root, 3);
    EXPECT_TRUE(check.accounting_ok);
    EXPECT_TRUE(check.structure_ok);
    EXPECT_EQ(check.nodes_failed, 0u);
    EXPECT_GT(tree_depth(*root), 1);

    const auto levels = tree_level_stats(*root);
    ASSERT_FALSE(levels.empty());
    EXPECT_EQ(levels.front().segments, grid.size());
}

TEST(Tree, DeterministicGivenSeed) {
    const SegmentSet grid = gen_grid(30, 30, 2.0);
    const auto a = build_tree(grid, min_of_m(4, 11, 3), 40);
    const auto b = build_tree(grid, min_of_m(4, 11, 3), 40);
    const auto la = tree_level_stats(*a);
    const auto lb = tree_level_stats(*b);
    ASSERT_EQ(la.size(), lb.size());
    for (std::size_t i = 0; i < la.size(); ++i) {
        EXPECT_EQ(la[i].nodes, lb[i].nodes);
        EXPECT_EQ(la[i].crossing, lb[i].crossing);
    }
    EXPECT_EQ(a->result->sphere.radius, b->result->sphere.radius);
}

TEST(Tree, VerifyDetectsMissingSegment) {
    const SegmentSet grid = gen_grid(30, 30, 2.0);
    auto root = build_tree(grid, min_of_m(4, 11, 3), 40);
    ASSERT_FALSE(root->is_leaf());
    SeparatorTreeNode* leaf = root.get();
    while (!leaf->is_leaf()) leaf = leaf->inside ? leaf->inside.get() : leaf->outside.get();
    leaf->stored.pop_back();
    EXPECT_FALSE(verify_tree(grid, *root, 3).passed());
}

}  // namespace
}  // namespace packsep
