#include "packsep/separator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "packsep/keb.hpp"
#include "packsep/random.hpp"

namespace packsep {

void SeparatorConfig::validate() const {
    if (c_bal < 2) throw std::invalid_argument("c_bal must be >= 2");
    if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
    if (const auto* pf = std::get_if<PaperFaithful>(&mode); pf && !(pf->c_pack > 0.0))
        throw std::invalid_argument("c_pack must be positive");
    if (const auto* mm = std::get_if<MinOfM>(&mode); mm && mm->m < 1) throw std::invalid_argument("m must be >= 1");
}

std::size_t base_ball_size(std::size_t n, int c_bal) {
    const auto c = static_cast<std::size_t>(c_bal);
    return std::clamp<std::size_t>((2 * n + c - 1) / c, 1, 2 * n);
}

bool guarantee_applies(std::size_t n, int c_bal) {
    const auto c = static_cast<std::size_t>(c_bal);
    return n >= 8 * c * c;
}

namespace {

Classification classify_range(const DistanceRange& range, double radius) {
    const double eps = sphere_tolerance(radius);
    if (range.max < radius - eps) return Classification::Inside;
    if (range.min > radius + eps) return Classification::Outside;
    return Classification::Crossing;
}

std::size_t count_crossing(const std::vector<DistanceRange>& ranges, double radius) {
    return static_cast<std::size_t>(std::count_if(ranges.begin(), ranges.end(), [&](const DistanceRange& r) {
        return classify_range(r, radius) == Classification::Crossing;
    }));
}

// A zero-radius base ball (k endpoints coincide) cannot be scaled, so the
// annulus starts at the nearest distinct endpoint instead.
double usable_base_radius(const SegmentSet& set, const Ball& ball) {
    if (ball.radius > 0.0) return ball.radius;
    double nearest = std::numeric_limits<double>::infinity();
    for (const Point& q : set.endpoints()) {
        const double d = distance(q, ball.center);
        if (d > 0.0) nearest = std::min(nearest, d);
    }
    return nearest;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

SeparatorResult find_separator(const SegmentSet& set, const SeparatorConfig& cfg) {
    cfg.validate();
    const std::size_t n = set.size();
    if (n < 2) throw std::invalid_argument("find_separator: need at least two segments");

    const Ball ball = approx_k_enclosing_ball(set.endpoints(), base_ball_size(n, cfg.c_bal));
    const double base = usable_base_radius(set, ball);

    std::vector<DistanceRange> ranges;
    ranges.reserve(n);
    for (const Segment& s : set.segments()) ranges.push_back(distance_range(s, ball.center));

    SeparatorResult result;
    result.base_radius = base;
    result.guarantee_applies = guarantee_applies(n, cfg.c_bal);

    Rng rng(cfg.seed);
    double best_radius = base;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    auto draw = [&]() {
        const double x = base + base * rng.uniform();
        const std::size_t count = count_crossing(ranges, x);
        result.radii_tried.push_back(x);
        ++result.rounds_used;
        if (count < best_count) {
            best_count = count;
            best_radius = x;
        }
        return count;
    };

    if (const auto* pf = std::get_if<PaperFaithful>(&cfg.mode)) {
        const double threshold = 4.0 * pf->c_pack;
        result.accepted = false;
        for (int round = 0; round < cfg.max_rounds; ++round) {
            const std::size_t count = draw();
            if (static_cast<double>(count) <= threshold) {
                best_radius = result.radii_tried.back();
                result.accepted = true;
                break;
            }
        }
    } else {
        const int m = std::get<MinOfM>(cfg.mode).m;
        for (int round = 0; round < m; ++round) draw();
    }

    result.sphere = Sphere{ball.center, best_radius};
    for (std::size_t i = 0; i < n; ++i) {
        switch (classify_range(ranges[i], best_radius)) {
            case Classification::Inside: result.inside.push_back(i); break;
            case Classification::Crossing: result.crossing.push_back(i); break;
            case Classification::Outside: result.outside.push_back(i); break;
        }
    }
    return result;
}

VerificationReport verify_separator(const SegmentSet& set, const SeparatorResult& result, int c_bal) {
    const std::size_t n = set.size();
    VerificationReport report;
    report.inside_count = result.inside.size();
    report.crossing_count = result.crossing.size();
    report.outside_count = result.outside.size();
    report.balance_threshold = static_cast<double>(n) / (2.0 * c_bal);

    std::vector<int> seen(n, 0);
    bool consistent = result.sphere.radius > 0.0 && result.sphere.center.dim() == set.dim();
    auto check = [&](const std::vector<std::size_t>& list, Classification expected) {
        for (std::size_t i : list) {
            if (i >= n) throw std::out_of_range("separator result: segment index out of range");
            ++seen[i];
            if (consistent && classify(set[i], result.sphere) != expected) consistent = false;
        }
    };
    check(result.inside, Classification::Inside);
    check(result.crossing, Classification::Crossing);
    check(result.outside, Classification::Outside);
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) consistent = false;

    report.partition_consistent = consistent;
    report.radius_in_range =
        result.base_radius > 0.0 && result.sphere.radius >= result.base_radius && result.sphere.radius <= 2.0 * result.base_radius;
    report.inside_balanced = static_cast<double>(report.inside_count) >= report.balance_threshold;
    report.outside_balanced = static_cast<double>(report.outside_count) >= report.balance_threshold;
    return report;
}

namespace {

std::unique_ptr<SeparatorTreeNode> build_node(const SegmentSet& full, std::vector<std::size_t> subset,
                                              const SeparatorConfig& cfg, std::size_t leaf_size, int depth) {
    auto node = std::make_unique<SeparatorTreeNode>();
    node->depth = depth;
    node->subset = std::move(subset);

    if (node->subset.size() <= leaf_size || !guarantee_applies(node->subset.size(), cfg.c_bal)) {
        node->stored = node->subset;
        return node;
    }

    const SegmentSet local = full.subset(node->subset);
    SeparatorResult result = find_separator(local, cfg);

    auto to_original = [&](const std::vector<std::size_t>& local_indices) {
        std::vector<std::size_t> out;
        out.reserve(local_indices.size());
        for (std::size_t i : local_indices) out.push_back(node->subset[i]);
        return out;
    };
    node->stored = to_original(result.crossing);
    std::vector<std::size_t> inside = to_original(result.inside);
    std::vector<std::size_t> outside = to_original(result.outside);
    node->result = std::move(result);

    SeparatorConfig child = cfg;
    if (!inside.empty()) {
        child.seed = splitmix64(cfg.seed ^ 0x1ull);
        node->inside = build_node(full, std::move(inside), child, leaf_size, depth + 1);
    }
    if (!outside.empty()) {
        child.seed = splitmix64(cfg.seed ^ 0x2ull);
        node->outside = build_node(full, std::move(outside), child, leaf_size, depth + 1);
    }
    return node;
}

void collect_stats(const SeparatorTreeNode& node, std::vector<TreeLevelStats>& levels) {
    const auto d = static_cast<std::size_t>(node.depth);
    if (levels.size() <= d) levels.resize(d + 1);
    TreeLevelStats& level = levels[d];
    level.depth = node.depth;
    ++level.nodes;
    level.segments += node.subset.size();
    if (node.is_leaf()) {
        ++level.leaves;
    } else {
        level.crossing += node.stored.size();
    }
    if (node.inside) collect_stats(*node.inside, levels);
    if (node.outside) collect_stats(*node.outside, levels);
}

}  // namespace

std::unique_ptr<SeparatorTreeNode> build_tree(const SegmentSet& set, const SeparatorConfig& cfg, std::size_t leaf_size) {
    cfg.validate();
    if (leaf_size < 1) throw std::invalid_argument("build_tree: leaf_size must be >= 1");
    std::vector<std::size_t> all(set.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return build_node(set, std::move(all), cfg, leaf_size, 0);
}

std::vector<TreeLevelStats> tree_level_stats(const SeparatorTreeNode& root) {
    std::vector<TreeLevelStats> levels;
    collect_stats(root, levels);
    return levels;
}

int tree_depth(const SeparatorTreeNode& root) {
    int depth = root.depth;
    if (root.inside) depth = std::max(depth, tree_depth(*root.inside));
    if (root.outside) depth = std::max(depth, tree_depth(*root.outside));
    return depth;
}

namespace {

void verify_node(const SegmentSet& set, const SeparatorTreeNode& node, int c_bal, std::vector<int>& seen,
                 TreeVerification& out) {
    ++out.nodes_checked;
    for (std::size_t i : node.subset)
        if (i >= set.size()) throw std::out_of_range("tree: segment index out of range");
    for (std::size_t i : node.stored) {
        if (i >= set.size()) throw std::out_of_range("tree: segment index out of range");
        ++seen[i];
    }
    if (node.is_leaf()) {
        if (node.stored != node.subset || node.inside || node.outside) out.structure_ok = false;
        return;
    }

    const SeparatorResult& result = *node.result;
    auto to_original = [&](const std::vector<std::size_t>& local) {
        std::vector<std::size_t> mapped;
        for (std::size_t i : local) {
            if (i >= node.subset.size()) throw std::out_of_range("tree: local index out of range");
            mapped.push_back(node.subset[i]);
        }
        return mapped;
    };
    if (node.subset.empty()) {
        out.structure_ok = false;
        return;
    }
    if (!verify_separator(set.subset(node.subset), result, c_bal).passed(result.guarantee_applies)) ++out.nodes_failed;
    if (to_original(result.crossing) != node.stored) out.structure_ok = false;

    const std::vector<std::size_t> inside = to_original(result.inside);
    const std::vector<std::size_t> outside = to_original(result.outside);
    auto check_child = [&](const std::unique_ptr<SeparatorTreeNode>& child, const std::vector<std::size_t>& expected) {
        if (!child) {
            if (!expected.empty()) out.structure_ok = false;
            return;
        }
        if (child->subset != expected || child->depth != node.depth + 1) out.structure_ok = false;
        verify_node(set, *child, c_bal, seen, out);
    };
    check_child(node.inside, inside);
    check_child(node.outside, outside);
}

}  // namespace

TreeVerification verify_tree(const SegmentSet& set, const SeparatorTreeNode& root, int c_bal) {
    TreeVerification out;
    out.structure_ok = true;
    std::vector<int> seen(set.size(), 0);
    verify_node(set, root, c_bal, seen, out);
    out.accounting_ok = std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
    return out;
}

}  // namespace packsep
