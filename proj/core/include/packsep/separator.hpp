#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "packsep/geom.hpp"
#include "packsep/packed.hpp"

namespace packsep {

/// Accept the first radius whose sphere crosses at most 4 * c_pack segments.
struct PaperFaithful {
    double c_pack = 1.0;
};

/// Draw m radii and keep the one crossing the fewest segments.
struct MinOfM {
    int m = 8;
};

using SeparatorMode = std::variant<PaperFaithful, MinOfM>;

struct SeparatorConfig {
    /// Balance constant; the base ball holds ceil(2n / c_bal) endpoints.
    /// The planar default is (c')^2 + 1 with doubling constant c' = 7.
    int c_bal = 50;
    SeparatorMode mode = MinOfM{};
    int max_rounds = 64;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument on an out-of-range field.
    void validate() const;
};

struct SeparatorResult {
    Sphere sphere;
    std::vector<std::size_t> inside;
    std::vector<std::size_t> crossing;
    std::vector<std::size_t> outside;
    double base_radius = 0.0;
    int rounds_used = 0;
    std::vector<double> radii_tried;
    /// n >= 8 * c_bal^2, the size from which the balance bound is promised.
    bool guarantee_applies = false;
    /// False when paper-faithful sampling ran out of rounds and fell back to
    /// the best radius seen.
    bool accepted = true;
};

struct VerificationReport {
    bool partition_consistent = false;
    bool radius_in_range = false;
    bool inside_balanced = false;
    bool outside_balanced = false;
    std::size_t crossing_count = 0;
    std::size_t inside_count = 0;
    std::size_t outside_count = 0;
    /// n / (2 c_bal)
    double balance_threshold = 0.0;

    /// Consistency always; balance only when the size guarantee applies.
    bool passed(bool guarantee_applies) const {
        return partition_consistent && radius_in_range && (!guarantee_applies || (inside_balanced && outside_balanced));
    }
};

/// Number of endpoints the base ball must hold: ceil(2n / c_bal), at least 1.
std::size_t base_ball_size(std::size_t n, int c_bal);

bool guarantee_applies(std::size_t n, int c_bal);

/// Sphere separator for S. Deterministic given cfg.seed.
/// Throws std::invalid_argument when S has fewer than two segments.
SeparatorResult find_separator(const SegmentSet& set, const SeparatorConfig& cfg);

/// Re-derives every classification from scratch and checks the result
/// against it. Throws std::out_of_range for an index outside [0, n).
VerificationReport verify_separator(const SegmentSet& set, const SeparatorResult& result, int c_bal);

struct SeparatorTreeNode {
    /// Original indices of every segment in this node's subset.
    std::vector<std::size_t> subset;
    /// Original indices of the segments kept at this node: the crossing
    /// segments of an internal node, or the whole subset of a leaf.
    std::vector<std::size_t> stored;
    /// Separator of the subset, in indices local to `subset`. Empty for leaves.
    std::optional<SeparatorResult> result;
    std::unique_ptr<SeparatorTreeNode> inside;
    std::unique_ptr<SeparatorTreeNode> outside;
    int depth = 0;

    bool is_leaf() const { return !result.has_value(); }
};

/// Recursive separator decomposition. A subset becomes a leaf when it has at
/// most leaf_size segments or the balance guarantee no longer applies to it.
/// Child seeds are derived from the parent's seed.
std::unique_ptr<SeparatorTreeNode> build_tree(const SegmentSet& set, const SeparatorConfig& cfg, std::size_t leaf_size);

struct TreeLevelStats {
    int depth = 0;
    std::size_t nodes = 0;
    std::size_t leaves = 0;
    std::size_t segments = 0;
    std::size_t crossing = 0;
};

std::vector<TreeLevelStats> tree_level_stats(const SeparatorTreeNode& root);
int tree_depth(const SeparatorTreeNode& root);

struct TreeVerification {
    /// Every input index is stored exactly once across the whole tree.
    bool accounting_ok = false;
    /// Stored lists and child subsets agree with each node's separator.
    bool structure_ok = false;
    std::size_t nodes_checked = 0;
    /// Internal nodes whose separator fails verify_separator.
    std::size_t nodes_failed = 0;

    bool passed() const { return accounting_ok && structure_ok && nodes_failed == 0; }
};

/// Runs verify_separator at every internal node and checks the global
/// exactly-once accounting. Throws std::out_of_range on an index >= n.
TreeVerification verify_tree(const SegmentSet& set, const SeparatorTreeNode& root, int c_bal);

}  // namespace packsep
