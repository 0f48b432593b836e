#pragma once

#include <cstdint>

#include "packsep/packed.hpp"

namespace packsep {

/// rows x cols horizontal unit segments; segment (i, j) starts at
/// (j * spacing, i * spacing).
SegmentSet gen_grid(int rows, int cols, double spacing);

/// `spokes` segments of the given length leaving the origin at uniform angles.
SegmentSet gen_star(int spokes, double length);

/// Koch snowflake of side `scale` as a closed polyline of 3 * 4^depth segments.
/// Depth is capped at 8.
SegmentSet gen_koch(int depth, double scale);

/// Planar random walk with uniformly random headings and fixed step length.
SegmentSet gen_polyline_walk(int steps, double step_len, std::uint64_t seed);

}  // namespace packsep
