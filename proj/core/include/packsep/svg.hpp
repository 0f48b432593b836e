#pragma once

#include <string>

#include "packsep/packed.hpp"
#include "packsep/separator.hpp"

namespace packsep {

/// Static SVG of a planar segment set. With a result, segments are colored by
/// classification and the separator circle is drawn.
/// Throws std::invalid_argument when the set is not planar.
std::string render_svg(const SegmentSet& set, const SeparatorResult* result = nullptr, int canvas = 800);

}  // namespace packsep
