#pragma once

#include <span>

#include "packsep/geom.hpp"

namespace packsep {

/// Smallest ball centered at an input point that contains at least k points:
/// for each candidate center take its k-th smallest distance, keep the minimum.
/// The radius is within a factor 2 of the optimal k-enclosing radius. Ties go
/// to the lexicographically smallest center.
///
/// Throws std::invalid_argument unless 1 <= k <= points.size().
Ball approx_k_enclosing_ball(std::span<const Point> points, std::size_t k);

/// Exact smallest closed disk containing at least k points, by enumerating
/// every disk spanned by one, two (diametral) or three (circumscribed) points.
/// Planar only and limited to 60 points.
Ball exact_k_enclosing_ball(std::span<const Point> points, std::size_t k);

/// Number of points within radius + tolerance of the center.
std::size_t count_covered(std::span<const Point> points, const Ball& ball);

}  // namespace packsep
