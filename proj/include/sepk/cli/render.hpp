#pragma once

#include <cstddef>
#include <string>

#include "sepk/blowup/resolution.hpp"
#include "sepk/dynamics/leaf_gaps.hpp"

namespace sepk::cli {

inline constexpr std::size_t kSvgMaxPoints = 10000;
inline constexpr std::size_t kSvgMaxLeafTurns = 40;
inline constexpr std::size_t kSvgMaxSegments = 4000;

/// Dual graph: one node per exceptional divisor labelled with its
/// self-intersection, one edge per intersecting pair.
std::string render_dot(const blowup::ResolutionRecord& rec);

/// Columns j,new_divisor,retained_divisor,exponent_after,proximate_to.
std::string render_resolution_csv(const blowup::ResolutionRecord& rec);

/// Columns j,theta,re,im: theta = frac(j lambda), (re, im) = e^{2 pi i theta}.
std::string render_orbit_csv(double lambda, std::size_t count);

/// Columns rank,gap,class: sorted gaps and the index of their distinct class.
std::string render_gaps_csv(const dynamics::GapStatistics& stats);

/// Self-contained SVG of the boundary torus in angle coordinates: the leaf
/// through (1, 1) over its first turns and the orbit points on {u = 0}.
std::string render_orbit_svg(double lambda, std::size_t count);

}  // namespace sepk::cli
