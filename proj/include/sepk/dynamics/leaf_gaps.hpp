#pragma once

#include <cstddef>
#include <vector>

namespace sepk::dynamics {

inline constexpr double kGapMergeTolerance = 1e-9;

/// frac(j lambda) for j = 0, ..., count - 1.
std::vector<double> circle_orbit(double lambda, std::size_t count);

struct GapStatistics {
  std::size_t num_distinct_gaps = 0;
  /// The `count` gaps between circularly consecutive orbit points, ascending.
  std::vector<double> gaps;
  /// One representative per class of gaps within kGapMergeTolerance.
  std::vector<double> distinct;
  double gap_sum = 0.0;
};

/// Gaps of the orbit {frac(j lambda)}_{j < count} on the circle R/Z.
GapStatistics leaf_gap_statistics(double lambda, std::size_t count);

}  // namespace sepk::dynamics
