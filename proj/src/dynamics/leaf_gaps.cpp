#include "sepk/dynamics/leaf_gaps.hpp"

#include <algorithm>
#include <cmath>

#include "sepk/exactnum/errors.hpp"

namespace sepk::dynamics {

std::vector<double> circle_orbit(double lambda, std::size_t count) {
  if (!std::isfinite(lambda)) throw Error(ErrorKind::invalid_argument, "lambda must be finite");
  std::vector<double> out(count);
  const long double l = lambda;
  for (std::size_t j = 0; j < count; ++j) {
    const long double x = static_cast<long double>(j) * l;
    out[j] = static_cast<double>(x - std::floor(x));
  }
  return out;
}

GapStatistics leaf_gap_statistics(double lambda, std::size_t count) {
  if (count < 2) throw Error(ErrorKind::invalid_argument, "need at least 2 orbit points");
  std::vector<double> pts = circle_orbit(lambda, count);
  std::sort(pts.begin(), pts.end());

  GapStatistics out;
  out.gaps.reserve(count);
  for (std::size_t k = 0; k + 1 < count; ++k) out.gaps.push_back(pts[k + 1] - pts[k]);
  out.gaps.push_back(1.0 - pts.back() + pts.front());

  long double sum = 0.0L;
  for (double g : out.gaps) sum += g;
  out.gap_sum = static_cast<double>(sum);

  std::sort(out.gaps.begin(), out.gaps.end());
  for (double g : out.gaps) {
    if (out.distinct.empty() || g - out.distinct.back() > kGapMergeTolerance) out.distinct.push_back(g);
  }
  out.num_distinct_gaps = out.distinct.size();
  return out;
}

}  // namespace sepk::dynamics
