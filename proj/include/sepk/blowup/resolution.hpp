#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sepk/exactnum/exact_eigenvalue.hpp"

namespace sepk::blowup {

/// A curve through the current centre: one of the two coordinate separatrix
/// germs of the initial node, or the exceptional divisor E_j created by the
/// j-th blow-up (j >= 1).
class DivisorId {
 public:
  static constexpr DivisorId y_separatrix() noexcept { return DivisorId(0); }
  static constexpr DivisorId x_separatrix() noexcept { return DivisorId(-1); }
  static DivisorId exceptional(int j);

  /// 0 for {y=0}, -1 for {x=0}, j for E_j.
  constexpr int index() const noexcept { return index_; }
  constexpr bool is_exceptional() const noexcept { return index_ > 0; }

  /// "{y=0}", "{x=0}" or "E_j".
  std::string label() const;
  static DivisorId from_label(const std::string& label);

  friend constexpr auto operator<=>(DivisorId, DivisorId) = default;

 private:
  constexpr explicit DivisorId(int index) noexcept : index_(index) {}
  int index_;
};

/// Local picture at the current centre: the separator is |y| = |x|^mu with
/// {x=0} supported on `dx` and {y=0} on `dy`.
struct ResolutionState {
  ExactEigenvalue mu;
  DivisorId dx;
  DivisorId dy;
  std::size_t step = 0;

  /// Node germ |y| = |x|^lambda before any blow-up; lambda must be positive.
  static ResolutionState initial(const ExactEigenvalue& lambda);
};

struct StepResult {
  ResolutionState next;
  /// The old divisor that still passes through the new centre.
  DivisorId retained;
};

/// One blow-up of the current centre.
///  mu > 1: chart y = x t, |t| = |x|^(mu-1); E_new becomes {x=0}, dy is kept.
///  mu < 1: chart x = s y, |s| = |y|^(1/mu - 1); E_new becomes {x=0}, the old
///          dx becomes {y=0}.
StepResult blowup_step(const ResolutionState& s);

/// p_j: the unique point of the separator on E_j after j blow-ups.
struct InfinitelyNearPoint {
  std::size_t j = 0;
  DivisorId new_divisor = DivisorId::y_separatrix();
  DivisorId retained_divisor = DivisorId::y_separatrix();
  ExactEigenvalue exponent_after;
};

/// Self-intersection bookkeeping of the exceptional configuration.
struct DualGraph {
  /// weights[j-1] is the self-intersection of E_j.
  std::vector<int> weights;
  /// Pairs (i, j), i < j, of intersecting exceptional divisors, sorted.
  std::vector<std::pair<int, int>> edges;
};

/// The cluster p_0 = origin, p_1, ..., p_depth of points on the separator.
struct ResolutionRecord {
  ExactEigenvalue lambda;
  std::vector<InfinitelyNearPoint> points;  // points[j-1] is p_j
  /// proximity[j-1] lists, ascending, every i < j with p_j proximate to p_i
  /// (p_j lies on the strict transform of the divisor created by blowing up
  /// p_i). Index 0 is the origin.
  std::vector<std::vector<std::size_t>> proximity;
  DualGraph graph;

  std::size_t depth() const noexcept { return points.size(); }
};

/// Iterates blowup_step `depth` times from the node germ |y| = |x|^lambda.
ResolutionRecord resolve(const ExactEigenvalue& lambda, std::size_t depth);

/// Lengths of the completed runs of retained divisors. The first entry is
/// 1 + (number of leading points p_j, j >= 2, retained on E_1); for
/// lambda > 1 the result is a prefix of the expansion of lambda/(lambda-1).
/// Throws insufficient_depth when no run is certified complete.
std::vector<std::size_t> run_length_encoding(const ResolutionRecord& rec);

/// Proximity matrix of the blow-up centres p_0, ..., p_{depth-1}: entry
/// [r][c] is 1 iff p_r is proximate to p_c. Lower triangular, row 0 empty,
/// every other row holds one (free point) or two (satellite point) ones.
std::vector<std::vector<int>> proximity_matrix(const ResolutionRecord& rec);

/// First repetition of the exponent mu along the blow-up orbit of lambda,
/// as (first index, period length), searched over at most `max_steps` steps.
std::optional<std::pair<std::size_t, std::size_t>> exponent_orbit_period(const ExactEigenvalue& lambda,
                                                                         std::size_t max_steps);

}  // namespace sepk::blowup
