#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sepk/exactnum/big_rational.hpp"
#include "sepk/exactnum/exact_eigenvalue.hpp"

namespace sepk {

/// Prefix [n_0; n_1, n_2, ...] of a regular continued fraction, optionally
/// with the eventual period. When `period_start` is set, entry i for
/// i >= period_start equals period[(i - period_start) % period.size()] and
/// entry i for i < period_start equals preperiod[i].
struct CFExpansion {
  std::vector<BigInt> entries;
  std::optional<std::size_t> period_start;
  std::vector<BigInt> preperiod;
  std::vector<BigInt> period;

  bool has_period() const noexcept { return period_start.has_value(); }

  /// Entry i; beyond the stored prefix it is replayed from the period.
  /// Throws insufficient_depth if i is past the prefix and no period is known.
  BigInt entry(std::size_t i) const;

  /// "[n0;n1,n2,...]" with " (period a,b,...)" appended when a period is known.
  std::string to_string() const;

  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

/// Steps of Gauss iteration spent looking for a repeated state past `depth`.
inline constexpr std::size_t kPeriodSearchLimit = 100000;

/// First `depth` partial quotients of x > 0 by exact Gauss iteration
/// (floor, subtract, reciprocal). The period is found by repetition of the
/// canonical (p, q, r) state, continuing past `depth` if needed.
CFExpansion cf_expand(const ExactEigenvalue& x, std::size_t depth);

/// The first `count` convergents h_k / k_k of an expansion.
std::vector<BigRational> convergents(const CFExpansion& cf, std::size_t count);

}  // namespace sepk
