#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "sepk/exactnum/cf_expansion.hpp"
#include "sepk/exactnum/exact_eigenvalue.hpp"

namespace sepk::equising {

/// Separator {|y| = c |x|^lambda}. The scale c plays no role in
/// equisingularity; (x, y) -> (x, r y) removes it.
struct SeparatorSpec {
  ExactEigenvalue eigenvalue;
  double scale = 1.0;

  static SeparatorSpec make(const ExactEigenvalue& eigenvalue, double scale = 1.0);
};

/// Monomial curve {(z^m, z^n)} with gcd(m, n) = 1.
struct CuspSpec {
  std::int64_t m = 1;
  std::int64_t n = 1;

  static CuspSpec make(std::int64_t m, std::int64_t n);
  friend bool operator==(const CuspSpec&, const CuspSpec&) = default;
};

/// lambda if lambda > 1, else 1/lambda.
ExactEigenvalue normalize(const ExactEigenvalue& lambda);

/// Exact test normalize(lambda_1) == normalize(lambda_2), also across fields.
bool equisingular_separators(const SeparatorSpec& s1, const SeparatorSpec& s2);

/// Equality of the depth x depth proximity matrices of the two resolutions.
bool equisingular_prefix(const SeparatorSpec& s1, const SeparatorSpec& s2, std::size_t depth);

/// {m1, n1} == {m2, n2} as unordered pairs.
bool equisingular_cusps(const CuspSpec& c1, const CuspSpec& c2);

/// Evidence behind an equisingularity decision.
struct Certificate {
  bool equisingular = false;
  ExactEigenvalue normalized_1;
  ExactEigenvalue normalized_2;
  /// Equal case: common expansion of nu = lambda/(lambda-1) with its period.
  std::optional<CFExpansion> shared_expansion;
  /// Distinct case: first index where the expansions of nu differ ...
  std::optional<std::size_t> first_disagreement;
  BigInt entry_1 = 0;
  BigInt entry_2 = 0;
  /// ... and the smallest depth whose proximity matrices differ.
  std::size_t witness_depth = 0;
};

Certificate certify(const SeparatorSpec& s1, const SeparatorSpec& s2);

}  // namespace sepk::equising
