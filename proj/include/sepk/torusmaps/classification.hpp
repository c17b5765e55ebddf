#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sepk/equising/equisingularity.hpp"
#include "sepk/exactnum/exact_eigenvalue.hpp"
#include "sepk/exactnum/unimodular_matrix.hpp"

namespace sepk::torusmaps {

inline constexpr std::int64_t kMaxEnumerationBound = 1000;

/// Exact test that a + b lambda and c + d lambda are both positive or both
/// negative.
bool sign_condition(const UnimodularMatrix& A, const ExactEigenvalue& lambda);

/// Every det-1 matrix with entries in [-bound, bound] accepted by `keep`, in
/// lexicographic order. Rows a are split into `shards` contiguous ranges
/// (0 picks the hardware concurrency); the result does not depend on it.
std::vector<UnimodularMatrix> enumerate_unimodular(std::int64_t bound,
                                                   const std::function<bool(const UnimodularMatrix&)>& keep,
                                                   unsigned shards = 0);

/// All A within bound with moebius_apply(A, lambda) == lambda_tilde exactly
/// and the sign condition.
std::vector<UnimodularMatrix> admissible_matrices(const ExactEigenvalue& lambda, const ExactEigenvalue& lambda_tilde,
                                                  std::int64_t bound, unsigned shards = 0);

/// Cusps (m, n) for the convergents n/m of lambda with index 1..conv_depth
/// (index 1 is the integer part over 1); convergents with n = 0 are skipped.
std::vector<equising::CuspSpec> convergent_cusps(const ExactEigenvalue& lambda, std::size_t conv_depth);

/// The cusp (|am + bn|, |cm + dn|) when both entries are nonzero.
std::optional<equising::CuspSpec> image_cusp(const UnimodularMatrix& A, const equising::CuspSpec& source);

/// Unimodular A within bound satisfying the sign condition whose image of
/// every convergent cusp up to conv_depth is equisingular to the source.
std::vector<UnimodularMatrix> surviving_matrices(const ExactEigenvalue& lambda, std::int64_t bound,
                                                 std::size_t conv_depth, unsigned shards = 0);

/// surviving_matrices, requiring at least two distinct convergent cusps
/// (insufficient_convergents otherwise). Expected result: {-id, +id}.
std::vector<UnimodularMatrix> classify_equisingular_matrices(const ExactEigenvalue& lambda, std::int64_t bound,
                                                             std::size_t conv_depth, unsigned shards = 0);

}  // namespace sepk::torusmaps
