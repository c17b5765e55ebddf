#pragma once

#include <cstddef>
#include <utility>

#include "sepk/dynamics/separator_maps.hpp"
#include "sepk/equising/equisingularity.hpp"
#include "sepk/exactnum/big_rational.hpp"
#include "sepk/exactnum/exact_eigenvalue.hpp"

namespace sepk::dynamics {

/// The monomial curve {(z^m, z^n)} for a convergent n/m of lambda and its
/// image {(mu0 z^m~, nu0 z^n~)} under the boundary map of `spec`.
struct ApproxCurve {
  BigRational convergent;
  equising::CuspSpec source;
  equising::CuspSpec image;
  std::pair<Complex, Complex> phases;
  bool equisingular = false;
};

/// conv_index is 1-based: index 1 is the integer part of lambda over 1.
/// Throws sign_condition unless am + bn and cm + dn are both positive or both
/// negative, slope_mismatch if spec.lambda is not lambda within 1e-9.
ApproxCurve approx_curve(const ExactEigenvalue& lambda, std::size_t conv_index, const SeparatorMapSpec& spec);

}  // namespace sepk::dynamics
