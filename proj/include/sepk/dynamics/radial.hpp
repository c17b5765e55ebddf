#pragma once

#include <cstdint>
#include <utility>

#include "sepk/torusmaps/torus_maps.hpp"

namespace sepk::dynamics {

using torusmaps::Complex;

inline constexpr double kDomainTolerance = 1e-12;

/// (x, y) = (t^alpha eta, t^beta xi) with max(|eta|, |xi|) = 1.
struct BidiscRadialCoords {
  double t = 0.0;
  Complex eta;
  Complex xi;
  double alpha = 1.0;
  double beta = 1.0;
};

/// t = max(|x|^(1/alpha), |y|^(1/beta)). Throws origin for (0, 0) and
/// invalid_argument outside the closed unit bidisc.
BidiscRadialCoords radial_decompose(Complex x, Complex y, double alpha, double beta);

/// (t^alpha eta, t^beta xi).
std::pair<Complex, Complex> radial_compose(const BidiscRadialCoords& c);

enum class MapDirection { forward, inverse };

/// Forward: decompose with exponents (m, n), return (t eta, t^lambda xi).
/// Inverse: decompose with exponents (1, lambda), return (t^m eta, t^n xi).
/// Fixes the origin and the boundary of the bidisc.
std::pair<Complex, Complex> lemma_mn_map(Complex x, Complex y, std::int64_t m, std::int64_t n, double lambda,
                                         MapDirection direction);

}  // namespace sepk::dynamics
