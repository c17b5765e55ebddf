#pragma once

#include <complex>
#include <cstddef>
#include <utility>

#include "sepk/exactnum/unimodular_matrix.hpp"

namespace sepk::torusmaps {

using Complex = std::complex<double>;

inline constexpr double kUnitModulusTolerance = 1e-12;

/// Throws not_unit_modulus unless ||z| - 1| <= kUnitModulusTolerance.
void require_unit_modulus(Complex z, const char* name);

/// (mu0 eta^a xi^b, nu0 eta^c xi^d). All inputs must have unit modulus.
std::pair<Complex, Complex> torus_monomial_map(const UnimodularMatrix& A, Complex mu0, Complex nu0, Complex eta,
                                               Complex xi);

/// (c + d lambda) / (a + b lambda): image slope of slope-lambda lines under
/// (u, v) -> (a u + b v, c u + d v). Throws pole when a + b lambda == 0.
double slope_transport(const UnimodularMatrix& A, double lambda);

/// Maps the angle line {(e^{2 pi i u}, e^{2 pi i lambda u}) : 0 <= u <= span}
/// at `count` points and returns the largest deviation, in turns, of the
/// unwrapped image angles from the line of slope `claimed_slope` through the
/// first image point.
double line_image_residual(const UnimodularMatrix& A, Complex mu0, Complex nu0, double lambda, double claimed_slope,
                           std::size_t count, double span = 1.0);

/// z^k for |z| = 1 and integer k, by repeated squaring.
Complex unit_power(Complex z, long long k);

}  // namespace sepk::torusmaps
