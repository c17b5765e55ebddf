#include "sepk/torusmaps/torus_maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sepk/exactnum/errors.hpp"

namespace sepk::torusmaps {

void require_unit_modulus(Complex z, const char* name) {
  if (!(std::abs(std::abs(z) - 1.0) <= kUnitModulusTolerance)) {
    throw Error(ErrorKind::not_unit_modulus, std::string(name) + " must have unit modulus");
  }
}

Complex unit_power(Complex z, long long k) {
  if (k < 0) {
    z = std::conj(z);
    k = -k;
  }
  Complex out{1.0, 0.0};
  while (k > 0) {
    if (k & 1) out *= z;
    z *= z;
    k >>= 1;
  }
  return out;
}

std::pair<Complex, Complex> torus_monomial_map(const UnimodularMatrix& A, Complex mu0, Complex nu0, Complex eta,
                                               Complex xi) {
  require_unit_modulus(mu0, "mu0");
  require_unit_modulus(nu0, "nu0");
  require_unit_modulus(eta, "eta");
  require_unit_modulus(xi, "xi");
  return {mu0 * unit_power(eta, A.a()) * unit_power(xi, A.b()),
          nu0 * unit_power(eta, A.c()) * unit_power(xi, A.d())};
}

double slope_transport(const UnimodularMatrix& A, double lambda) {
  const double den = static_cast<double>(A.a()) + static_cast<double>(A.b()) * lambda;
  if (den == 0.0) throw Error(ErrorKind::pole, "a + b*lambda vanishes");
  return (static_cast<double>(A.c()) + static_cast<double>(A.d()) * lambda) / den;
}

double line_image_residual(const UnimodularMatrix& A, Complex mu0, Complex nu0, double lambda, double claimed_slope,
                           std::size_t count, double span) {
  if (count < 2) throw Error(ErrorKind::invalid_argument, "need at least 2 samples");
  const double turn = 2.0 * std::numbers::pi;
  double prev[2] = {0.0, 0.0};
  double unwrapped[2] = {0.0, 0.0};
  double start[2] = {0.0, 0.0};
  double worst = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const double u = span * static_cast<double>(k) / static_cast<double>(count - 1);
    const auto [x, y] = torus_monomial_map(A, mu0, nu0, std::polar(1.0, turn * u), std::polar(1.0, turn * lambda * u));
    const double raw[2] = {std::arg(x) / turn, std::arg(y) / turn};
    for (int c = 0; c < 2; ++c) {
      if (k == 0) {
        unwrapped[c] = start[c] = raw[c];
      } else {
        const double step = raw[c] - prev[c];
        unwrapped[c] += step - std::round(step);
      }
      prev[c] = raw[c];
    }
    worst = std::max(worst, std::abs((unwrapped[1] - start[1]) - claimed_slope * (unwrapped[0] - start[0])));
  }
  return worst;
}

}  // namespace sepk::torusmaps
