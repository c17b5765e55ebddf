#include "sepk/dynamics/separator_maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sepk/exactnum/errors.hpp"
#include "sepk/torusmaps/torus_maps.hpp"

namespace sepk::dynamics {

SeparatorMapSpec SeparatorMapSpec::make(const UnimodularMatrix& A, Complex mu0, Complex nu0, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw Error(ErrorKind::invalid_argument, "lambda must be positive");
  SeparatorMapSpec spec{A, mu0, nu0, lambda, torusmaps::slope_transport(A, lambda)};
  spec.validate();
  return spec;
}

void SeparatorMapSpec::validate() const {
  torusmaps::require_unit_modulus(mu0, "mu0");
  torusmaps::require_unit_modulus(nu0, "nu0");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw Error(ErrorKind::invalid_argument, "lambda must be positive");
  const double expected = torusmaps::slope_transport(A, lambda);
  if (!(expected > 0.0)) {
    throw Error(ErrorKind::sign_condition, "a + b*lambda and c + d*lambda differ in sign for " + A.to_string());
  }
  if (!(std::abs(expected - lambda_tilde) <= 1e-9)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "lambda_tilde " << lambda_tilde << " differs from slope_transport(A, lambda) = " << expected;
    throw Error(ErrorKind::slope_mismatch, msg.str());
  }
}

std::pair<Complex, Complex> separator_boundary_map(const SeparatorMapSpec& spec, double t, Complex eta, Complex xi) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::invalid_argument, "t must lie in [0, 1]");
  const auto [x, y] = torusmaps::torus_monomial_map(spec.A, spec.mu0, spec.nu0, eta, xi);
  return {t * x, std::pow(t, spec.lambda_tilde) * y};
}

SeparatorMapResiduals separator_map_residuals(const SeparatorMapSpec& spec, std::size_t count, double span) {
  if (count < 2) throw Error(ErrorKind::invalid_argument, "need at least 2 samples");
  spec.validate();
  const double turn = 2.0 * std::numbers::pi;
  SeparatorMapResiduals out;
  double prev[2] = {0.0, 0.0};
  double unwrapped[2] = {0.0, 0.0};
  double start[2] = {0.0, 0.0};
  for (std::size_t k = 0; k < count; ++k) {
    const double u = span * static_cast<double>(k) / static_cast<double>(count - 1);
    const double t = static_cast<double>(k + 1) / static_cast<double>(count);
    const auto [x, y] =
        separator_boundary_map(spec, t, std::polar(1.0, turn * u), std::polar(1.0, turn * spec.lambda * u));
    out.max_on_target = std::max(out.max_on_target, std::abs(std::abs(y) - std::pow(std::abs(x), spec.lambda_tilde)));

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
    out.max_leaf_slope = std::max(
        out.max_leaf_slope, std::abs((unwrapped[1] - start[1]) - spec.lambda_tilde * (unwrapped[0] - start[0])));
  }
  return out;
}

}  // namespace sepk::dynamics
