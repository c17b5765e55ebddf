#include "sepk/dynamics/radial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sepk/exactnum/errors.hpp"

namespace sepk::dynamics {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw Error(ErrorKind::invalid_argument, std::string(name) + " must be positive");
}

}  // namespace

BidiscRadialCoords radial_decompose(Complex x, Complex y, double alpha, double beta) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  if (!(ax <= 1.0 + kDomainTolerance && ay <= 1.0 + kDomainTolerance)) {
    throw Error(ErrorKind::invalid_argument, "point lies outside the closed unit bidisc");
  }
  if (ax == 0.0 && ay == 0.0) throw Error(ErrorKind::origin, "the origin has no radial decomposition");

  const double tx = std::pow(ax, 1.0 / alpha);
  const double ty = std::pow(ay, 1.0 / beta);
  const double t = std::max(tx, ty);
  return BidiscRadialCoords{t, x / std::pow(t, alpha), y / std::pow(t, beta), alpha, beta};
}

std::pair<Complex, Complex> radial_compose(const BidiscRadialCoords& c) {
  return {std::pow(c.t, c.alpha) * c.eta, std::pow(c.t, c.beta) * c.xi};
}

std::pair<Complex, Complex> lemma_mn_map(Complex x, Complex y, std::int64_t m, std::int64_t n, double lambda,
                                         MapDirection direction) {
  if (m <= 0 || n <= 0 || std::gcd(m, n) != 1) {
    throw Error(ErrorKind::invalid_argument, "m, n must be coprime positive integers");
  }
  require_positive(lambda, "lambda");
  if (x == Complex{} && y == Complex{}) return {x, y};

  if (direction == MapDirection::forward) {
    const auto c = radial_decompose(x, y, static_cast<double>(m), static_cast<double>(n));
    return {c.t * c.eta, std::pow(c.t, lambda) * c.xi};
  }
  const auto c = radial_decompose(x, y, 1.0, lambda);
  return {std::pow(c.t, static_cast<double>(m)) * c.eta, std::pow(c.t, static_cast<double>(n)) * c.xi};
}

}  // namespace sepk::dynamics
