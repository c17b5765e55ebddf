#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "sepk/exactnum/unimodular_matrix.hpp"

namespace sepk::torusmaps {

using Point = std::array<double, 2>;

inline constexpr std::size_t kDefaultGridSize = 64;
inline constexpr double kReconstructionTolerance = 1e-9;
inline constexpr double kRoundingTolerance = 1e-6;

/// Plane map H sampled on the closed grid (u, v) = (i/n, j/n), 0 <= i, j <= n.
/// The closing row and column carry the deck relation across one period.
struct LiftSample {
  std::size_t n = kDefaultGridSize;
  std::vector<Point> values;  // values[i * (n + 1) + j] = H(i/n, j/n)
  UnimodularMatrix A = UnimodularMatrix::identity();
  double lambda = 0.0;
  double lambda_tilde = 0.0;

  std::size_t side() const noexcept { return n + 1; }
  const Point& at(std::size_t i, std::size_t j) const { return values[i * side() + j]; }
  Point& at(std::size_t i, std::size_t j) { return values[i * side() + j]; }
};

/// Samples H on an n-grid.
LiftSample sample_lift(const std::function<Point(double, double)>& H, std::size_t n, const UnimodularMatrix& A,
                       double lambda, double lambda_tilde);

struct ResidualReport {
  /// max |H(u+e) - H(u) - A e| over closing pairs, e = (1,0), (0,1).
  double max_deck_residual = 0.0;
  /// max |D_2 - lambda_tilde D_1|, D = H - H(0,0) - A(u, v).
  double max_parallel_residual = 0.0;
  /// max |kappa(u+e) - kappa(u)| over closing pairs.
  double max_periodicity_residual = 0.0;

  double worst() const noexcept;
  friend bool operator==(const ResidualReport&, const ResidualReport&) = default;
};

/// H = base + A(u, v) + kappa(u, v) (1, lambda_tilde).
struct LiftDecomposition {
  Point base{0.0, 0.0};
  UnimodularMatrix A = UnimodularMatrix::identity();
  double lambda = 0.0;
  double lambda_tilde = 0.0;
  std::size_t n = kDefaultGridSize;
  std::vector<double> kappa;  // same layout as LiftSample::values
  ResidualReport residuals;

  std::size_t side() const noexcept { return n + 1; }
  double kappa_at(std::size_t i, std::size_t j) const { return kappa[i * side() + j]; }
  friend bool operator==(const LiftDecomposition&, const LiftDecomposition&) = default;
};

/// Splits a sampled lift. Throws slope_mismatch if lambda_tilde is not
/// slope_transport(A, lambda) within 1e-9, and residual_exceeded, naming the
/// worst grid cell, if any residual is above `tolerance`.
LiftDecomposition decompose_lift(const LiftSample& s, double tolerance = kReconstructionTolerance);

/// Residuals of a sample without the tolerance check.
ResidualReport lift_residuals(const LiftSample& s);

/// Rebuilds the sample H = base + A(u, v) + kappa (1, lambda_tilde).
LiftSample synthesize_lift(const LiftDecomposition& D);

/// H sampled on (u, v) = (i/per_unit, j/per_unit), 0 <= i, j < 2 per_unit,
/// covering [0, 2)^2.
struct PlaneMapSamples {
  std::size_t per_unit = kDefaultGridSize;
  std::vector<Point> values;  // values[i * 2 per_unit + j]

  std::size_t side() const noexcept { return 2 * per_unit; }
  const Point& at(std::size_t i, std::size_t j) const { return values[i * side() + j]; }
};

PlaneMapSamples sample_plane_map(const std::function<Point(double, double)>& H, std::size_t per_unit);

/// Averages H(u+1, v) - H(u, v) and H(u, v+1) - H(u, v) into the columns of A
/// and rounds. Throws residual_exceeded if a difference is farther than
/// kRoundingTolerance from the rounded value, non_unimodular if det != 1.
UnimodularMatrix extract_deck_matrix(const PlaneMapSamples& H);

/// Real trigonometric polynomial
/// sum over |k|, |l| <= degree of c_kl cos 2pi(ku + lv) + s_kl sin 2pi(ku + lv).
struct TrigPolynomial {
  int degree = 0;
  std::vector<double> cos_coeffs;  // (2 degree + 1)^2, row-major in (k, l)
  std::vector<double> sin_coeffs;

  double operator()(double u, double v) const;
};

/// Coefficients drawn from `seed` and scaled so the absolute sum, a bound on
/// the sup norm, equals `amplitude`.
TrigPolynomial random_trig_polynomial(std::uint64_t seed, int degree, double amplitude);

/// Samples base + A(u, v) + kappa(u, v) (1, slope_transport(A, lambda)).
LiftSample synthetic_lift(const UnimodularMatrix& A, double lambda, const Point& base,
                          const std::function<double(double, double)>& kappa, std::size_t n = kDefaultGridSize);

/// (1 - s) D0 + s D1 on base and kappa. Residuals are the matching convex
/// combination, an upper bound for the interpolated map. Throws
/// matrix_mismatch when A differs and invalid_argument for other mismatches.
LiftDecomposition interpolate_lifts(const LiftDecomposition& D0, const LiftDecomposition& D1, double s);

}  // namespace sepk::torusmaps
