#pragma once

#include <cstddef>
#include <utility>

#include "sepk/dynamics/radial.hpp"
#include "sepk/exactnum/unimodular_matrix.hpp"

namespace sepk::dynamics {

/// Boundary data of a map between the separators |y| = |x|^lambda and
/// |y| = |x|^lambda_tilde.
struct SeparatorMapSpec {
  UnimodularMatrix A = UnimodularMatrix::identity();
  Complex mu0{1.0, 0.0};
  Complex nu0{1.0, 0.0};
  double lambda = 0.0;
  double lambda_tilde = 0.0;

  /// Fills lambda_tilde = slope_transport(A, lambda) and validates.
  static SeparatorMapSpec make(const UnimodularMatrix& A, Complex mu0, Complex nu0, double lambda);

  /// Throws not_unit_modulus, invalid_argument for lambda <= 0, sign_condition
  /// for lambda_tilde <= 0, slope_mismatch if lambda_tilde is off by > 1e-9.
  void validate() const;
};

/// (t mu0 eta^a xi^b, t^lambda_tilde nu0 eta^c xi^d) for t in [0, 1].
std::pair<Complex, Complex> separator_boundary_map(const SeparatorMapSpec& spec, double t, Complex eta, Complex xi);

struct SeparatorMapResiduals {
  /// max ||y~| - |x~|^lambda_tilde| over the samples.
  double max_on_target = 0.0;
  /// max deviation, in turns, of the image of the angle line (u, lambda u)
  /// from the line of slope lambda_tilde through its first point.
  double max_leaf_slope = 0.0;
};

/// Samples `count` points (t_k, u_k) of the leaf through (1, 1), with
/// t_k in (0, 1] and u_k in [0, span].
SeparatorMapResiduals separator_map_residuals(const SeparatorMapSpec& spec, std::size_t count, double span = 1.0);

}  // namespace sepk::dynamics
