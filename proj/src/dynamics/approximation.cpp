#include "sepk/dynamics/approximation.hpp"

#include <cmath>
#include <limits>

#include "sepk/exactnum/cf_expansion.hpp"
#include "sepk/exactnum/errors.hpp"

namespace sepk::dynamics {

ApproxCurve approx_curve(const ExactEigenvalue& lambda, std::size_t conv_index, const SeparatorMapSpec& spec) {
  if (conv_index == 0) throw Error(ErrorKind::invalid_argument, "conv_index is 1-based");
  if (lambda.sign() <= 0) throw Error(ErrorKind::invalid_argument, "lambda must be positive");
  spec.validate();
  if (!(std::abs(spec.lambda - lambda.to_double()) <= 1e-9)) {
    throw Error(ErrorKind::slope_mismatch, "map spec lambda differs from the exact eigenvalue");
  }

  const BigRational conv = convergents(cf_expand(lambda, conv_index), conv_index).back();
  const BigInt limit = std::numeric_limits<std::int64_t>::max();
  if (conv.numerator() == 0) throw Error(ErrorKind::invalid_argument, "convergent 0 does not define a curve");
  if (conv.numerator() > limit || conv.denominator() > limit) {
    throw Error(ErrorKind::invalid_argument, "convergent " + conv.to_string() + " exceeds 64-bit range");
  }
  const auto source = equising::CuspSpec::make(static_cast<std::int64_t>(conv.denominator()),
                                               static_cast<std::int64_t>(conv.numerator()));

  const BigInt x = BigInt(spec.A.a()) * source.m + BigInt(spec.A.b()) * source.n;
  const BigInt y = BigInt(spec.A.c()) * source.m + BigInt(spec.A.d()) * source.n;
  if (!((x > 0 && y > 0) || (x < 0 && y < 0))) {
    throw Error(ErrorKind::sign_condition, "am+bn = " + x.str() + " and cm+dn = " + y.str() + " for convergent " +
                                               conv.to_string() + " do not share a sign");
  }
  const BigInt ax = abs(x);
  const BigInt ay = abs(y);
  if (ax > limit || ay > limit) throw Error(ErrorKind::invalid_argument, "image cusp exceeds 64-bit range");
  const auto image = equising::CuspSpec::make(static_cast<std::int64_t>(ax), static_cast<std::int64_t>(ay));
  return ApproxCurve{conv, source, image, {spec.mu0, spec.nu0}, equising::equisingular_cusps(source, image)};
}

}  // namespace sepk::dynamics
