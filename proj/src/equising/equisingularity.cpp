#include "sepk/equising/equisingularity.hpp"

#include <cmath>
#include <numeric>

#include "sepk/blowup/resolution.hpp"
#include "sepk/exactnum/errors.hpp"

namespace sepk::equising {

SeparatorSpec SeparatorSpec::make(const ExactEigenvalue& eigenvalue, double scale) {
  if (eigenvalue.sign() <= 0) throw Error(ErrorKind::invalid_argument, "separator eigenvalue must be positive");
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorKind::invalid_argument, "separator scale must be a positive real");
  }
  return SeparatorSpec{eigenvalue, scale};
}

CuspSpec CuspSpec::make(std::int64_t m, std::int64_t n) {
  if (m <= 0 || n <= 0) throw Error(ErrorKind::invalid_argument, "cusp exponents must be positive");
  if (std::gcd(m, n) != 1) {
    throw Error(ErrorKind::invalid_argument,
                "cusp exponents " + std::to_string(m) + "," + std::to_string(n) + " are not coprime");
  }
  return CuspSpec{m, n};
}

ExactEigenvalue normalize(const ExactEigenvalue& lambda) {
  if (lambda.sign() <= 0) throw Error(ErrorKind::invalid_argument, "eigenvalue must be positive");
  return compare(lambda, BigRational(1)) > 0 ? lambda : reciprocal(lambda);
}

bool equisingular_separators(const SeparatorSpec& s1, const SeparatorSpec& s2) {
  return compare(normalize(s1.eigenvalue), normalize(s2.eigenvalue)) == 0;
}

bool equisingular_prefix(const SeparatorSpec& s1, const SeparatorSpec& s2, std::size_t depth) {
  const auto m1 = blowup::proximity_matrix(blowup::resolve(s1.eigenvalue, depth));
  const auto m2 = blowup::proximity_matrix(blowup::resolve(s2.eigenvalue, depth));
  return m1 == m2;
}

bool equisingular_cusps(const CuspSpec& c1, const CuspSpec& c2) {
  return (c1.m == c2.m && c1.n == c2.n) || (c1.m == c2.n && c1.n == c2.m);
}

Certificate certify(const SeparatorSpec& s1, const SeparatorSpec& s2) {
  Certificate cert{false, normalize(s1.eigenvalue), normalize(s2.eigenvalue), std::nullopt, std::nullopt, 0, 0, 0};
  cert.equisingular = compare(cert.normalized_1, cert.normalized_2) == 0;

  ExactEigenvalue x1 = node_transform(cert.normalized_1);
  ExactEigenvalue x2 = node_transform(cert.normalized_2);
  if (cert.equisingular) {
    // Preperiod plus one full period.
    const CFExpansion probe = cf_expand(x1, 1);
    const std::size_t len = probe.has_period() ? *probe.period_start + probe.period.size() : 1;
    cert.shared_expansion = cf_expand(x1, std::max<std::size_t>(len, 1));
    return cert;
  }

  // Distinct irrationals have expansions that differ at a finite index.
  std::size_t index = 0;
  BigInt total = 0;
  for (;; ++index) {
    if (index > kPeriodSearchLimit) {
      throw Error(ErrorKind::insufficient_depth, "expansions agree beyond the search limit");
    }
    const BigInt a1 = ee_floor(x1);
    const BigInt a2 = ee_floor(x2);
    total += (a1 > a2 ? a1 : a2);
    if (a1 != a2) {
      cert.first_disagreement = index;
      cert.entry_1 = a1;
      cert.entry_2 = a2;
      break;
    }
    x1 = reciprocal(add_integer(x1, -a1));
    x2 = reciprocal(add_integer(x2, -a2));
  }

  // Proximity matrices are determined by the runs up to the disagreement.
  const std::size_t horizon = static_cast<std::size_t>(total) + 2;
  const auto m1 = blowup::proximity_matrix(blowup::resolve(s1.eigenvalue, horizon));
  const auto m2 = blowup::proximity_matrix(blowup::resolve(s2.eigenvalue, horizon));
  for (std::size_t row = 0; row < horizon; ++row) {
    if (m1[row] != m2[row]) {
      cert.witness_depth = row + 1;
      break;
    }
  }
  if (cert.witness_depth == 0) {
    throw Error(ErrorKind::insufficient_depth, "no proximity witness within depth " + std::to_string(horizon));
  }
  return cert;
}

}  // namespace sepk::equising
