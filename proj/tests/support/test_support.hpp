#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>

#include "sepk/exactnum/exact_eigenvalue.hpp"
#include "sepk/exactnum/unimodular_matrix.hpp"

namespace sepk::testing {

inline std::uint64_t test_seed() {
  const char* raw = std::getenv("SEPK_SEED");
  if (raw == nullptr || *raw == '\0') return 20240611;
  return std::strtoull(raw, nullptr, 10);
}

inline ExactEigenvalue ee(const std::string& text) { return ExactEigenvalue::parse(text); }

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline const std::int64_t kRadicands[] = {2, 3, 5, 6, 7, 10, 11, 13};

/// Random canonical (p + q sqrt d) / r with small coefficients.
inline ExactEigenvalue random_quadratic(std::mt19937_64& rng, std::int64_t coeff = 50) {
  const std::int64_t d = kRadicands[uniform(rng, 0, 7)];
  std::int64_t q = 0;
  while (q == 0) q = uniform(rng, -coeff / 2, coeff / 2);
  return ExactEigenvalue::make(uniform(rng, -coeff, coeff), q, d, uniform(rng, 1, 30));
}

/// Random quadratic irrational in (lo, hi), lo >= 0.
inline ExactEigenvalue random_in_range(std::mt19937_64& rng, double lo, double hi, const std::int64_t* radicands,
                                       std::size_t n_radicands) {
  for (;;) {
    const std::int64_t d = radicands[uniform(rng, 0, static_cast<std::int64_t>(n_radicands) - 1)];
    std::int64_t q = 0;
    while (q == 0) q = uniform(rng, -12, 12);
    const auto x = ExactEigenvalue::make(uniform(rng, -40, 40), q, d, uniform(rng, 1, 12));
    const double v = x.to_double();
    if (v > lo && v < hi) return x;
  }
}

/// Random det-1 matrix with entries in [-max_entry, max_entry].
inline UnimodularMatrix random_unimodular(std::mt19937_64& rng, std::int64_t max_entry) {
  for (;;) {
    const std::int64_t a = uniform(rng, -max_entry, max_entry);
    const std::int64_t b = uniform(rng, -max_entry, max_entry);
    if (std::gcd(a, b) != 1) continue;
    // Extended Euclid: a x + b y = 1.
    std::int64_t r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
      const std::int64_t t = r0 / r1;
      r0 -= t * r1;
      std::swap(r0, r1);
      x0 -= t * x1;
      std::swap(x0, x1);
      y0 -= t * y1;
      std::swap(y0, y1);
    }
    if (r0 < 0) {
      x0 = -x0;
      y0 = -y0;
    }
    // a d - b c = 1 with d = x0 + k b, c = -y0 + k a.
    const std::int64_t k = uniform(rng, -3, 3);
    const std::int64_t c = -y0 + k * a;
    const std::int64_t d = x0 + k * b;
    if (std::llabs(c) > max_entry || std::llabs(d) > max_entry) continue;
    return UnimodularMatrix::make(a, b, c, d);
  }
}

}  // namespace sepk::testing
