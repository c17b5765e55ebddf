#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "sepk/exactnum/big_rational.hpp"
#include "sepk/exactnum/unimodular_matrix.hpp"

namespace sepk {

/// Real quadratic irrational (p + q*sqrt(d)) / r.
///
/// Canonical form: d > 1 squarefree, q != 0, r > 0, gcd(p, q, r) = 1. Every
/// instance is canonical, so equality of values is equality of fields.
class ExactEigenvalue {
 public:
  /// Canonicalizes; square factors of d move into q. Throws if the value is
  /// rational (q == 0 or d a perfect square) or r == 0.
  static ExactEigenvalue make(BigInt p, BigInt q, BigInt d, BigInt r);

  /// Parses "(p+q*sqrt(d))/r". Whitespace is ignored; "+-" and "-" are both
  /// accepted before q, "q*" may be omitted (q = 1) and "/r" may be omitted.
  static ExactEigenvalue parse(std::string_view text);

  const BigInt& p() const noexcept { return p_; }
  const BigInt& q() const noexcept { return q_; }
  const BigInt& d() const noexcept { return d_; }
  const BigInt& r() const noexcept { return r_; }

  int sign() const;
  double to_double() const;

  /// "(p+q*sqrt(d))/r", or "(p-q*sqrt(d))/r" for negative q.
  std::string to_string() const;

  friend bool operator==(const ExactEigenvalue&, const ExactEigenvalue&) = default;

 private:
  ExactEigenvalue() = default;

  BigInt p_, q_, d_, r_;
};

enum class ArithOp { add_int, sub_int, reciprocal, negate };

/// floor((p + q sqrt d) / r), exact.
BigInt ee_floor(const ExactEigenvalue& x);

/// `k` is used by add_int and sub_int only.
ExactEigenvalue ee_arith(const ExactEigenvalue& x, ArithOp op, const BigInt& k = 0);

inline ExactEigenvalue add_integer(const ExactEigenvalue& x, const BigInt& k) {
  return ee_arith(x, ArithOp::add_int, k);
}
inline ExactEigenvalue reciprocal(const ExactEigenvalue& x) { return ee_arith(x, ArithOp::reciprocal); }
inline ExactEigenvalue negate(const ExactEigenvalue& x) { return ee_arith(x, ArithOp::negate); }

/// Exact order of two values, which may live over different square roots.
std::strong_ordering compare(const ExactEigenvalue& x, const ExactEigenvalue& y);
std::strong_ordering compare(const ExactEigenvalue& x, const BigRational& y);

/// (c + d lambda) / (a + b lambda) for A = [[a, b], [c, d]].
ExactEigenvalue moebius_apply(const UnimodularMatrix& A, const ExactEigenvalue& lambda);

/// lambda / (lambda - 1), the quantity whose expansion is read off the
/// blow-up sequence of a separator with exponent lambda.
ExactEigenvalue node_transform(const ExactEigenvalue& lambda);

}  // namespace sepk
