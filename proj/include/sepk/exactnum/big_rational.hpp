#pragma once

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sepk {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number kept in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(BigInt numerator, BigInt denominator = 1);  // NOLINT: implicit from integers is intended
  BigRational(long long value) : BigRational(BigInt(value)) {}  // NOLINT

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_integer() const noexcept { return den_ == 1; }

  /// Largest integer not exceeding the value.
  BigInt floor() const;
  double to_double() const;
  std::string to_string() const;

  BigRational operator-() const { return BigRational(-num_, den_, Canonical{}); }
  BigRational reciprocal() const;

  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b);
  friend BigRational operator*(const BigRational& a, const BigRational& b);
  friend BigRational operator/(const BigRational& a, const BigRational& b);

  friend bool operator==(const BigRational& a, const BigRational& b) = default;
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

 private:
  struct Canonical {};
  BigRational(BigInt n, BigInt d, Canonical) : num_(std::move(n)), den_(std::move(d)) {}

  BigInt num_ = 0;
  BigInt den_ = 1;
};

/// Floor division for arbitrary signs, `den` must be positive.
BigInt floor_div(const BigInt& num, const BigInt& den);

}  // namespace sepk
