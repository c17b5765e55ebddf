#include "sepk/exactnum/big_rational.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "sepk/exactnum/errors.hpp"

namespace sepk {

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;  // truncates toward zero
  if (num % den != 0 && num.sign() < 0) --q;
  return q;
}

BigRational::BigRational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

BigInt BigRational::floor() const { return floor_div(num_, den_); }

double BigRational::to_double() const {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  return static_cast<double>(Dec(num_) / Dec(den_));
}

std::string BigRational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

BigRational BigRational::reciprocal() const {
  if (num_ == 0) throw Error(ErrorKind::reciprocal_of_zero, "reciprocal of zero rational");
  return BigRational(den_, num_);
}

BigRational operator+(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BigRational operator-(const BigRational& a, const BigRational& b) { return a + (-b); }

BigRational operator*(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.num_, a.den_ * b.den_);
}

BigRational operator/(const BigRational& a, const BigRational& b) { return a * b.reciprocal(); }

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace sepk
