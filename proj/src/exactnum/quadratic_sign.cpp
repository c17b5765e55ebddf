#include "sepk/exactnum/quadratic_sign.hpp"

#include "sepk/exactnum/errors.hpp"

namespace sepk {

namespace {

int sign_of(const BigInt& v) { return v.sign(); }

}  // namespace

int sign_of_surd(const BigInt& a, const BigInt& b, const BigInt& radicand) {
  if (radicand.sign() < 0) throw Error(ErrorKind::invalid_argument, "negative radicand");
  const int sa = sign_of(a);
  const int sb = (radicand == 0) ? 0 : sign_of(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger magnitude wins.
  const BigInt lhs = a * a;
  const BigInt rhs = b * b * radicand;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

int sign_of_two_surds(const BigInt& a, const BigInt& b, const BigInt& d1, const BigInt& c,
                      const BigInt& d2) {
  // s = b*sqrt(d1) + c*sqrt(d2); its sign comes from comparing squares.
  const int sx = (d1 == 0) ? 0 : b.sign();
  const int sy = (d2 == 0) ? 0 : c.sign();
  int ss = 0;
  if (sx == 0) {
    ss = sy;
  } else if (sy == 0 || sx == sy) {
    ss = sx;
  } else {
    const BigInt x2 = b * b * d1;
    const BigInt y2 = c * c * d2;
    ss = (x2 > y2) ? sx : (x2 < y2 ? sy : 0);
  }
  const int sa = a.sign();
  if (ss == 0) return sa;
  if (sa == 0 || sa == ss) return ss;
  // Opposite signs: compare a^2 with s^2 = b^2 d1 + c^2 d2 + 2bc sqrt(d1 d2).
  const BigInt rational_part = a * a - b * b * d1 - c * c * d2;
  const int cmp = sign_of_surd(rational_part, -2 * b * c, d1 * d2);
  if (cmp > 0) return sa;
  if (cmp < 0) return ss;
  return 0;
}

BigInt floor_of_surd(const BigInt& b, const BigInt& radicand) {
  if (radicand.sign() < 0) throw Error(ErrorKind::invalid_argument, "negative radicand");
  const BigInt square = b * b * radicand;
  const BigInt root = boost::multiprecision::sqrt(square);
  if (b.sign() >= 0) return root;
  // b*sqrt(D) = -sqrt(square); floor is -root when exact, otherwise -(root+1).
  return (root * root == square) ? BigInt(-root) : BigInt(-root - 1);
}

}  // namespace sepk
