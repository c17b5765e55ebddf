#include "sepk/exactnum/exact_eigenvalue.hpp"

#include <cctype>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "sepk/exactnum/errors.hpp"
#include "sepk/exactnum/quadratic_sign.hpp"

namespace sepk {

namespace {

// Factors above this bound are not searched; radicands that large are rejected.
const BigInt kMaxRadicand = BigInt(1) << 62;

// Splits d = s^2 * core with core squarefree.
std::pair<BigInt, BigInt> split_square(BigInt d) {
  if (d > kMaxRadicand) throw Error(ErrorKind::invalid_argument, "radicand too large: " + d.str());
  BigInt s = 1;
  for (BigInt f = 2; f * f <= d; ++f) {
    const BigInt f2 = f * f;
    while (d % f2 == 0) {
      d /= f2;
      s *= f;
    }
  }
  return {s, d};
}

class Cursor {
 public:
  explicit Cursor(std::string text) : text_(std::move(text)) {}

  bool done() const { return pos_ == text_.size(); }
  bool peek(char ch) const { return pos_ < text_.size() && text_[pos_] == ch; }
  bool accept(char ch) {
    if (!peek(ch)) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }
  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
  BigInt integer() {
    bool negative = false;
    while (peek('-') || peek('+')) negative ^= (text_[pos_++] == '-');
    if (!at_digit()) fail("expected integer");
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    BigInt v(text_.substr(start, pos_ - start));
    return negative ? BigInt(-v) : v;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::parse, why + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExactEigenvalue ExactEigenvalue::make(BigInt p, BigInt q, BigInt d, BigInt r) {
  if (r == 0) throw Error(ErrorKind::invalid_argument, "zero denominator r");
  if (d.sign() <= 0) throw Error(ErrorKind::invalid_argument, "radicand d must be positive");
  if (q == 0) throw Error(ErrorKind::invalid_argument, "q = 0 gives a rational value");
  auto [s, core] = split_square(std::move(d));
  if (core == 1) throw Error(ErrorKind::invalid_argument, "perfect-square radicand gives a rational value");
  q *= s;
  if (r.sign() < 0) {
    p = -p;
    q = -q;
    r = -r;
  }
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(p, q), r);
  ExactEigenvalue out;
  out.p_ = p / g;
  out.q_ = q / g;
  out.d_ = std::move(core);
  out.r_ = r / g;
  return out;
}

ExactEigenvalue ExactEigenvalue::parse(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  Cursor cur(compact);
  const bool wrapped = cur.accept('(');
  const BigInt p = cur.integer();
  bool negative = false;
  bool saw_sign = false;
  for (;;) {
    if (cur.accept('-')) {
      negative = !negative;
    } else if (!cur.accept('+')) {
      break;
    }
    saw_sign = true;
  }
  if (!saw_sign) cur.fail("expected '+' or '-' before the surd");
  BigInt q = 1;
  if (cur.at_digit()) {
    q = cur.integer();
    cur.expect('*');
  }
  if (!cur.accept(std::string_view("sqrt("))) cur.fail("expected 'sqrt('");
  const BigInt d = cur.integer();
  cur.expect(')');
  if (wrapped) cur.expect(')');
  BigInt r = 1;
  if (cur.accept('/')) {
    if (!wrapped) cur.fail("denominator requires the parenthesized form");
    r = cur.integer();
  }
  if (!cur.done()) cur.fail("trailing characters");
  if (r == 0) throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
  try {
    return make(p, negative ? BigInt(-q) : q, d, r);
  } catch (const Error& e) {
    throw Error(ErrorKind::parse, std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

int ExactEigenvalue::sign() const { return sign_of_surd(p_, q_, d_); }

double ExactEigenvalue::to_double() const {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  const Dec value = (Dec(p_) + Dec(q_) * boost::multiprecision::sqrt(Dec(d_))) / Dec(r_);
  return static_cast<double>(value);
}

std::string ExactEigenvalue::to_string() const {
  std::string out = "(" + p_.str();
  out += q_.sign() < 0 ? "-" : "+";
  out += BigInt(boost::multiprecision::abs(q_)).str() + "*sqrt(" + d_.str() + "))/" + r_.str();
  return out;
}

BigInt ee_floor(const ExactEigenvalue& x) {
  // With f = floor(q sqrt d) and q sqrt d irrational, p + f <= p + q sqrt d < p + f + 1,
  // so dividing by r > 0 and flooring only depends on the integer p + f.
  return floor_div(x.p() + floor_of_surd(x.q(), x.d()), x.r());
}

ExactEigenvalue ee_arith(const ExactEigenvalue& x, ArithOp op, const BigInt& k) {
  switch (op) {
    case ArithOp::add_int:
      return ExactEigenvalue::make(x.p() + k * x.r(), x.q(), x.d(), x.r());
    case ArithOp::sub_int:
      return ExactEigenvalue::make(x.p() - k * x.r(), x.q(), x.d(), x.r());
    case ArithOp::negate:
      return ExactEigenvalue::make(-x.p(), -x.q(), x.d(), x.r());
    case ArithOp::reciprocal: {
      // r / (p + q sqrt d) = r (p - q sqrt d) / (p^2 - q^2 d)
      const BigInt norm = x.p() * x.p() - x.q() * x.q() * x.d();
      if (norm == 0) throw Error(ErrorKind::reciprocal_of_zero, "reciprocal of zero");
      return ExactEigenvalue::make(x.r() * x.p(), -x.r() * x.q(), x.d(), norm);
    }
  }
  throw Error(ErrorKind::invalid_argument, "unknown arithmetic op");
}

std::strong_ordering compare(const ExactEigenvalue& x, const ExactEigenvalue& y) {
  int s = 0;
  if (x.d() == y.d()) {
    // x - y = (p1 r2 - p2 r1 + (q1 r2 - q2 r1) sqrt d) / (r1 r2)
    s = sign_of_surd(x.p() * y.r() - y.p() * x.r(), x.q() * y.r() - y.q() * x.r(), x.d());
  } else {
    s = sign_of_two_surds(x.p() * y.r() - y.p() * x.r(), x.q() * y.r(), x.d(), -y.q() * x.r(), y.d());
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const ExactEigenvalue& x, const BigRational& y) {
  // x - n/m = (m p - r n + m q sqrt d) / (r m)
  const BigInt& n = y.numerator();
  const BigInt& m = y.denominator();
  const int s = sign_of_surd(m * x.p() - x.r() * n, m * x.q(), x.d());
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExactEigenvalue moebius_apply(const UnimodularMatrix& A, const ExactEigenvalue& lambda) {
  const BigInt a(A.a()), b(A.b()), c(A.c()), dd(A.d());
  const BigInt& p = lambda.p();
  const BigInt& q = lambda.q();
  const BigInt& r = lambda.r();
  const BigInt& d = lambda.d();
  // numerator (c + dd lambda) * r = n0 + n1 sqrt d, denominator (a + b lambda) * r = m0 + m1 sqrt d
  const BigInt n0 = c * r + dd * p;
  const BigInt n1 = dd * q;
  const BigInt m0 = a * r + b * p;
  const BigInt m1 = b * q;
  if (m0 == 0 && m1 == 0) throw Error(ErrorKind::pole, "pole: a + b*lambda = 0");
  const BigInt norm = m0 * m0 - m1 * m1 * d;
  return ExactEigenvalue::make(n0 * m0 - n1 * m1 * d, n1 * m0 - n0 * m1, d, norm);
}

ExactEigenvalue node_transform(const ExactEigenvalue& lambda) {
  // lambda / (lambda - 1) = 1 + 1 / (lambda - 1)
  return add_integer(reciprocal(add_integer(lambda, -1)), 1);
}

}  // namespace sepk
