#include <doctest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "sepk/exactnum/big_rational.hpp"
#include "sepk/exactnum/cf_expansion.hpp"
#include "sepk/exactnum/errors.hpp"
#include "sepk/exactnum/exact_eigenvalue.hpp"
#include "sepk/exactnum/quadratic_sign.hpp"
#include "sepk/exactnum/unimodular_matrix.hpp"
#include "test_support.hpp"

using namespace sepk;
using sepk::testing::ee;

namespace {

using Dec200 = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<200>>;

Dec200 decimal(const ExactEigenvalue& x) {
  return (Dec200(x.p()) + Dec200(x.q()) * boost::multiprecision::sqrt(Dec200(x.d()))) / Dec200(x.r());
}

std::vector<long long> entries_of(const CFExpansion& cf) {
  std::vector<long long> out;
  for (const auto& e : cf.entries) out.push_back(static_cast<long long>(e));
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::invalid_argument;
}

}  // namespace

TEST_SUITE("big_rational") {
  TEST_CASE("normalizes sign and common factors") {
    const BigRational x(BigInt(6), BigInt(-4));
    CHECK(x.numerator() == -3);
    CHECK(x.denominator() == 2);
    CHECK(x.to_string() == "-3/2");
    CHECK(BigRational(4, 2).to_string() == "2");
    CHECK(BigRational(0, 7).denominator() == 1);
  }

  TEST_CASE("zero denominator is rejected") { CHECK(kind_of([] { BigRational(1, 0); }) == ErrorKind::invalid_argument); }

  TEST_CASE("arithmetic and order") {
    const BigRational a(1, 2), b(1, 3);
    CHECK((a + b) == BigRational(5, 6));
    CHECK((a - b) == BigRational(1, 6));
    CHECK((a * b) == BigRational(1, 6));
    CHECK((a / b) == BigRational(3, 2));
    CHECK(b < a);
    CHECK(-a < b);
    CHECK(BigRational(-7, 2).floor() == -4);
    CHECK(BigRational(7, 2).floor() == 3);
    CHECK(BigRational(-3, 4).reciprocal() == BigRational(-4, 3));
    CHECK(floor_div(-7, 2) == -4);
  }
}

TEST_SUITE("quadratic_sign") {
  TEST_CASE("single surd") {
    CHECK(sign_of_surd(-1, 1, 2) == 1);
    CHECK(sign_of_surd(-2, 1, 4) == 0);
    CHECK(sign_of_surd(3, -2, 2) == 1);
    CHECK(sign_of_surd(-3, 2, 2) == -1);
    CHECK(floor_of_surd(-1, 2) == -2);
    CHECK(floor_of_surd(7, 2) == 9);
  }

  TEST_CASE("two surds agree with 200-digit evaluation") {
    std::mt19937_64 rng(sepk::testing::test_seed());
    for (int i = 0; i < 2000; ++i) {
      const BigInt a = sepk::testing::uniform(rng, -60, 60);
      const BigInt b = sepk::testing::uniform(rng, -20, 20);
      const BigInt c = sepk::testing::uniform(rng, -20, 20);
      const BigInt d1 = sepk::testing::uniform(rng, 0, 30);
      const BigInt d2 = sepk::testing::uniform(rng, 0, 30);
      const Dec200 v = Dec200(a) + Dec200(b) * boost::multiprecision::sqrt(Dec200(d1)) +
                       Dec200(c) * boost::multiprecision::sqrt(Dec200(d2));
      const int expect = abs(v) < Dec200("1e-150") ? 0 : (v > 0 ? 1 : -1);
      CHECK(sign_of_two_surds(a, b, d1, c, d2) == expect);
    }
  }
}

TEST_SUITE("exact_eigenvalue") {
  TEST_CASE("canonical form") {
    const auto x = ExactEigenvalue::make(2, 4, 8, -6);
    // (2 + 8 sqrt 2) / -6 = (-1 - 4 sqrt 2) / 3
    CHECK(x.p() == -1);
    CHECK(x.q() == -4);
    CHECK(x.d() == 2);
    CHECK(x.r() == 3);
    CHECK(kind_of([] { ExactEigenvalue::make(1, 0, 2, 1); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { ExactEigenvalue::make(1, 1, 9, 1); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { ExactEigenvalue::make(1, 1, 2, 0); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { ExactEigenvalue::make(1, 1, -2, 1); }) == ErrorKind::invalid_argument);
  }

  TEST_CASE("parse and print") {
    CHECK(ee("(1+1*sqrt(5))/2").to_string() == "(1+1*sqrt(5))/2");
    CHECK(ee(" ( 1 + sqrt( 5 ) ) / 2 ") == ee("(1+1*sqrt(5))/2"));
    CHECK(ee("(3-2*sqrt(2))/1") == ee("(3+-2*sqrt(2))/1"));
    CHECK(ee("(0+1*sqrt(8))/1") == ee("(0+2*sqrt(2))/1"));
    for (const char* bad : {"", "sqrt", "(1+1*sqrt(4))/1", "(1+0*sqrt(2))/1", "(1+1*sqrt(2))/0", "(1+1*sqrt(2)",
                            "(a+1*sqrt(2))/1", "(1+1*sqrt(2))/1x"}) {
      CAPTURE(bad);
      CHECK(kind_of([&] { ee(bad); }) == ErrorKind::parse);
    }
    std::mt19937_64 rng(sepk::testing::test_seed());
    for (int i = 0; i < 200; ++i) {
      const auto x = sepk::testing::random_quadratic(rng);
      CHECK(ee(x.to_string()) == x);
    }
  }

  TEST_CASE("floor examples") {
    CHECK(ee_floor(ee("(1+1*sqrt(5))/2")) == 1);
    CHECK(ee_floor(ee("(0+1*sqrt(2))/1")) == 1);
    CHECK(ee_floor(ee("(3+1*sqrt(5))/2")) == 2);
    CHECK(ee_floor(ee("(0-1*sqrt(2))/1")) == -2);
  }

  TEST_CASE("floor agrees with 200-digit evaluation on 10^4 values") {
    std::mt19937_64 rng(sepk::testing::test_seed());
    int mismatches = 0;
    for (int i = 0; i < 10000; ++i) {
      const auto x = sepk::testing::random_quadratic(rng, 1000);
      const BigInt oracle(boost::multiprecision::floor(decimal(x)));
      if (ee_floor(x) != oracle) ++mismatches;
    }
    CHECK(mismatches == 0);
  }

  TEST_CASE("arithmetic examples") {
    CHECK(reciprocal(ee("(0+1*sqrt(2))/1")) == ee("(0+1*sqrt(2))/2"));
    CHECK(ee_arith(ee("(0+1*sqrt(2))/1"), ArithOp::sub_int, 1) == ee("(-1+1*sqrt(2))/1"));
    CHECK(negate(ee("(1+1*sqrt(5))/2")) == ee("(-1-1*sqrt(5))/2"));
    CHECK(ee_arith(ee("(1+1*sqrt(5))/2"), ArithOp::add_int, 3) == ee("(7+1*sqrt(5))/2"));
  }

  TEST_CASE("arithmetic matches decimal evaluation") {
    std::mt19937_64 rng(sepk::testing::test_seed() + 1);
    for (int i = 0; i < 500; ++i) {
      const auto x = sepk::testing::random_quadratic(rng);
      CHECK(abs(decimal(reciprocal(x)) * decimal(x) - 1) < Dec200("1e-150"));
      CHECK(abs(decimal(add_integer(x, 7)) - decimal(x) - 7) < Dec200("1e-150"));
      CHECK(negate(negate(x)) == x);
      CHECK(reciprocal(reciprocal(x)) == x);
    }
  }

  TEST_CASE("comparison within and across fields") {
    CHECK(compare(ee("(0+1*sqrt(2))/1"), ee("(0+1*sqrt(3))/1")) < 0);
    CHECK(compare(ee("(0+1*sqrt(3))/1"), ee("(0+1*sqrt(2))/1")) > 0);
    CHECK(compare(ee("(0+1*sqrt(2))/1"), ee("(0+2*sqrt(2))/2")) == 0);
    CHECK(compare(ee("(0+1*sqrt(2))/1"), BigRational(141421, 100000)) > 0);
    CHECK(compare(ee("(0+1*sqrt(2))/1"), BigRational(141422, 100000)) < 0);
    std::mt19937_64 rng(sepk::testing::test_seed() + 2);
    for (int i = 0; i < 1000; ++i) {
      const auto x = sepk::testing::random_quadratic(rng);
      const auto y = sepk::testing::random_quadratic(rng);
      const Dec200 diff = decimal(x) - decimal(y);
      const auto expect = abs(diff) < Dec200("1e-150") ? std::strong_ordering::equal
                                                         : (diff > 0 ? std::strong_ordering::greater
                                                                     : std::strong_ordering::less);
      CHECK(compare(x, y) == expect);
    }
  }
}

TEST_SUITE("cf_expansion") {
  TEST_CASE("examples") {
    const auto golden_node = cf_expand(ee("(3+1*sqrt(5))/2"), 6);
    CHECK(entries_of(golden_node) == std::vector<long long>{2, 1, 1, 1, 1, 1});
    CHECK(golden_node.has_period());
    CHECK(golden_node.period == std::vector<BigInt>{1});

    const auto sqrt2_node = cf_expand(ee("(2+1*sqrt(2))/1"), 5);
    CHECK(entries_of(sqrt2_node) == std::vector<long long>{3, 2, 2, 2, 2});
    CHECK(sqrt2_node.period == std::vector<BigInt>{2});
    CHECK(sqrt2_node.to_string() == "[3;2,2,2,2] (period 2)");

    CHECK(entries_of(cf_expand(ee("(0+1*sqrt(2))/1"), 4)) == std::vector<long long>{1, 2, 2, 2});
  }

  TEST_CASE("preconditions") {
    CHECK(kind_of([] { cf_expand(ee("(0+1*sqrt(2))/1"), 0); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { cf_expand(ee("(0-1*sqrt(2))/1"), 3); }) == ErrorKind::invalid_argument);
  }

  TEST_CASE("period replay reproduces the direct expansion") {
    std::mt19937_64 rng(sepk::testing::test_seed() + 3);
    for (int i = 0; i < 100; ++i) {
      auto x = sepk::testing::random_quadratic(rng);
      if (x.sign() < 0) x = negate(x);
      const auto shortcf = cf_expand(x, 3);
      const auto longcf = cf_expand(x, 80);
      REQUIRE(shortcf.has_period());
      for (std::size_t k = 0; k < 80; ++k) CHECK(shortcf.entry(k) == longcf.entries[k]);
      for (std::size_t k = 1; k < 80; ++k) CHECK(longcf.entries[k] >= 1);
    }
  }

  TEST_CASE("convergents bracket the value and alternate sides") {
    std::mt19937_64 rng(sepk::testing::test_seed() + 4);
    for (int i = 0; i < 200; ++i) {
      auto x = sepk::testing::random_quadratic(rng);
      if (x.sign() < 0) x = negate(x);
      const std::size_t K = 25;
      const auto convs = convergents(cf_expand(x, K), K);
      for (std::size_t k = 0; k < K; ++k) {
        const auto side = compare(x, convs[k]);
        CHECK(side == (k % 2 == 0 ? std::strong_ordering::greater : std::strong_ordering::less));
        if (k + 1 < K) {
          // Consecutive convergents enclose x.
          const auto& lo = k % 2 == 0 ? convs[k] : convs[k + 1];
          const auto& hi = k % 2 == 0 ? convs[k + 1] : convs[k];
          CHECK(compare(x, lo) > 0);
          CHECK(compare(x, hi) < 0);
        }
      }
    }
  }

  TEST_CASE("expansion of 1/x shifts by the integer part") {
    std::mt19937_64 rng(sepk::testing::test_seed() + 5);
    int tested = 0;
    while (tested < 200) {
      auto x = sepk::testing::random_quadratic(rng);
      if (x.sign() < 0) x = negate(x);
      if (compare(x, BigRational(1)) < 0) x = reciprocal(x);
      const auto a = cf_expand(x, 30);
      const auto b = cf_expand(reciprocal(x), 31);
      CHECK(b.entries[0] == 0);
      for (std::size_t k = 0; k < 30; ++k) CHECK(b.entries[k + 1] == a.entries[k]);
      ++tested;
    }
  }
}

TEST_SUITE("moebius") {
  TEST_CASE("examples") {
    const auto s2 = ee("(0+1*sqrt(2))/1");
    CHECK(moebius_apply(UnimodularMatrix::identity(), s2) == s2);
    CHECK(moebius_apply(UnimodularMatrix::make(1, 0, 1, 1), s2) == ee("(1+1*sqrt(2))/1"));
    CHECK(moebius_apply(UnimodularMatrix::make(3, 2, 4, 3), s2) == s2);
    CHECK(moebius_apply(UnimodularMatrix::negative_identity(), s2) == s2);
  }

  TEST_CASE("composition law for random unimodular pairs") {
    std::mt19937_64 rng(sepk::testing::test_seed() + 6);
    for (int i = 0; i < 500; ++i) {
      const auto A = sepk::testing::random_unimodular(rng, 50);
      const auto B = sepk::testing::random_unimodular(rng, 50);
      const auto x = sepk::testing::random_quadratic(rng);
      CHECK(moebius_apply(A * B, x) == moebius_apply(A, moebius_apply(B, x)));
    }
  }

  TEST_CASE("node transform") {
    CHECK(node_transform(ee("(0+1*sqrt(2))/1")) == ee("(2+1*sqrt(2))/1"));
    CHECK(node_transform(ee("(1+1*sqrt(5))/2")) == ee("(3+1*sqrt(5))/2"));
  }
}

TEST_SUITE("unimodular_matrix") {
  TEST_CASE("construction and parsing") {
    CHECK(UnimodularMatrix::parse(" [ [3, 2] , [4,3] ] ") == UnimodularMatrix::make(3, 2, 4, 3));
    CHECK(UnimodularMatrix::make(3, 2, 4, 3).to_string() == "[[3,2],[4,3]]");
    CHECK(kind_of([] { UnimodularMatrix::make(2, 0, 0, 1); }) == ErrorKind::non_unimodular);
    CHECK(kind_of([] { UnimodularMatrix::parse("[[1,0],[0]]"); }) == ErrorKind::parse);
    CHECK(kind_of([] { UnimodularMatrix::parse("[[1,0],[0,x]]"); }) == ErrorKind::parse);
    CHECK(kind_of([] { UnimodularMatrix::parse("[[2,0],[0,1]]"); }) == ErrorKind::non_unimodular);
    CHECK_FALSE(UnimodularMatrix::try_make(1, 1, 1, 1).has_value());
  }

  TEST_CASE("group operations") {
    const auto P = UnimodularMatrix::make(3, 2, 4, 3);
    CHECK(P * P.inverse() == UnimodularMatrix::identity());
    CHECK(-P == UnimodularMatrix::make(-3, -2, -4, -3));
    CHECK(P.apply(2, 3) == std::array<std::int64_t, 2>{12, 17});
    CHECK(UnimodularMatrix::negative_identity().is_plus_minus_identity());
    CHECK_FALSE(P.is_plus_minus_identity());
    CHECK(P.max_abs_entry() == 4);
    CHECK(UnimodularMatrix::negative_identity() < UnimodularMatrix::identity());
  }
}
