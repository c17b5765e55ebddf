#include "sepk/torusmaps/classification.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <thread>

#include "sepk/exactnum/cf_expansion.hpp"
#include "sepk/exactnum/errors.hpp"
#include "sepk/exactnum/quadratic_sign.hpp"

namespace sepk::torusmaps {

namespace {

int linear_sign(std::int64_t a, std::int64_t b, const ExactEigenvalue& lambda) {
  // sign(a + b (p + q sqrt d) / r) with r > 0.
  return sign_of_surd(BigInt(a) * lambda.r() + BigInt(b) * lambda.p(), BigInt(b) * lambda.q(), lambda.d());
}

void check_bound(std::int64_t bound) {
  if (bound < 1 || bound > kMaxEnumerationBound) {
    throw Error(ErrorKind::invalid_argument,
                "bound must lie in [1, " + std::to_string(kMaxEnumerationBound) + "]");
  }
}

void enumerate_rows(std::int64_t lo, std::int64_t hi, std::int64_t bound,
                    const std::function<bool(const UnimodularMatrix&)>& keep, std::vector<UnimodularMatrix>& out) {
  for (std::int64_t a = lo; a <= hi; ++a) {
    for (std::int64_t b = -bound; b <= bound; ++b) {
      for (std::int64_t c = -bound; c <= bound; ++c) {
        if (a == 0) {
          if (b * c != -1) continue;
          for (std::int64_t d = -bound; d <= bound; ++d) {
            const auto A = UnimodularMatrix::make(a, b, c, d);
            if (keep(A)) out.push_back(A);
          }
          continue;
        }
        const std::int64_t num = 1 + b * c;
        if (num % a != 0) continue;
        const std::int64_t d = num / a;
        if (d < -bound || d > bound) continue;
        const auto A = UnimodularMatrix::make(a, b, c, d);
        if (keep(A)) out.push_back(A);
      }
    }
  }
}

}  // namespace

bool sign_condition(const UnimodularMatrix& A, const ExactEigenvalue& lambda) {
  const int s1 = linear_sign(A.a(), A.b(), lambda);
  const int s2 = linear_sign(A.c(), A.d(), lambda);
  return s1 != 0 && s1 == s2;
}

std::vector<UnimodularMatrix> enumerate_unimodular(std::int64_t bound,
                                                   const std::function<bool(const UnimodularMatrix&)>& keep,
                                                   unsigned shards) {
  check_bound(bound);
  const std::int64_t rows = 2 * bound + 1;
  if (shards == 0) shards = std::max(1u, std::thread::hardware_concurrency());
  shards = static_cast<unsigned>(std::min<std::int64_t>(shards, rows));

  std::vector<std::vector<UnimodularMatrix>> parts(shards);
  std::vector<std::exception_ptr> failures(shards);
  std::vector<std::thread> workers;
  workers.reserve(shards);
  for (unsigned k = 0; k < shards; ++k) {
    const std::int64_t lo = -bound + rows * k / shards;
    const std::int64_t hi = -bound + rows * (k + 1) / shards - 1;
    workers.emplace_back([&, k, lo, hi] {
      try {
        enumerate_rows(lo, hi, bound, keep, parts[k]);
      } catch (...) {
        failures[k] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  std::vector<UnimodularMatrix> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<UnimodularMatrix> admissible_matrices(const ExactEigenvalue& lambda, const ExactEigenvalue& lambda_tilde,
                                                  std::int64_t bound, unsigned shards) {
  return enumerate_unimodular(
      bound,
      [&](const UnimodularMatrix& A) {
        if (!sign_condition(A, lambda)) return false;
        return moebius_apply(A, lambda) == lambda_tilde;
      },
      shards);
}

std::vector<equising::CuspSpec> convergent_cusps(const ExactEigenvalue& lambda, std::size_t conv_depth) {
  if (conv_depth == 0) throw Error(ErrorKind::invalid_argument, "conv_depth must be at least 1");
  if (lambda.sign() <= 0) throw Error(ErrorKind::invalid_argument, "lambda must be positive");
  const auto convs = convergents(cf_expand(lambda, conv_depth), conv_depth);
  const BigInt limit = std::numeric_limits<std::int64_t>::max();
  std::vector<equising::CuspSpec> out;
  for (const BigRational& c : convs) {
    if (c.numerator() == 0) continue;
    if (c.numerator() > limit || c.denominator() > limit) {
      throw Error(ErrorKind::invalid_argument, "convergent " + c.to_string() + " exceeds 64-bit range");
    }
    const auto m = static_cast<std::int64_t>(c.denominator());
    const auto n = static_cast<std::int64_t>(c.numerator());
    out.push_back(equising::CuspSpec::make(m, n));
  }
  return out;
}

std::optional<equising::CuspSpec> image_cusp(const UnimodularMatrix& A, const equising::CuspSpec& source) {
  const BigInt x = abs(BigInt(A.a()) * source.m + BigInt(A.b()) * source.n);
  const BigInt y = abs(BigInt(A.c()) * source.m + BigInt(A.d()) * source.n);
  const BigInt limit = std::numeric_limits<std::int64_t>::max();
  if (x == 0 || y == 0 || x > limit || y > limit) return std::nullopt;
  // A is unimodular, so gcd(x, y) = gcd(m, n) = 1.
  return equising::CuspSpec::make(static_cast<std::int64_t>(x), static_cast<std::int64_t>(y));
}

std::vector<UnimodularMatrix> surviving_matrices(const ExactEigenvalue& lambda, std::int64_t bound,
                                                 std::size_t conv_depth, unsigned shards) {
  const auto cusps = convergent_cusps(lambda, conv_depth);
  return enumerate_unimodular(
      bound,
      [&](const UnimodularMatrix& A) {
        if (!sign_condition(A, lambda)) return false;
        for (const auto& src : cusps) {
          const auto img = image_cusp(A, src);
          if (!img || !equising::equisingular_cusps(src, *img)) return false;
        }
        return true;
      },
      shards);
}

std::vector<UnimodularMatrix> classify_equisingular_matrices(const ExactEigenvalue& lambda, std::int64_t bound,
                                                             std::size_t conv_depth, unsigned shards) {
  auto cusps = convergent_cusps(lambda, conv_depth);
  std::sort(cusps.begin(), cusps.end(),
            [](const auto& x, const auto& y) { return std::pair(x.m, x.n) < std::pair(y.m, y.n); });
  cusps.erase(std::unique(cusps.begin(), cusps.end()), cusps.end());
  if (cusps.size() < 2) {
    throw Error(ErrorKind::insufficient_convergents,
                "conv_depth " + std::to_string(conv_depth) + " yields fewer than 2 distinct convergents");
  }
  return surviving_matrices(lambda, bound, conv_depth, shards);
}

}  // namespace sepk::torusmaps
