#include "sepk/exactnum/unimodular_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <vector>

#include "sepk/exactnum/errors.hpp"

namespace sepk {

namespace {

__extension__ using Wide = __int128;

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw Error(ErrorKind::invalid_argument, "matrix entry overflow");
  return out;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) throw Error(ErrorKind::invalid_argument, "matrix entry overflow");
  return out;
}

}  // namespace

std::optional<UnimodularMatrix> UnimodularMatrix::try_make(std::int64_t a, std::int64_t b, std::int64_t c,
                                                           std::int64_t d) noexcept {
  const Wide det = static_cast<Wide>(a) * d - static_cast<Wide>(b) * c;
  if (det != 1) return std::nullopt;
  return UnimodularMatrix(a, b, c, d);
}

UnimodularMatrix UnimodularMatrix::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  auto m = try_make(a, b, c, d);
  if (!m) {
    throw Error(ErrorKind::non_unimodular, "matrix [[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
                                               std::to_string(c) + "," + std::to_string(d) +
                                               "]] does not have determinant 1");
  }
  return *m;
}

UnimodularMatrix UnimodularMatrix::parse(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  // Expected shape: [[a,b],[c,d]]
  std::vector<std::int64_t> values;
  std::string expected_skeleton;
  std::size_t i = 0;
  while (i < compact.size()) {
    const char ch = compact[i];
    if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(compact.data() + i, compact.data() + compact.size(), v);
      if (ec != std::errc()) throw Error(ErrorKind::parse, "bad matrix entry in '" + std::string(text) + "'");
      values.push_back(v);
      expected_skeleton.push_back('#');
      i = static_cast<std::size_t>(ptr - compact.data());
    } else {
      expected_skeleton.push_back(ch);
      ++i;
    }
  }
  if (expected_skeleton != "[[#,#],[#,#]]") {
    throw Error(ErrorKind::parse, "matrix must look like [[a,b],[c,d]], got '" + std::string(text) + "'");
  }
  return make(values[0], values[1], values[2], values[3]);
}

std::int64_t UnimodularMatrix::max_abs_entry() const noexcept {
  return std::max({std::llabs(a_), std::llabs(b_), std::llabs(c_), std::llabs(d_)});
}

std::array<std::int64_t, 2> UnimodularMatrix::apply(std::int64_t m, std::int64_t n) const {
  return {checked_add(checked_mul(a_, m), checked_mul(b_, n)), checked_add(checked_mul(c_, m), checked_mul(d_, n))};
}

UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y) {
  return UnimodularMatrix(checked_add(checked_mul(x.a_, y.a_), checked_mul(x.b_, y.c_)),
                          checked_add(checked_mul(x.a_, y.b_), checked_mul(x.b_, y.d_)),
                          checked_add(checked_mul(x.c_, y.a_), checked_mul(x.d_, y.c_)),
                          checked_add(checked_mul(x.c_, y.b_), checked_mul(x.d_, y.d_)));
}

std::string UnimodularMatrix::to_string() const {
  return "[[" + std::to_string(a_) + "," + std::to_string(b_) + "],[" + std::to_string(c_) + "," +
         std::to_string(d_) + "]]";
}

}  // namespace sepk
