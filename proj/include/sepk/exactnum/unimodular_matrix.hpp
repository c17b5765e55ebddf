#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sepk {

/// Integer 2x2 matrix [[a, b], [c, d]] with ad - bc = 1.
///
/// Acts on Z^2 by (m, n) -> (am + bn, cm + dn), on slopes by
/// lambda -> (c + d lambda) / (a + b lambda). Determinant -1 matrices are not
/// representable; the inversion (u, v) -> (-u, -v) is -identity and has det +1.
class UnimodularMatrix {
 public:
  static UnimodularMatrix make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static std::optional<UnimodularMatrix> try_make(std::int64_t a, std::int64_t b, std::int64_t c,
                                                  std::int64_t d) noexcept;
  static UnimodularMatrix identity() noexcept { return {1, 0, 0, 1}; }
  static UnimodularMatrix negative_identity() noexcept { return {-1, 0, 0, -1}; }

  /// Parses "[[a,b],[c,d]]"; whitespace is ignored.
  static UnimodularMatrix parse(std::string_view text);

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t c() const noexcept { return c_; }
  std::int64_t d() const noexcept { return d_; }

  bool is_plus_minus_identity() const noexcept {
    return b_ == 0 && c_ == 0 && a_ == d_ && (a_ == 1 || a_ == -1);
  }
  std::int64_t max_abs_entry() const noexcept;

  std::array<std::int64_t, 2> apply(std::int64_t m, std::int64_t n) const;
  UnimodularMatrix inverse() const noexcept { return {d_, -b_, -c_, a_}; }
  UnimodularMatrix operator-() const noexcept { return {-a_, -b_, -c_, -d_}; }
  friend UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y);

  std::string to_string() const;

  /// Lexicographic on (a, b, c, d): the canonical order for enumeration output.
  friend auto operator<=>(const UnimodularMatrix&, const UnimodularMatrix&) = default;

 private:
  constexpr UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) noexcept
      : a_(a), b_(b), c_(c), d_(d) {}

  std::int64_t a_, b_, c_, d_;
};

}  // namespace sepk
