#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sepk {

/// Category of a domain failure. The CLI reports it verbatim in its
/// structured error object, so the spelling of `to_string` is part of the
/// wire format.
enum class ErrorKind {
  invalid_argument,
  parse,
  reciprocal_of_zero,
  pole,
  field_mismatch,
  insufficient_depth,
  insufficient_convergents,
  not_unit_modulus,
  origin,
  residual_exceeded,
  slope_mismatch,
  non_unimodular,
  sign_condition,
  matrix_mismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sepk
