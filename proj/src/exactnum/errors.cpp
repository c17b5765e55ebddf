#include "sepk/exactnum/errors.hpp"

namespace sepk {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::parse: return "parse";
    case ErrorKind::reciprocal_of_zero: return "reciprocal_of_zero";
    case ErrorKind::pole: return "pole";
    case ErrorKind::field_mismatch: return "field_mismatch";
    case ErrorKind::insufficient_depth: return "insufficient_depth";
    case ErrorKind::insufficient_convergents: return "insufficient_convergents";
    case ErrorKind::not_unit_modulus: return "not_unit_modulus";
    case ErrorKind::origin: return "origin";
    case ErrorKind::residual_exceeded: return "residual_exceeded";
    case ErrorKind::slope_mismatch: return "slope_mismatch";
    case ErrorKind::non_unimodular: return "non_unimodular";
    case ErrorKind::sign_condition: return "sign_condition";
    case ErrorKind::matrix_mismatch: return "matrix_mismatch";
  }
  return "unknown";
}

}  // namespace sepk
