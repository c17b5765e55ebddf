#pragma once

#include <json.hpp>

#include "sepk/blowup/resolution.hpp"
#include "sepk/dynamics/approximation.hpp"
#include "sepk/dynamics/leaf_gaps.hpp"
#include "sepk/equising/equisingularity.hpp"
#include "sepk/exactnum/big_rational.hpp"
#include "sepk/exactnum/cf_expansion.hpp"
#include "sepk/exactnum/exact_eigenvalue.hpp"
#include "sepk/exactnum/unimodular_matrix.hpp"
#include "sepk/torusmaps/lift.hpp"

namespace sepk::cli {
using Json = nlohmann::ordered_json;
}  // namespace sepk::cli

#define SEPK_DECLARE_SERIALIZER(T)            \
  template <>                                 \
  struct adl_serializer<T> {                  \
    static void to_json(ordered_json& j, const T& v); \
    static T from_json(const ordered_json& j);        \
  }

namespace nlohmann {

SEPK_DECLARE_SERIALIZER(sepk::BigInt);
SEPK_DECLARE_SERIALIZER(sepk::BigRational);
SEPK_DECLARE_SERIALIZER(sepk::ExactEigenvalue);
SEPK_DECLARE_SERIALIZER(sepk::UnimodularMatrix);
SEPK_DECLARE_SERIALIZER(sepk::CFExpansion);
SEPK_DECLARE_SERIALIZER(sepk::blowup::DivisorId);
SEPK_DECLARE_SERIALIZER(sepk::blowup::InfinitelyNearPoint);
SEPK_DECLARE_SERIALIZER(sepk::blowup::DualGraph);
SEPK_DECLARE_SERIALIZER(sepk::blowup::ResolutionRecord);
SEPK_DECLARE_SERIALIZER(sepk::equising::CuspSpec);
SEPK_DECLARE_SERIALIZER(sepk::equising::Certificate);
SEPK_DECLARE_SERIALIZER(sepk::torusmaps::ResidualReport);
SEPK_DECLARE_SERIALIZER(sepk::torusmaps::LiftSample);
SEPK_DECLARE_SERIALIZER(sepk::torusmaps::LiftDecomposition);
SEPK_DECLARE_SERIALIZER(sepk::dynamics::GapStatistics);
SEPK_DECLARE_SERIALIZER(sepk::dynamics::ApproxCurve);
SEPK_DECLARE_SERIALIZER(std::complex<double>);

}  // namespace nlohmann

#undef SEPK_DECLARE_SERIALIZER
