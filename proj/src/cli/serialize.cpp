#include "sepk/cli/serialize.hpp"

#include <limits>

#include "sepk/exactnum/errors.hpp"

namespace nlohmann {

using sepk::Error;
using sepk::ErrorKind;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::parse, "malformed JSON: " + what);
}

}  // namespace

void adl_serializer<sepk::BigInt>::to_json(ordered_json& j, const sepk::BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    j = static_cast<std::int64_t>(v);
  } else {
    j = v.str();
  }
}

sepk::BigInt adl_serializer<sepk::BigInt>::from_json(const ordered_json& j) {
  if (j.is_number_integer()) return sepk::BigInt(j.get<std::int64_t>());
  require(j.is_string(), "integer expected");
  try {
    return sepk::BigInt(j.get<std::string>());
  } catch (const std::runtime_error&) {
    throw Error(ErrorKind::parse, "malformed JSON: bad integer '" + j.get<std::string>() + "'");
  }
}

void adl_serializer<sepk::BigRational>::to_json(ordered_json& j, const sepk::BigRational& v) { j = v.to_string(); }

sepk::BigRational adl_serializer<sepk::BigRational>::from_json(const ordered_json& j) {
  require(j.is_string(), "rational expected");
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return sepk::BigRational(sepk::BigInt(s));
    return sepk::BigRational(sepk::BigInt(s.substr(0, slash)), sepk::BigInt(s.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw Error(ErrorKind::parse, "malformed JSON: bad rational '" + s + "'");
  }
}

void adl_serializer<sepk::ExactEigenvalue>::to_json(ordered_json& j, const sepk::ExactEigenvalue& v) {
  j = v.to_string();
}

sepk::ExactEigenvalue adl_serializer<sepk::ExactEigenvalue>::from_json(const ordered_json& j) {
  require(j.is_string(), "eigenvalue string expected");
  return sepk::ExactEigenvalue::parse(j.get<std::string>());
}

void adl_serializer<sepk::UnimodularMatrix>::to_json(ordered_json& j, const sepk::UnimodularMatrix& v) {
  j = ordered_json::array({ordered_json::array({v.a(), v.b()}), ordered_json::array({v.c(), v.d()})});
}

sepk::UnimodularMatrix adl_serializer<sepk::UnimodularMatrix>::from_json(const ordered_json& j) {
  if (j.is_string()) return sepk::UnimodularMatrix::parse(j.get<std::string>());
  require(j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2 && j[1].is_array() &&
              j[1].size() == 2,
          "2x2 matrix expected");
  return sepk::UnimodularMatrix::make(j[0][0].get<std::int64_t>(), j[0][1].get<std::int64_t>(),
                                      j[1][0].get<std::int64_t>(), j[1][1].get<std::int64_t>());
}

void adl_serializer<sepk::CFExpansion>::to_json(ordered_json& j, const sepk::CFExpansion& v) {
  j = ordered_json::object();
  j["entries"] = v.entries;
  j["period_start"] = v.period_start ? ordered_json(*v.period_start) : ordered_json(nullptr);
  j["preperiod"] = v.preperiod;
  j["period"] = v.period;
  j["text"] = v.to_string();
}

sepk::CFExpansion adl_serializer<sepk::CFExpansion>::from_json(const ordered_json& j) {
  require(j.is_object() && j.contains("entries"), "continued fraction object expected");
  sepk::CFExpansion cf;
  cf.entries = j.at("entries").get<std::vector<sepk::BigInt>>();
  if (j.contains("period_start") && !j["period_start"].is_null()) {
    cf.period_start = j["period_start"].get<std::size_t>();
    cf.preperiod = j.at("preperiod").get<std::vector<sepk::BigInt>>();
    cf.period = j.at("period").get<std::vector<sepk::BigInt>>();
    require(cf.preperiod.size() == *cf.period_start && !cf.period.empty(), "inconsistent periodic expansion");
  }
  return cf;
}

void adl_serializer<sepk::blowup::DivisorId>::to_json(ordered_json& j, const sepk::blowup::DivisorId& v) {
  j = v.label();
}

sepk::blowup::DivisorId adl_serializer<sepk::blowup::DivisorId>::from_json(const ordered_json& j) {
  require(j.is_string(), "divisor label expected");
  return sepk::blowup::DivisorId::from_label(j.get<std::string>());
}

void adl_serializer<sepk::blowup::InfinitelyNearPoint>::to_json(ordered_json& j,
                                                               const sepk::blowup::InfinitelyNearPoint& v) {
  j = ordered_json::object();
  j["j"] = v.j;
  j["new_divisor"] = v.new_divisor;
  j["retained_divisor"] = v.retained_divisor;
  j["exponent_after"] = v.exponent_after;
}

sepk::blowup::InfinitelyNearPoint adl_serializer<sepk::blowup::InfinitelyNearPoint>::from_json(
    const ordered_json& j) {
  require(j.is_object(), "point object expected");
  return sepk::blowup::InfinitelyNearPoint{j.at("j").get<std::size_t>(),
                                           j.at("new_divisor").get<sepk::blowup::DivisorId>(),
                                           j.at("retained_divisor").get<sepk::blowup::DivisorId>(),
                                           j.at("exponent_after").get<sepk::ExactEigenvalue>()};
}

void adl_serializer<sepk::blowup::DualGraph>::to_json(ordered_json& j, const sepk::blowup::DualGraph& v) {
  j = ordered_json::object();
  j["weights"] = v.weights;
  j["edges"] = ordered_json::array();
  for (const auto& [a, b] : v.edges) j["edges"].push_back({a, b});
}

sepk::blowup::DualGraph adl_serializer<sepk::blowup::DualGraph>::from_json(const ordered_json& j) {
  require(j.is_object(), "dual graph object expected");
  sepk::blowup::DualGraph g;
  g.weights = j.at("weights").get<std::vector<int>>();
  for (const auto& e : j.at("edges")) {
    require(e.is_array() && e.size() == 2, "edge pair expected");
    g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

void adl_serializer<sepk::blowup::ResolutionRecord>::to_json(ordered_json& j,
                                                            const sepk::blowup::ResolutionRecord& v) {
  j = ordered_json::object();
  j["lambda"] = v.lambda;
  j["depth"] = v.depth();
  j["points"] = v.points;
  j["proximity"] = v.proximity;
  j["dual_graph"] = v.graph;
}

sepk::blowup::ResolutionRecord adl_serializer<sepk::blowup::ResolutionRecord>::from_json(const ordered_json& j) {
  require(j.is_object(), "resolution object expected");
  return sepk::blowup::ResolutionRecord{j.at("lambda").get<sepk::ExactEigenvalue>(),
                                        j.at("points").get<std::vector<sepk::blowup::InfinitelyNearPoint>>(),
                                        j.at("proximity").get<std::vector<std::vector<std::size_t>>>(),
                                        j.at("dual_graph").get<sepk::blowup::DualGraph>()};
}

void adl_serializer<sepk::equising::CuspSpec>::to_json(ordered_json& j, const sepk::equising::CuspSpec& v) {
  j = ordered_json::array({v.m, v.n});
}

sepk::equising::CuspSpec adl_serializer<sepk::equising::CuspSpec>::from_json(const ordered_json& j) {
  require(j.is_array() && j.size() == 2, "cusp pair expected");
  return sepk::equising::CuspSpec::make(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

void adl_serializer<sepk::equising::Certificate>::to_json(ordered_json& j, const sepk::equising::Certificate& v) {
  j = ordered_json::object();
  j["equisingular"] = v.equisingular;
  j["normalized"] = ordered_json::array({v.normalized_1, v.normalized_2});
  ordered_json proof = ordered_json::object();
  if (v.equisingular) {
    proof["kind"] = "equal-period";
    proof["expansion"] = *v.shared_expansion;
  } else {
    proof["kind"] = "cf-disagreement";
    proof["index"] = *v.first_disagreement;
    proof["entries"] = ordered_json::array({v.entry_1, v.entry_2});
    proof["witness_depth"] = v.witness_depth;
  }
  j["proof"] = proof;
}

sepk::equising::Certificate adl_serializer<sepk::equising::Certificate>::from_json(const ordered_json& j) {
  require(j.is_object() && j.contains("normalized") && j["normalized"].size() == 2, "certificate expected");
  sepk::equising::Certificate c{j.at("equisingular").get<bool>(),
                                j["normalized"][0].get<sepk::ExactEigenvalue>(),
                                j["normalized"][1].get<sepk::ExactEigenvalue>(),
                                std::nullopt,
                                std::nullopt,
                                0,
                                0,
                                0};
  const auto& proof = j.at("proof");
  if (c.equisingular) {
    c.shared_expansion = proof.at("expansion").get<sepk::CFExpansion>();
  } else {
    c.first_disagreement = proof.at("index").get<std::size_t>();
    c.entry_1 = proof.at("entries").at(0).get<sepk::BigInt>();
    c.entry_2 = proof.at("entries").at(1).get<sepk::BigInt>();
    c.witness_depth = proof.at("witness_depth").get<std::size_t>();
  }
  return c;
}

void adl_serializer<sepk::torusmaps::ResidualReport>::to_json(ordered_json& j,
                                                             const sepk::torusmaps::ResidualReport& v) {
  j = ordered_json::object();
  j["max_deck_residual"] = v.max_deck_residual;
  j["max_parallel_residual"] = v.max_parallel_residual;
  j["max_periodicity_residual"] = v.max_periodicity_residual;
}

sepk::torusmaps::ResidualReport adl_serializer<sepk::torusmaps::ResidualReport>::from_json(const ordered_json& j) {
  require(j.is_object(), "residual report expected");
  return sepk::torusmaps::ResidualReport{j.at("max_deck_residual").get<double>(),
                                         j.at("max_parallel_residual").get<double>(),
                                         j.at("max_periodicity_residual").get<double>()};
}

void adl_serializer<sepk::torusmaps::LiftSample>::to_json(ordered_json& j, const sepk::torusmaps::LiftSample& v) {
  j = ordered_json::object();
  j["n"] = v.n;
  j["matrix"] = v.A;
  j["lambda"] = v.lambda;
  j["lambda_tilde"] = v.lambda_tilde;
  j["values"] = v.values;
}

sepk::torusmaps::LiftSample adl_serializer<sepk::torusmaps::LiftSample>::from_json(const ordered_json& j) {
  require(j.is_object(), "lift sample expected");
  sepk::torusmaps::LiftSample s{j.at("n").get<std::size_t>(), j.at("values").get<std::vector<sepk::torusmaps::Point>>(),
                                j.at("matrix").get<sepk::UnimodularMatrix>(), j.at("lambda").get<double>(),
                                j.at("lambda_tilde").get<double>()};
  require(s.n >= 1 && s.values.size() == s.side() * s.side(), "lift sample needs (n+1)^2 values");
  return s;
}

void adl_serializer<sepk::torusmaps::LiftDecomposition>::to_json(ordered_json& j,
                                                                const sepk::torusmaps::LiftDecomposition& v) {
  j = ordered_json::object();
  j["base"] = v.base;
  j["matrix"] = v.A;
  j["lambda"] = v.lambda;
  j["lambda_tilde"] = v.lambda_tilde;
  j["n"] = v.n;
  j["kappa"] = v.kappa;
  j["residuals"] = v.residuals;
}

sepk::torusmaps::LiftDecomposition adl_serializer<sepk::torusmaps::LiftDecomposition>::from_json(
    const ordered_json& j) {
  require(j.is_object(), "lift decomposition expected");
  sepk::torusmaps::LiftDecomposition d{j.at("base").get<sepk::torusmaps::Point>(),
                                       j.at("matrix").get<sepk::UnimodularMatrix>(),
                                       j.at("lambda").get<double>(),
                                       j.at("lambda_tilde").get<double>(),
                                       j.at("n").get<std::size_t>(),
                                       j.at("kappa").get<std::vector<double>>(),
                                       j.at("residuals").get<sepk::torusmaps::ResidualReport>()};
  require(d.n >= 1 && d.kappa.size() == d.side() * d.side(), "kappa grid needs (n+1)^2 values");
  return d;
}

void adl_serializer<sepk::dynamics::GapStatistics>::to_json(ordered_json& j,
                                                           const sepk::dynamics::GapStatistics& v) {
  j = ordered_json::object();
  j["num_distinct_gaps"] = v.num_distinct_gaps;
  j["distinct"] = v.distinct;
  j["gap_sum"] = v.gap_sum;
  j["gaps"] = v.gaps;
}

sepk::dynamics::GapStatistics adl_serializer<sepk::dynamics::GapStatistics>::from_json(const ordered_json& j) {
  require(j.is_object(), "gap statistics expected");
  return sepk::dynamics::GapStatistics{j.at("num_distinct_gaps").get<std::size_t>(),
                                       j.at("gaps").get<std::vector<double>>(),
                                       j.at("distinct").get<std::vector<double>>(), j.at("gap_sum").get<double>()};
}

void adl_serializer<std::complex<double>>::to_json(ordered_json& j, const std::complex<double>& v) {
  j = ordered_json::array({v.real(), v.imag()});
}

std::complex<double> adl_serializer<std::complex<double>>::from_json(const ordered_json& j) {
  require(j.is_array() && j.size() == 2, "complex pair expected");
  return {j[0].get<double>(), j[1].get<double>()};
}

void adl_serializer<sepk::dynamics::ApproxCurve>::to_json(ordered_json& j, const sepk::dynamics::ApproxCurve& v) {
  j = ordered_json::object();
  j["convergent"] = v.convergent;
  j["source"] = v.source;
  j["image"] = v.image;
  j["phases"] = ordered_json::array({v.phases.first, v.phases.second});
  j["equisingular"] = v.equisingular;
}

sepk::dynamics::ApproxCurve adl_serializer<sepk::dynamics::ApproxCurve>::from_json(const ordered_json& j) {
  require(j.is_object() && j.contains("phases") && j["phases"].size() == 2, "approximation object expected");
  return sepk::dynamics::ApproxCurve{j.at("convergent").get<sepk::BigRational>(),
                                     j.at("source").get<sepk::equising::CuspSpec>(),
                                     j.at("image").get<sepk::equising::CuspSpec>(),
                                     {j["phases"][0].get<std::complex<double>>(),
                                      j["phases"][1].get<std::complex<double>>()},
                                     j.at("equisingular").get<bool>()};
}

}  // namespace nlohmann
