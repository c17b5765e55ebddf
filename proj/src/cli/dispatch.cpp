#include "sepk/cli/dispatch.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>

#include "sepk/blowup/resolution.hpp"
#include "sepk/cli/render.hpp"
#include "sepk/cli/serialize.hpp"
#include "sepk/dynamics/approximation.hpp"
#include "sepk/dynamics/leaf_gaps.hpp"
#include "sepk/equising/equisingularity.hpp"
#include "sepk/exactnum/cf_expansion.hpp"
#include "sepk/exactnum/errors.hpp"
#include "sepk/torusmaps/classification.hpp"
#include "sepk/torusmaps/lift.hpp"
#include "sepk/torusmaps/torus_maps.hpp"

namespace sepk::cli {

namespace {

constexpr std::size_t kMaxDepth = 100000;
constexpr std::size_t kMaxResolveDepth = 10000;
constexpr std::size_t kMaxOrbit = 10000000;
constexpr std::size_t kMaxGrid = 1024;

const char* anchor_of(const std::string& command) {
  if (command == "cf") return "cf-of-node-exponent";
  if (command == "resolve") return "blowup-continued-fraction-correspondence";
  if (command == "equisingular") return "equisingularity-criterion";
  if (command == "moebius") return "slope-transformation-formula";
  if (command == "classify") return "plus-minus-identity-rigidity";
  if (command == "approx") return "convergent-cusp-approximation";
  if (command == "simulate") return "leaf-density";
  if (command == "verify-lift") return "lift-decomposition";
  return "";
}

Json envelope(const std::string& command) {
  Json j = Json::object();
  j["paper_anchor"] = anchor_of(command);
  j["command"] = command;
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

/// A real given either as an exact eigenvalue or as a decimal literal.
double parse_real(const std::string& text) {
  try {
    return ExactEigenvalue::parse(text).to_double();
  } catch (const Error&) {
  }
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(compact.data(), compact.data() + compact.size(), v);
  if (compact.empty() || ec != std::errc() || ptr != compact.data() + compact.size() || !std::isfinite(v)) {
    throw Error(ErrorKind::parse, "'" + text + "' is neither an eigenvalue nor a decimal number");
  }
  return v;
}

equising::CuspSpec parse_cusp(const std::string& text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  const auto comma = compact.find(',');
  std::int64_t m = 0, n = 0;
  const char* end = compact.data() + compact.size();
  if (comma != std::string::npos) {
    const auto r1 = std::from_chars(compact.data(), compact.data() + comma, m);
    const auto r2 = std::from_chars(compact.data() + comma + 1, end, n);
    if (r1.ec == std::errc() && r1.ptr == compact.data() + comma && r2.ec == std::errc() && r2.ptr == end) {
      return equising::CuspSpec::make(m, n);
    }
  }
  throw Error(ErrorKind::parse, "cusp must look like m,n, got '" + text + "'");
}

torusmaps::Complex unit_from_turns(double turns) { return std::polar(1.0, 2.0 * std::numbers::pi * turns); }

/// Display order: smaller max |entry| first, then descending lexicographic,
/// so +identity precedes -identity.
std::vector<UnimodularMatrix> display_order(std::vector<UnimodularMatrix> ms) {
  std::stable_sort(ms.begin(), ms.end(), [](const UnimodularMatrix& x, const UnimodularMatrix& y) {
    if (x.max_abs_entry() != y.max_abs_entry()) return x.max_abs_entry() < y.max_abs_entry();
    return y < x;
  });
  return ms;
}

std::string join_matrices(const std::vector<UnimodularMatrix>& ms) {
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i > 0) out += ' ';
    out += ms[i].to_string();
  }
  return out;
}

struct CfOptions {
  std::string value;
  std::string transform = "none";
  std::size_t depth = 10;
  std::string format = "text";
};

int run_cf(const CfOptions& o, std::ostream& out) {
  const ExactEigenvalue x = ExactEigenvalue::parse(o.value);
  const ExactEigenvalue y = o.transform == "node" ? node_transform(x) : x;
  const CFExpansion cf = cf_expand(y, o.depth);
  if (o.format == "text") {
    out << cf.to_string() << '\n';
    return kExitOk;
  }
  Json j = envelope("cf");
  j["input"] = x;
  j["transform"] = o.transform;
  j["value"] = y;
  j["result"] = cf;
  emit(out, j);
  return kExitOk;
}

struct ResolveOptions {
  std::string lambda;
  std::size_t depth = 16;
  std::string format = "json";
};

int run_resolve(const ResolveOptions& o, std::ostream& out) {
  const ExactEigenvalue lambda = ExactEigenvalue::parse(o.lambda);
  const auto rec = blowup::resolve(lambda, o.depth);
  if (o.format == "dot") {
    out << render_dot(rec);
    return kExitOk;
  }
  if (o.format == "csv") {
    out << render_resolution_csv(rec);
    return kExitOk;
  }
  Json j = envelope("resolve");
  j["result"] = rec;
  j["proximity_matrix"] = blowup::proximity_matrix(rec);
  try {
    j["run_lengths"] = blowup::run_length_encoding(rec);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::insufficient_depth) throw;
    j["run_lengths"] = nullptr;
  }
  if (compare(lambda, BigRational(1)) > 0) {
    j["node_expansion"] = cf_expand(node_transform(lambda), std::max<std::size_t>(1, o.depth));
  } else {
    j["node_expansion"] = nullptr;
  }
  emit(out, j);
  return kExitOk;
}

struct EquisingularOptions {
  std::string lambda1, lambda2, cusp1, cusp2;
  std::size_t depth = 0;
};

int run_equisingular(const EquisingularOptions& o, std::ostream& out) {
  Json j = envelope("equisingular");
  const bool separators = !o.lambda1.empty() || !o.lambda2.empty();
  const bool cusps = !o.cusp1.empty() || !o.cusp2.empty();
  if (separators == cusps || (separators && (o.lambda1.empty() || o.lambda2.empty())) ||
      (cusps && (o.cusp1.empty() || o.cusp2.empty()))) {
    throw Error(ErrorKind::parse, "give either --lambda1 and --lambda2 or --cusp1 and --cusp2");
  }
  bool equal = false;
  if (separators) {
    const auto s1 = equising::SeparatorSpec::make(ExactEigenvalue::parse(o.lambda1));
    const auto s2 = equising::SeparatorSpec::make(ExactEigenvalue::parse(o.lambda2));
    const auto cert = equising::certify(s1, s2);
    equal = cert.equisingular;
    j["kind"] = "separator";
    j["result"] = cert;
    if (o.depth > 0) {
      j["prefix"] = {{"depth", o.depth}, {"equal", equising::equisingular_prefix(s1, s2, o.depth)}};
    }
  } else {
    const auto c1 = parse_cusp(o.cusp1);
    const auto c2 = parse_cusp(o.cusp2);
    equal = equising::equisingular_cusps(c1, c2);
    j["kind"] = "cusp";
    j["result"] = {{"equisingular", equal}, {"cusps", Json::array({c1, c2})}};
  }
  emit(out, j);
  return equal ? kExitOk : kExitDomain;
}

struct MoebiusOptions {
  std::string matrix, lambda, lambda_tilde;
  std::int64_t bound = 0;
  unsigned shards = 0;
};

int run_moebius(const MoebiusOptions& o, std::ostream& out) {
  const ExactEigenvalue lambda = ExactEigenvalue::parse(o.lambda);
  Json j = envelope("moebius");
  if (!o.matrix.empty()) {
    if (!o.lambda_tilde.empty() || o.bound != 0) {
      throw Error(ErrorKind::parse, "--matrix excludes --lambda-tilde and --bound");
    }
    const auto A = UnimodularMatrix::parse(o.matrix);
    const ExactEigenvalue image = moebius_apply(A, lambda);
    j["matrix"] = A;
    j["lambda"] = lambda;
    j["result"] = image;
    j["value"] = image.to_double();
    j["sign_condition"] = torusmaps::sign_condition(A, lambda);
    j["fixed_point"] = image == lambda;
  } else {
    if (o.lambda_tilde.empty() || o.bound == 0) {
      throw Error(ErrorKind::parse, "give --matrix, or --lambda-tilde with --bound");
    }
    const ExactEigenvalue target = ExactEigenvalue::parse(o.lambda_tilde);
    j["lambda"] = lambda;
    j["lambda_tilde"] = target;
    j["bound"] = o.bound;
    j["result"] = display_order(torusmaps::admissible_matrices(lambda, target, o.bound, o.shards));
  }
  emit(out, j);
  return kExitOk;
}

struct ClassifyOptions {
  std::string lambda;
  std::int64_t bound = 6;
  std::size_t conv_depth = 4;
  unsigned shards = 0;
  bool raw_filter = false;
  std::string format = "text";
};

int run_classify(const ClassifyOptions& o, std::ostream& out) {
  const ExactEigenvalue lambda = ExactEigenvalue::parse(o.lambda);
  const auto found = display_order(
      o.raw_filter ? torusmaps::surviving_matrices(lambda, o.bound, o.conv_depth, o.shards)
                   : torusmaps::classify_equisingular_matrices(lambda, o.bound, o.conv_depth, o.shards));
  if (o.format == "text") {
    out << join_matrices(found) << '\n';
    return kExitOk;
  }
  Json j = envelope("classify");
  j["lambda"] = lambda;
  j["bound"] = o.bound;
  j["conv_depth"] = o.conv_depth;
  j["convergent_cusps"] = torusmaps::convergent_cusps(lambda, o.conv_depth);
  j["result"] = found;
  j["plus_minus_identity_only"] =
      found.size() == 2 && std::all_of(found.begin(), found.end(), [](const auto& A) {
        return A.is_plus_minus_identity();
      });
  emit(out, j);
  return kExitOk;
}

struct ApproxOptions {
  std::string lambda;
  std::size_t conv_index = 2;
  std::string matrix = "[[1,0],[0,1]]";
  double mu0_turns = 0.0;
  double nu0_turns = 0.0;
};

int run_approx(const ApproxOptions& o, std::ostream& out) {
  const ExactEigenvalue lambda = ExactEigenvalue::parse(o.lambda);
  const auto A = UnimodularMatrix::parse(o.matrix);
  const auto spec =
      dynamics::SeparatorMapSpec::make(A, unit_from_turns(o.mu0_turns), unit_from_turns(o.nu0_turns), lambda.to_double());
  Json j = envelope("approx");
  j["lambda"] = lambda;
  j["conv_index"] = o.conv_index;
  j["matrix"] = A;
  j["result"] = dynamics::approx_curve(lambda, o.conv_index, spec);
  emit(out, j);
  return kExitOk;
}

struct SimulateOptions {
  std::string lambda;
  std::size_t count = 1000;
  std::string format = "json";
  std::string table = "orbit";
};

int run_simulate(const SimulateOptions& o, std::ostream& out) {
  const double lambda = parse_real(o.lambda);
  if (o.format == "svg") {
    out << render_orbit_svg(lambda, o.count);
    return kExitOk;
  }
  if (o.format == "csv") {
    if (o.table == "orbit") {
      out << render_orbit_csv(lambda, o.count);
    } else {
      out << render_gaps_csv(dynamics::leaf_gap_statistics(lambda, o.count));
    }
    return kExitOk;
  }
  const auto stats = dynamics::leaf_gap_statistics(lambda, o.count);
  Json j = envelope("simulate");
  j["lambda"] = lambda;
  j["count"] = o.count;
  j["min_gap"] = stats.gaps.front();
  j["result"] = stats;
  emit(out, j);
  return kExitOk;
}

struct VerifyLiftOptions {
  std::string matrix = "[[1,0],[0,1]]";
  std::string lambda = "(0+1*sqrt(2))/1";
  std::size_t grid = torusmaps::kDefaultGridSize;
  int degree = 3;
  double amplitude = 0.1;
  bool inject_defect = false;
  std::string input;
  std::string emit = "report";
};

torusmaps::LiftSample read_lift_sample(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot read '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, "'" + path + "' is not JSON: " + e.what());
  }
  const Json& body = j.contains("result") ? j["result"] : j;
  return body.get<torusmaps::LiftSample>();
}

int run_verify_lift(const VerifyLiftOptions& o, std::ostream& out) {
  Json j = envelope("verify-lift");
  torusmaps::LiftSample sample;
  std::optional<torusmaps::TrigPolynomial> kappa;
  torusmaps::Point base{0.0, 0.0};
  if (!o.input.empty()) {
    sample = read_lift_sample(o.input);
    j["source"] = o.input;
  } else {
    const std::uint64_t seed = seed_from_environment();
    const auto A = UnimodularMatrix::parse(o.matrix);
    const double lambda = parse_real(o.lambda);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> offset(-1.0, 1.0);
    base = {offset(rng), offset(rng)};
    kappa = torusmaps::random_trig_polynomial(rng(), o.degree, o.amplitude);
    sample = torusmaps::synthetic_lift(A, lambda, base, *kappa, o.grid);
    if (o.inject_defect) sample.at(sample.n, sample.n / 2)[0] += 1e-3;
    j["seed"] = seed;
    j["source"] = "synthetic";
  }
  if (o.emit == "sample") {
    j["result"] = sample;
    emit(out, j);
    return kExitOk;
  }

  const auto D = torusmaps::decompose_lift(sample);
  j["matrix"] = D.A;
  j["lambda"] = D.lambda;
  j["lambda_tilde"] = D.lambda_tilde;
  j["base"] = D.base;
  if (kappa) {
    double err = 0.0;
    const double h = 1.0 / static_cast<double>(D.n);
    for (std::size_t i = 0; i <= D.n; ++i) {
      for (std::size_t k = 0; k <= D.n; ++k) {
        const double truth = (*kappa)(static_cast<double>(i) * h, static_cast<double>(k) * h) - (*kappa)(0.0, 0.0);
        err = std::max(err, std::abs(D.kappa_at(i, k) - truth));
      }
    }
    j["kappa_max_error"] = err;
    j["base_error"] = std::max(std::abs(D.base[0] - base[0] - (*kappa)(0.0, 0.0)),
                               std::abs(D.base[1] - base[1] - (*kappa)(0.0, 0.0) * D.lambda_tilde));
  }
  if (o.emit == "decomposition") {
    j["result"] = D;
  } else {
    j["result"] = D.residuals;
  }
  emit(out, j);
  return kExitOk;
}

void emit_error(std::ostream& out, const std::string& command, const Error& e) {
  Json j = envelope(command);
  j["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  emit(out, j);
}

}  // namespace

std::uint64_t seed_from_environment() {
  const char* raw = std::getenv("SEPK_SEED");
  if (raw == nullptr || *raw == '\0') return kDefaultSeed;
  std::uint64_t v = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, v);
  if (ec != std::errc() || ptr != end) throw Error(ErrorKind::parse, "SEPK_SEED must be an unsigned integer");
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued fractions, blow-ups and torus maps of nodal separators", "sepk"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  CfOptions cf;
  auto* cf_cmd = app.add_subcommand("cf", "Continued fraction of an exact quadratic irrational");
  cf_cmd->add_option("--value", cf.value, "Value as (p+q*sqrt(d))/r")->required();
  cf_cmd->add_option("--transform", cf.transform, "none, or node for x/(x-1)")
      ->check(CLI::IsMember({"none", "node"}))
      ->capture_default_str();
  cf_cmd->add_option("--depth", cf.depth, "Number of partial quotients")
      ->check(CLI::Range(std::size_t{1}, kMaxDepth))
      ->capture_default_str();
  cf_cmd->add_option("--format", cf.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  ResolveOptions rs;
  auto* rs_cmd = app.add_subcommand("resolve", "Blow-up resolution of the separator |y| = |x|^lambda");
  rs_cmd->add_option("--lambda", rs.lambda, "Eigenvalue as (p+q*sqrt(d))/r")->required();
  rs_cmd->add_option("--depth", rs.depth, "Number of blow-ups")
      ->check(CLI::Range(std::size_t{1}, kMaxResolveDepth))
      ->capture_default_str();
  rs_cmd->add_option("--format", rs.format, "json, dot or csv")
      ->check(CLI::IsMember({"json", "dot", "csv"}))
      ->capture_default_str();

  EquisingularOptions eq;
  auto* eq_cmd = app.add_subcommand("equisingular", "Decide equisingularity; exit 0 if equisingular, 1 if not");
  eq_cmd->add_option("--lambda1", eq.lambda1, "First separator eigenvalue");
  eq_cmd->add_option("--lambda2", eq.lambda2, "Second separator eigenvalue");
  eq_cmd->add_option("--cusp1", eq.cusp1, "First cusp as m,n");
  eq_cmd->add_option("--cusp2", eq.cusp2, "Second cusp as m,n");
  eq_cmd->add_option("--depth", eq.depth, "Also compare proximity matrices at this depth")
      ->check(CLI::Range(std::size_t{0}, kMaxResolveDepth));

  MoebiusOptions mo;
  auto* mo_cmd = app.add_subcommand("moebius", "Apply (c+d*lambda)/(a+b*lambda) or list admissible matrices");
  mo_cmd->add_option("--lambda", mo.lambda, "Eigenvalue as (p+q*sqrt(d))/r")->required();
  mo_cmd->add_option("--matrix", mo.matrix, "Matrix as [[a,b],[c,d]]");
  mo_cmd->add_option("--lambda-tilde", mo.lambda_tilde, "Target eigenvalue for the admissible search");
  mo_cmd->add_option("--bound", mo.bound, "Entry bound for the admissible search")
      ->check(CLI::Range(std::int64_t{1}, torusmaps::kMaxEnumerationBound));
  mo_cmd->add_option("--shards", mo.shards, "Worker threads, 0 for automatic")->capture_default_str();

  ClassifyOptions cl;
  auto* cl_cmd = app.add_subcommand("classify", "Matrices whose convergent cusps stay equisingular");
  cl_cmd->add_option("--lambda", cl.lambda, "Eigenvalue as (p+q*sqrt(d))/r")->required();
  cl_cmd->add_option("--bound", cl.bound, "Entry bound")
      ->check(CLI::Range(std::int64_t{1}, torusmaps::kMaxEnumerationBound))
      ->capture_default_str();
  cl_cmd->add_option("--conv-depth", cl.conv_depth, "Number of convergents")
      ->check(CLI::Range(std::size_t{1}, std::size_t{60}))
      ->capture_default_str();
  cl_cmd->add_option("--shards", cl.shards, "Worker threads, 0 for automatic")->capture_default_str();
  cl_cmd->add_flag("--raw-filter", cl.raw_filter, "Skip the two-convergent requirement");
  cl_cmd->add_option("--format", cl.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  ApproxOptions ap;
  auto* ap_cmd = app.add_subcommand("approx", "Convergent cusp and its image under the boundary map");
  ap_cmd->add_option("--lambda", ap.lambda, "Eigenvalue as (p+q*sqrt(d))/r")->required();
  ap_cmd->add_option("--conv-index", ap.conv_index, "1-based convergent index")
      ->check(CLI::Range(std::size_t{1}, std::size_t{60}))
      ->capture_default_str();
  ap_cmd->add_option("--matrix", ap.matrix, "Matrix as [[a,b],[c,d]]")->capture_default_str();
  ap_cmd->add_option("--mu0-turns", ap.mu0_turns, "Phase of mu0 in turns")->capture_default_str();
  ap_cmd->add_option("--nu0-turns", ap.nu0_turns, "Phase of nu0 in turns")->capture_default_str();

  SimulateOptions si;
  auto* si_cmd = app.add_subcommand("simulate", "Orbit {j*lambda mod 1} and its gaps");
  si_cmd->add_option("--lambda", si.lambda, "Slope as (p+q*sqrt(d))/r or a decimal")->required();
  si_cmd->add_option("--count", si.count, "Number of orbit points")
      ->check(CLI::Range(std::size_t{2}, kMaxOrbit))
      ->capture_default_str();
  si_cmd->add_option("--format", si.format, "json, csv or svg")
      ->check(CLI::IsMember({"json", "csv", "svg"}))
      ->capture_default_str();
  si_cmd->add_option("--table", si.table, "CSV table: orbit or gaps")
      ->check(CLI::IsMember({"orbit", "gaps"}))
      ->capture_default_str();

  VerifyLiftOptions vl;
  auto* vl_cmd = app.add_subcommand("verify-lift", "Decompose a sampled lift H = H(0,0) + A + kappa (1, lambda~)");
  vl_cmd->add_option("--matrix", vl.matrix, "Deck matrix of the synthetic lift")->capture_default_str();
  vl_cmd->add_option("--lambda", vl.lambda, "Slope of the synthetic lift")->capture_default_str();
  vl_cmd->add_option("--grid", vl.grid, "Grid size n of the (n+1)^2 samples")
      ->check(CLI::Range(std::size_t{1}, kMaxGrid))
      ->capture_default_str();
  vl_cmd->add_option("--degree", vl.degree, "Degree of the random kappa")
      ->check(CLI::Range(0, 8))
      ->capture_default_str();
  vl_cmd->add_option("--amplitude", vl.amplitude, "Sup-norm bound of the random kappa")
      ->check(CLI::Range(0.0, 10.0))
      ->capture_default_str();
  vl_cmd->add_flag("--inject-defect", vl.inject_defect, "Break the deck relation at one cell");
  vl_cmd->add_option("--input", vl.input, "Lift sample JSON file instead of a synthetic lift")
      ->check(CLI::ExistingFile);
  vl_cmd->add_option("--emit", vl.emit, "report, decomposition or sample")
      ->check(CLI::IsMember({"report", "decomposition", "sample"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  try {
    if (command == "cf") return run_cf(cf, out);
    if (command == "resolve") return run_resolve(rs, out);
    if (command == "equisingular") return run_equisingular(eq, out);
    if (command == "moebius") return run_moebius(mo, out);
    if (command == "classify") return run_classify(cl, out);
    if (command == "approx") return run_approx(ap, out);
    if (command == "simulate") return run_simulate(si, out);
    if (command == "verify-lift") return run_verify_lift(vl, out);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse) {
      err << "error: " << e.what() << '\n' << chosen->help();
      return kExitUsage;
    }
    emit_error(out, command, e);
    return kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n' << chosen->help();
    return kExitUsage;
  }
  err << "error: unknown subcommand\n";
  return kExitUsage;
}

}  // namespace sepk::cli
