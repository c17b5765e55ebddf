#include "sepk/torusmaps/lift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "sepk/exactnum/errors.hpp"
#include "sepk/torusmaps/torus_maps.hpp"

namespace sepk::torusmaps {

namespace {

Point affine(const UnimodularMatrix& A, double u, double v) {
  return {static_cast<double>(A.a()) * u + static_cast<double>(A.b()) * v,
          static_cast<double>(A.c()) * u + static_cast<double>(A.d()) * v};
}

double sup_dist(const Point& x, const Point& y) { return std::max(std::abs(x[0] - y[0]), std::abs(x[1] - y[1])); }

struct Worst {
  double value = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;

  void offer(double r, std::size_t ii, std::size_t jj) {
    if (!(r <= value)) {
      value = r;
      i = ii;
      j = jj;
    }
  }
};

struct Scan {
  Worst deck, parallel, periodicity;
  std::vector<double> kappa;
};

Scan scan(const LiftSample& s) {
  const std::size_t side = s.side();
  if (s.n == 0 || s.values.size() != side * side) {
    throw Error(ErrorKind::invalid_argument, "lift sample needs (n+1)^2 values with n >= 1");
  }
  const double h = 1.0 / static_cast<double>(s.n);
  const Point base = s.at(0, 0);
  const Point e1 = affine(s.A, 1.0, 0.0);
  const Point e2 = affine(s.A, 0.0, 1.0);

  Scan out;
  out.kappa.resize(side * side);
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      const Point lin = affine(s.A, static_cast<double>(i) * h, static_cast<double>(j) * h);
      const Point& H = s.at(i, j);
      const double d1 = H[0] - base[0] - lin[0];
      const double d2 = H[1] - base[1] - lin[1];
      out.kappa[i * side + j] = d1;
      out.parallel.offer(std::abs(d2 - s.lambda_tilde * d1), i, j);
    }
  }
  for (std::size_t k = 0; k < side; ++k) {
    const Point& right = s.at(s.n, k);
    const Point& left = s.at(0, k);
    out.deck.offer(sup_dist(right, {left[0] + e1[0], left[1] + e1[1]}), s.n, k);
    out.periodicity.offer(std::abs(out.kappa[s.n * side + k] - out.kappa[k]), s.n, k);

    const Point& top = s.at(k, s.n);
    const Point& bottom = s.at(k, 0);
    out.deck.offer(sup_dist(top, {bottom[0] + e2[0], bottom[1] + e2[1]}), k, s.n);
    out.periodicity.offer(std::abs(out.kappa[k * side + s.n] - out.kappa[k * side]), k, s.n);
  }
  return out;
}

ResidualReport report_of(const Scan& sc) {
  return ResidualReport{sc.deck.value, sc.parallel.value, sc.periodicity.value};
}

}  // namespace

double ResidualReport::worst() const noexcept {
  return std::max({max_deck_residual, max_parallel_residual, max_periodicity_residual});
}

LiftSample sample_lift(const std::function<Point(double, double)>& H, std::size_t n, const UnimodularMatrix& A,
                       double lambda, double lambda_tilde) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "grid size must be at least 1");
  LiftSample s{n, {}, A, lambda, lambda_tilde};
  s.values.resize(s.side() * s.side());
  const double h = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) s.at(i, j) = H(static_cast<double>(i) * h, static_cast<double>(j) * h);
  }
  return s;
}

ResidualReport lift_residuals(const LiftSample& s) { return report_of(scan(s)); }

LiftDecomposition decompose_lift(const LiftSample& s, double tolerance) {
  const double expected = slope_transport(s.A, s.lambda);
  if (!(std::abs(expected - s.lambda_tilde) <= 1e-9)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "lambda_tilde " << s.lambda_tilde << " differs from slope_transport(A, lambda) = " << expected;
    throw Error(ErrorKind::slope_mismatch, msg.str());
  }

  Scan sc = scan(s);
  const std::pair<const char*, const Worst*> checks[] = {
      {"deck", &sc.deck}, {"parallel", &sc.parallel}, {"periodicity", &sc.periodicity}};
  for (const auto& [name, w] : checks) {
    if (!(w->value <= tolerance)) {
      std::ostringstream msg;
      msg.precision(6);
      msg << name << " residual " << w->value << " exceeds " << tolerance << " at cell (" << w->i << "," << w->j
          << ")";
      throw Error(ErrorKind::residual_exceeded, msg.str());
    }
  }
  return LiftDecomposition{s.at(0, 0), s.A, s.lambda, s.lambda_tilde, s.n, std::move(sc.kappa), report_of(sc)};
}

LiftSample synthesize_lift(const LiftDecomposition& D) {
  LiftSample s{D.n, {}, D.A, D.lambda, D.lambda_tilde};
  const std::size_t side = s.side();
  if (D.kappa.size() != side * side) throw Error(ErrorKind::invalid_argument, "kappa grid has the wrong size");
  s.values.resize(side * side);
  const double h = 1.0 / static_cast<double>(D.n);
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      const Point lin = affine(D.A, static_cast<double>(i) * h, static_cast<double>(j) * h);
      const double k = D.kappa[i * side + j];
      s.at(i, j) = {D.base[0] + lin[0] + k, D.base[1] + lin[1] + k * D.lambda_tilde};
    }
  }
  return s;
}

PlaneMapSamples sample_plane_map(const std::function<Point(double, double)>& H, std::size_t per_unit) {
  if (per_unit == 0) throw Error(ErrorKind::invalid_argument, "samples per unit must be at least 1");
  PlaneMapSamples out{per_unit, {}};
  const std::size_t side = out.side();
  out.values.resize(side * side);
  const double h = 1.0 / static_cast<double>(per_unit);
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      out.values[i * side + j] = H(static_cast<double>(i) * h, static_cast<double>(j) * h);
    }
  }
  return out;
}

UnimodularMatrix extract_deck_matrix(const PlaneMapSamples& H) {
  const std::size_t N = H.per_unit;
  const std::size_t side = H.side();
  if (N == 0 || H.values.size() != side * side) {
    throw Error(ErrorKind::invalid_argument, "plane samples need (2 per_unit)^2 values");
  }
  // col[0] = A(1,0) = (a, c), col[1] = A(0,1) = (b, d).
  std::array<Point, 2> sum{};
  std::vector<std::array<Point, 2>> diffs;
  diffs.reserve(N * side);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      const Point& p = H.at(i, j);
      const Point& pu = H.at(i + N, j);
      const Point& pv = H.at(j, i + N);
      const Point& pv0 = H.at(j, i);
      const std::array<Point, 2> d{Point{pu[0] - p[0], pu[1] - p[1]}, Point{pv[0] - pv0[0], pv[1] - pv0[1]}};
      for (int c = 0; c < 2; ++c) {
        sum[c][0] += d[c][0];
        sum[c][1] += d[c][1];
      }
      diffs.push_back(d);
    }
  }
  const double count = static_cast<double>(diffs.size());
  std::array<std::array<double, 2>, 2> rounded{};
  for (int c = 0; c < 2; ++c) {
    for (int r = 0; r < 2; ++r) rounded[c][r] = std::round(sum[c][r] / count);
  }
  double worst = 0.0;
  for (const auto& d : diffs) {
    for (int c = 0; c < 2; ++c) {
      for (int r = 0; r < 2; ++r) worst = std::max(worst, std::abs(d[c][r] - rounded[c][r]));
    }
  }
  if (!(worst <= kRoundingTolerance)) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "period differences are not integral: residual " << worst;
    throw Error(ErrorKind::residual_exceeded, msg.str());
  }
  const auto a = static_cast<std::int64_t>(rounded[0][0]);
  const auto c = static_cast<std::int64_t>(rounded[0][1]);
  const auto b = static_cast<std::int64_t>(rounded[1][0]);
  const auto d = static_cast<std::int64_t>(rounded[1][1]);
  return UnimodularMatrix::make(a, b, c, d);
}

double TrigPolynomial::operator()(double u, double v) const {
  const double turn = 2.0 * std::numbers::pi;
  const int side = 2 * degree + 1;
  double out = 0.0;
  for (int k = -degree; k <= degree; ++k) {
    for (int l = -degree; l <= degree; ++l) {
      const std::size_t idx = static_cast<std::size_t>((k + degree) * side + (l + degree));
      const double phase = turn * (k * u + l * v);
      out += cos_coeffs[idx] * std::cos(phase) + sin_coeffs[idx] * std::sin(phase);
    }
  }
  return out;
}

TrigPolynomial random_trig_polynomial(std::uint64_t seed, int degree, double amplitude) {
  if (degree < 0) throw Error(ErrorKind::invalid_argument, "degree must be nonnegative");
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
    throw Error(ErrorKind::invalid_argument, "amplitude must be a nonnegative real");
  }
  const std::size_t count = static_cast<std::size_t>((2 * degree + 1) * (2 * degree + 1));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  TrigPolynomial p{degree, std::vector<double>(count), std::vector<double>(count)};
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    p.cos_coeffs[i] = coeff(rng);
    p.sin_coeffs[i] = coeff(rng);
    total += std::abs(p.cos_coeffs[i]) + std::abs(p.sin_coeffs[i]);
  }
  const double scale = total > 0.0 ? amplitude / total : 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    p.cos_coeffs[i] *= scale;
    p.sin_coeffs[i] *= scale;
  }
  return p;
}

LiftSample synthetic_lift(const UnimodularMatrix& A, double lambda, const Point& base,
                          const std::function<double(double, double)>& kappa, std::size_t n) {
  const double lt = slope_transport(A, lambda);
  return sample_lift(
      [&](double u, double v) {
        const Point lin = affine(A, u, v);
        const double k = kappa(u, v);
        return Point{base[0] + lin[0] + k, base[1] + lin[1] + k * lt};
      },
      n, A, lambda, lt);
}

LiftDecomposition interpolate_lifts(const LiftDecomposition& D0, const LiftDecomposition& D1, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw Error(ErrorKind::invalid_argument, "s must lie in [0, 1]");
  if (D0.A != D1.A) {
    throw Error(ErrorKind::matrix_mismatch, "matrices differ: " + D0.A.to_string() + " vs " + D1.A.to_string());
  }
  if (D0.lambda != D1.lambda || D0.lambda_tilde != D1.lambda_tilde) {
    throw Error(ErrorKind::invalid_argument, "slopes differ between the two lifts");
  }
  if (D0.n != D1.n || D0.kappa.size() != D1.kappa.size()) {
    throw Error(ErrorKind::invalid_argument, "grids differ between the two lifts");
  }
  const double w = 1.0 - s;
  // Endpoints are returned verbatim so signed zeros survive.
  const auto mix = [&](double x, double y) { return s == 0.0 ? x : s == 1.0 ? y : w * x + s * y; };
  LiftDecomposition out{{mix(D0.base[0], D1.base[0]), mix(D0.base[1], D1.base[1])},
                        D0.A,
                        D0.lambda,
                        D0.lambda_tilde,
                        D0.n,
                        std::vector<double>(D0.kappa.size()),
                        ResidualReport{mix(D0.residuals.max_deck_residual, D1.residuals.max_deck_residual),
                                       mix(D0.residuals.max_parallel_residual, D1.residuals.max_parallel_residual),
                                       mix(D0.residuals.max_periodicity_residual,
                                           D1.residuals.max_periodicity_residual)}};
  for (std::size_t k = 0; k < out.kappa.size(); ++k) out.kappa[k] = mix(D0.kappa[k], D1.kappa[k]);
  return out;
}

}  // namespace sepk::torusmaps
