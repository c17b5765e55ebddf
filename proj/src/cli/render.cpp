#include "sepk/cli/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace sepk::cli {

namespace {

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string exact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string render_dot(const blowup::ResolutionRecord& rec) {
  std::ostringstream out;
  out << "graph dual {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t k = 0; k < rec.graph.weights.size(); ++k) {
    const int w = rec.graph.weights[k];
    out << "  E" << k + 1 << " [label=\"E_" << k + 1 << "\\n" << w << "\", weight=" << w << "];\n";
  }
  for (const auto& [a, b] : rec.graph.edges) out << "  E" << a << " -- E" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string render_resolution_csv(const blowup::ResolutionRecord& rec) {
  std::ostringstream out;
  out << "j,new_divisor,retained_divisor,exponent_after,proximate_to\n";
  for (std::size_t k = 0; k < rec.points.size(); ++k) {
    const auto& p = rec.points[k];
    out << p.j << ',' << p.new_divisor.label() << ',' << p.retained_divisor.label() << ','
        << p.exponent_after.to_string() << ',';
    for (std::size_t i = 0; i < rec.proximity[k].size(); ++i) {
      if (i > 0) out << ';';
      out << rec.proximity[k][i];
    }
    out << '\n';
  }
  return out.str();
}

std::string render_orbit_csv(double lambda, std::size_t count) {
  const auto orbit = dynamics::circle_orbit(lambda, count);
  const double turn = 2.0 * std::numbers::pi;
  std::ostringstream out;
  out << "j,theta,re,im\n";
  for (std::size_t j = 0; j < orbit.size(); ++j) {
    out << j << ',' << exact(orbit[j]) << ',' << exact(std::cos(turn * orbit[j])) << ','
        << exact(std::sin(turn * orbit[j])) << '\n';
  }
  return out.str();
}

std::string render_gaps_csv(const dynamics::GapStatistics& stats) {
  std::ostringstream out;
  out << "rank,gap,class\n";
  std::size_t cls = 0;
  for (std::size_t k = 0; k < stats.gaps.size(); ++k) {
    while (cls + 1 < stats.distinct.size() && stats.gaps[k] - stats.distinct[cls] > dynamics::kGapMergeTolerance) {
      ++cls;
    }
    out << k << ',' << exact(stats.gaps[k]) << ',' << cls << '\n';
  }
  return out.str();
}

std::string render_orbit_svg(double lambda, std::size_t count) {
  constexpr double size = 400.0;
  constexpr double pad = 20.0;
  const auto X = [&](double u) { return fixed(pad + u * size, 3); };
  const auto Y = [&](double v) { return fixed(pad + (1.0 - v) * size, 3); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * pad << "\" height=\"" << size + 2 * pad
      << "\" viewBox=\"0 0 " << size + 2 * pad << ' ' << size + 2 * pad << "\">\n";
  out << "<title>leaf of slope " << exact(lambda) << " on the boundary torus</title>\n";
  out << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << size << "\" height=\"" << size
      << "\" fill=\"white\" stroke=\"black\"/>\n";

  // Leaf v = lambda u, cut at each crossing of v = integer or u = integer.
  const double turns = static_cast<double>(std::min(count, kSvgMaxLeafTurns));
  const double slope = lambda;
  out << "<g stroke=\"steelblue\" stroke-width=\"0.6\" fill=\"none\">\n";
  double u = 0.0;
  double iu = 0.0;
  double iv = 0.0;
  std::size_t segments = 0;
  while (u < turns && slope > 0.0 && segments++ < kSvgMaxSegments) {
    const double next_vertical = iu + 1.0;
    const double next_horizontal = (iv + 1.0) / slope;
    const double u_end = std::min({next_vertical, next_horizontal, turns});
    out << "<line x1=\"" << X(u - iu) << "\" y1=\"" << Y(slope * u - iv) << "\" x2=\"" << X(u_end - iu)
        << "\" y2=\"" << Y(slope * u_end - iv) << "\"/>\n";
    if (u_end == next_vertical) iu += 1.0;
    if (u_end == next_horizontal) iv += 1.0;
    u = u_end;
  }
  out << "</g>\n";

  const auto orbit = dynamics::circle_orbit(lambda, std::min(count, kSvgMaxPoints));
  out << "<g fill=\"crimson\">\n";
  for (double theta : orbit) out << "<circle cx=\"" << X(0.0) << "\" cy=\"" << Y(theta) << "\" r=\"2\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace sepk::cli
