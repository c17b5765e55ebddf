#include "sepk/blowup/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "sepk/exactnum/errors.hpp"

namespace sepk::blowup {

DivisorId DivisorId::exceptional(int j) {
  if (j < 1) throw Error(ErrorKind::invalid_argument, "exceptional divisor index must be >= 1");
  return DivisorId(j);
}

std::string DivisorId::label() const {
  if (index_ == 0) return "{y=0}";
  if (index_ == -1) return "{x=0}";
  return "E_" + std::to_string(index_);
}

DivisorId DivisorId::from_label(const std::string& label) {
  if (label == "{y=0}") return y_separatrix();
  if (label == "{x=0}") return x_separatrix();
  if (label.size() > 2 && label.compare(0, 2, "E_") == 0) {
    try {
      std::size_t used = 0;
      const int j = std::stoi(label.substr(2), &used);
      if (used == label.size() - 2) return exceptional(j);
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorKind::parse, "unknown divisor label '" + label + "'");
}

ResolutionState ResolutionState::initial(const ExactEigenvalue& lambda) {
  if (lambda.sign() <= 0) throw Error(ErrorKind::invalid_argument, "node exponent must be positive");
  return ResolutionState{lambda, DivisorId::x_separatrix(), DivisorId::y_separatrix(), 0};
}

StepResult blowup_step(const ResolutionState& s) {
  const DivisorId fresh = DivisorId::exceptional(static_cast<int>(s.step) + 1);
  if (compare(s.mu, BigRational(1)) > 0) {
    return StepResult{ResolutionState{add_integer(s.mu, -1), fresh, s.dy, s.step + 1}, s.dy};
  }
  // mu is irrational, so mu < 1 here.
  return StepResult{ResolutionState{add_integer(reciprocal(s.mu), -1), fresh, s.dx, s.step + 1}, s.dx};
}

ResolutionRecord resolve(const ExactEigenvalue& lambda, std::size_t depth) {
  if (depth == 0) throw Error(ErrorKind::invalid_argument, "depth must be at least 1");
  ResolutionRecord rec{lambda, {}, {}, {}};
  rec.points.reserve(depth);
  rec.proximity.reserve(depth);

  std::set<std::pair<int, int>> edges;
  auto& weights = rec.graph.weights;

  ResolutionState state = ResolutionState::initial(lambda);
  for (std::size_t j = 1; j <= depth; ++j) {
    // The centre p_{j-1} lies on state.dx and state.dy.
    const DivisorId through[2] = {state.dx, state.dy};
    StepResult res = blowup_step(state);
    const int fresh = res.next.dx.index();

    weights.push_back(-1);
    for (const DivisorId& div : through) {
      if (!div.is_exceptional()) continue;
      --weights[static_cast<std::size_t>(div.index() - 1)];
      edges.emplace(div.index(), fresh);
    }
    if (through[0].is_exceptional() && through[1].is_exceptional()) {
      edges.erase(std::minmax(through[0].index(), through[1].index()));
    }

    std::vector<std::size_t> prox{j - 1};
    if (res.retained.is_exceptional()) {
      prox.push_back(static_cast<std::size_t>(res.retained.index() - 1));
      std::sort(prox.begin(), prox.end());
    }
    rec.proximity.push_back(std::move(prox));
    rec.points.push_back(InfinitelyNearPoint{j, res.next.dx, res.retained, res.next.mu});
    state = std::move(res.next);
  }
  rec.graph.edges.assign(edges.begin(), edges.end());
  return rec;
}

std::vector<std::size_t> run_length_encoding(const ResolutionRecord& rec) {
  const auto& pts = rec.points;
  const std::size_t n = pts.size();
  const DivisorId first = DivisorId::exceptional(1);

  std::size_t pos = 1;  // p_2
  while (pos < n && pts[pos].retained_divisor == first) ++pos;
  if (pos >= n) {
    throw Error(ErrorKind::insufficient_depth,
                "depth " + std::to_string(n) + " does not complete the first run of points on E_1");
  }
  std::vector<std::size_t> runs{pos};  // 1 + (pos - 1)
  while (pos < n) {
    std::size_t end = pos;
    while (end < n && pts[end].retained_divisor == pts[pos].retained_divisor) ++end;
    if (end >= n) break;  // still open at the truncation point
    runs.push_back(end - pos);
    pos = end;
  }
  return runs;
}

std::vector<std::vector<int>> proximity_matrix(const ResolutionRecord& rec) {
  const std::size_t n = rec.depth();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  // Row r >= 1 belongs to p_r, whose proximities are stored at proximity[r-1].
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t c : rec.proximity[r - 1]) m[r][c] = 1;
  }
  return m;
}

std::optional<std::pair<std::size_t, std::size_t>> exponent_orbit_period(const ExactEigenvalue& lambda,
                                                                         std::size_t max_steps) {
  using Key = std::tuple<BigInt, BigInt, BigInt>;
  std::map<Key, std::size_t> seen;
  ResolutionState state = ResolutionState::initial(lambda);
  for (std::size_t step = 0; step <= max_steps; ++step) {
    auto [it, inserted] = seen.emplace(Key{state.mu.p(), state.mu.q(), state.mu.r()}, step);
    if (!inserted) return std::make_pair(it->second, step - it->second);
    state = blowup_step(state).next;
  }
  return std::nullopt;
}

}  // namespace sepk::blowup
