#include "sepk/exactnum/cf_expansion.hpp"

#include <map>
#include <tuple>

#include "sepk/exactnum/errors.hpp"

namespace sepk {

BigInt CFExpansion::entry(std::size_t i) const {
  if (i < entries.size()) return entries[i];
  if (!period_start || period.empty()) {
    throw Error(ErrorKind::insufficient_depth,
                "entry " + std::to_string(i) + " is beyond the computed prefix of length " +
                    std::to_string(entries.size()));
  }
  if (i < *period_start) return preperiod[i];
  return period[(i - *period_start) % period.size()];
}

std::string CFExpansion::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i == 1) out += ";";
    if (i > 1) out += ",";
    out += entries[i].str();
  }
  out += "]";
  if (has_period()) {
    out += " (period ";
    for (std::size_t i = 0; i < period.size(); ++i) {
      if (i > 0) out += ",";
      out += period[i].str();
    }
    out += ")";
  }
  return out;
}

CFExpansion cf_expand(const ExactEigenvalue& x, std::size_t depth) {
  if (depth == 0) throw Error(ErrorKind::invalid_argument, "depth must be at least 1");
  if (x.sign() <= 0) throw Error(ErrorKind::invalid_argument, "continued fraction input must be positive");

  using State = std::tuple<BigInt, BigInt, BigInt>;
  std::map<State, std::size_t> seen;
  std::vector<BigInt> quotients;
  CFExpansion out;

  ExactEigenvalue cur = x;
  const std::size_t limit = depth + kPeriodSearchLimit;
  for (std::size_t step = 0; step < limit; ++step) {
    State state{cur.p(), cur.q(), cur.r()};
    auto [it, inserted] = seen.emplace(std::move(state), step);
    if (!inserted) {
      out.period_start = it->second;
      out.preperiod.assign(quotients.begin(), quotients.begin() + static_cast<std::ptrdiff_t>(it->second));
      out.period.assign(quotients.begin() + static_cast<std::ptrdiff_t>(it->second), quotients.end());
      break;
    }
    const BigInt a = ee_floor(cur);
    quotients.push_back(a);
    // Irrational, so the fractional part is never zero.
    cur = reciprocal(add_integer(cur, -a));
  }

  out.entries.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    out.entries.push_back(i < quotients.size() ? quotients[i] : out.entry(i));
  }
  return out;
}

std::vector<BigRational> convergents(const CFExpansion& cf, std::size_t count) {
  std::vector<BigRational> out;
  out.reserve(count);
  // h, k hold index i-1 and h_prev, k_prev index i-2 of the recurrence.
  BigInt h = 1, h_prev = 0;
  BigInt k = 0, k_prev = 1;
  for (std::size_t i = 0; i < count; ++i) {
    const BigInt a = cf.entry(i);
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * k + k_prev;
    h_prev = std::move(h);
    k_prev = std::move(k);
    h = std::move(h_next);
    k = std::move(k_next);
    out.emplace_back(h, k);
  }
  return out;
}

}  // namespace sepk
