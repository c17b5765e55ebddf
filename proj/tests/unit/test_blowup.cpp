#include <doctest.h>

#include "sepk/blowup/resolution.hpp"
#include "sepk/exactnum/cf_expansion.hpp"
#include "sepk/exactnum/errors.hpp"
#include "test_support.hpp"

using namespace sepk;
using namespace sepk::blowup;
using sepk::testing::ee;

namespace {

std::vector<std::string> retained_labels(const ResolutionRecord& rec) {
  std::vector<std::string> out;
  for (const auto& p : rec.points) out.push_back(p.retained_divisor.label());
  return out;
}

}  // namespace

TEST_SUITE("blowup_step") {
  TEST_CASE("mu above one keeps dy") {
    const auto s = ResolutionState::initial(ee("(0+1*sqrt(2))/1"));
    const auto r = blowup_step(s);
    CHECK(r.next.mu == ee("(-1+1*sqrt(2))/1"));
    CHECK(r.next.dx == DivisorId::exceptional(1));
    CHECK(r.next.dy == DivisorId::y_separatrix());
    CHECK(r.retained == DivisorId::y_separatrix());
    CHECK(r.next.step == 1);
  }

  TEST_CASE("mu below one moves dx to dy") {
    const auto s = ResolutionState::initial(ee("(-1+1*sqrt(5))/2"));
    const auto r = blowup_step(s);
    CHECK(r.next.mu == ee("(-1+1*sqrt(5))/2"));
    CHECK(r.next.dx == DivisorId::exceptional(1));
    CHECK(r.next.dy == DivisorId::x_separatrix());
    CHECK(r.retained == DivisorId::x_separatrix());
  }

  TEST_CASE("non-positive exponent is rejected") {
    CHECK_THROWS_AS(ResolutionState::initial(ee("(0-1*sqrt(2))/1")), Error);
  }
}

TEST_SUITE("resolve") {
  TEST_CASE("golden ratio at depth one") {
    const auto rec = resolve(ee("(1+1*sqrt(5))/2"), 1);
    CHECK(rec.depth() == 1);
    CHECK(rec.graph.weights == std::vector<int>{-1});
    CHECK(rec.graph.edges.empty());
    CHECK(rec.proximity == std::vector<std::vector<std::size_t>>{{0}});
  }

  TEST_CASE("run lengths of examples") {
    CHECK(run_length_encoding(resolve(ee("(0+1*sqrt(2))/1"), 8)) == std::vector<std::size_t>{3, 2, 2});
    CHECK(run_length_encoding(resolve(ee("(1+1*sqrt(5))/2"), 8)) == std::vector<std::size_t>{2, 1, 1, 1, 1, 1});
    const auto r3 = resolve(ee("(0+1*sqrt(3))/1"), 6);
    CHECK(run_length_encoding(r3) == std::vector<std::size_t>{2, 2, 1});
    CHECK(retained_labels(r3) == std::vector<std::string>{"{y=0}", "E_1", "E_2", "E_2", "E_4", "E_5"});
  }

  TEST_CASE("retained sequences") {
    CHECK(retained_labels(resolve(ee("(0+1*sqrt(2))/1"), 7)) ==
          std::vector<std::string>{"{y=0}", "E_1", "E_1", "E_3", "E_3", "E_5", "E_5"});
    CHECK(retained_labels(resolve(ee("(1+1*sqrt(5))/2"), 5)) ==
          std::vector<std::string>{"{y=0}", "E_1", "E_2", "E_3", "E_4"});
    for (const char* text : {"(0+1*sqrt(2))/1", "(1+1*sqrt(5))/2", "(0+1*sqrt(3))/1"}) {
      const auto rec = resolve(ee(text), 1);
      CHECK(rec.points.front().new_divisor == DivisorId::exceptional(1));
    }
  }

  TEST_CASE("short resolution cannot certify a run") {
    CHECK_THROWS_AS(run_length_encoding(resolve(ee("(0+1*sqrt(2))/1"), 2)), Error);
    CHECK_THROWS_AS(resolve(ee("(0+1*sqrt(2))/1"), 0), Error);
  }

  TEST_CASE("proximity of the square root of two") {
    const auto rec = resolve(ee("(0+1*sqrt(2))/1"), 5);
    CHECK(rec.proximity[0] == std::vector<std::size_t>{0});
    CHECK(rec.proximity[1] == std::vector<std::size_t>{0, 1});
    CHECK(rec.proximity[2] == std::vector<std::size_t>{0, 2});
    const auto m = proximity_matrix(rec);
    CHECK(m[1] == std::vector<int>{1, 0, 0, 0, 0});
    CHECK(m[2] == std::vector<int>{1, 1, 0, 0, 0});
    CHECK(m[3] == std::vector<int>{1, 0, 1, 0, 0});
  }

  TEST_CASE("run lengths are a prefix of the node expansion") {
    std::mt19937_64 rng(sepk::testing::test_seed());
    for (int i = 0; i < 100; ++i) {
      const auto lambda = sepk::testing::random_in_range(rng, 1.0, 10.0, sepk::testing::kRadicands, 8);
      const std::size_t depth = static_cast<std::size_t>(sepk::testing::uniform(rng, 8, 64));
      CAPTURE(lambda.to_string());
      CAPTURE(depth);
      const auto rec = resolve(lambda, depth);
      std::vector<std::size_t> runs;
      try {
        runs = run_length_encoding(rec);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::insufficient_depth);
        continue;
      }
      const auto cf = cf_expand(node_transform(lambda), runs.size());
      for (std::size_t k = 0; k < runs.size(); ++k) CHECK(BigInt(runs[k]) == cf.entries[k]);
    }
  }

  TEST_CASE("structural invariants") {
    std::mt19937_64 rng(sepk::testing::test_seed() + 1);
    for (int i = 0; i < 100; ++i) {
      const auto lambda = sepk::testing::random_in_range(rng, 0.05, 20.0, sepk::testing::kRadicands, 8);
      const std::size_t depth = static_cast<std::size_t>(sepk::testing::uniform(rng, 1, 64));
      const auto rec = resolve(lambda, depth);
      const auto m = proximity_matrix(rec);
      REQUIRE(m.size() == depth);
      CHECK(std::count(m[0].begin(), m[0].end(), 1) == 0);
      bool satellite_seen = false;
      for (std::size_t r = 1; r < depth; ++r) {
        const auto ones = std::count(m[r].begin(), m[r].end(), 1);
        CHECK(ones == (r == 1 ? 1 : rec.points[r - 1].retained_divisor.is_exceptional() ? 2 : 1));
        if (satellite_seen) CHECK(ones == 2);
        satellite_seen = satellite_seen || ones == 2;
        CHECK(m[r][r - 1] == 1);
        for (std::size_t c = r; c < depth; ++c) CHECK(m[r][c] == 0);
      }
      CHECK(rec.graph.weights.size() == depth);
      CHECK(rec.graph.edges.size() == depth - 1);
      CHECK(rec.graph.weights.back() == -1);
      for (std::size_t j = 0; j + 1 < depth; ++j) CHECK(rec.graph.weights[j] <= -2);
      for (const auto& [a, b] : rec.graph.edges) {
        CHECK(a < b);
        CHECK(a >= 1);
        CHECK(b <= static_cast<int>(depth));
      }
      for (std::size_t j = 0; j < depth; ++j) {
        CHECK(rec.points[j].j == j + 1);
        CHECK(rec.points[j].exponent_after.sign() > 0);
      }
    }
  }
}

TEST_SUITE("orbit_period") {
  TEST_CASE("examples") {
    CHECK(exponent_orbit_period(ee("(0+1*sqrt(2))/1"), 10) == std::make_pair(std::size_t{0}, std::size_t{2}));
    CHECK(exponent_orbit_period(ee("(1+1*sqrt(5))/2"), 10) == std::make_pair(std::size_t{1}, std::size_t{1}));
    CHECK_FALSE(exponent_orbit_period(ee("(0+1*sqrt(2))/1"), 1).has_value());
  }

  TEST_CASE("every quadratic orbit is eventually periodic") {
    std::mt19937_64 rng(sepk::testing::test_seed() + 2);
    for (int i = 0; i < 50; ++i) {
      const auto lambda = sepk::testing::random_in_range(rng, 0.1, 10.0, sepk::testing::kRadicands, 8);
      CHECK(exponent_orbit_period(lambda, 5000).has_value());
    }
  }
}

TEST_SUITE("divisor_id") {
  TEST_CASE("labels round-trip") {
    for (const auto id : {DivisorId::y_separatrix(), DivisorId::x_separatrix(), DivisorId::exceptional(1),
                          DivisorId::exceptional(37)}) {
      CHECK(DivisorId::from_label(id.label()) == id);
    }
    CHECK(DivisorId::exceptional(4).label() == "E_4");
    CHECK_THROWS_AS(DivisorId::from_label("E_0"), Error);
    CHECK_THROWS_AS(DivisorId::from_label("E_x"), Error);
    CHECK_THROWS_AS(DivisorId::from_label("F_1"), Error);
    CHECK_THROWS_AS(DivisorId::exceptional(0), Error);
  }
}
