#include <doctest.h>

#include <algorithm>
#include <vector>

#include "strata/truth_value.hpp"

using namespace strata;

namespace {

// F0 < F1 < F2 < F3 < 0 < T3 < T2 < T1 < T0, built by hand.
std::vector<TruthValue> ladder() {
  return {TruthValue::f(0), TruthValue::f(1), TruthValue::f(2), TruthValue::f(3), TruthValue::zero(),
          TruthValue::t(3), TruthValue::t(2), TruthValue::t(1), TruthValue::t(0)};
}

}  // namespace

TEST_CASE("values are totally ordered with 0 in the middle") {
  const auto v = ladder();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      CHECK((v[i] < v[j]) == (i < j));
      CHECK((v[i] == v[j]) == (i == j));
    }
  }
  CHECK(kBottomValue == TruthValue::f(0));
  CHECK(kTopValue == TruthValue::t(0));
}

TEST_CASE("negation shifts the level and swaps polarity") {
  CHECK(negate(TruthValue::f(0)) == TruthValue::t(1));
  CHECK(negate(TruthValue::t(0)) == TruthValue::f(1));
  CHECK(negate(TruthValue::f(4)) == TruthValue::t(5));
  CHECK(negate(TruthValue::zero()) == TruthValue::zero());
  CHECK_THROWS_AS(negate(TruthValue::f(3), 3), LevelOverflow);
  CHECK_NOTHROW(negate(TruthValue::f(2), 3));
}

TEST_CASE("join and meet follow the total order") {
  const auto v = ladder();
  for (auto a : v) {
    for (auto b : v) {
      CHECK(join(a, b) == std::max(a, b));
      CHECK(meet(a, b) == std::min(a, b));
    }
  }
}

TEST_CASE("per-coordinate strata relations") {
  // Values of level at most alpha are pinned; higher ones are all equivalent.
  CHECK(equivalent_at(TruthValue::f(2), TruthValue::t(3), 1));
  CHECK_FALSE(equivalent_at(TruthValue::f(1), TruthValue::f(2), 1));
  CHECK(equivalent_at(TruthValue::zero(), TruthValue::f(5), 4));

  CHECK(below_at(TruthValue::f(1), TruthValue::t(1), 1));
  CHECK_FALSE(below_at(TruthValue::t(1), TruthValue::f(2), 1));
  CHECK(below_at(TruthValue::f(2), TruthValue::f(1), 0));
  CHECK(below_at(TruthValue::f(3), TruthValue::zero(), 1));
  CHECK_FALSE(below_at(TruthValue::f(0), TruthValue::f(1), 1));

  CHECK(restrict_value(TruthValue::t(3), 1) == TruthValue::f(2));
  CHECK(restrict_value(TruthValue::t(1), 1) == TruthValue::t(1));
  CHECK(restrict_value(TruthValue::zero(), 0) == TruthValue::f(1));
}

TEST_CASE("restriction is the least value of its class") {
  const auto v = ladder();
  for (Level alpha = 0; alpha < 4; ++alpha) {
    for (auto a : v) {
      const auto r = restrict_value(a, alpha);
      CHECK(equivalent_at(a, r, alpha));
      for (auto b : v) {
        if (equivalent_at(a, b, alpha)) CHECK(r <= b);
      }
    }
  }
}

TEST_CASE("text and json round trips") {
  for (auto v : ladder()) {
    CHECK(parse_truth_value(to_string(v)) == v);
    nlohmann::json j = v;
    CHECK(j.get<TruthValue>() == v);
  }
  CHECK(to_string(TruthValue::f(2)) == "F2");
  CHECK(to_string(TruthValue::zero()) == "0");
  CHECK_THROWS_AS(parse_truth_value("X1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_truth_value("F"), std::invalid_argument);
  CHECK_THROWS_AS(parse_truth_value("T1x"), std::invalid_argument);
}
