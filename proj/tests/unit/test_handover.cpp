#include "doctest.h"

#include "a3_oracle.hpp"
#include "oransim/ue/handover.hpp"

using namespace oransim::ue;

TEST_CASE("entering condition uses serving CIO and hysteresis") {
  std::vector<double> timers;
  std::vector<double> levels = {-100.0, -95.0};
  auto ho = evaluate_a3(timers, levels, 0, {0.0, 3.0, 0.0}, 100.0);
  REQUIRE(ho.has_value());
  CHECK(*ho == HandoverDecision{0, 1});

  timers.clear();
  CHECK_FALSE(evaluate_a3(timers, levels, 0, {0.0, 5.0, 0.0}, 100.0));
  timers.clear();
  CHECK(evaluate_a3(timers, levels, 0, {0.5, 5.0, 0.0}, 100.0).has_value());
  timers.clear();
  CHECK_FALSE(evaluate_a3(timers, levels, 0, {-3.0, 3.0, 0.0}, 100.0));
}

TEST_CASE("time to trigger must elapse") {
  std::vector<double> timers;
  std::vector<double> levels = {-100.0, -95.0};
  const A3Settings s{0.0, 3.0, 100.0};
  CHECK_FALSE(evaluate_a3(timers, levels, 0, s, 10.0 * 9));
  CHECK(timers[1] == 90.0);
  CHECK(evaluate_a3(timers, levels, 0, s, 10.0).has_value());
  CHECK(timers[1] == 0.0);
}

TEST_CASE("condition break resets the neighbour timer") {
  std::vector<double> timers;
  const A3Settings s{0.0, 3.0, 300.0};
  std::vector<double> good = {-100.0, -95.0};
  std::vector<double> bad = {-100.0, -99.0};
  evaluate_a3(timers, good, 0, s, 100.0);
  evaluate_a3(timers, good, 0, s, 100.0);
  evaluate_a3(timers, bad, 0, s, 100.0);
  CHECK(timers[1] == 0.0);
  CHECK_FALSE(evaluate_a3(timers, good, 0, s, 100.0));
  CHECK_FALSE(evaluate_a3(timers, good, 0, s, 100.0));
  CHECK(evaluate_a3(timers, good, 0, s, 100.0).has_value());
}

TEST_CASE("strongest qualifying neighbour wins, lowest id on ties") {
  std::vector<double> timers;
  std::vector<double> levels = {-100.0, -90.0, -85.0, -85.0};
  auto ho = evaluate_a3(timers, levels, 0, {0.0, 1.0, 0.0}, 100.0);
  REQUIRE(ho);
  CHECK(ho->to == 2);
}

TEST_CASE("a neighbour that has not served its TTT is not chosen even if stronger") {
  std::vector<double> timers;
  const A3Settings s{0.0, 1.0, 200.0};
  std::vector<double> a = {-100.0, -95.0, -120.0};
  std::vector<double> b = {-100.0, -95.0, -80.0};
  evaluate_a3(timers, a, 0, s, 100.0);
  auto ho = evaluate_a3(timers, b, 0, s, 100.0);
  REQUIRE(ho);
  CHECK(ho->to == 1);
}

TEST_CASE("A3 handover instants match the brute-force trace evaluator") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto t = oracle::random_a3_trace(seed);
    CAPTURE(seed);
    CHECK(oracle::run_a3(t) == oracle::brute_force_a3(t));
  }
}

TEST_CASE("timers never exceed TTT plus one tick") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto t = oracle::random_a3_trace(seed);
    std::vector<double> timers;
    std::uint32_t serving = t.initial_serving;
    for (std::size_t k = 0; k < t.levels.size(); ++k) {
      const auto& s = t.settings[k][serving];
      if (auto ho = evaluate_a3(timers, t.levels[k], serving, s, t.dt_ms)) {
        CHECK(ho->from != ho->to);
        serving = ho->to;
      }
      for (double x : timers) CHECK(x <= s.ttt_ms + t.dt_ms);
    }
  }
}

TEST_CASE("ping-pong window") {
  HandoverHistoryEntry prev{7, 3, 10.0};
  CHECK(classify_pingpong(3, 7, 12.0, prev, 3.0));
  CHECK(classify_pingpong(3, 7, 13.0, prev, 3.0));
  CHECK_FALSE(classify_pingpong(3, 7, 14.0, prev, 3.0));
  CHECK_FALSE(classify_pingpong(3, 9, 11.0, prev, 3.0));
  CHECK_FALSE(classify_pingpong(3, 7, 11.0, std::nullopt, 3.0));
}

TEST_CASE("radio link failure needs a full second below Q_out") {
  const RlfParams p;
  SUBCASE("sustained outage") {
    double timer = 0;
    int fired = 0;
    for (int i = 0; i < 10; ++i) fired += check_rlf(timer, -10.0, 100.0, p);
    CHECK(fired == 1);
    CHECK(timer == 0.0);
  }
  SUBCASE("dip and recovery") {
    double timer = 0;
    for (int i = 0; i < 5; ++i) CHECK_FALSE(check_rlf(timer, -10.0, 100.0, p));
    CHECK(timer == 500.0);
    CHECK_FALSE(check_rlf(timer, -5.0, 100.0, p));
    CHECK(timer == 0.0);
  }
  SUBCASE("between thresholds the timer holds") {
    double timer = 0;
    for (int i = 0; i < 5; ++i) check_rlf(timer, -10.0, 100.0, p);
    CHECK_FALSE(check_rlf(timer, -7.0, 100.0, p));
    CHECK(timer == 500.0);
    for (int i = 0; i < 4; ++i) CHECK_FALSE(check_rlf(timer, -9.0, 100.0, p));
    CHECK(check_rlf(timer, -9.0, 100.0, p));
  }
  SUBCASE("good link never fails") {
    double timer = 0;
    for (int i = 0; i < 1000; ++i) CHECK_FALSE(check_rlf(timer, 10.0, 100.0, p));
  }
}
