#include "doctest.h"

#include "oransim/ran/layout.hpp"
#include "oransim/ue/mobility.hpp"

using namespace oransim;
using namespace oransim::ue;

TEST_CASE("zero elapsed time leaves the user in place") {
  std::mt19937_64 rng(1);
  const auto b = ran::simulation_bounds({});
  auto s = init_mobility({10, 20}, b, {}, rng);
  auto t = step_mobility(s, 0.0, b, {}, rng);
  CHECK(t.position == s.position);
}

TEST_CASE("same seed gives the same path") {
  const auto b = ran::simulation_bounds({});
  std::mt19937_64 r1(5), r2(5);
  auto a = init_mobility({0, 0}, b, {}, r1);
  auto c = init_mobility({0, 0}, b, {}, r2);
  for (int i = 0; i < 1000; ++i) {
    a = step_mobility(a, 0.1, b, {}, r1);
    c = step_mobility(c, 0.1, b, {}, r2);
    REQUIRE(a.position == c.position);
  }
}

TEST_CASE("positions stay inside the area and speeds inside their range") {
  const auto b = ran::simulation_bounds({});
  const MobilityParams p;
  std::mt19937_64 rng(3);
  auto s = init_mobility({700, -700}, b, p, rng);
  for (int i = 0; i < 10000; ++i) {
    const auto before = s.position;
    s = step_mobility(s, 0.1, b, p, rng);
    CHECK(b.contains(s.position));
    CHECK(s.speed_mps >= p.speed_min_mps);
    CHECK(s.speed_mps <= p.speed_max_mps);
    CHECK(ran::distance(before, s.position) <= p.speed_max_mps * 0.1 + 1e-9);
  }
}

TEST_CASE("a user heads straight for its waypoint") {
  const auto b = ran::simulation_bounds({});
  std::mt19937_64 rng(4);
  auto s = init_mobility({0, 0}, b, {}, rng);
  const double d0 = ran::distance(s.position, s.waypoint);
  auto t = step_mobility(s, 0.1, b, {}, rng);
  if (d0 > s.speed_mps * 0.1) {
    CHECK(t.waypoint == s.waypoint);
    CHECK(ran::distance(t.position, t.waypoint) == doctest::Approx(d0 - s.speed_mps * 0.1));
  }
}
