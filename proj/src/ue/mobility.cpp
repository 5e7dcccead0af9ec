#include "oransim/ue/mobility.hpp"

#include <algorithm>

namespace oransim::ue {

namespace {

ran::Position draw_waypoint(const ran::Bounds& b, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ux(b.min_x, b.max_x);
  std::uniform_real_distribution<double> uy(b.min_y, b.max_y);
  const double x = ux(rng);
  return {x, uy(rng)};
}

double draw_speed(const MobilityParams& p, std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(p.speed_min_mps, p.speed_max_mps)(rng);
}

}  // namespace

ran::Position MobilityState::velocity() const {
  const double d = ran::distance(position, waypoint);
  if (d == 0.0) return {};
  return {(waypoint.x - position.x) / d * speed_mps, (waypoint.y - position.y) / d * speed_mps};
}

MobilityState init_mobility(ran::Position start, const ran::Bounds& bounds, const MobilityParams& params,
                            std::mt19937_64& rng) {
  MobilityState s;
  s.position = {std::clamp(start.x, bounds.min_x, bounds.max_x), std::clamp(start.y, bounds.min_y, bounds.max_y)};
  s.waypoint = draw_waypoint(bounds, rng);
  s.speed_mps = draw_speed(params, rng);
  return s;
}

MobilityState step_mobility(MobilityState state, double dt, const ran::Bounds& bounds,
                            const MobilityParams& params, std::mt19937_64& rng) {
  if (dt <= 0.0) return state;
  const double remaining = ran::distance(state.position, state.waypoint);
  const double travel = state.speed_mps * dt;
  if (travel >= remaining) {
    state.position = state.waypoint;
    state.waypoint = draw_waypoint(bounds, rng);
    state.speed_mps = draw_speed(params, rng);
    return state;
  }
  const double f = travel / remaining;
  state.position.x += (state.waypoint.x - state.position.x) * f;
  state.position.y += (state.waypoint.y - state.position.y) * f;
  return state;
}

}  // namespace oransim::ue
