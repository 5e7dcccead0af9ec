#pragma once

#include <random>

#include "oransim/ran/layout.hpp"

namespace oransim::ue {

struct MobilityParams {
  double speed_min_mps = 0.8;
  double speed_max_mps = 8.0;

  friend bool operator==(const MobilityParams&, const MobilityParams&) = default;
};

/// Random-waypoint state: current position, the leg's waypoint and speed.
struct MobilityState {
  ran::Position position;
  ran::Position waypoint;
  double speed_mps = 0.0;

  /// Velocity vector toward the waypoint, m/s.
  ran::Position velocity() const;
};

MobilityState init_mobility(ran::Position start, const ran::Bounds& bounds,
                            const MobilityParams& params, std::mt19937_64& rng);

/// Advances by dt seconds. On reaching the waypoint the user stops there and
/// draws a new waypoint (uniform in bounds) and speed for the next leg.
MobilityState step_mobility(MobilityState state, double dt, const ran::Bounds& bounds,
                            const MobilityParams& params, std::mt19937_64& rng);

}  // namespace oransim::ue
