#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace oransim::ue {

enum class SessionPhase : std::uint8_t { IDLE, ACTIVE, BLOCKED_BACKOFF };

struct SessionParams {
  double mean_idle_s = 20.0;
  double mean_active_s = 30.0;
  double backoff_s = 5.0;

  friend bool operator==(const SessionParams&, const SessionParams&) = default;
};

struct SessionState {
  SessionPhase phase = SessionPhase::IDLE;
  double remaining_s = 0.0;  // time left in the current phase
};

/// Draws the initial phase from the on/off stationary distribution.
SessionState init_session(const SessionParams& params, std::mt19937_64& rng);

enum class SessionEvent : std::uint8_t { NONE, ACTIVATED, BLOCKED, ENDED };

/// Advances the on/off traffic source by dt seconds. An activation attempt is
/// blocked when free_prb_at_serving is nullopt (detached) or zero; the user
/// then backs off and retries.
SessionEvent step_session(SessionState& state, std::optional<int> free_prb_at_serving,
                          const SessionParams& params, std::mt19937_64& rng, double dt);

}  // namespace oransim::ue
