#include "oransim/ue/session.hpp"

namespace oransim::ue {

namespace {

double draw_exp(double mean, std::mt19937_64& rng) {
  return std::exponential_distribution<double>(1.0 / mean)(rng);
}

}  // namespace

SessionState init_session(const SessionParams& params, std::mt19937_64& rng) {
  const double p_active = params.mean_active_s / (params.mean_active_s + params.mean_idle_s);
  SessionState s;
  if (std::bernoulli_distribution(p_active)(rng)) {
    s.phase = SessionPhase::ACTIVE;
    s.remaining_s = draw_exp(params.mean_active_s, rng);
  } else {
    s.phase = SessionPhase::IDLE;
    s.remaining_s = draw_exp(params.mean_idle_s, rng);
  }
  return s;
}

SessionEvent step_session(SessionState& state, std::optional<int> free_prb_at_serving,
                          const SessionParams& params, std::mt19937_64& rng, double dt) {
  state.remaining_s -= dt;
  // Tolerance keeps repeated tick subtraction from adding a tick to a phase.
  if (state.remaining_s > 1e-9) return SessionEvent::NONE;

  if (state.phase == SessionPhase::ACTIVE) {
    state.phase = SessionPhase::IDLE;
    state.remaining_s = draw_exp(params.mean_idle_s, rng);
    return SessionEvent::ENDED;
  }
  // IDLE expiry or backoff expiry: attempt activation.
  if (!free_prb_at_serving || *free_prb_at_serving <= 0) {
    state.phase = SessionPhase::BLOCKED_BACKOFF;
    state.remaining_s = params.backoff_s;
    return SessionEvent::BLOCKED;
  }
  state.phase = SessionPhase::ACTIVE;
  state.remaining_s = draw_exp(params.mean_active_s, rng);
  return SessionEvent::ACTIVATED;
}

}  // namespace oransim::ue
