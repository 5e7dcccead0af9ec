#include "oransim/ue/handover.hpp"

namespace oransim::ue {

std::optional<HandoverDecision> evaluate_a3(std::vector<double>& timers, std::span<const double> levels,
                                            std::uint32_t serving, const A3Settings& settings,
                                            double dt_ms) {
  timers.resize(levels.size(), 0.0);
  const double threshold = levels[serving] + settings.hh_db;
  std::optional<std::uint32_t> best;
  for (std::uint32_t n = 0; n < levels.size(); ++n) {
    if (n == serving) {
      timers[n] = 0.0;
      continue;
    }
    if (levels[n] + settings.cio_db > threshold) {
      timers[n] += dt_ms;
      if (timers[n] >= settings.ttt_ms && (!best || levels[n] > levels[*best])) best = n;
    } else {
      timers[n] = 0.0;
    }
  }
  if (!best) return std::nullopt;
  std::fill(timers.begin(), timers.end(), 0.0);
  return HandoverDecision{serving, *best};
}

bool classify_pingpong(std::uint32_t from, std::uint32_t to, double time,
                       const std::optional<HandoverHistoryEntry>& previous, double window_s) {
  if (!previous) return false;
  return previous->from == to && previous->to == from && time - previous->time <= window_s;
}

bool check_rlf(double& rlf_timer_ms, double sinr_db, double dt_ms, const RlfParams& params) {
  if (sinr_db < params.q_out_db) {
    rlf_timer_ms += dt_ms;
  } else if (sinr_db > params.q_in_db) {
    rlf_timer_ms = 0.0;
  }
  if (rlf_timer_ms >= params.t_rlf_ms) {
    rlf_timer_ms = 0.0;
    return true;
  }
  return false;
}

}  // namespace oransim::ue
