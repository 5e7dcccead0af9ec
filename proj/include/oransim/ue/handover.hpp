#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace oransim::ue {

struct HandoverDecision {
  std::uint32_t from = 0;
  std::uint32_t to = 0;

  friend bool operator==(const HandoverDecision&, const HandoverDecision&) = default;
};

/// Serving-cell settings that drive the A3 entering condition.
struct A3Settings {
  double cio_db = 0.0;
  double hh_db = 0.0;
  double ttt_ms = 0.0;
};

/// One tick of the A3/TTT state machine.
///
/// `levels` holds the comparison level of every cell (dBm). A neighbour n
/// enters when levels[n] + cio > levels[serving] + hh; its timer accumulates
/// dt_ms while the condition holds and resets when it breaks. Once any timer
/// reaches ttt_ms the strongest such neighbour is chosen (lowest id on ties).
/// On handover every timer is reset. `timers` is resized to levels.size().
std::optional<HandoverDecision> evaluate_a3(std::vector<double>& timers, std::span<const double> levels,
                                            std::uint32_t serving, const A3Settings& settings,
                                            double dt_ms);

struct HandoverHistoryEntry {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  double time = 0.0;
};

/// A->B at `time` is a ping-pong iff the user's previous handover was B->A no
/// more than window_s seconds earlier.
bool classify_pingpong(std::uint32_t from, std::uint32_t to, double time,
                       const std::optional<HandoverHistoryEntry>& previous, double window_s);

struct RlfParams {
  double q_out_db = -8.0;
  double q_in_db = -6.0;
  double t_rlf_ms = 1000.0;
  double reestablish_ms = 200.0;

  friend bool operator==(const RlfParams&, const RlfParams&) = default;
};

/// Outage timer: accumulates while sinr < q_out, resets once sinr > q_in, holds
/// in between. Returns true (and resets) when the timer reaches t_rlf_ms.
bool check_rlf(double& rlf_timer_ms, double sinr_db, double dt_ms, const RlfParams& params);

}  // namespace oransim::ue
