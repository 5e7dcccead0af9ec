#pragma once

#include <vector>

#include "oransim/cm/conflict_mitigation.hpp"
#include "oransim/sim/config.hpp"
#include "oransim/sim/metrics.hpp"
#include "oransim/ue/events.hpp"
#include "oransim/xapps/xapps.hpp"

namespace oransim::sim {

struct RunOptions {
  /// Apply xApp messages directly, without the Conflict Mitigation component.
  bool bypass_cm = false;
};

struct RunResult {
  ScenarioConfig config;
  MetricsSummary summary;
  TickTrace trace;
  std::vector<cm::LoggedVerdict> verdicts;
  std::vector<ue::EventRecord> events;
  std::vector<xapps::ParameterChange> changes;
  bool had_active_users = false;
};

/// Runs one scenario. Per tick: mobility, measurements and reattachment, A3 /
/// RLF / session processing, PRB scheduling, then (on control-period
/// boundaries) KPI reports, xApp decisions, the CM pipeline and application of
/// accepted decisions. Validates the config before building any state.
RunResult run(const ScenarioConfig& config, const RunOptions& options = {});

}  // namespace oransim::sim
