#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace oransim::sim {

struct EventCounters {
  std::int64_t handovers = 0;
  std::int64_t pingpongs = 0;
  std::int64_t rlfs = 0;
  std::int64_t call_blocks = 0;

  friend bool operator==(const EventCounters&, const EventCounters&) = default;
};

/// One row per tick. user_satisfaction holds NaN for users without an
/// active session during that tick.
struct TickRow {
  double time = 0.0;
  std::vector<double> cell_load;
  std::vector<double> user_satisfaction;
  EventCounters cumulative;
};

struct TickTrace {
  std::vector<TickRow> rows;
};

struct MetricsSummary {
  double mean_bs_load = 0.0;            // percent
  double mean_user_satisfaction = 0.0;  // percent
  std::int64_t call_block_count = 0;
  std::int64_t rlf_count = 0;
  std::int64_t handover_count = 0;
  std::int64_t pingpong_count = 0;

  friend bool operator==(const MetricsSummary&, const MetricsSummary&) = default;
};

/// Time average (rows with time >= warmup_s) of the mean over active users of
/// min(1, achieved / required), in percent. Rows without active users are
/// skipped; 0 when no row qualifies.
double mean_user_satisfaction(const TickTrace& trace, double warmup_s = 0.0);

/// Time average (rows with time >= warmup_s) of the mean cell load, in percent.
double mean_bs_load(const TickTrace& trace, double warmup_s = 0.0);

MetricsSummary summarize(const TickTrace& trace, double warmup_s);

nlohmann::ordered_json to_json(const MetricsSummary& m);
MetricsSummary summary_from_json(const nlohmann::ordered_json& j);

/// CSV: time, load_<cell>..., sat_<user>..., handovers, pingpongs, rlfs, call_blocks.
std::string trace_csv(const TickTrace& trace);

struct MetricStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single value
  std::size_t n = 0;
};

/// Rows = metrics, columns = variants (in input order). Deltas are relative
/// to the first column.
struct ComparisonTable {
  std::vector<std::string> variants;
  std::vector<std::string> metrics;
  std::vector<std::vector<MetricStats>> cells;  // [metric][variant]
  std::vector<std::vector<double>> delta;       // [metric][variant], mean minus first column mean
};

/// Metric names in table order.
const std::vector<std::string>& metric_names();
double metric_value(const MetricsSummary& m, std::size_t metric_index);

/// Each entry is one variant with the summaries of all its seeds.
ComparisonTable compare_runs(std::span<const std::pair<std::string, std::vector<MetricsSummary>>> runs);

std::string comparison_text(const ComparisonTable& t);
nlohmann::ordered_json to_json(const ComparisonTable& t);

}  // namespace oransim::sim
