#include "oransim/sim/metrics.hpp"

#include <cmath>

#include <fmt/format.h>

namespace oransim::sim {

using json = nlohmann::ordered_json;

double mean_user_satisfaction(const TickTrace& trace, double warmup_s) {
  double total = 0.0;
  std::size_t rows = 0;
  for (const auto& row : trace.rows) {
    if (row.time < warmup_s) continue;
    double sum = 0.0;
    std::size_t active = 0;
    for (double s : row.user_satisfaction) {
      if (std::isnan(s)) continue;
      sum += s;
      ++active;
    }
    if (active == 0) continue;
    total += sum / static_cast<double>(active);
    ++rows;
  }
  return rows == 0 ? 0.0 : 100.0 * total / static_cast<double>(rows);
}

double mean_bs_load(const TickTrace& trace, double warmup_s) {
  double total = 0.0;
  std::size_t rows = 0;
  for (const auto& row : trace.rows) {
    if (row.time < warmup_s || row.cell_load.empty()) continue;
    double sum = 0.0;
    for (double l : row.cell_load) sum += l;
    total += sum / static_cast<double>(row.cell_load.size());
    ++rows;
  }
  return rows == 0 ? 0.0 : 100.0 * total / static_cast<double>(rows);
}

MetricsSummary summarize(const TickTrace& trace, double warmup_s) {
  MetricsSummary m;
  m.mean_bs_load = mean_bs_load(trace, warmup_s);
  m.mean_user_satisfaction = mean_user_satisfaction(trace, warmup_s);
  if (!trace.rows.empty()) {
    const auto& c = trace.rows.back().cumulative;
    m.call_block_count = c.call_blocks;
    m.rlf_count = c.rlfs;
    m.handover_count = c.handovers;
    m.pingpong_count = c.pingpongs;
  }
  return m;
}

json to_json(const MetricsSummary& m) {
  return {{"mean_bs_load", m.mean_bs_load},
          {"mean_user_satisfaction", m.mean_user_satisfaction},
          {"call_block_count", m.call_block_count},
          {"rlf_count", m.rlf_count},
          {"handover_count", m.handover_count},
          {"pingpong_count", m.pingpong_count}};
}

MetricsSummary summary_from_json(const json& j) {
  MetricsSummary m;
  m.mean_bs_load = j.at("mean_bs_load").get<double>();
  m.mean_user_satisfaction = j.at("mean_user_satisfaction").get<double>();
  m.call_block_count = j.at("call_block_count").get<std::int64_t>();
  m.rlf_count = j.at("rlf_count").get<std::int64_t>();
  m.handover_count = j.at("handover_count").get<std::int64_t>();
  m.pingpong_count = j.at("pingpong_count").get<std::int64_t>();
  return m;
}

std::string trace_csv(const TickTrace& trace) {
  std::string out = "time";
  if (!trace.rows.empty()) {
    for (std::size_t c = 0; c < trace.rows.front().cell_load.size(); ++c) out += fmt::format(",load_{}", c);
    for (std::size_t u = 0; u < trace.rows.front().user_satisfaction.size(); ++u) out += fmt::format(",sat_{}", u);
  }
  out += ",handovers,pingpongs,rlfs,call_blocks\n";
  for (const auto& row : trace.rows) {
    out += fmt::format("{:.3f}", row.time);
    for (double l : row.cell_load) out += fmt::format(",{:.4f}", l);
    for (double s : row.user_satisfaction) {
      if (std::isnan(s)) {
        out += ',';
      } else {
        out += fmt::format(",{:.4f}", s);
      }
    }
    const auto& c = row.cumulative;
    out += fmt::format(",{},{},{},{}\n", c.handovers, c.pingpongs, c.rlfs, c.call_blocks);
  }
  return out;
}

const std::vector<std::string>& metric_names() {
  static const std::vector<std::string> names = {"mean base station load [%]", "mean user satisfaction [%]",
                                                 "call blockade count",        "radio link failure count",
                                                 "total handover count",       "ping-pong handover count"};
  return names;
}

double metric_value(const MetricsSummary& m, std::size_t i) {
  switch (i) {
    case 0: return m.mean_bs_load;
    case 1: return m.mean_user_satisfaction;
    case 2: return static_cast<double>(m.call_block_count);
    case 3: return static_cast<double>(m.rlf_count);
    case 4: return static_cast<double>(m.handover_count);
    case 5: return static_cast<double>(m.pingpong_count);
    default: return 0.0;
  }
}

ComparisonTable compare_runs(std::span<const std::pair<std::string, std::vector<MetricsSummary>>> runs) {
  ComparisonTable t;
  t.metrics = metric_names();
  for (const auto& [name, s] : runs) t.variants.push_back(name);
  t.cells.assign(t.metrics.size(), std::vector<MetricStats>(runs.size()));
  t.delta.assign(t.metrics.size(), std::vector<double>(runs.size(), 0.0));
  for (std::size_t m = 0; m < t.metrics.size(); ++m) {
    for (std::size_t v = 0; v < runs.size(); ++v) {
      const auto& summaries = runs[v].second;
      MetricStats st;
      st.n = summaries.size();
      for (const auto& s : summaries) st.mean += metric_value(s, m);
      if (st.n > 0) st.mean /= static_cast<double>(st.n);
      if (st.n > 1) {
        double ss = 0.0;
        for (const auto& s : summaries) ss += std::pow(metric_value(s, m) - st.mean, 2);
        st.stddev = std::sqrt(ss / static_cast<double>(st.n - 1));
      }
      t.cells[m][v] = st;
    }
    for (std::size_t v = 0; v < runs.size(); ++v) t.delta[m][v] = t.cells[m][v].mean - t.cells[m][0].mean;
  }
  return t;
}

std::string comparison_text(const ComparisonTable& t) {
  constexpr int kLabel = 28;
  constexpr int kCol = 24;
  std::string out = fmt::format("{:<{}}", "", kLabel);
  for (const auto& v : t.variants) out += fmt::format("{:>{}}", v, kCol);
  out += '\n';
  for (std::size_t m = 0; m < t.metrics.size(); ++m) {
    out += fmt::format("{:<{}}", t.metrics[m], kLabel);
    for (std::size_t v = 0; v < t.variants.size(); ++v) {
      const auto& st = t.cells[m][v];
      std::string cell = st.n > 1 ? fmt::format("{:.2f} ± {:.2f}", st.mean, st.stddev) : fmt::format("{:.2f}", st.mean);
      if (v > 0) cell += fmt::format(" ({:+.2f})", t.delta[m][v]);
      out += fmt::format("{:>{}}", cell, kCol);
    }
    out += '\n';
  }
  return out;
}

json to_json(const ComparisonTable& t) {
  json j;
  j["variants"] = t.variants;
  json rows = json::array();
  for (std::size_t m = 0; m < t.metrics.size(); ++m) {
    json row;
    row["metric"] = t.metrics[m];
    json vals = json::object();
    for (std::size_t v = 0; v < t.variants.size(); ++v) {
      const auto& st = t.cells[m][v];
      vals[t.variants[v]] = {{"mean", st.mean}, {"stddev", st.stddev}, {"n", st.n}, {"delta", t.delta[m][v]}};
    }
    row["values"] = std::move(vals);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace oransim::sim
