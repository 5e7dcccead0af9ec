// Command-line driver: runs the cartesian product of variants x seeds and
// writes per-run artifacts plus a cross-variant comparison table.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "oransim/error.hpp"
#include "oransim/sim/config.hpp"
#include "oransim/sim/engine.hpp"
#include "oransim/sim/metrics.hpp"
#include "oransim/sim/outputs.hpp"

namespace {

using namespace oransim;

std::vector<std::uint64_t> parse_seeds(const std::vector<std::string>& specs) {
  std::vector<std::uint64_t> seeds;
  for (const auto& s : specs) {
    const auto dots = s.find("..");
    try {
      if (dots == std::string::npos) {
        seeds.push_back(std::stoull(s));
        continue;
      }
      const auto lo = std::stoull(s.substr(0, dots));
      const auto hi = std::stoull(s.substr(dots + 2));
      if (hi < lo) throw ConfigError("--seed: empty range '" + s + "'");
      for (auto v = lo; v <= hi; ++v) seeds.push_back(v);
    } catch (const std::logic_error&) {
      throw ConfigError("--seed: cannot parse '" + s + "'");
    }
  }
  return seeds;
}

std::pair<std::string, std::string> split_override(const std::string& kv) {
  const auto eq = kv.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("--set: expected key=value, got '" + kv + "'");
  return {kv.substr(0, eq), kv.substr(eq + 1)};
}

struct Job {
  sim::Variant variant;
  std::uint64_t seed;
  std::optional<sim::MetricsSummary> summary;
  std::string error;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"O-RAN xApp conflict mitigation simulator"};
  std::string config_path;
  std::vector<std::string> variant_names;
  std::vector<std::string> seed_specs;
  std::optional<double> duration;
  const char* env_out = std::getenv("ORANSIM_OUT_DIR");
  std::string out_dir = env_out ? env_out : "oransim-out";
  std::vector<std::string> sets;
  bool quiet = false;
  bool dump_config = false;
  int jobs = 1;

  app.add_option("--config", config_path, "Scenario configuration (JSON)");
  app.add_option("--variant", variant_names, "off | prio-mlb | prio-mro (repeatable)");
  app.add_option("--seed", seed_specs, "Seed or range A..B (repeatable)");
  app.add_option("--duration", duration, "Simulated seconds");
  app.add_option("--out", out_dir, "Output directory (default $ORANSIM_OUT_DIR or ./oransim-out)");
  app.add_option("--set", sets, "Override a config key: key=value (repeatable)");
  app.add_option("--jobs", jobs, "Runs executed concurrently")->check(CLI::PositiveNumber);
  app.add_flag("--quiet", quiet, "Suppress the comparison table on stdout");
  app.add_flag("--dump-config", dump_config, "Print the resolved configuration and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 1;
  }

  sim::ScenarioConfig base;
  std::vector<sim::Variant> variants;
  std::vector<std::uint64_t> seeds;
  try {
    if (!config_path.empty()) base = sim::load_config(config_path);
    std::vector<std::pair<std::string, std::string>> overrides;
    for (const auto& s : sets) overrides.push_back(split_override(s));
    if (duration) overrides.emplace_back("duration_s", std::to_string(*duration));
    base = sim::apply_overrides(base, overrides);
    if (dump_config) {
      std::cout << sim::to_json(base).dump(2) << "\n";
      return 0;
    }
    if (variant_names.empty()) variant_names = {"off", "prio-mlb", "prio-mro"};
    for (const auto& v : variant_names) variants.push_back(sim::parse_variant(v));
    seeds = seed_specs.empty() ? std::vector<std::uint64_t>{base.seed} : parse_seeds(seed_specs);
    for (auto v : variants) sim::with_variant(base, v).validate();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }

  std::vector<Job> work;
  for (auto v : variants)
    for (auto s : seeds) work.push_back({v, s, std::nullopt, {}});

  const std::filesystem::path out(out_dir);
  const auto n = static_cast<std::ptrdiff_t>(work.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto& job = work[static_cast<std::size_t>(i)];
    try {
      auto cfg = sim::with_variant(base, job.variant);
      cfg.seed = job.seed;
      const auto result = sim::run(cfg);
      if (!result.had_active_users && cfg.duration_s > 0.0) {
#pragma omp critical(log)
        std::cerr << "warning: " << sim::to_string(job.variant) << "/" << job.seed
                  << ": no active users during the run; satisfaction reported as 0\n";
      }
      sim::write_run_outputs(out / std::string(sim::to_string(job.variant)) / std::to_string(job.seed), result);
      job.summary = result.summary;
    } catch (const std::exception& e) {
      job.error = e.what();
    }
  }

  int status = 0;
  std::vector<std::pair<std::string, std::vector<sim::MetricsSummary>>> grouped;
  for (auto v : variants) {
    std::vector<sim::MetricsSummary> summaries;
    for (const auto& job : work) {
      if (job.variant != v) continue;
      if (!job.error.empty()) {
        std::cerr << "run " << sim::to_string(v) << "/" << job.seed << " failed: " << job.error << "\n";
        status = 2;
      } else {
        summaries.push_back(*job.summary);
      }
    }
    grouped.emplace_back(std::string(sim::to_string(v)), std::move(summaries));
  }

  try {
    const auto table = sim::compare_runs(grouped);
    const auto text = sim::comparison_text(table);
    std::filesystem::create_directories(out);
    sim::write_text(out / "comparison.txt", text);
    sim::write_text(out / "comparison.json", sim::to_json(table).dump(2) + "\n");
    if (!quiet) std::cout << text;
  } catch (const std::exception& e) {
    std::cerr << "failed to write comparison: " << e.what() << "\n";
    return 2;
  }
  return status;
}
