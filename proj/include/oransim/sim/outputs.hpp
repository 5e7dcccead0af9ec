#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "oransim/sim/engine.hpp"

namespace oransim::sim {

/// {"seed", "summary", "config"}; the config echo reloads via config_from_json.
nlohmann::ordered_json summary_document(const RunResult& r);

/// Writes summary.json, trace.csv, verdicts.jsonl and events.csv into dir
/// (created if needed), replacing existing files.
void write_run_outputs(const std::filesystem::path& dir, const RunResult& r);

void write_text(const std::filesystem::path& file, const std::string& text);

}  // namespace oransim::sim
