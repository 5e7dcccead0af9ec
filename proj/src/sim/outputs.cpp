#include "oransim/sim/outputs.hpp"

#include <fstream>

#include "oransim/error.hpp"

namespace oransim::sim {

nlohmann::ordered_json summary_document(const RunResult& r) {
  nlohmann::ordered_json j;
  j["seed"] = r.config.seed;
  j["summary"] = to_json(r.summary);
  j["config"] = to_json(r.config);
  return j;
}

void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw RunError("cannot write " + file.string());
  out << text;
  if (!out) throw RunError("write failed for " + file.string());
}

void write_run_outputs(const std::filesystem::path& dir, const RunResult& r) {
  std::filesystem::create_directories(dir);
  write_text(dir / "summary.json", summary_document(r).dump(2) + "\n");
  write_text(dir / "trace.csv", trace_csv(r.trace));
  write_text(dir / "verdicts.jsonl", cm::verdict_log_jsonl(r.verdicts));
  write_text(dir / "events.csv", ue::events_csv(r.events));
}

}  // namespace oransim::sim
