#include "oransim/ue/events.hpp"

#include <fmt/format.h>

namespace oransim::ue {

std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::HANDOVER: return "HANDOVER";
    case EventKind::PINGPONG: return "PINGPONG";
    case EventKind::RLF: return "RLF";
    case EventKind::CALL_BLOCK: return "CALL_BLOCK";
  }
  return "?";
}

std::string events_csv(std::span<const EventRecord> events) {
  std::string out = "time,kind,user_id,from_cell,to_cell\n";
  auto cell = [](const std::optional<std::uint32_t>& c) { return c ? fmt::format("{}", *c) : std::string(); };
  for (const auto& e : events)
    out += fmt::format("{:.3f},{},{},{},{}\n", e.time, to_string(e.kind), e.user_id, cell(e.from_cell),
                       cell(e.to_cell));
  return out;
}

}  // namespace oransim::ue
