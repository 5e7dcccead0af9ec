#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace oransim::ue {

enum class EventKind : std::uint8_t { HANDOVER, PINGPONG, RLF, CALL_BLOCK };

std::string_view to_string(EventKind k);

struct EventRecord {
  EventKind kind = EventKind::HANDOVER;
  double time = 0.0;
  std::uint32_t user_id = 0;
  std::optional<std::uint32_t> from_cell;
  std::optional<std::uint32_t> to_cell;

  friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

/// CSV with header "time,kind,user_id,from_cell,to_cell"; absent cells are empty.
std::string events_csv(std::span<const EventRecord> events);

}  // namespace oransim::ue
