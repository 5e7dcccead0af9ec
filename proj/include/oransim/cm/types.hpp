#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oransim::cm {

/// Controlled RAN parameter. OTHER carries a free-form label so operators can
/// register groups over parameters the simulator itself never touches.
struct ParameterId {
  enum class Kind : std::uint8_t { CIO, TTT, HH, TILT, OTHER };

  Kind kind = Kind::OTHER;
  std::string label;  // only meaningful for OTHER

  static ParameterId cio() { return {Kind::CIO, {}}; }
  static ParameterId ttt() { return {Kind::TTT, {}}; }
  static ParameterId hh() { return {Kind::HH, {}}; }
  static ParameterId tilt() { return {Kind::TILT, {}}; }
  static ParameterId other(std::string label) { return {Kind::OTHER, std::move(label)}; }

  /// Parses "CIO", "TTT", "HH", "TILT"; anything else becomes OTHER(name).
  static ParameterId parse(std::string_view name);

  std::string name() const;

  friend bool operator==(const ParameterId&, const ParameterId&) = default;
  friend auto operator<=>(const ParameterId&, const ParameterId&) = default;
};

enum class TargetKind : std::uint8_t { CELL, BEARER, USER };

std::string_view to_string(TargetKind kind);
TargetKind parse_target_kind(std::string_view name);

struct ControlTarget {
  TargetKind kind = TargetKind::CELL;
  std::uint32_t id = 0;

  static ControlTarget cell(std::uint32_t id) { return {TargetKind::CELL, id}; }

  friend bool operator==(const ControlTarget&, const ControlTarget&) = default;
  friend auto operator<=>(const ControlTarget&, const ControlTarget&) = default;
};

/// One xApp control decision as it travels through the RIC. msg_id is assigned
/// by the Conflict Mitigation pipeline on arrival.
struct E2ControlMessage {
  std::uint64_t msg_id = 0;
  std::string xapp_id;
  ControlTarget target;
  ParameterId parameter;
  double value = 0.0;  // dB for CIO/HH, ms for TTT
  double issued_at = 0.0;

  friend bool operator==(const E2ControlMessage&, const E2ControlMessage&) = default;
};

enum class ConflictClass : std::uint8_t { DIRECT, INDIRECT, IMPLICIT };

std::string_view to_string(ConflictClass c);

struct ConflictRecord {
  std::uint64_t msg_id = 0;
  std::optional<std::string> group_id;  // empty for DIRECT
  ConflictClass cls = ConflictClass::INDIRECT;

  friend bool operator==(const ConflictRecord&, const ConflictRecord&) = default;
};

struct CooldownEntry {
  std::string xapp_id;
  ControlTarget target;
  double until = 0.0;

  friend bool operator==(const CooldownEntry&, const CooldownEntry&) = default;
};

enum class Outcome : std::uint8_t { ACCEPTED, REJECTED_CONFLICT, REJECTED_COOLDOWN };

std::string_view to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::ACCEPTED;
  std::vector<ConflictRecord> conflicts;
  // One entry per distinct xApp put on cooldown by this verdict.
  std::vector<CooldownEntry> cooldowns_applied;

  bool accepted() const { return outcome == Outcome::ACCEPTED; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct InEffectDecision {
  E2ControlMessage message;
  double expires_at = 0.0;
  bool superseded = false;

  bool in_effect(double now) const { return !superseded && expires_at > now; }
};

}  // namespace oransim::cm
