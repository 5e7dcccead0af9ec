#include "oransim/cm/types.hpp"

#include "oransim/error.hpp"

namespace oransim::cm {

ParameterId ParameterId::parse(std::string_view name) {
  if (name == "CIO") return cio();
  if (name == "TTT") return ttt();
  if (name == "HH") return hh();
  if (name == "TILT") return tilt();
  if (name.empty()) throw ConfigError("parameter name must not be empty");
  return other(std::string(name));
}

std::string ParameterId::name() const {
  switch (kind) {
    case Kind::CIO: return "CIO";
    case Kind::TTT: return "TTT";
    case Kind::HH: return "HH";
    case Kind::TILT: return "TILT";
    case Kind::OTHER: return label;
  }
  return label;
}

std::string_view to_string(TargetKind kind) {
  switch (kind) {
    case TargetKind::CELL: return "CELL";
    case TargetKind::BEARER: return "BEARER";
    case TargetKind::USER: return "USER";
  }
  return "?";
}

TargetKind parse_target_kind(std::string_view name) {
  if (name == "CELL") return TargetKind::CELL;
  if (name == "BEARER") return TargetKind::BEARER;
  if (name == "USER") return TargetKind::USER;
  throw ConfigError("unknown target kind '" + std::string(name) + "'");
}

std::string_view to_string(ConflictClass c) {
  switch (c) {
    case ConflictClass::DIRECT: return "DIRECT";
    case ConflictClass::INDIRECT: return "INDIRECT";
    case ConflictClass::IMPLICIT: return "IMPLICIT";
  }
  return "?";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::ACCEPTED: return "ACCEPTED";
    case Outcome::REJECTED_CONFLICT: return "REJECTED_CONFLICT";
    case Outcome::REJECTED_COOLDOWN: return "REJECTED_COOLDOWN";
  }
  return "?";
}

}  // namespace oransim::cm
