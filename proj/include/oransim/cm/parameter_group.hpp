#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "oransim/cm/types.hpp"

namespace oransim::cm {

/// Parameters that influence the same area of network operation for one kind
/// of control target.
struct ParameterGroup {
  std::string group_id;
  TargetKind target_kind = TargetKind::CELL;
  std::vector<ParameterId> members;

  friend bool operator==(const ParameterGroup&, const ParameterGroup&) = default;
};

/// Immutable membership index over a set of parameter groups.
class PgRegistry {
 public:
  PgRegistry() = default;

  const std::vector<ParameterGroup>& groups() const { return groups_; }

  /// Group ids containing (kind, param), sorted. Empty when unregistered.
  const std::vector<std::string>& groups_of(TargetKind kind, const ParameterId& param) const;

  /// Sorted intersection of groups_of(kind, a) and groups_of(kind, b).
  std::vector<std::string> shared_groups(TargetKind kind, const ParameterId& a,
                                         const ParameterId& b) const;

  std::size_t membership_count() const;

 private:
  friend PgRegistry register_groups(std::vector<ParameterGroup> groups);

  static std::string key(TargetKind kind, const ParameterId& param);

  std::vector<ParameterGroup> groups_;
  std::unordered_map<std::string, std::vector<std::string>> index_;
};

/// Builds the registry. Throws ConfigError on duplicate group ids, empty groups,
/// or groups listing the same parameter twice.
PgRegistry register_groups(std::vector<ParameterGroup> groups);

/// The handover-boundary group used by the default scenario: CELL {CIO, TTT, HH}.
ParameterGroup handover_boundary_group();

}  // namespace oransim::cm
