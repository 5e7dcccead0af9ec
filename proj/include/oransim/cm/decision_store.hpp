#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oransim/cm/types.hpp"

namespace oransim::cm {

/// Accepted decisions still (potentially) in effect, plus the cooldown ledger.
///
/// Decisions are kept per control target in arrival order so that detection
/// only scans the target the incoming message addresses. Mutations must be
/// serialized by the caller; const queries may run concurrently.
class DecisionStore {
 public:
  void insert(const E2ControlMessage& msg, double effect_ttl);

  /// Marks the decision with this msg_id superseded. Returns false if unknown.
  bool supersede(std::uint64_t msg_id);

  /// Supersedes every in-effect decision from xapp_id on (target, parameter).
  std::size_t supersede_same_key(const E2ControlMessage& msg, double now);

  /// Records a cooldown; an existing longer cooldown for the pair is kept.
  void add_cooldown(const CooldownEntry& entry);

  /// The active cooldown for (xapp_id, target), if now < until.
  std::optional<CooldownEntry> active_cooldown(const std::string& xapp_id,
                                               const ControlTarget& target, double now) const;

  /// All stored decisions for a target (including expired/superseded ones not
  /// yet purged), in msg_id order.
  const std::vector<InEffectDecision>& decisions_for(const ControlTarget& target) const;

  /// Every stored decision across targets, in msg_id order.
  std::vector<InEffectDecision> all_decisions() const;

  std::size_t purge_expired(double now);

  std::size_t decision_count() const;
  std::size_t cooldown_count() const { return cooldowns_.size(); }

 private:
  std::map<ControlTarget, std::vector<InEffectDecision>> by_target_;
  std::map<std::pair<std::string, ControlTarget>, double> cooldowns_;
};

}  // namespace oransim::cm
