#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oransim/cm/decision_store.hpp"
#include "oransim/cm/parameter_group.hpp"
#include "oransim/cm/types.hpp"

namespace oransim::cm {

enum class CmMode : std::uint8_t { OFF, PRIORITIZE };

struct CmConfig {
  CmMode mode = CmMode::OFF;
  std::string prioritized_xapp;  // used when mode == PRIORITIZE
  double effect_ttl = 10.0;
  double cooldown_duration = 5.0;
  std::vector<ParameterGroup> groups = {handover_boundary_group()};

  /// Throws ConfigError when an invariant is violated. known_xapps, when
  /// non-empty, must contain the prioritized xApp.
  void validate(std::span<const std::string> known_xapps = {}) const;

  friend bool operator==(const CmConfig&, const CmConfig&) = default;
};

/// CD Agent. Every in-effect, non-superseded decision on the same target from a
/// different xApp that either sets the same parameter (DIRECT) or shares a
/// registered group with it (INDIRECT, one record per shared group). Sorted by
/// conflicting msg_id. Does not mutate the store.
std::vector<ConflictRecord> detect_conflicts(const E2ControlMessage& msg, const DecisionStore& store,
                                             const PgRegistry& registry, double now);

/// CR Agent. Applies the cooldown check, then priority arbitration, and
/// updates the store for accepted messages and new cooldowns.
Verdict resolve(const E2ControlMessage& msg, std::vector<ConflictRecord> conflicts,
                const CmConfig& config, DecisionStore& store, double now);

std::size_t purge_expired(DecisionStore& store, double now);

struct LoggedVerdict {
  E2ControlMessage message;
  Verdict verdict;
};

/// The Conflict Mitigation component: every E2 Control message from every
/// xApp passes through submit(). Keeps the append-only verdict log.
class ConflictMitigator {
 public:
  explicit ConflictMitigator(CmConfig config);

  /// Assigns the next msg_id, runs cooldown check, detection and resolution.
  /// issued_at of the incoming message is taken as the current time.
  const LoggedVerdict& submit(E2ControlMessage msg);

  std::size_t purge_expired(double now);

  const std::vector<LoggedVerdict>& verdict_log() const { return log_; }
  const DecisionStore& store() const { return store_; }
  const PgRegistry& registry() const { return registry_; }
  const CmConfig& config() const { return config_; }

 private:
  CmConfig config_;
  PgRegistry registry_;
  DecisionStore store_;
  std::vector<LoggedVerdict> log_;
  std::uint64_t next_msg_id_ = 1;
  double last_issued_at_ = 0.0;
};

/// Re-runs the messages of a log through a fresh mitigator with `config` and
/// returns the verdicts in order.
std::vector<Verdict> replay(std::span<const LoggedVerdict> log, const CmConfig& config);

/// One JSON object per line: msg_id, xapp_id, target_kind, target_id,
/// parameter, value, issued_at, outcome, conflicts[], cooldown_until.
std::string verdict_log_jsonl(std::span<const LoggedVerdict> log);

}  // namespace oransim::cm
