#include "oransim/cm/conflict_mitigation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "oransim/error.hpp"

namespace oransim::cm {

void CmConfig::validate(std::span<const std::string> known_xapps) const {
  if (!(effect_ttl > 0.0)) throw ConfigError("cm.effect_ttl: must be > 0");
  if (!(cooldown_duration >= 0.0)) throw ConfigError("cm.cooldown_duration: must be >= 0");
  if (mode == CmMode::PRIORITIZE) {
    if (prioritized_xapp.empty()) throw ConfigError("cm.prioritized_xapp: required in PRIORITIZE mode");
    if (!known_xapps.empty() &&
        std::find(known_xapps.begin(), known_xapps.end(), prioritized_xapp) == known_xapps.end())
      throw ConfigError("cm.prioritized_xapp: unknown xApp '" + prioritized_xapp + "'");
  }
  (void)register_groups(groups);
}

std::vector<ConflictRecord> detect_conflicts(const E2ControlMessage& msg, const DecisionStore& store,
                                             const PgRegistry& registry, double now) {
  std::vector<ConflictRecord> out;
  for (const auto& d : store.decisions_for(msg.target)) {
    if (!d.in_effect(now) || d.message.xapp_id == msg.xapp_id) continue;
    if (d.message.parameter == msg.parameter) {
      out.push_back({d.message.msg_id, std::nullopt, ConflictClass::DIRECT});
      continue;
    }
    for (auto& g : registry.shared_groups(msg.target.kind, msg.parameter, d.message.parameter))
      out.push_back({d.message.msg_id, std::move(g), ConflictClass::INDIRECT});
  }
  // decisions_for() is already in msg_id order; stable_sort keeps group order.
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.msg_id < b.msg_id; });
  return out;
}

Verdict resolve(const E2ControlMessage& msg, std::vector<ConflictRecord> conflicts,
                const CmConfig& config, DecisionStore& store, double now) {
  Verdict v;
  if (store.active_cooldown(msg.xapp_id, msg.target, now)) {
    v.outcome = Outcome::REJECTED_COOLDOWN;
    return v;
  }
  v.conflicts = std::move(conflicts);

  auto accept = [&] {
    store.supersede_same_key(msg, now);
    store.insert(msg, config.effect_ttl);
    v.outcome = Outcome::ACCEPTED;
  };

  if (v.conflicts.empty() || config.mode == CmMode::OFF) {
    accept();
    return v;
  }

  if (msg.xapp_id == config.prioritized_xapp) {
    std::set<std::string> losers;
    for (const auto& c : v.conflicts) {
      for (const auto& d : store.decisions_for(msg.target)) {
        if (d.message.msg_id == c.msg_id) {
          losers.insert(d.message.xapp_id);
          break;
        }
      }
      store.supersede(c.msg_id);
    }
    accept();
    for (const auto& x : losers) {
      CooldownEntry e{x, msg.target, now + config.cooldown_duration};
      store.add_cooldown(e);
      v.cooldowns_applied.push_back(std::move(e));
    }
    return v;
  }

  v.outcome = Outcome::REJECTED_CONFLICT;
  CooldownEntry e{msg.xapp_id, msg.target, now + config.cooldown_duration};
  store.add_cooldown(e);
  v.cooldowns_applied.push_back(std::move(e));
  return v;
}

std::size_t purge_expired(DecisionStore& store, double now) { return store.purge_expired(now); }

ConflictMitigator::ConflictMitigator(CmConfig config)
    : config_(std::move(config)), registry_(register_groups(config_.groups)) {
  config_.validate();
}

const LoggedVerdict& ConflictMitigator::submit(E2ControlMessage msg) {
  if (msg.issued_at < last_issued_at_)
    throw RunError("E2 control message issued_at went backwards");
  last_issued_at_ = msg.issued_at;
  msg.msg_id = next_msg_id_++;
  const double now = msg.issued_at;

  std::vector<ConflictRecord> conflicts;
  if (!store_.active_cooldown(msg.xapp_id, msg.target, now))
    conflicts = detect_conflicts(msg, store_, registry_, now);
  Verdict v = resolve(msg, std::move(conflicts), config_, store_, now);
  log_.push_back({std::move(msg), std::move(v)});
  return log_.back();
}

std::size_t ConflictMitigator::purge_expired(double now) { return store_.purge_expired(now); }

std::vector<Verdict> replay(std::span<const LoggedVerdict> log, const CmConfig& config) {
  ConflictMitigator cm(config);
  std::vector<Verdict> out;
  out.reserve(log.size());
  for (const auto& entry : log) out.push_back(cm.submit(entry.message).verdict);
  return out;
}

std::string verdict_log_jsonl(std::span<const LoggedVerdict> log) {
  std::ostringstream os;
  for (const auto& [msg, v] : log) {
    nlohmann::ordered_json j;
    j["msg_id"] = msg.msg_id;
    j["xapp_id"] = msg.xapp_id;
    j["target_kind"] = to_string(msg.target.kind);
    j["target_id"] = msg.target.id;
    j["parameter"] = msg.parameter.name();
    j["value"] = msg.value;
    j["issued_at"] = msg.issued_at;
    j["outcome"] = to_string(v.outcome);
    auto conflicts = nlohmann::ordered_json::array();
    for (const auto& c : v.conflicts) {
      nlohmann::ordered_json cj;
      cj["msg_id"] = c.msg_id;
      cj["group_id"] = c.group_id ? nlohmann::ordered_json(*c.group_id) : nlohmann::ordered_json(nullptr);
      cj["class"] = to_string(c.cls);
      conflicts.push_back(std::move(cj));
    }
    j["conflicts"] = std::move(conflicts);
    if (v.cooldowns_applied.empty()) {
      j["cooldown_until"] = nullptr;
    } else {
      j["cooldown_until"] = v.cooldowns_applied.front().until;
    }
    auto cooldowns = nlohmann::ordered_json::array();
    for (const auto& c : v.cooldowns_applied)
      cooldowns.push_back({{"xapp_id", c.xapp_id}, {"until", c.until}});
    j["cooldowns"] = std::move(cooldowns);
    os << j.dump() << '\n';
  }
  return os.str();
}

}  // namespace oransim::cm
