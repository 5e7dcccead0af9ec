#include "oransim/cm/decision_store.hpp"

#include <algorithm>

namespace oransim::cm {

namespace {
const std::vector<InEffectDecision> kEmpty;
}

void DecisionStore::insert(const E2ControlMessage& msg, double effect_ttl) {
  by_target_[msg.target].push_back({msg, msg.issued_at + effect_ttl, false});
}

bool DecisionStore::supersede(std::uint64_t msg_id) {
  for (auto& [target, list] : by_target_) {
    auto it = std::lower_bound(list.begin(), list.end(), msg_id,
                               [](const InEffectDecision& d, std::uint64_t id) { return d.message.msg_id < id; });
    if (it != list.end() && it->message.msg_id == msg_id) {
      it->superseded = true;
      return true;
    }
  }
  return false;
}

std::size_t DecisionStore::supersede_same_key(const E2ControlMessage& msg, double now) {
  auto it = by_target_.find(msg.target);
  if (it == by_target_.end()) return 0;
  std::size_t n = 0;
  for (auto& d : it->second) {
    if (d.in_effect(now) && d.message.xapp_id == msg.xapp_id && d.message.parameter == msg.parameter) {
      d.superseded = true;
      ++n;
    }
  }
  return n;
}

void DecisionStore::add_cooldown(const CooldownEntry& entry) {
  auto [it, inserted] = cooldowns_.try_emplace({entry.xapp_id, entry.target}, entry.until);
  if (!inserted) it->second = std::max(it->second, entry.until);
}

std::optional<CooldownEntry> DecisionStore::active_cooldown(const std::string& xapp_id,
                                                            const ControlTarget& target,
                                                            double now) const {
  auto it = cooldowns_.find({xapp_id, target});
  if (it == cooldowns_.end() || !(now < it->second)) return std::nullopt;
  return CooldownEntry{xapp_id, target, it->second};
}

const std::vector<InEffectDecision>& DecisionStore::decisions_for(const ControlTarget& target) const {
  auto it = by_target_.find(target);
  return it == by_target_.end() ? kEmpty : it->second;
}

std::vector<InEffectDecision> DecisionStore::all_decisions() const {
  std::vector<InEffectDecision> out;
  for (const auto& [target, list] : by_target_) out.insert(out.end(), list.begin(), list.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.message.msg_id < b.message.msg_id; });
  return out;
}

std::size_t DecisionStore::purge_expired(double now) {
  std::size_t removed = 0;
  for (auto it = by_target_.begin(); it != by_target_.end();) {
    auto& list = it->second;
    auto end = std::remove_if(list.begin(), list.end(),
                              [now](const InEffectDecision& d) { return d.expires_at <= now; });
    removed += static_cast<std::size_t>(list.end() - end);
    list.erase(end, list.end());
    it = list.empty() ? by_target_.erase(it) : std::next(it);
  }
  std::erase_if(cooldowns_, [now](const auto& kv) { return kv.second <= now; });
  return removed;
}

std::size_t DecisionStore::decision_count() const {
  std::size_t n = 0;
  for (const auto& [target, list] : by_target_) n += list.size();
  return n;
}

}  // namespace oransim::cm
