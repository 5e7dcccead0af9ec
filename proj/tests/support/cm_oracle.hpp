#pragma once

// Reference conflict detection and resolution written as plain scans over
// every message seen so far. Shared by the unit and acceptance suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oransim/cm/conflict_mitigation.hpp"

namespace oracle {

using namespace oransim::cm;

struct Entry {
  E2ControlMessage msg;
  double expires_at = 0.0;
  bool superseded = false;
};

struct Cooldown {
  std::string xapp;
  ControlTarget target;
  double until = 0.0;
};

inline bool member(const ParameterGroup& g, TargetKind kind, const ParameterId& p) {
  return g.target_kind == kind && std::find(g.members.begin(), g.members.end(), p) != g.members.end();
}

class Reference {
 public:
  explicit Reference(CmConfig cfg) : cfg_(std::move(cfg)) {}

  std::vector<ConflictRecord> detect(const E2ControlMessage& msg, double now) const {
    std::vector<ConflictRecord> out;
    for (const auto& h : history_) {
      if (h.superseded || h.expires_at <= now) continue;
      if (!(h.msg.target == msg.target) || h.msg.xapp_id == msg.xapp_id) continue;
      if (h.msg.parameter == msg.parameter) {
        out.push_back({h.msg.msg_id, std::nullopt, ConflictClass::DIRECT});
        continue;
      }
      std::vector<std::string> ids;
      for (const auto& g : cfg_.groups)
        if (member(g, msg.target.kind, msg.parameter) && member(g, msg.target.kind, h.msg.parameter))
          ids.push_back(g.group_id);
      std::sort(ids.begin(), ids.end());
      for (auto& id : ids) out.push_back({h.msg.msg_id, id, ConflictClass::INDIRECT});
    }
    return out;
  }

  bool cooled(const std::string& xapp, const ControlTarget& t, double now) const {
    for (const auto& c : cooldowns_)
      if (c.xapp == xapp && c.target == t && now < c.until) return true;
    return false;
  }

  Outcome submit(const E2ControlMessage& msg) {
    const double now = msg.issued_at;
    if (cooled(msg.xapp_id, msg.target, now)) return Outcome::REJECTED_COOLDOWN;
    auto conflicts = detect(msg, now);
    const bool off = cfg_.mode == CmMode::OFF;
    if (conflicts.empty() || off) {
      for (auto& h : history_)
        if (h.msg.target == msg.target && h.msg.parameter == msg.parameter && h.msg.xapp_id == msg.xapp_id)
          h.superseded = true;
      history_.push_back({msg, now + cfg_.effect_ttl, false});
      return Outcome::ACCEPTED;
    }
    if (msg.xapp_id == cfg_.prioritized_xapp) {
      for (const auto& c : conflicts)
        for (auto& h : history_)
          if (h.msg.msg_id == c.msg_id) {
            h.superseded = true;
            cooldowns_.push_back({h.msg.xapp_id, msg.target, now + cfg_.cooldown_duration});
          }
      history_.push_back({msg, now + cfg_.effect_ttl, false});
      return Outcome::ACCEPTED;
    }
    cooldowns_.push_back({msg.xapp_id, msg.target, now + cfg_.cooldown_duration});
    return Outcome::REJECTED_CONFLICT;
  }

 private:
  CmConfig cfg_;
  std::vector<Entry> history_;
  std::vector<Cooldown> cooldowns_;
};

struct Stream {
  CmConfig config;
  std::vector<E2ControlMessage> messages;
};

// Random message stream over up to 10 cell targets and the four named
// parameters, with a random TTL, cooldown, group layout and priority mode.
inline Stream random_stream(std::uint64_t seed, std::size_t max_messages = 1000) {
  std::mt19937_64 rng(seed);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const std::vector<ParameterId> params = {ParameterId::cio(), ParameterId::ttt(), ParameterId::hh(),
                                           ParameterId::tilt()};
  const std::vector<std::string> xapps = {"MLB", "MRO", "ES"};
  Stream s;
  s.config.effect_ttl = std::uniform_real_distribution<double>(0.5, 20.0)(rng);
  s.config.cooldown_duration = std::uniform_real_distribution<double>(0.0, 10.0)(rng);
  s.config.mode = uni(0, 3) == 0 ? CmMode::OFF : CmMode::PRIORITIZE;
  s.config.prioritized_xapp = xapps[uni(0, 2)];
  s.config.groups.clear();
  const int n_groups = uni(0, 3);
  for (int g = 0; g < n_groups; ++g) {
    ParameterGroup pg{"g" + std::to_string(g), TargetKind::CELL, {}};
    for (const auto& p : params)
      if (uni(0, 1)) pg.members.push_back(p);
    if (pg.members.empty()) pg.members.push_back(params[uni(0, 3)]);
    s.config.groups.push_back(pg);
  }
  const int n_targets = uni(1, 10);
  const auto n = static_cast<std::size_t>(uni(1, static_cast<int>(max_messages)));
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (uni(0, 2) == 0) t += std::uniform_real_distribution<double>(0.0, 3.0)(rng);
    E2ControlMessage m;
    m.xapp_id = xapps[uni(0, 2)];
    m.target = ControlTarget::cell(static_cast<std::uint32_t>(uni(0, n_targets - 1)));
    m.parameter = params[uni(0, 3)];
    m.value = uni(-12, 12) * 0.5;
    m.issued_at = t;
    s.messages.push_back(m);
  }
  return s;
}

struct StreamCheck {
  std::size_t messages = 0;
  std::size_t detection_mismatches = 0;
  std::size_t outcome_mismatches = 0;
};

// Feeds a stream to both implementations, comparing detection on every message
// that is not cooled down and the outcome of every message.
inline StreamCheck check_stream(const Stream& s) {
  ConflictMitigator cm(s.config);
  Reference ref(s.config);
  auto registry = register_groups(s.config.groups);
  StreamCheck out;
  for (auto m : s.messages) {
    m.msg_id = cm.verdict_log().size() + 1;
    const auto expected = ref.detect(m, m.issued_at);
    const auto actual = detect_conflicts(m, cm.store(), registry, m.issued_at);
    if (expected != actual) ++out.detection_mismatches;
    const auto expected_outcome = ref.submit(m);
    const auto& logged = cm.submit(m);
    if (logged.verdict.outcome != expected_outcome) ++out.outcome_mismatches;
    ++out.messages;
  }
  return out;
}

}  // namespace oracle
