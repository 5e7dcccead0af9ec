#include "doctest.h"

#include <algorithm>

#include "oransim/cm/conflict_mitigation.hpp"
#include "oransim/error.hpp"

using namespace oransim;
using namespace oransim::cm;

namespace {

E2ControlMessage make(const char* xapp, std::uint32_t cell, ParameterId p, double t, double v = 1.0) {
  E2ControlMessage m;
  m.xapp_id = xapp;
  m.target = ControlTarget::cell(cell);
  m.parameter = std::move(p);
  m.issued_at = t;
  m.value = v;
  return m;
}

CmConfig prio(const char* xapp) {
  CmConfig c;
  c.mode = CmMode::PRIORITIZE;
  c.prioritized_xapp = xapp;
  return c;
}

}  // namespace

TEST_CASE("non-prioritized xApp is rejected and cooled down") {
  ConflictMitigator cm(prio("MRO"));
  CHECK(cm.submit(make("MRO", 3, ParameterId::ttt(), 0.0)).verdict.accepted());
  const auto& v = cm.submit(make("MLB", 3, ParameterId::cio(), 1.0)).verdict;
  CHECK(v.outcome == Outcome::REJECTED_CONFLICT);
  REQUIRE(v.cooldowns_applied.size() == 1);
  CHECK(v.cooldowns_applied[0] == CooldownEntry{"MLB", ControlTarget::cell(3), 6.0});
  CHECK(cm.store().active_cooldown("MLB", ControlTarget::cell(3), 5.9).has_value());
  CHECK_FALSE(cm.store().active_cooldown("MLB", ControlTarget::cell(3), 6.0).has_value());
  CHECK_FALSE(cm.store().active_cooldown("MLB", ControlTarget::cell(4), 2.0).has_value());
}

TEST_CASE("prioritized xApp supersedes the conflicting decision and cools the loser") {
  ConflictMitigator cm(prio("MRO"));
  CHECK(cm.submit(make("MLB", 3, ParameterId::cio(), 0.0)).verdict.accepted());
  const auto& v = cm.submit(make("MRO", 3, ParameterId::ttt(), 2.0)).verdict;
  CHECK(v.outcome == Outcome::ACCEPTED);
  REQUIRE(v.conflicts.size() == 1);
  CHECK(v.conflicts[0].msg_id == 1);
  REQUIRE(v.cooldowns_applied.size() == 1);
  CHECK(v.cooldowns_applied[0] == CooldownEntry{"MLB", ControlTarget::cell(3), 7.0});
  const auto& d = cm.store().decisions_for(ControlTarget::cell(3));
  REQUIRE(d.size() == 2);
  CHECK(d[0].superseded);
  CHECK_FALSE(d[1].superseded);
}

TEST_CASE("one cooldown per distinct conflicting xApp") {
  CmConfig c = prio("MRO");
  c.groups = {{"hob", TargetKind::CELL, {ParameterId::cio(), ParameterId::ttt(), ParameterId::tilt()}}};
  ConflictMitigator cm2(c);
  cm2.submit(make("MLB", 3, ParameterId::cio(), 0.0));
  cm2.submit(make("MLB", 3, ParameterId::tilt(), 0.0));
  const auto& v = cm2.submit(make("MRO", 3, ParameterId::ttt(), 1.0)).verdict;
  CHECK(v.accepted());
  CHECK(v.conflicts.size() == 2);
  CHECK(v.cooldowns_applied.size() == 1);
}

TEST_CASE("mode OFF accepts everything") {
  ConflictMitigator cm(CmConfig{});
  cm.submit(make("MRO", 3, ParameterId::ttt(), 0.0));
  const auto& v = cm.submit(make("MLB", 3, ParameterId::cio(), 0.0)).verdict;
  CHECK(v.accepted());
  CHECK(v.conflicts.size() == 1);
  CHECK(v.cooldowns_applied.empty());
  CHECK(cm.store().cooldown_count() == 0);
}

TEST_CASE("cooldown rejects even non-conflicting messages toward the target") {
  ConflictMitigator cm(prio("MRO"));
  cm.submit(make("MRO", 3, ParameterId::ttt(), 0.0));
  cm.submit(make("MLB", 3, ParameterId::cio(), 1.0));
  const auto& v = cm.submit(make("MLB", 3, ParameterId::other("PMAX"), 2.0)).verdict;
  CHECK(v.outcome == Outcome::REJECTED_COOLDOWN);
  CHECK(v.conflicts.empty());
  CHECK(cm.submit(make("MLB", 4, ParameterId::cio(), 2.0)).verdict.accepted());
}

TEST_CASE("cooldown window is half open") {
  CmConfig c = prio("MRO");
  c.effect_ttl = 1.0;
  ConflictMitigator cm(c);
  cm.submit(make("MRO", 3, ParameterId::ttt(), 0.0));
  cm.submit(make("MLB", 3, ParameterId::cio(), 0.5));
  CHECK(cm.submit(make("MLB", 3, ParameterId::cio(), 5.49)).verdict.outcome == Outcome::REJECTED_COOLDOWN);
  CHECK(cm.submit(make("MLB", 3, ParameterId::cio(), 5.5)).verdict.accepted());
}

TEST_CASE("accepted update supersedes the sender's own previous value") {
  ConflictMitigator cm(CmConfig{});
  cm.submit(make("MLB", 3, ParameterId::cio(), 0.0, 1.0));
  cm.submit(make("MLB", 3, ParameterId::cio(), 1.0, 2.0));
  const auto& d = cm.store().decisions_for(ControlTarget::cell(3));
  REQUIRE(d.size() == 2);
  CHECK(d[0].superseded);
  CHECK(d[1].in_effect(1.0));
}

TEST_CASE("first accepted wins between two non-prioritized xApps") {
  ConflictMitigator cm(prio("ES"));
  CHECK(cm.submit(make("MLB", 3, ParameterId::cio(), 0.0)).verdict.accepted());
  CHECK(cm.submit(make("MRO", 3, ParameterId::ttt(), 0.0)).verdict.outcome == Outcome::REJECTED_CONFLICT);
}

TEST_CASE("direct conflicts follow the same priority rule") {
  ConflictMitigator cm(prio("MLB"));
  cm.submit(make("MRO", 3, ParameterId::cio(), 0.0));
  const auto& v = cm.submit(make("MLB", 3, ParameterId::cio(), 0.0)).verdict;
  CHECK(v.accepted());
  REQUIRE(v.conflicts.size() == 1);
  CHECK(v.conflicts[0].cls == ConflictClass::DIRECT);
}

TEST_CASE("msg ids are sequential and time may not go backwards") {
  ConflictMitigator cm(CmConfig{});
  CHECK(cm.submit(make("MLB", 1, ParameterId::cio(), 1.0)).message.msg_id == 1);
  CHECK(cm.submit(make("MLB", 2, ParameterId::cio(), 1.0)).message.msg_id == 2);
  CHECK_THROWS_AS(cm.submit(make("MLB", 3, ParameterId::cio(), 0.5)), RunError);
}

TEST_CASE("purge removes expired decisions and lapsed cooldowns") {
  DecisionStore store;
  E2ControlMessage a;
  a.msg_id = 1;
  a.xapp_id = "MLB";
  E2ControlMessage b = a;
  b.msg_id = 2;
  store.insert(a, 5.0);
  store.insert(b, 15.0);
  store.add_cooldown({"MLB", ControlTarget::cell(0), 8.0});
  CHECK(purge_expired(store, 10.0) == 1);
  CHECK(store.decision_count() == 1);
  CHECK(store.cooldown_count() == 0);

  DecisionStore empty;
  CHECK(purge_expired(empty, 10.0) == 0);

  DecisionStore fresh;
  fresh.insert(a, 5.0);
  CHECK(purge_expired(fresh, 0.0) == 0);
}

TEST_CASE("longer cooldowns are kept") {
  DecisionStore store;
  store.add_cooldown({"MLB", ControlTarget::cell(0), 8.0});
  store.add_cooldown({"MLB", ControlTarget::cell(0), 6.0});
  CHECK(store.active_cooldown("MLB", ControlTarget::cell(0), 7.0).has_value());
}

TEST_CASE("verdict log keeps every message in order and replays identically") {
  ConflictMitigator empty(prio("MRO"));
  CHECK(empty.verdict_log().empty());

  ConflictMitigator cm(prio("MRO"));
  cm.submit(make("MRO", 3, ParameterId::ttt(), 0.0));
  cm.submit(make("MLB", 3, ParameterId::cio(), 1.0));
  cm.submit(make("MLB", 3, ParameterId::cio(), 2.0));
  REQUIRE(cm.verdict_log().size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(cm.verdict_log()[i].message.msg_id == i + 1);
  auto again = replay(cm.verdict_log(), cm.config());
  REQUIRE(again.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(again[i] == cm.verdict_log()[i].verdict);
}

TEST_CASE("verdict log exports one JSON line per message") {
  ConflictMitigator cm(prio("MRO"));
  cm.submit(make("MRO", 3, ParameterId::ttt(), 0.0));
  cm.submit(make("MLB", 3, ParameterId::cio(), 1.0));
  auto text = verdict_log_jsonl(cm.verdict_log());
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.find("\"outcome\":\"REJECTED_CONFLICT\"") != std::string::npos);
  CHECK(text.find("\"group_id\":\"hob\"") != std::string::npos);
}

TEST_CASE("config validation") {
  CmConfig c = prio("MRO");
  CHECK_NOTHROW(c.validate());
  std::vector<std::string> known = {"MLB"};
  CHECK_THROWS_AS(c.validate(known), ConfigError);
  c.prioritized_xapp.clear();
  CHECK_THROWS_AS(c.validate(), ConfigError);
  CmConfig neg;
  neg.effect_ttl = 0.0;
  CHECK_THROWS_AS(neg.validate(), ConfigError);
  CmConfig dup;
  dup.groups.push_back(handover_boundary_group());
  CHECK_THROWS_AS(dup.validate(), ConfigError);
}
