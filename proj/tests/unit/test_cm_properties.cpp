#include "doctest.h"

#include <map>

#include "cm_oracle.hpp"
#include "oransim/cm/conflict_mitigation.hpp"

using namespace oransim::cm;

TEST_CASE("a single xApp is never rejected for conflicts and never cooled down") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    auto s = oracle::random_stream(seed, 400);
    s.config.mode = CmMode::PRIORITIZE;
    s.config.prioritized_xapp = "MRO";
    for (auto& m : s.messages) m.xapp_id = "MLB";
    ConflictMitigator cm(s.config);
    for (const auto& m : s.messages) {
      const auto& v = cm.submit(m).verdict;
      CHECK(v.outcome == Outcome::ACCEPTED);
      CHECK(v.conflicts.empty());
    }
    CHECK(cm.store().cooldown_count() == 0);
  }
}

TEST_CASE("mode OFF accepts every message and creates no cooldown") {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    auto s = oracle::random_stream(seed, 400);
    s.config.mode = CmMode::OFF;
    ConflictMitigator cm(s.config);
    for (const auto& m : s.messages) {
      const auto& v = cm.submit(m).verdict;
      CHECK(v.accepted());
      CHECK(v.cooldowns_applied.empty());
    }
  }
}

TEST_CASE("no message is accepted strictly inside a cooldown window") {
  for (std::uint64_t seed = 300; seed < 360; ++seed) {
    auto s = oracle::random_stream(seed, 500);
    s.config.mode = CmMode::PRIORITIZE;
    ConflictMitigator cm(s.config);
    for (const auto& m : s.messages) cm.submit(m);
    std::vector<CooldownEntry> windows;
    for (const auto& lv : cm.verdict_log()) {
      const auto& msg = lv.message;
      if (lv.verdict.accepted()) {
        for (const auto& w : windows)
          CHECK_FALSE((w.xapp_id == msg.xapp_id && w.target == msg.target && msg.issued_at < w.until &&
                       msg.issued_at > w.until - s.config.cooldown_duration));
      }
      for (const auto& c : lv.verdict.cooldowns_applied) windows.push_back(c);
    }
  }
}

TEST_CASE("cooldown entries always last the configured duration") {
  auto s = oracle::random_stream(400, 800);
  s.config.mode = CmMode::PRIORITIZE;
  ConflictMitigator cm(s.config);
  for (const auto& m : s.messages) {
    const auto& lv = cm.submit(m);
    for (const auto& c : lv.verdict.cooldowns_applied)
      CHECK(c.until == doctest::Approx(m.issued_at + s.config.cooldown_duration));
  }
}

TEST_CASE("replaying a log reproduces its verdicts") {
  for (std::uint64_t seed = 500; seed < 520; ++seed) {
    auto s = oracle::random_stream(seed, 300);
    ConflictMitigator cm(s.config);
    for (const auto& m : s.messages) cm.submit(m);
    auto again = replay(cm.verdict_log(), s.config);
    REQUIRE(again.size() == cm.verdict_log().size());
    for (std::size_t i = 0; i < again.size(); ++i) CHECK(again[i] == cm.verdict_log()[i].verdict);
  }
}

TEST_CASE("purging never changes later verdicts") {
  for (std::uint64_t seed = 600; seed < 620; ++seed) {
    auto s = oracle::random_stream(seed, 300);
    ConflictMitigator kept(s.config);
    ConflictMitigator purged(s.config);
    for (const auto& m : s.messages) {
      purged.purge_expired(m.issued_at);
      CHECK(kept.submit(m).verdict == purged.submit(m).verdict);
    }
  }
}
