#include "oransim/sim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>

#include "oransim/error.hpp"
#include "oransim/ran/kernels.hpp"
#include "oransim/ran/layout.hpp"
#include "oransim/ue/handover.hpp"
#include "oransim/ue/mobility.hpp"
#include "oransim/ue/session.hpp"

namespace oransim::sim {

namespace {

enum RngStream : std::uint64_t { kPlacement = 1, kMobility = 2, kSession = 3 };

constexpr std::uint64_t kShadowingSalt = 0x5348414457ULL;

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t user, RngStream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(user), static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

struct User {
  std::uint32_t id = 0;
  ue::MobilityState mobility;
  std::mt19937_64 mobility_rng;
  std::mt19937_64 session_rng;
  double required_bitrate = 0.0;
  std::optional<std::uint32_t> serving;
  ue::SessionState session;
  std::vector<double> a3_timers;
  double rlf_timer_ms = 0.0;
  double reattach_in_ms = 0.0;
  std::optional<ue::HandoverHistoryEntry> last_ho;
};

struct Window {
  std::vector<xapps::CellKpi> per_cell;
  void reset(std::size_t cells) { per_cell.assign(cells, {}); }
};

ran::Position sample_in_disk(ran::Position centre, double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  const double a = 2.0 * std::numbers::pi * unit(rng);
  return {centre.x + r * std::cos(a), centre.y + r * std::sin(a)};
}

std::uint32_t strongest(std::span<const double> levels) {
  return static_cast<std::uint32_t>(std::max_element(levels.begin(), levels.end()) - levels.begin());
}

std::int64_t ticks_per(double period_s, double tick_ms) {
  return std::llround(period_s * 1000.0 / tick_ms);
}

}  // namespace

RunResult run(const ScenarioConfig& cfg, const RunOptions& options) {
  cfg.validate();

  RunResult result;
  result.config = cfg;

  auto cells = ran::build_cells(cfg.layout, cfg.initial);
  const auto sites = ran::build_sites(cfg.layout);
  const auto bounds = ran::simulation_bounds(cfg.layout);
  const std::size_t n_cells = cells.size();
  const double dt_s = cfg.tick_ms / 1000.0;

  std::vector<double> layer_offset(n_cells, 0.0);
  for (std::size_t c = 0; c < n_cells; ++c)
    if (cells[c].site.kind == ran::SiteKind::MICRO) layer_offset[c] = cfg.measurement.micro_layer_offset_db;

  // Users: macro-area users first, then each micro site's users in site order.
  std::vector<User> users;
  std::vector<ran::Position> centres;
  std::vector<double> radii;
  for (int i = 0; i < cfg.users.macro_users; ++i) {
    centres.push_back(sites.front().position);
    radii.push_back(cfg.users.macro_radius_m);
  }
  for (const auto& site : sites) {
    if (site.kind != ran::SiteKind::MICRO) continue;
    for (int i = 0; i < cfg.users.micro_users_per_site; ++i) {
      centres.push_back(site.position);
      radii.push_back(cfg.users.micro_radius_m);
    }
  }
  const std::size_t n_users = centres.size();
  users.resize(n_users);
  std::discrete_distribution<int> profile(cfg.users.profile_probabilities.begin(),
                                          cfg.users.profile_probabilities.end());
  for (std::size_t u = 0; u < n_users; ++u) {
    auto& user = users[u];
    user.id = static_cast<std::uint32_t>(u);
    auto placement = make_rng(cfg.seed, u, kPlacement);
    const auto start = sample_in_disk(centres[u], radii[u], placement);
    user.required_bitrate = cfg.users.profile_bitrates_bps[static_cast<std::size_t>(profile(placement))];
    user.mobility_rng = make_rng(cfg.seed, u, kMobility);
    user.session_rng = make_rng(cfg.seed, u, kSession);
    user.mobility = ue::init_mobility(start, bounds, cfg.mobility, user.mobility_rng);
    user.session = ue::init_session(cfg.session, user.session_rng);
    user.a3_timers.assign(n_cells, 0.0);
  }

  const ran::ShadowingParams shadow_params{cfg.measurement.shadowing_sigma_db,
                                           cfg.measurement.shadowing_decorrelation_m,
                                           cfg.seed ^ kShadowingSalt};
  std::vector<double> shadowing;
  if (shadow_params.sigma_db > 0.0) shadowing = ran::init_shadowing(shadow_params, n_users, n_cells);
  std::vector<double> travelled(n_users, 0.0);

  std::vector<ran::Position> positions(n_users);
  auto refresh_positions = [&] {
    for (std::size_t u = 0; u < n_users; ++u) positions[u] = users[u].mobility.position;
  };
  refresh_positions();

  // Initial attachment by strongest (deterministic, unfaded) level.
  {
    ran::MeasurementInput in{cells, positions, shadowing, {0.0, cfg.seed}, 0, cfg.radio};
    ran::RsrpMatrix m;
    ran::serial::measure(in, m);
    std::vector<double> levels(n_cells);
    for (std::size_t u = 0; u < n_users; ++u) {
      for (std::size_t c = 0; c < n_cells; ++c) levels[c] = m.at(u, c) + layer_offset[c];
      users[u].serving = strongest(levels);
    }
  }

  const bool parallel = cfg.measurement.parallel_kernels;
  const auto n_ticks = static_cast<std::int64_t>(std::floor(cfg.duration_s * 1000.0 / cfg.tick_ms + 1e-9));
  const std::int64_t mlb_every = ticks_per(cfg.xapps.mlb_period_s, cfg.tick_ms);
  const std::int64_t mro_every = ticks_per(cfg.xapps.mro_period_s, cfg.tick_ms);

  std::optional<cm::ConflictMitigator> mitigator;
  if (!options.bypass_cm) mitigator.emplace(cfg.cm);
  std::uint64_t bypass_msg_id = 1;

  Window mlb_window, mro_window;
  mlb_window.reset(n_cells);
  mro_window.reset(n_cells);

  EventCounters counters;
  ran::RsrpMatrix measured;
  std::vector<double> sinr;
  std::vector<std::optional<std::uint32_t>> serving(n_users);
  std::vector<double> levels(n_cells);
  std::vector<double> satisfaction(n_users);
  std::vector<char> handed_over(n_users, 0);
  const double interruption_share = cfg.handover_interruption_ms / cfg.tick_ms;
  std::vector<ran::PrbDemand> demands;
  std::vector<std::vector<std::size_t>> attached(n_cells);

  result.trace.rows.reserve(static_cast<std::size_t>(std::max<std::int64_t>(n_ticks, 0)));

  for (std::int64_t k = 0; k < n_ticks; ++k) {
    const double now = static_cast<double>(k + 1) * dt_s;

    // (1) mobility
    for (auto& user : users) {
      const auto before = user.mobility.position;
      user.mobility = ue::step_mobility(user.mobility, dt_s, bounds, cfg.mobility, user.mobility_rng);
      travelled[user.id] = ran::distance(before, user.mobility.position);
    }
    refresh_positions();
    if (!shadowing.empty()) {
      const ran::ShadowingStep step{shadow_params, travelled, static_cast<std::uint64_t>(k + 1)};
      if (parallel) {
        ran::parallel::advance_shadowing(step, shadowing);
      } else {
        ran::serial::advance_shadowing(step, shadowing);
      }
    }

    // (2) measurements and reattachment of detached users
    ran::MeasurementInput in{cells, positions, shadowing, {cfg.measurement.fading_sigma_db, cfg.seed},
                             static_cast<std::uint64_t>(k + 1), cfg.radio};
    if (parallel) {
      ran::parallel::measure(in, measured);
    } else {
      ran::serial::measure(in, measured);
    }
    for (auto& user : users) {
      if (user.serving) continue;
      user.reattach_in_ms -= cfg.tick_ms;
      if (user.reattach_in_ms > 0.0) continue;
      const auto row = measured.row(user.id);
      for (std::size_t c = 0; c < n_cells; ++c) levels[c] = row[c] + layer_offset[c];
      user.serving = strongest(levels);
      std::fill(user.a3_timers.begin(), user.a3_timers.end(), 0.0);
      user.rlf_timer_ms = 0.0;
    }
    for (std::size_t u = 0; u < n_users; ++u) serving[u] = users[u].serving;
    ran::ServingInput sin{cells, serving, cfg.radio};
    if (parallel) {
      ran::parallel::serving_sinr(sin, measured, sinr);
    } else {
      ran::serial::serving_sinr(sin, measured, sinr);
    }

    // (3) handover, RLF and session processing, in user-id order
    std::fill(handed_over.begin(), handed_over.end(), 0);
    for (auto& user : users) {
      const auto row = measured.row(user.id);
      if (user.serving) {
        for (std::size_t c = 0; c < n_cells; ++c) levels[c] = row[c] + layer_offset[c];
        const auto& sc = cells[*user.serving];
        const ue::A3Settings a3{sc.cio_db, sc.hh_db, sc.ttt_ms};
        if (auto ho = ue::evaluate_a3(user.a3_timers, levels, *user.serving, a3, cfg.tick_ms)) {
          const bool pp = ue::classify_pingpong(ho->from, ho->to, now, user.last_ho, cfg.pingpong_window_s);
          result.events.push_back({ue::EventKind::HANDOVER, now, user.id, ho->from, ho->to});
          ++counters.handovers;
          ++mlb_window.per_cell[ho->from].handover_count;
          ++mro_window.per_cell[ho->from].handover_count;
          if (pp) {
            result.events.push_back({ue::EventKind::PINGPONG, now, user.id, ho->from, ho->to});
            ++counters.pingpongs;
            ++mlb_window.per_cell[ho->from].pingpong_count;
            ++mro_window.per_cell[ho->from].pingpong_count;
          }
          user.last_ho = ue::HandoverHistoryEntry{ho->from, ho->to, now};
          handed_over[user.id] = 1;
          user.serving = ho->to;
          user.rlf_timer_ms = 0.0;
          serving[user.id] = ho->to;
          sinr[user.id] = ran::sinr_from_rsrp(cells, row, ho->to, cfg.radio);
        }
      }
      if (user.serving && user.session.phase == ue::SessionPhase::ACTIVE) {
        if (ue::check_rlf(user.rlf_timer_ms, sinr[user.id], cfg.tick_ms, cfg.rlf)) {
          const auto failed = *user.serving;
          result.events.push_back({ue::EventKind::RLF, now, user.id, failed, std::nullopt});
          ++counters.rlfs;
          ++mlb_window.per_cell[failed].rlf_count;
          ++mro_window.per_cell[failed].rlf_count;
          user.serving.reset();
          serving[user.id].reset();
          user.reattach_in_ms = cfg.rlf.reestablish_ms;
          std::fill(user.a3_timers.begin(), user.a3_timers.end(), 0.0);
        }
      }
      std::optional<int> free_prb;
      if (user.serving) free_prb = cells[*user.serving].free_prb();
      if (ue::step_session(user.session, free_prb, cfg.session, user.session_rng, dt_s) ==
          ue::SessionEvent::BLOCKED) {
        result.events.push_back({ue::EventKind::CALL_BLOCK, now, user.id, user.serving, std::nullopt});
        ++counters.call_blocks;
      }
    }

    // (4) PRB scheduling
    for (auto& list : attached) list.clear();
    std::fill(satisfaction.begin(), satisfaction.end(), std::numeric_limits<double>::quiet_NaN());
    for (const auto& user : users) {
      if (user.session.phase != ue::SessionPhase::ACTIVE) continue;
      if (user.serving) {
        attached[*user.serving].push_back(user.id);
      } else {
        satisfaction[user.id] = 0.0;
      }
    }
    for (std::size_t c = 0; c < n_cells; ++c) {
      demands.clear();
      for (auto u : attached[c])
        demands.push_back({users[u].id, users[u].required_bitrate, ran::per_prb_rate(sinr[u], cfg.radio)});
      const auto grants = ran::schedule_prbs(cells[c], demands);
      for (std::size_t i = 0; i < grants.size(); ++i) {
        double achieved = grants[i].granted * demands[i].per_prb_rate;
        if (handed_over[grants[i].user_id]) achieved *= 1.0 - interruption_share;
        satisfaction[grants[i].user_id] = std::min(1.0, achieved / demands[i].required_bitrate);
      }
    }
    TickRow row;
    row.time = now;
    row.cell_load.reserve(n_cells);
    for (const auto& c : cells) row.cell_load.push_back(c.load());
    row.user_satisfaction = satisfaction;
    row.cumulative = counters;
    result.trace.rows.push_back(std::move(row));

    // (5) control loop
    const bool mlb_due = cfg.xapps.mlb_enabled && (k + 1) % mlb_every == 0;
    const bool mro_due = cfg.xapps.mro_enabled && (k + 1) % mro_every == 0;
    if (!mlb_due && !mro_due) continue;

    if (mitigator) mitigator->purge_expired(now);
    const auto applied = xapps::applied_params(cells);
    std::vector<cm::E2ControlMessage> batch;
    for (const auto& x : cfg.xapps.order) {
      if (x == xapps::kMlb && mlb_due) {
        xapps::KpiReport report{now, mlb_window.per_cell};
        for (std::size_t c = 0; c < n_cells; ++c) report.per_cell[c].load = cells[c].load();
        auto msgs = xapps::mlb_decide(report, applied, cfg.xapps.mlb);
        batch.insert(batch.end(), msgs.begin(), msgs.end());
        mlb_window.reset(n_cells);
      } else if (x == xapps::kMro && mro_due) {
        xapps::KpiReport report{now, mro_window.per_cell};
        for (std::size_t c = 0; c < n_cells; ++c) report.per_cell[c].load = cells[c].load();
        auto msgs = xapps::mro_decide(report, applied, cfg.xapps.mro);
        batch.insert(batch.end(), msgs.begin(), msgs.end());
        mro_window.reset(n_cells);
      }
    }
    if (batch.empty()) continue;

    std::vector<cm::LoggedVerdict> verdicts;
    verdicts.reserve(batch.size());
    for (auto& msg : batch) {
      if (mitigator) {
        verdicts.push_back(mitigator->submit(std::move(msg)));
      } else {
        msg.msg_id = bypass_msg_id++;
        verdicts.push_back({std::move(msg), cm::Verdict{}});
      }
    }
    auto changes = xapps::apply_accepted(cells, verdicts);
    result.changes.insert(result.changes.end(), changes.begin(), changes.end());
  }

  if (mitigator) result.verdicts = mitigator->verdict_log();
  result.summary = summarize(result.trace, cfg.warmup_s);
  result.had_active_users = std::any_of(result.trace.rows.begin(), result.trace.rows.end(), [](const TickRow& r) {
    return std::any_of(r.user_satisfaction.begin(), r.user_satisfaction.end(),
                       [](double s) { return !std::isnan(s); });
  });
  return result;
}

}  // namespace oransim::sim
