#include "oransim/sim/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "oransim/error.hpp"

namespace oransim::sim {

using json = nlohmann::ordered_json;

namespace {

json site_json(const ran::SiteConfig& s) {
  return {{"height_m", s.height_m},
          {"eirp_dbm", s.eirp_dbm},
          {"frequency_mhz", s.frequency_mhz},
          {"bandwidth_mhz", s.bandwidth_mhz}};
}

json groups_json(const std::vector<cm::ParameterGroup>& groups) {
  json arr = json::array();
  for (const auto& g : groups) {
    json members = json::array();
    for (const auto& m : g.members) members.push_back(m.name());
    arr.push_back({{"group_id", g.group_id}, {"target_kind", cm::to_string(g.target_kind)}, {"members", members}});
  }
  return arr;
}

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

void merge_strict(json& base, const json& patch, const std::string& path) {
  if (!patch.is_object()) throw ConfigError((path.empty() ? "<root>" : path) + ": expected an object");
  for (const auto& [key, value] : patch.items()) {
    const std::string here = join(path, key);
    if (!base.contains(key)) throw ConfigError(here + ": unknown key");
    auto& slot = base[key];
    if (slot.is_object()) {
      merge_strict(slot, value, here);
    } else {
      slot = value;
    }
  }
}

/// Typed reads with path-qualified errors.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  Reader sub(std::string_view key) const { return Reader(at(key), join(path_, key)); }

  template <class T>
  T get(std::string_view key) const {
    const json& v = at(key);
    try {
      if constexpr (std::is_same_v<T, double>) {
        if (!v.is_number()) throw ConfigError(join(path_, key) + ": expected a number");
      } else if constexpr (std::is_same_v<T, bool>) {
        if (!v.is_boolean()) throw ConfigError(join(path_, key) + ": expected a boolean");
      } else if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_integer()) throw ConfigError(join(path_, key) + ": expected an integer");
        if constexpr (std::is_unsigned_v<T>) {
          if (v.is_number_integer() && !v.is_number_unsigned())
            throw ConfigError(join(path_, key) + ": expected a non-negative integer");
        }
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!v.is_string()) throw ConfigError(join(path_, key) + ": expected a string");
      }
      return v.get<T>();
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(join(path_, key) + ": " + e.what());
    }
  }

  const json& at(std::string_view key) const {
    auto it = j_.find(key);
    if (it == j_.end()) throw ConfigError(join(path_, key) + ": missing key");
    return *it;
  }

  const std::string& path() const { return path_; }

 private:
  const json& j_;
  std::string path_;
};

ran::SiteConfig read_site(const Reader& r, ran::SiteKind kind) {
  ran::SiteConfig s;
  s.kind = kind;
  s.height_m = r.get<double>("height_m");
  s.eirp_dbm = r.get<double>("eirp_dbm");
  s.frequency_mhz = r.get<double>("frequency_mhz");
  s.bandwidth_mhz = r.get<double>("bandwidth_mhz");
  return s;
}

template <std::size_t N>
std::array<double, N> read_array(const Reader& r, std::string_view key) {
  const json& v = r.at(key);
  const std::string here = join(r.path(), key);
  if (!v.is_array() || v.size() != N)
    throw ConfigError(here + ": expected an array of " + std::to_string(N) + " numbers");
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!v[i].is_number()) throw ConfigError(here + "[" + std::to_string(i) + "]: expected a number");
    out[i] = v[i].get<double>();
  }
  return out;
}

std::vector<cm::ParameterGroup> read_groups(const Reader& r) {
  const json& arr = r.at("groups");
  const std::string here = join(r.path(), "groups");
  if (!arr.is_array()) throw ConfigError(here + ": expected an array");
  std::vector<cm::ParameterGroup> groups;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string gp = here + "[" + std::to_string(i) + "]";
    if (!arr[i].is_object()) throw ConfigError(gp + ": expected an object");
    for (const auto& [k, v] : arr[i].items())
      if (k != "group_id" && k != "target_kind" && k != "members") throw ConfigError(gp + "." + k + ": unknown key");
    Reader g(arr[i], gp);
    cm::ParameterGroup pg;
    pg.group_id = g.get<std::string>("group_id");
    try {
      pg.target_kind = cm::parse_target_kind(g.get<std::string>("target_kind"));
    } catch (const ConfigError& e) {
      throw ConfigError(gp + ".target_kind: " + e.what());
    }
    const json& members = g.at("members");
    if (!members.is_array()) throw ConfigError(gp + ".members: expected an array");
    for (const auto& m : members) {
      if (!m.is_string()) throw ConfigError(gp + ".members: expected parameter names");
      pg.members.push_back(cm::ParameterId::parse(m.get<std::string>()));
    }
    groups.push_back(std::move(pg));
  }
  return groups;
}

void require(bool ok, const std::string& key, const std::string& what) {
  if (!ok) throw ConfigError(key + ": " + what);
}

}  // namespace

json to_json(const ScenarioConfig& c) {
  json j;
  j["duration_s"] = c.duration_s;
  j["tick_ms"] = c.tick_ms;
  j["seed"] = c.seed;
  j["warmup_s"] = c.warmup_s;
  j["pingpong_window_s"] = c.pingpong_window_s;
  j["handover_interruption_ms"] = c.handover_interruption_ms;
  j["cm"] = {{"mode", c.cm.mode == cm::CmMode::OFF ? "OFF" : "PRIORITIZE"},
             {"prioritized_xapp", c.cm.prioritized_xapp},
             {"effect_ttl_s", c.cm.effect_ttl},
             {"cooldown_s", c.cm.cooldown_duration},
             {"groups", groups_json(c.cm.groups)}};
  j["layout"] = {{"micro_ring_radius_m", c.layout.micro_ring_radius_m},
                 {"collocated_micro", c.layout.collocated_micro},
                 {"sector_azimuths_deg", c.layout.sector_azimuths_deg},
                 {"area_margin_m", c.layout.area_margin_m},
                 {"macro_site", site_json(c.layout.macro_site)},
                 {"micro_site", site_json(c.layout.micro_site)}};
  j["initial"] = {{"cio_db", c.initial.cio_db}, {"hh_db", c.initial.hh_db}, {"ttt_ms", c.initial.ttt_ms}};
  const auto& r = c.radio;
  j["radio"] = {{"macro_pl_intercept_db", r.macro_pl_intercept_db},
                {"macro_pl_slope_db", r.macro_pl_slope_db},
                {"micro_pl_slope_db", r.micro_pl_slope_db},
                {"micro_pl_intercept_db", r.micro_pl_intercept_db},
                {"micro_pl_freq_coeff_db", r.micro_pl_freq_coeff_db},
                {"min_distance_m", r.min_distance_m},
                {"sector_beamwidth_deg", r.sector_beamwidth_deg},
                {"sector_slope_db", r.sector_slope_db},
                {"sector_max_atten_db", r.sector_max_atten_db},
                {"noise_density_dbm_hz", r.noise_density_dbm_hz},
                {"noise_figure_db", r.noise_figure_db},
                {"prb_bandwidth_hz", r.prb_bandwidth_hz},
                {"shannon_cap", r.shannon_cap}};
  j["measurement"] = {{"fading_sigma_db", c.measurement.fading_sigma_db},
                      {"shadowing_sigma_db", c.measurement.shadowing_sigma_db},
                      {"shadowing_decorrelation_m", c.measurement.shadowing_decorrelation_m},
                      {"micro_layer_offset_db", c.measurement.micro_layer_offset_db},
                      {"parallel_kernels", c.measurement.parallel_kernels}};
  j["users"] = {{"macro_users", c.users.macro_users},
                {"micro_users_per_site", c.users.micro_users_per_site},
                {"macro_radius_m", c.users.macro_radius_m},
                {"micro_radius_m", c.users.micro_radius_m},
                {"profile_probabilities", c.users.profile_probabilities},
                {"profile_bitrates_bps", c.users.profile_bitrates_bps}};
  j["mobility"] = {{"speed_min_mps", c.mobility.speed_min_mps}, {"speed_max_mps", c.mobility.speed_max_mps}};
  j["session"] = {{"mean_idle_s", c.session.mean_idle_s},
                  {"mean_active_s", c.session.mean_active_s},
                  {"backoff_s", c.session.backoff_s}};
  j["rlf"] = {{"q_out_db", c.rlf.q_out_db},
              {"q_in_db", c.rlf.q_in_db},
              {"t_rlf_ms", c.rlf.t_rlf_ms},
              {"reestablish_ms", c.rlf.reestablish_ms}};
  const auto& x = c.xapps;
  j["xapps"] = {{"mlb_enabled", x.mlb_enabled},
                {"mro_enabled", x.mro_enabled},
                {"mlb_period_s", x.mlb_period_s},
                {"mro_period_s", x.mro_period_s},
                {"order", x.order},
                {"mlb",
                 {{"gain_db", x.mlb.gain_db},
                  {"target_load", x.mlb.target_load},
                  {"cio_min_db", x.mlb.cio_min_db},
                  {"cio_max_db", x.mlb.cio_max_db},
                  {"step_db", x.mlb.step_db}}},
                {"mro",
                 {{"pp_high", x.mro.pp_high},
                  {"pp_low", x.mro.pp_low},
                  {"hh_step_db", x.mro.hh_step_db},
                  {"hh_min_db", x.mro.hh_min_db},
                  {"hh_max_db", x.mro.hh_max_db}}}};
  return j;
}

ScenarioConfig config_from_json(const json& input) {
  json merged = to_json(ScenarioConfig{});
  merge_strict(merged, input, "");
  Reader r(merged, "");
  ScenarioConfig c;
  c.duration_s = r.get<double>("duration_s");
  c.tick_ms = r.get<double>("tick_ms");
  c.seed = r.get<std::uint64_t>("seed");
  c.warmup_s = r.get<double>("warmup_s");
  c.pingpong_window_s = r.get<double>("pingpong_window_s");
  c.handover_interruption_ms = r.get<double>("handover_interruption_ms");

  auto rc = r.sub("cm");
  const auto mode = rc.get<std::string>("mode");
  if (mode == "OFF") {
    c.cm.mode = cm::CmMode::OFF;
  } else if (mode == "PRIORITIZE") {
    c.cm.mode = cm::CmMode::PRIORITIZE;
  } else {
    throw ConfigError("cm.mode: expected OFF or PRIORITIZE, got '" + mode + "'");
  }
  c.cm.prioritized_xapp = rc.get<std::string>("prioritized_xapp");
  c.cm.effect_ttl = rc.get<double>("effect_ttl_s");
  c.cm.cooldown_duration = rc.get<double>("cooldown_s");
  c.cm.groups = read_groups(rc);

  auto rl = r.sub("layout");
  c.layout.micro_ring_radius_m = rl.get<double>("micro_ring_radius_m");
  c.layout.collocated_micro = rl.get<bool>("collocated_micro");
  c.layout.sector_azimuths_deg = rl.get<std::vector<double>>("sector_azimuths_deg");
  c.layout.area_margin_m = rl.get<double>("area_margin_m");
  c.layout.macro_site = read_site(rl.sub("macro_site"), ran::SiteKind::MACRO);
  c.layout.micro_site = read_site(rl.sub("micro_site"), ran::SiteKind::MICRO);

  auto ri = r.sub("initial");
  c.initial.cio_db = ri.get<double>("cio_db");
  c.initial.hh_db = ri.get<double>("hh_db");
  c.initial.ttt_ms = ri.get<double>("ttt_ms");

  auto rr = r.sub("radio");
  c.radio.macro_pl_intercept_db = rr.get<double>("macro_pl_intercept_db");
  c.radio.macro_pl_slope_db = rr.get<double>("macro_pl_slope_db");
  c.radio.micro_pl_slope_db = rr.get<double>("micro_pl_slope_db");
  c.radio.micro_pl_intercept_db = rr.get<double>("micro_pl_intercept_db");
  c.radio.micro_pl_freq_coeff_db = rr.get<double>("micro_pl_freq_coeff_db");
  c.radio.min_distance_m = rr.get<double>("min_distance_m");
  c.radio.sector_beamwidth_deg = rr.get<double>("sector_beamwidth_deg");
  c.radio.sector_slope_db = rr.get<double>("sector_slope_db");
  c.radio.sector_max_atten_db = rr.get<double>("sector_max_atten_db");
  c.radio.noise_density_dbm_hz = rr.get<double>("noise_density_dbm_hz");
  c.radio.noise_figure_db = rr.get<double>("noise_figure_db");
  c.radio.prb_bandwidth_hz = rr.get<double>("prb_bandwidth_hz");
  c.radio.shannon_cap = rr.get<double>("shannon_cap");

  auto rm = r.sub("measurement");
  c.measurement.fading_sigma_db = rm.get<double>("fading_sigma_db");
  c.measurement.shadowing_sigma_db = rm.get<double>("shadowing_sigma_db");
  c.measurement.shadowing_decorrelation_m = rm.get<double>("shadowing_decorrelation_m");
  c.measurement.micro_layer_offset_db = rm.get<double>("micro_layer_offset_db");
  c.measurement.parallel_kernels = rm.get<bool>("parallel_kernels");

  auto ru = r.sub("users");
  c.users.macro_users = ru.get<int>("macro_users");
  c.users.micro_users_per_site = ru.get<int>("micro_users_per_site");
  c.users.macro_radius_m = ru.get<double>("macro_radius_m");
  c.users.micro_radius_m = ru.get<double>("micro_radius_m");
  c.users.profile_probabilities = read_array<3>(ru, "profile_probabilities");
  c.users.profile_bitrates_bps = read_array<3>(ru, "profile_bitrates_bps");

  auto rmob = r.sub("mobility");
  c.mobility.speed_min_mps = rmob.get<double>("speed_min_mps");
  c.mobility.speed_max_mps = rmob.get<double>("speed_max_mps");

  auto rs = r.sub("session");
  c.session.mean_idle_s = rs.get<double>("mean_idle_s");
  c.session.mean_active_s = rs.get<double>("mean_active_s");
  c.session.backoff_s = rs.get<double>("backoff_s");

  auto rf = r.sub("rlf");
  c.rlf.q_out_db = rf.get<double>("q_out_db");
  c.rlf.q_in_db = rf.get<double>("q_in_db");
  c.rlf.t_rlf_ms = rf.get<double>("t_rlf_ms");
  c.rlf.reestablish_ms = rf.get<double>("reestablish_ms");

  auto rx = r.sub("xapps");
  c.xapps.mlb_enabled = rx.get<bool>("mlb_enabled");
  c.xapps.mro_enabled = rx.get<bool>("mro_enabled");
  c.xapps.mlb_period_s = rx.get<double>("mlb_period_s");
  c.xapps.mro_period_s = rx.get<double>("mro_period_s");
  c.xapps.order = rx.get<std::vector<std::string>>("order");
  auto rmlb = rx.sub("mlb");
  c.xapps.mlb.gain_db = rmlb.get<double>("gain_db");
  c.xapps.mlb.target_load = rmlb.get<double>("target_load");
  c.xapps.mlb.cio_min_db = rmlb.get<double>("cio_min_db");
  c.xapps.mlb.cio_max_db = rmlb.get<double>("cio_max_db");
  c.xapps.mlb.step_db = rmlb.get<double>("step_db");
  auto rmro = rx.sub("mro");
  c.xapps.mro.pp_high = rmro.get<double>("pp_high");
  c.xapps.mro.pp_low = rmro.get<double>("pp_low");
  c.xapps.mro.hh_step_db = rmro.get<double>("hh_step_db");
  c.xapps.mro.hh_min_db = rmro.get<double>("hh_min_db");
  c.xapps.mro.hh_max_db = rmro.get<double>("hh_max_db");

  c.validate();
  return c;
}

namespace {

bool divides(double period_s, double tick_ms) {
  const double ticks = period_s * 1000.0 / tick_ms;
  return ticks >= 1.0 && std::abs(ticks - std::round(ticks)) < 1e-9;
}

bool on_grid(double v, double step) {
  const double q = v / step;
  return std::abs(q - std::round(q)) < 1e-9;
}

}  // namespace

void ScenarioConfig::validate() const {
  require(duration_s >= 0.0, "duration_s", "must be >= 0");
  require(tick_ms > 0.0, "tick_ms", "must be > 0");
  require(warmup_s >= 0.0, "warmup_s", "must be >= 0");
  require(pingpong_window_s >= 0.0, "pingpong_window_s", "must be >= 0");
  require(handover_interruption_ms >= 0.0 && handover_interruption_ms <= tick_ms, "handover_interruption_ms",
          "must lie in [0, tick_ms]");
  require(divides(xapps.mlb_period_s, tick_ms), "xapps.mlb_period_s", "must be a positive multiple of tick_ms");
  require(divides(xapps.mro_period_s, tick_ms), "xapps.mro_period_s", "must be a positive multiple of tick_ms");

  const std::vector<std::string> known = {"MLB", "MRO"};
  require(!xapps.order.empty(), "xapps.order", "must not be empty");
  for (const auto& x : xapps.order)
    require(x == "MLB" || x == "MRO", "xapps.order", "unknown xApp '" + x + "'");
  require(xapps.order.size() == 2 && xapps.order[0] != xapps.order[1], "xapps.order",
          "must list MLB and MRO exactly once");
  if (cm.mode == cm::CmMode::PRIORITIZE)
    require(cm.prioritized_xapp == "MLB" || cm.prioritized_xapp == "MRO", "cm.prioritized_xapp",
            "must name MLB or MRO");
  try {
    cm.validate(known);
  } catch (const ConfigError& e) {
    throw ConfigError(std::string(e.what()));
  }

  require(layout.micro_ring_radius_m > 0.0, "layout.micro_ring_radius_m", "must be > 0");
  require(layout.area_margin_m >= 0.0, "layout.area_margin_m", "must be >= 0");
  require(!layout.sector_azimuths_deg.empty(), "layout.sector_azimuths_deg", "must not be empty");
  for (const auto& [site, name] :
       {std::pair{&layout.macro_site, "layout.macro_site"}, std::pair{&layout.micro_site, "layout.micro_site"}}) {
    try {
      (void)ran::prb_count(site->bandwidth_mhz);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(name) + "." + e.what());
    }
    require(site->frequency_mhz > 0.0, std::string(name) + ".frequency_mhz", "must be > 0");
  }

  require(xapps::is_ttt_step(initial.ttt_ms), "initial.ttt_ms",
          "value " + std::to_string(initial.ttt_ms) + " is not in the TTT step set");
  require(initial.cio_db >= xapps.mlb.cio_min_db && initial.cio_db <= xapps.mlb.cio_max_db, "initial.cio_db",
          "must lie in [cio_min_db, cio_max_db]");
  require(initial.hh_db >= xapps.mro.hh_min_db && initial.hh_db <= xapps.mro.hh_max_db, "initial.hh_db",
          "must lie in [hh_min_db, hh_max_db]");

  require(radio.min_distance_m > 0.0, "radio.min_distance_m", "must be > 0");
  require(radio.sector_beamwidth_deg > 0.0, "radio.sector_beamwidth_deg", "must be > 0");
  require(radio.prb_bandwidth_hz > 0.0, "radio.prb_bandwidth_hz", "must be > 0");
  require(radio.shannon_cap > 0.0, "radio.shannon_cap", "must be > 0");

  require(measurement.fading_sigma_db >= 0.0, "measurement.fading_sigma_db", "must be >= 0");
  require(measurement.shadowing_sigma_db >= 0.0, "measurement.shadowing_sigma_db", "must be >= 0");
  require(measurement.shadowing_decorrelation_m > 0.0, "measurement.shadowing_decorrelation_m", "must be > 0");

  require(users.macro_users >= 0, "users.macro_users", "must be >= 0");
  require(users.micro_users_per_site >= 0, "users.micro_users_per_site", "must be >= 0");
  require(users.macro_radius_m > 0.0, "users.macro_radius_m", "must be > 0");
  require(users.micro_radius_m > 0.0, "users.micro_radius_m", "must be > 0");
  double psum = 0.0;
  for (double p : users.profile_probabilities) {
    require(p >= 0.0, "users.profile_probabilities", "entries must be >= 0");
    psum += p;
  }
  require(std::abs(psum - 1.0) < 1e-9, "users.profile_probabilities", "must sum to 1");
  for (double b : users.profile_bitrates_bps) require(b > 0.0, "users.profile_bitrates_bps", "entries must be > 0");

  require(mobility.speed_min_mps > 0.0 && mobility.speed_max_mps >= mobility.speed_min_mps, "mobility.speed_max_mps",
          "need 0 < speed_min_mps <= speed_max_mps");
  require(session.mean_idle_s > 0.0, "session.mean_idle_s", "must be > 0");
  require(session.mean_active_s > 0.0, "session.mean_active_s", "must be > 0");
  require(session.backoff_s >= 0.0, "session.backoff_s", "must be >= 0");
  require(rlf.q_in_db >= rlf.q_out_db, "rlf.q_in_db", "must be >= q_out_db");
  require(rlf.t_rlf_ms > 0.0, "rlf.t_rlf_ms", "must be > 0");
  require(rlf.reestablish_ms >= 0.0, "rlf.reestablish_ms", "must be >= 0");

  require(xapps.mlb.gain_db >= 0.0, "xapps.mlb.gain_db", "must be >= 0");
  require(xapps.mlb.target_load >= 0.0 && xapps.mlb.target_load <= 1.0, "xapps.mlb.target_load", "must lie in [0, 1]");
  require(xapps.mlb.cio_min_db <= xapps.mlb.cio_max_db, "xapps.mlb.cio_max_db", "must be >= cio_min_db");
  require(xapps.mlb.step_db > 0.0, "xapps.mlb.step_db", "must be > 0");
  require(on_grid(initial.cio_db, xapps.mlb.step_db), "initial.cio_db", "must be a multiple of xapps.mlb.step_db");
  require(xapps.mro.pp_low <= xapps.mro.pp_high, "xapps.mro.pp_low", "must be <= pp_high");
  require(xapps.mro.hh_step_db > 0.0, "xapps.mro.hh_step_db", "must be > 0");
  require(xapps.mro.hh_min_db <= xapps.mro.hh_max_db, "xapps.mro.hh_max_db", "must be >= hh_min_db");
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::OFF: return "off";
    case Variant::PRIO_MLB: return "prio-mlb";
    case Variant::PRIO_MRO: return "prio-mro";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  if (name == "off") return Variant::OFF;
  if (name == "prio-mlb") return Variant::PRIO_MLB;
  if (name == "prio-mro") return Variant::PRIO_MRO;
  throw ConfigError("variant: expected off, prio-mlb or prio-mro, got '" + std::string(name) + "'");
}

ScenarioConfig with_variant(ScenarioConfig cfg, Variant v) {
  switch (v) {
    case Variant::OFF:
      cfg.cm.mode = cm::CmMode::OFF;
      break;
    case Variant::PRIO_MLB:
      cfg.cm.mode = cm::CmMode::PRIORITIZE;
      cfg.cm.prioritized_xapp = "MLB";
      break;
    case Variant::PRIO_MRO:
      cfg.cm.mode = cm::CmMode::PRIORITIZE;
      cfg.cm.prioritized_xapp = "MRO";
      break;
  }
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": parse error: " + e.what());
  }
  return config_from_json(j);
}

ScenarioConfig apply_overrides(const ScenarioConfig& cfg,
                               const std::vector<std::pair<std::string, std::string>>& overrides) {
  json j = to_json(cfg);
  for (const auto& [key, raw] : overrides) {
    json* node = &j;
    std::string path;
    std::size_t start = 0;
    while (true) {
      const auto dot = key.find('.', start);
      const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
      path = join(path, part);
      if (!node->is_object() || !node->contains(part)) throw ConfigError(path + ": unknown key");
      node = &(*node)[part];
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
    json value;
    try {
      value = json::parse(raw);
    } catch (const nlohmann::json::parse_error&) {
      value = raw;
    }
    *node = value;
  }
  return config_from_json(j);
}

}  // namespace oransim::sim
