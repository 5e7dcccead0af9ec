#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "oransim/cm/conflict_mitigation.hpp"
#include "oransim/ran/layout.hpp"
#include "oransim/ran/radio.hpp"
#include "oransim/ue/handover.hpp"
#include "oransim/ue/mobility.hpp"
#include "oransim/ue/session.hpp"
#include "oransim/xapps/xapps.hpp"

namespace oransim::sim {

struct UserParams {
  int macro_users = 100;
  int micro_users_per_site = 30;
  double macro_radius_m = 750.0;
  double micro_radius_m = 200.0;
  std::array<double, 3> profile_probabilities = {0.4, 0.3, 0.3};  // low, medium, high
  std::array<double, 3> profile_bitrates_bps = {2.0e6, 6.0e6, 12.0e6};

  friend bool operator==(const UserParams&, const UserParams&) = default;
};

/// Measurement model on top of the deterministic path loss.
struct MeasurementParams {
  double fading_sigma_db = 0.0;
  double shadowing_sigma_db = 6.0;  // per (user, cell) link; 0 disables
  double shadowing_decorrelation_m = 10.0;
  double micro_layer_offset_db = 32.0;  // added to micro cells in handover ranking
  bool parallel_kernels = true;

  friend bool operator==(const MeasurementParams&, const MeasurementParams&) = default;
};

struct XAppParams {
  bool mlb_enabled = true;
  bool mro_enabled = true;
  double mlb_period_s = 1.0;
  double mro_period_s = 1.0;
  std::vector<std::string> order = {"MLB", "MRO"};
  xapps::MlbParams mlb;
  xapps::MroParams mro;

  friend bool operator==(const XAppParams&, const XAppParams&) = default;
};

struct ScenarioConfig {
  double duration_s = 200.0;
  double tick_ms = 100.0;
  std::uint64_t seed = 1;
  double warmup_s = 10.0;
  double pingpong_window_s = 3.0;
  double handover_interruption_ms = 50.0;
  cm::CmConfig cm;
  ran::LayoutParams layout;
  ran::InitialCellParams initial;
  ran::RadioParams radio;
  MeasurementParams measurement;
  UserParams users;
  ue::MobilityParams mobility;
  ue::SessionParams session;
  ue::RlfParams rlf;
  XAppParams xapps;

  /// Throws ConfigError naming the offending key.
  void validate() const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Named operating variants of the Conflict Mitigation component.
enum class Variant : std::uint8_t { OFF, PRIO_MLB, PRIO_MRO };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);
ScenarioConfig with_variant(ScenarioConfig cfg, Variant v);

nlohmann::ordered_json to_json(const ScenarioConfig& cfg);

/// Fills defaults for missing keys, rejects unknown keys, validates.
ScenarioConfig config_from_json(const nlohmann::ordered_json& j);

ScenarioConfig load_config(const std::filesystem::path& path);

/// Applies dotted-path overrides ("radio.noise_figure_db=7"). The value is
/// parsed as JSON when possible and as a string otherwise.
ScenarioConfig apply_overrides(const ScenarioConfig& cfg,
                               const std::vector<std::pair<std::string, std::string>>& overrides);

}  // namespace oransim::sim
