#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace oransim::ran {

struct Position {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

double distance(Position a, Position b);

enum class SiteKind : std::uint8_t { MACRO, MICRO };

struct SiteConfig {
  Position position;
  double height_m = 0.0;
  double eirp_dbm = 0.0;
  double frequency_mhz = 0.0;
  double bandwidth_mhz = 0.0;
  SiteKind kind = SiteKind::MACRO;

  static SiteConfig macro(Position at) { return {at, 28.0, 42.0, 800.0, 10.0, SiteKind::MACRO}; }
  static SiteConfig micro(Position at) { return {at, 12.0, 26.0, 2100.0, 20.0, SiteKind::MICRO}; }

  friend bool operator==(const SiteConfig&, const SiteConfig&) = default;
};

/// One 120-degree sector and its handover parameters.
struct CellState {
  std::uint32_t cell_id = 0;
  SiteConfig site;
  double azimuth_deg = 0.0;
  int n_prb = 0;
  int assigned_prb = 0;
  double cio_db = 0.0;
  double ttt_ms = 160.0;
  double hh_db = 2.0;

  double load() const { return n_prb > 0 ? static_cast<double>(assigned_prb) / n_prb : 0.0; }
  int free_prb() const { return n_prb - assigned_prb; }
};

/// Model coefficients. Defaults: 36.942-style urban macro curve, UMi NLOS for
/// micro sites, 3GPP-style sector pattern, truncated Shannon link adaptation.
struct RadioParams {
  double macro_pl_intercept_db = 120.9;  // at 1 km
  double macro_pl_slope_db = 37.6;       // per decade of km
  double micro_pl_slope_db = 36.7;       // per decade of m
  double micro_pl_intercept_db = 22.7;
  double micro_pl_freq_coeff_db = 26.0;  // times log10(f_GHz)
  double min_distance_m = 10.0;
  double sector_beamwidth_deg = 70.0;
  double sector_slope_db = 12.0;
  double sector_max_atten_db = 25.0;
  double noise_density_dbm_hz = -174.0;
  double noise_figure_db = 9.0;
  double prb_bandwidth_hz = 180000.0;
  double shannon_cap = 6.0;  // bits/s/Hz

  friend bool operator==(const RadioParams&, const RadioParams&) = default;
};

/// Standard LTE grid: 10 MHz -> 50 PRBs, 20 MHz -> 100 PRBs. Throws ConfigError otherwise.
int prb_count(double bandwidth_mhz);

double path_loss(const SiteConfig& site, Position user, const RadioParams& p = {});

/// Horizontal sector pattern: -min(slope * (offset / beamwidth)^2, max_atten).
double sector_gain(const CellState& cell, Position user, const RadioParams& p = {});

/// Per-PRB reference signal power at the user, dBm.
double rsrp(const CellState& cell, Position user, const RadioParams& p = {});

/// Thermal noise per PRB including the noise figure, dBm.
double noise_per_prb_dbm(const RadioParams& p = {});

/// SINR for `serving` given per-cell received powers (dBm, indexed like
/// `cells`). Only cells on the serving carrier interfere.
double sinr_from_rsrp(std::span<const CellState> cells, std::span<const double> rsrp_dbm,
                      std::size_t serving, const RadioParams& p = {});

double sinr(const CellState& serving, Position user, std::span<const CellState> all_cells,
            const RadioParams& p = {});

/// Truncated Shannon rate of one PRB, bits/s.
double per_prb_rate(double sinr_db, const RadioParams& p = {});

double db_to_linear(double db);
double linear_to_db(double lin);

struct PrbDemand {
  std::uint32_t user_id = 0;
  double required_bitrate = 0.0;
  double per_prb_rate = 0.0;
};

struct PrbGrant {
  std::uint32_t user_id = 0;
  int requested = 0;
  int granted = 0;
};

/// Round-robin, one PRB at a time in demand order, until n_prb is exhausted or
/// every request is met. Updates cell.assigned_prb. A user whose per-PRB rate
/// is not positive requests the whole carrier.
std::vector<PrbGrant> schedule_prbs(CellState& cell, std::span<const PrbDemand> demands);

}  // namespace oransim::ran
