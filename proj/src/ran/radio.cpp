#include "oransim/ran/radio.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oransim/error.hpp"

namespace oransim::ran {

double distance(Position a, Position b) { return std::hypot(a.x - b.x, a.y - b.y); }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

int prb_count(double bandwidth_mhz) {
  if (bandwidth_mhz == 10.0) return 50;
  if (bandwidth_mhz == 20.0) return 100;
  throw ConfigError("bandwidth_mhz: unsupported bandwidth " + std::to_string(bandwidth_mhz) +
                    " (expected 10 or 20)");
}

double path_loss(const SiteConfig& site, Position user, const RadioParams& p) {
  const double d = std::max(distance(site.position, user), p.min_distance_m);
  if (site.kind == SiteKind::MACRO)
    return p.macro_pl_intercept_db + p.macro_pl_slope_db * std::log10(d / 1000.0);
  return p.micro_pl_slope_db * std::log10(d) + p.micro_pl_intercept_db +
         p.micro_pl_freq_coeff_db * std::log10(site.frequency_mhz / 1000.0);
}

double sector_gain(const CellState& cell, Position user, const RadioParams& p) {
  const double dx = user.x - cell.site.position.x;
  const double dy = user.y - cell.site.position.y;
  if (dx == 0.0 && dy == 0.0) return 0.0;
  const double bearing = std::atan2(dy, dx) * 180.0 / std::numbers::pi;
  double offset = std::fmod(std::abs(bearing - cell.azimuth_deg), 360.0);
  if (offset > 180.0) offset = 360.0 - offset;
  const double ratio = offset / p.sector_beamwidth_deg;
  return -std::min(p.sector_slope_db * ratio * ratio, p.sector_max_atten_db);
}

double rsrp(const CellState& cell, Position user, const RadioParams& p) {
  return cell.site.eirp_dbm - 10.0 * std::log10(static_cast<double>(cell.n_prb)) +
         sector_gain(cell, user, p) - path_loss(cell.site, user, p);
}

double noise_per_prb_dbm(const RadioParams& p) {
  return p.noise_density_dbm_hz + 10.0 * std::log10(p.prb_bandwidth_hz) + p.noise_figure_db;
}

double sinr_from_rsrp(std::span<const CellState> cells, std::span<const double> rsrp_dbm,
                      std::size_t serving, const RadioParams& p) {
  const double freq = cells[serving].site.frequency_mhz;
  double interference = 0.0;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (c == serving || cells[c].site.frequency_mhz != freq) continue;
    interference += db_to_linear(rsrp_dbm[c]);
  }
  const double signal = db_to_linear(rsrp_dbm[serving]);
  return linear_to_db(signal / (db_to_linear(noise_per_prb_dbm(p)) + interference));
}

double sinr(const CellState& serving, Position user, std::span<const CellState> all_cells,
            const RadioParams& p) {
  std::vector<double> levels(all_cells.size());
  std::size_t idx = all_cells.size();
  for (std::size_t c = 0; c < all_cells.size(); ++c) {
    levels[c] = rsrp(all_cells[c], user, p);
    if (all_cells[c].cell_id == serving.cell_id) idx = c;
  }
  if (idx == all_cells.size()) throw RunError("sinr: serving cell not in cell list");
  return sinr_from_rsrp(all_cells, levels, idx, p);
}

double per_prb_rate(double sinr_db, const RadioParams& p) {
  const double se = std::min(p.shannon_cap, std::log2(1.0 + db_to_linear(sinr_db)));
  return p.prb_bandwidth_hz * se;
}

std::vector<PrbGrant> schedule_prbs(CellState& cell, std::span<const PrbDemand> demands) {
  std::vector<PrbGrant> grants;
  grants.reserve(demands.size());
  long total_requested = 0;
  for (const auto& d : demands) {
    int req = cell.n_prb;
    if (d.per_prb_rate > 0.0) {
      const double need = std::ceil(d.required_bitrate / d.per_prb_rate);
      req = static_cast<int>(std::min<double>(need, cell.n_prb));
    }
    req = std::max(req, 0);
    grants.push_back({d.user_id, req, 0});
    total_requested += req;
  }

  if (total_requested <= cell.n_prb) {
    for (auto& g : grants) g.granted = g.requested;
    cell.assigned_prb = static_cast<int>(total_requested);
    return grants;
  }

  // Round-robin one PRB at a time is equivalent to water-filling up to the
  // level L where sum(min(req, L)) <= n_prb < sum(min(req, L + 1)), with the
  // remainder going to the earliest users still below their request.
  auto filled = [&](int level) {
    long s = 0;
    for (const auto& g : grants) s += std::min(g.requested, level);
    return s;
  };
  int lo = 0, hi = cell.n_prb;
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (filled(mid) <= cell.n_prb) lo = mid; else hi = mid - 1;
  }
  long remainder = cell.n_prb - filled(lo);
  for (auto& g : grants) {
    g.granted = std::min(g.requested, lo);
    if (remainder > 0 && g.requested > lo) {
      ++g.granted;
      --remainder;
    }
  }
  cell.assigned_prb = cell.n_prb;
  return grants;
}

}  // namespace oransim::ran
