#include "oransim/ran/layout.hpp"

#include <cmath>
#include <numbers>

namespace oransim::ran {

std::vector<SiteConfig> build_sites(const LayoutParams& layout) {
  std::vector<SiteConfig> sites;
  SiteConfig macro = layout.macro_site;
  macro.kind = SiteKind::MACRO;
  sites.push_back(macro);
  SiteConfig micro = layout.micro_site;
  micro.kind = SiteKind::MICRO;
  if (layout.collocated_micro) {
    micro.position = macro.position;
    sites.push_back(micro);
  }
  for (int k = 0; k < 6; ++k) {
    const double angle = k * std::numbers::pi / 3.0;
    micro.position = {macro.position.x + layout.micro_ring_radius_m * std::cos(angle),
                      macro.position.y + layout.micro_ring_radius_m * std::sin(angle)};
    sites.push_back(micro);
  }
  return sites;
}

std::vector<CellState> build_cells(const LayoutParams& layout, const InitialCellParams& init) {
  std::vector<CellState> cells;
  std::uint32_t id = 0;
  for (const auto& site : build_sites(layout)) {
    const int n_prb = prb_count(site.bandwidth_mhz);
    for (double az : layout.sector_azimuths_deg) {
      CellState c;
      c.cell_id = id++;
      c.site = site;
      c.azimuth_deg = az;
      c.n_prb = n_prb;
      c.cio_db = init.cio_db;
      c.hh_db = init.hh_db;
      c.ttt_ms = init.ttt_ms;
      cells.push_back(c);
    }
  }
  return cells;
}

Bounds simulation_bounds(const LayoutParams& layout) {
  const auto& c = layout.macro_site.position;
  const double half = layout.micro_ring_radius_m + layout.area_margin_m;
  return {c.x - half, c.x + half, c.y - half, c.y + half};
}

}  // namespace oransim::ran
