#pragma once

#include <vector>

#include "oransim/ran/radio.hpp"

namespace oransim::ran {

struct Bounds {
  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;

  bool contains(Position p) const {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }
};

struct LayoutParams {
  double micro_ring_radius_m = 500.0;
  bool collocated_micro = true;
  std::vector<double> sector_azimuths_deg = {0.0, 120.0, 240.0};
  SiteConfig macro_site = SiteConfig::macro({0.0, 0.0});
  SiteConfig micro_site = SiteConfig::micro({0.0, 0.0});  // position ignored
  double area_margin_m = 250.0;

  friend bool operator==(const LayoutParams&, const LayoutParams&) = default;
};

struct InitialCellParams {
  double cio_db = 0.0;
  double hh_db = 2.0;
  double ttt_ms = 160.0;

  friend bool operator==(const InitialCellParams&, const InitialCellParams&) = default;
};

/// Sites in cell-id order: the macro site, the collocated micro (if any), then
/// the ring of six micros at 60-degree increments starting on the +x axis.
std::vector<SiteConfig> build_sites(const LayoutParams& layout);

/// Three (or sector_azimuths_deg.size()) cells per site, ids assigned in site order.
std::vector<CellState> build_cells(const LayoutParams& layout, const InitialCellParams& init);

/// Square circumscribing the micro ring plus the margin.
Bounds simulation_bounds(const LayoutParams& layout);

}  // namespace oransim::ran
