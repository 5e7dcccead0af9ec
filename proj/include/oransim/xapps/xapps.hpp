#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "oransim/cm/conflict_mitigation.hpp"
#include "oransim/ran/radio.hpp"

namespace oransim::xapps {

inline constexpr std::string_view kMlb = "MLB";
inline constexpr std::string_view kMro = "MRO";

struct CellKpi {
  double load = 0.0;  // assigned_prb / n_prb at report time
  int handover_count = 0;
  int pingpong_count = 0;
  int rlf_count = 0;
};

/// E2 report as seen by the xApps: one entry per cell id, window counts cover
/// the last control period only.
struct KpiReport {
  double time = 0.0;
  std::vector<CellKpi> per_cell;
};

/// Applied (current) handover parameters of every cell, as xApps observe them.
struct AppliedParams {
  double cio_db = 0.0;
  double ttt_ms = 0.0;
  double hh_db = 0.0;
};

std::vector<AppliedParams> applied_params(std::span<const ran::CellState> cells);

struct XAppDescriptor {
  std::string xapp_id;
  double control_period_s = 1.0;
  std::vector<cm::ParameterId> controlled_parameters;
};

XAppDescriptor mlb_descriptor(double period_s = 1.0);
XAppDescriptor mro_descriptor(double period_s = 1.0);

struct MlbParams {
  double gain_db = 10.0;  // dB per unit load
  double target_load = 0.7;
  double cio_min_db = -6.0;
  double cio_max_db = 6.0;
  double step_db = 0.5;

  friend bool operator==(const MlbParams&, const MlbParams&) = default;
};

/// Proportional load -> CIO law, clamped and quantized.
double mlb_target_cio(double load, const MlbParams& params);

std::vector<cm::E2ControlMessage> mlb_decide(const KpiReport& report, std::span<const AppliedParams> applied,
                                             const MlbParams& params);

/// Standard A3 time-to-trigger values, ms.
std::span<const double> ttt_steps();
bool is_ttt_step(double ttt_ms);
double ttt_step_up(double ttt_ms);
double ttt_step_down(double ttt_ms);

struct MroParams {
  double pp_high = 0.5;
  double pp_low = 0.2;
  double hh_step_db = 0.5;
  double hh_min_db = 0.0;
  double hh_max_db = 10.0;

  friend bool operator==(const MroParams&, const MroParams&) = default;
};

std::vector<cm::E2ControlMessage> mro_decide(const KpiReport& report, std::span<const AppliedParams> applied,
                                             const MroParams& params);

struct ParameterChange {
  double time = 0.0;
  std::uint32_t cell_id = 0;
  cm::ParameterId parameter;
  double old_value = 0.0;
  double new_value = 0.0;
  std::uint64_t msg_id = 0;
};

/// Writes the ACCEPTED entries into their target cells and returns what
/// changed. Throws RunError for a target that is not a known cell.
std::vector<ParameterChange> apply_accepted(std::span<ran::CellState> cells,
                                            std::span<const cm::LoggedVerdict> verdicts);

}  // namespace oransim::xapps
