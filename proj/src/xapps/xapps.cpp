#include "oransim/xapps/xapps.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "oransim/error.hpp"

namespace oransim::xapps {

namespace {

constexpr std::array<double, 16> kTttSteps = {0,   40,  64,  80,  100, 128,  160,  256,
                                              320, 480, 512, 640, 1024, 1280, 2560, 5120};

cm::E2ControlMessage make_msg(std::string_view xapp, std::uint32_t cell, cm::ParameterId p, double value,
                              double time) {
  cm::E2ControlMessage m;
  m.xapp_id = std::string(xapp);
  m.target = cm::ControlTarget::cell(cell);
  m.parameter = std::move(p);
  m.value = value;
  m.issued_at = time;
  return m;
}

}  // namespace

std::vector<AppliedParams> applied_params(std::span<const ran::CellState> cells) {
  std::vector<AppliedParams> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back({c.cio_db, c.ttt_ms, c.hh_db});
  return out;
}

XAppDescriptor mlb_descriptor(double period_s) {
  return {std::string(kMlb), period_s, {cm::ParameterId::cio()}};
}

XAppDescriptor mro_descriptor(double period_s) {
  return {std::string(kMro), period_s, {cm::ParameterId::ttt(), cm::ParameterId::hh()}};
}

double mlb_target_cio(double load, const MlbParams& params) {
  const double raw = std::clamp(params.gain_db * (load - params.target_load), params.cio_min_db,
                                params.cio_max_db);
  return std::round(raw / params.step_db) * params.step_db + 0.0;  // +0.0 folds -0 into 0
}

std::vector<cm::E2ControlMessage> mlb_decide(const KpiReport& report, std::span<const AppliedParams> applied,
                                             const MlbParams& params) {
  std::vector<cm::E2ControlMessage> out;
  for (std::uint32_t c = 0; c < report.per_cell.size(); ++c) {
    const double cio = mlb_target_cio(report.per_cell[c].load, params);
    if (cio != applied[c].cio_db) out.push_back(make_msg(kMlb, c, cm::ParameterId::cio(), cio, report.time));
  }
  return out;
}

std::span<const double> ttt_steps() { return kTttSteps; }

bool is_ttt_step(double ttt_ms) {
  return std::find(kTttSteps.begin(), kTttSteps.end(), ttt_ms) != kTttSteps.end();
}

double ttt_step_up(double ttt_ms) {
  auto it = std::upper_bound(kTttSteps.begin(), kTttSteps.end(), ttt_ms);
  return it == kTttSteps.end() ? kTttSteps.back() : *it;
}

double ttt_step_down(double ttt_ms) {
  auto it = std::lower_bound(kTttSteps.begin(), kTttSteps.end(), ttt_ms);
  return it == kTttSteps.begin() ? kTttSteps.front() : *std::prev(it);
}

std::vector<cm::E2ControlMessage> mro_decide(const KpiReport& report, std::span<const AppliedParams> applied,
                                             const MroParams& params) {
  std::vector<cm::E2ControlMessage> out;
  for (std::uint32_t c = 0; c < report.per_cell.size(); ++c) {
    const auto& k = report.per_cell[c];
    if (k.handover_count <= 0) continue;
    const double pp_ratio = static_cast<double>(k.pingpong_count) / k.handover_count;
    double ttt = applied[c].ttt_ms;
    double hh = applied[c].hh_db;
    if (pp_ratio > params.pp_high) {
      ttt = ttt_step_up(ttt);
      hh = std::min(params.hh_max_db, hh + params.hh_step_db);
    } else if (pp_ratio < params.pp_low && k.rlf_count > 0) {
      ttt = ttt_step_down(ttt);
      hh = std::max(params.hh_min_db, hh - params.hh_step_db);
    } else {
      continue;
    }
    if (ttt != applied[c].ttt_ms) out.push_back(make_msg(kMro, c, cm::ParameterId::ttt(), ttt, report.time));
    if (hh != applied[c].hh_db) out.push_back(make_msg(kMro, c, cm::ParameterId::hh(), hh, report.time));
  }
  return out;
}

std::vector<ParameterChange> apply_accepted(std::span<ran::CellState> cells,
                                            std::span<const cm::LoggedVerdict> verdicts) {
  std::vector<ParameterChange> changes;
  for (const auto& [msg, v] : verdicts) {
    if (!v.accepted()) continue;
    if (msg.target.kind != cm::TargetKind::CELL || msg.target.id >= cells.size())
      throw RunError("apply_accepted: unknown control target " + std::string(cm::to_string(msg.target.kind)) +
                     "/" + std::to_string(msg.target.id));
    auto& cell = cells[msg.target.id];
    double* slot = nullptr;
    switch (msg.parameter.kind) {
      case cm::ParameterId::Kind::CIO: slot = &cell.cio_db; break;
      case cm::ParameterId::Kind::TTT: slot = &cell.ttt_ms; break;
      case cm::ParameterId::Kind::HH: slot = &cell.hh_db; break;
      default:
        throw RunError("apply_accepted: parameter " + msg.parameter.name() + " is not controllable");
    }
    if (*slot != msg.value) {
      changes.push_back({msg.issued_at, msg.target.id, msg.parameter, *slot, msg.value, msg.msg_id});
      *slot = msg.value;
    }
  }
  return changes;
}

}  // namespace oransim::xapps
