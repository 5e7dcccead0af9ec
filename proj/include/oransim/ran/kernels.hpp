#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "oransim/ran/radio.hpp"

namespace oransim::ran {

/// Dense users x cells matrix, row-major by user.
struct RsrpMatrix {
  std::size_t users = 0;
  std::size_t cells = 0;
  std::vector<double> data;

  void resize(std::size_t u, std::size_t c) {
    users = u;
    cells = c;
    data.assign(u * c, 0.0);
  }
  double& at(std::size_t u, std::size_t c) { return data[u * cells + c]; }
  double at(std::size_t u, std::size_t c) const { return data[u * cells + c]; }
  std::span<const double> row(std::size_t u) const { return {data.data() + u * cells, cells}; }
};

struct FadingParams {
  double sigma_db = 0.0;  // i.i.d. per (user, cell, tick); 0 disables
  std::uint64_t seed = 0;
};

/// Log-normal shadowing per (user, cell) link, decorrelating with distance
/// travelled: s' = rho * s + sqrt(1 - rho^2) * sigma * z, rho = exp(-d / d_corr).
struct ShadowingParams {
  double sigma_db = 0.0;  // 0 disables
  double decorrelation_m = 50.0;
  std::uint64_t seed = 0;
};

/// Counter-based standard normal sample for (seed, tick, user, cell). The
/// value depends only on its key, so every variant of a run sees the same draws.
double fading_sample(std::uint64_t seed, std::uint64_t tick, std::uint64_t user, std::uint64_t cell);

struct MeasurementInput {
  std::span<const CellState> cells;
  std::span<const Position> positions;
  std::span<const double> shadowing_db;  // users x cells, or empty
  FadingParams fading;
  std::uint64_t tick = 0;
  RadioParams radio;
};

/// Initial shadowing state, users x cells.
std::vector<double> init_shadowing(const ShadowingParams& p, std::size_t users, std::size_t cells);

struct ShadowingStep {
  ShadowingParams params;
  std::span<const double> travelled_m;  // per user, this tick
  std::uint64_t tick = 0;
};

/// Serving-cell SINR per user; nullopt entries for detached users yield NaN.
struct ServingInput {
  std::span<const CellState> cells;
  std::span<const std::optional<std::uint32_t>> serving;
  RadioParams radio;
};

/// Reference implementations, kept single-threaded for verification.
namespace serial {
void advance_shadowing(const ShadowingStep& step, std::span<double> state);
void measure(const MeasurementInput& in, RsrpMatrix& out);
void serving_sinr(const ServingInput& in, const RsrpMatrix& rsrp, std::vector<double>& out);
}  // namespace serial

/// OpenMP implementations; element-wise identical to serial::.
namespace parallel {
void advance_shadowing(const ShadowingStep& step, std::span<double> state);
void measure(const MeasurementInput& in, RsrpMatrix& out);
void serving_sinr(const ServingInput& in, const RsrpMatrix& rsrp, std::vector<double>& out);
}  // namespace parallel

}  // namespace oransim::ran
