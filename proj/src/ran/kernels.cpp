#include "oransim/ran/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace oransim::ran {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double to_unit_open(std::uint64_t bits) {
  // 53 random bits mapped to (0, 1).
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

inline double measure_one(const MeasurementInput& in, std::size_t u, std::size_t c) {
  double v = rsrp(in.cells[c], in.positions[u], in.radio);
  if (!in.shadowing_db.empty()) v += in.shadowing_db[u * in.cells.size() + c];
  if (in.fading.sigma_db > 0.0) v += in.fading.sigma_db * fading_sample(in.fading.seed, in.tick, u, c);
  return v;
}

inline double shadow_one(const ShadowingStep& step, double current, std::size_t u, std::size_t c) {
  const double rho = std::exp(-step.travelled_m[u] / step.params.decorrelation_m);
  return rho * current +
         std::sqrt(1.0 - rho * rho) * step.params.sigma_db * fading_sample(step.params.seed, step.tick, u, c);
}

inline double serving_one(const ServingInput& in, const RsrpMatrix& m, std::size_t u) {
  const auto& s = in.serving[u];
  if (!s) return std::numeric_limits<double>::quiet_NaN();
  return sinr_from_rsrp(in.cells, m.row(u), *s, in.radio);
}

}  // namespace

double fading_sample(std::uint64_t seed, std::uint64_t tick, std::uint64_t user, std::uint64_t cell) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ tick);
  h = splitmix64(h ^ (user << 20) ^ cell);
  const double u1 = to_unit_open(h);
  const double u2 = to_unit_open(splitmix64(h));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<double> init_shadowing(const ShadowingParams& p, std::size_t users, std::size_t cells) {
  std::vector<double> s(users * cells, 0.0);
  if (p.sigma_db <= 0.0) return s;
  for (std::size_t u = 0; u < users; ++u)
    for (std::size_t c = 0; c < cells; ++c) s[u * cells + c] = p.sigma_db * fading_sample(p.seed, 0, u, c);
  return s;
}

namespace serial {

void advance_shadowing(const ShadowingStep& step, std::span<double> state) {
  const std::size_t users = step.travelled_m.size();
  const std::size_t cells = users == 0 ? 0 : state.size() / users;
  for (std::size_t u = 0; u < users; ++u)
    for (std::size_t c = 0; c < cells; ++c) state[u * cells + c] = shadow_one(step, state[u * cells + c], u, c);
}

void measure(const MeasurementInput& in, RsrpMatrix& out) {
  out.resize(in.positions.size(), in.cells.size());
  for (std::size_t u = 0; u < out.users; ++u)
    for (std::size_t c = 0; c < out.cells; ++c) out.at(u, c) = measure_one(in, u, c);
}

void serving_sinr(const ServingInput& in, const RsrpMatrix& rsrp, std::vector<double>& out) {
  out.assign(rsrp.users, 0.0);
  for (std::size_t u = 0; u < rsrp.users; ++u) out[u] = serving_one(in, rsrp, u);
}

}  // namespace serial

namespace parallel {

void advance_shadowing(const ShadowingStep& step, std::span<double> state) {
  const auto users = static_cast<std::ptrdiff_t>(step.travelled_m.size());
  const std::size_t cells = users == 0 ? 0 : state.size() / static_cast<std::size_t>(users);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t u = 0; u < users; ++u) {
    const auto uu = static_cast<std::size_t>(u);
    for (std::size_t c = 0; c < cells; ++c) state[uu * cells + c] = shadow_one(step, state[uu * cells + c], uu, c);
  }
}

void measure(const MeasurementInput& in, RsrpMatrix& out) {
  out.resize(in.positions.size(), in.cells.size());
  const auto users = static_cast<std::ptrdiff_t>(out.users);
  const std::size_t cells = out.cells;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t u = 0; u < users; ++u)
    for (std::size_t c = 0; c < cells; ++c)
      out.at(static_cast<std::size_t>(u), c) = measure_one(in, static_cast<std::size_t>(u), c);
}

void serving_sinr(const ServingInput& in, const RsrpMatrix& rsrp, std::vector<double>& out) {
  out.assign(rsrp.users, 0.0);
  const auto users = static_cast<std::ptrdiff_t>(rsrp.users);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t u = 0; u < users; ++u)
    out[static_cast<std::size_t>(u)] = serving_one(in, rsrp, static_cast<std::size_t>(u));
}

}  // namespace parallel

}  // namespace oransim::ran
