#include "doctest.h"

#include <cmath>
#include <random>

#include "oransim/ran/radio.hpp"

using namespace oransim::ran;

namespace {

// Literal round robin: one PRB per pass to each user with an unmet request.
std::vector<int> round_robin(int n_prb, const std::vector<int>& requests) {
  std::vector<int> got(requests.size(), 0);
  int left = n_prb;
  bool progress = true;
  while (left > 0 && progress) {
    progress = false;
    for (std::size_t i = 0; i < requests.size() && left > 0; ++i) {
      if (got[i] < requests[i]) {
        ++got[i];
        --left;
        progress = true;
      }
    }
  }
  return got;
}

CellState cell(int n_prb) {
  CellState c;
  c.n_prb = n_prb;
  return c;
}

}  // namespace

TEST_CASE("two users needing ten PRBs each on fifty") {
  auto c = cell(50);
  std::vector<PrbDemand> d = {{1, 1.8e6, 180000.0}, {2, 1.8e6, 180000.0}};
  auto g = schedule_prbs(c, d);
  REQUIRE(g.size() == 2);
  CHECK(g[0].requested == 10);
  CHECK(g[0].granted == 10);
  CHECK(g[1].granted == 10);
  CHECK(c.assigned_prb == 20);
  CHECK(c.load() == doctest::Approx(0.4));
}

TEST_CASE("saturation fills the carrier") {
  auto c = cell(50);
  std::vector<PrbDemand> d = {{1, 9e6, 180000.0}, {2, 9e6, 180000.0}, {3, 1e5, 180000.0}};
  auto g = schedule_prbs(c, d);
  CHECK(c.assigned_prb == 50);
  CHECK(c.load() == 1.0);
  CHECK(g[2].granted == 1);
  CHECK(g[0].granted + g[1].granted == 49);
}

TEST_CASE("no demand means no load") {
  auto c = cell(100);
  c.assigned_prb = 40;
  CHECK(schedule_prbs(c, {}).empty());
  CHECK(c.assigned_prb == 0);
}

TEST_CASE("unservable user requests the whole carrier") {
  auto c = cell(50);
  std::vector<PrbDemand> d = {{1, 1e6, 0.0}};
  auto g = schedule_prbs(c, d);
  CHECK(g[0].requested == 50);
  CHECK(g[0].granted == 50);
}

TEST_CASE("requests round up") {
  auto c = cell(50);
  std::vector<PrbDemand> d = {{1, 180001.0, 180000.0}};
  CHECK(schedule_prbs(c, d)[0].requested == 2);
}

TEST_CASE("allocation equals one-PRB-at-a-time round robin") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n_prb = (rng() % 2) ? 50 : 100;
    const int users = static_cast<int>(rng() % 40);
    std::vector<PrbDemand> d;
    for (int u = 0; u < users; ++u) {
      const double rate = (rng() % 20 == 0) ? 0.0 : 180000.0 * std::uniform_real_distribution<double>(0.05, 6.0)(rng);
      d.push_back({static_cast<std::uint32_t>(u), std::uniform_real_distribution<double>(1e5, 1.2e7)(rng), rate});
    }
    auto c = cell(n_prb);
    auto g = schedule_prbs(c, d);
    std::vector<int> req;
    for (const auto& x : g) req.push_back(x.requested);
    auto expected = round_robin(n_prb, req);
    int sum = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const int want = d[i].per_prb_rate > 0
                           ? std::min(n_prb, static_cast<int>(std::ceil(d[i].required_bitrate / d[i].per_prb_rate)))
                           : n_prb;
      CHECK(g[i].requested == want);
      CHECK(g[i].granted == expected[i]);
      sum += g[i].granted;
    }
    CHECK(sum == c.assigned_prb);
    CHECK(c.assigned_prb <= n_prb);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        if (g[i].granted < g[i].requested && g[j].granted < g[j].requested)
          CHECK(std::abs(g[i].granted - g[j].granted) <= 1);
  }
}
