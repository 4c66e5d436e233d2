#include <cmath>

#include "doctest.h"

#include "diamondlab/relay_selection.hpp"
#include "diamondlab/random.hpp"

using namespace diamondlab;

namespace {

ChannelGains random_gains(RandomStream& rng) {
  auto draw = [&] { return std::pow(10.0, 4 * rng.uniform() - 2); };
  const double g1 = draw(), g2 = draw(), h1 = draw(), h2 = draw();
  return ChannelGains(g1, g2, h1, h2);
}

RelayUse mirrored(RelayUse k) {
  if (k == RelayUse::Relay1Only) return RelayUse::Relay2Only;
  if (k == RelayUse::Relay2Only) return RelayUse::Relay1Only;
  return k;
}

}  // namespace

TEST_CASE("decision labels") {
  CHECK(to_string(RelayUse::BothRelays) == "both");
  CHECK(to_string(RelayUse::Relay1Only) == "relay1");
  CHECK(to_string(RelayUse::Relay2Only) == "relay2");
  CHECK(to_string(RelayUse::Unknown) == "unknown");
}

TEST_CASE("weak second relay: relay 1 alone is optimal") {
  const AsyncParams p(1.0, 1.0);
  const double g = p.gamma();
  const ChannelGains gains(1, 0.01, 1, 0.01);
  const RelayDecision d = classify(gains, p);
  CHECK(d.kind == RelayUse::Relay1Only);
  CHECK(d.certificate.lhs == doctest::Approx(4 * g).epsilon(1e-14));
  CHECK(d.certificate.rhs >= 100 * g);
  CHECK(d.certificate.margin() >= 0);
  CHECK(classify(gains.swapped(), p).kind == RelayUse::Relay2Only);
}

TEST_CASE("symmetric relays: both") {
  RandomStream rng(21);
  for (int i = 0; i < 200; ++i) {
    const double g = std::pow(10.0, 4 * rng.uniform() - 2);
    const double h = std::pow(10.0, 4 * rng.uniform() - 2);
    const AsyncParams p(1.0, 5 * rng.uniform());
    const RelayDecision d = classify(ChannelGains(g, g, h, h), p);
    CHECK(d.kind == RelayUse::BothRelays);
    CHECK(d.certificate.margin() >= 0);
  }
}

TEST_CASE("certificates and tightness on random gains") {
  RandomStream rng(22);
  int seen[4] = {0, 0, 0, 0};
  for (int i = 0; i < 2000; ++i) {
    const ChannelGains gains = random_gains(rng);
    const AsyncParams p(1.0, 5 * rng.uniform());
    const RelayDecision d = classify(gains, p);
    const BoundReport r = compute_bounds(gains, p);
    const int strong = canonicalize(gains).swapped ? 2 : 1;
    ++seen[static_cast<int>(d.kind)];
    if (d.kind != RelayUse::Unknown) CHECK(d.certificate.margin() >= -1e-9);
    if (d.kind == RelayUse::Relay1Only || d.kind == RelayUse::Relay2Only) {
      CHECK((d.kind == RelayUse::Relay1Only) == (strong == 1));
      const double ub = ub_one_relay(gains, strong, p);
      CHECK(std::abs(r.lb_theorem - ub) <= 1e-9 * ub);
      CHECK(std::abs(r.ratio - 1.0) <= 1e-9);
    }
    if (d.kind == RelayUse::BothRelays) {
      CHECK(r.ub_both <= ub_one_relay(gains, strong, p) * (1 + 1e-9));
    }
    // scale and relabel invariance
    CHECK(classify(gains.scaled(7.5), p).kind == d.kind);
    CHECK(classify(gains.swapped(), p).kind == mirrored(d.kind));
  }
  CHECK(seen[static_cast<int>(RelayUse::BothRelays)] > 0);
  CHECK(seen[static_cast<int>(RelayUse::Relay1Only)] > 0);
  CHECK(seen[static_cast<int>(RelayUse::Relay2Only)] > 0);
  CHECK(seen[static_cast<int>(RelayUse::Unknown)] > 0);
}

TEST_CASE("region map over the default scene") {
  const Scene scene = default_scene();
  const AsyncParams p(1.0, 0.5);
  const RegionMap map = region_map(scene, p, 2);
  REQUIRE(map.cells.size() == 100u * 100u);
  CHECK(map.count(RelayUse::BothRelays) > 0);
  CHECK(map.count(RelayUse::Relay1Only) + map.count(RelayUse::Relay2Only) > 0);
  CHECK(map.count(RelayUse::Unknown) > 0);
  CHECK(map.count(RelayUse::BothRelays) + map.count(RelayUse::Relay1Only) +
            map.count(RelayUse::Relay2Only) + map.count(RelayUse::Unknown) +
            map.degenerate_count() ==
        map.cells.size());
  // cells are stored y-major and agree with a direct classification
  for (std::size_t k : {0ul, 99ul, 100ul, 5050ul, 9999ul}) {
    const auto& cell = map.cells[k];
    const Point2 expect = scene.cell_center(static_cast<int>(k % 100), static_cast<int>(k / 100));
    CHECK(cell.position == expect);
    CHECK(cell.decision.kind == classify(gains_from_scene(scene, expect), p).kind);
  }
  const RegionMap serial = region_map(scene, p, 1);
  for (std::size_t k = 0; k < map.cells.size(); ++k) {
    CHECK(serial.cells[k].decision.kind == map.cells[k].decision.kind);
  }
}

TEST_CASE("region map edge cases") {
  const AsyncParams p(1.0, 0.5);
  // 2x2 grid whose cell (0,0) lies on the source
  const Scene on_source({0.5, 0.5}, {3, 3}, {1, 2}, 3, {0, 0, 2, 2}, 2);
  const RegionMap m = region_map(on_source, p);
  CHECK(m.cells[0].degenerate);
  CHECK(m.degenerate_count() == 1);

  // relay 2 at relay 1's position: equal gains pairwise
  const Scene coincident({0, 0}, {2, 0}, {1, 0.5}, 3, {0.5, 0, 1.5, 1}, 1);
  const RegionMap c = region_map(coincident, p);
  REQUIRE(c.cells.size() == 1);
  CHECK(c.cells[0].position == Point2{1, 0.5});
  CHECK(c.cells[0].decision.kind == RelayUse::BothRelays);

  // relay 2 far away: relay 1 is strong; compare with the direct inequality
  const Scene far({0, 0}, {1, 0}, {0.5, 0.2}, 3, {50, 50, 51, 51}, 1);
  const RegionMap f = region_map(far, p);
  const ChannelGains g = gains_from_scene(far, f.cells[0].position);
  const double s = (1 + p.beta()) * p.gamma() * (1 / g.g1() + 1 / g.h1());
  const RelayUse expect = s <= lb2(g, p) + kDecisionTol ? RelayUse::Relay1Only
                          : (1 / g.g2() + 1 / (g.h1() + g.h2()) <= 1 / g.g1() + 1 / g.h1())
                              ? RelayUse::BothRelays
                              : RelayUse::Unknown;
  CHECK(f.cells[0].decision.kind == expect);
}
