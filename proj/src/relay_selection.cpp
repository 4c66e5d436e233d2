#include "diamondlab/relay_selection.hpp"

#include <algorithm>

#include "diamondlab/parallel.hpp"

namespace diamondlab {

std::string_view to_string(RelayUse kind) {
  switch (kind) {
    case RelayUse::BothRelays:
      return "both";
    case RelayUse::Relay1Only:
      return "relay1";
    case RelayUse::Relay2Only:
      return "relay2";
    case RelayUse::Unknown:
      break;
  }
  return "unknown";
}

RelayDecision classify_with_lb2(const ChannelGains& gains, const AsyncParams& params,
                                double lb2_value) {
  const CanonicalGains c = canonicalize(gains);
  const double strong_path = 1.0 / c.strong_g + 1.0 / c.strong_h;
  const double strong_only = (1.0 + params.beta()) * params.gamma() * strong_path;

  RelayDecision d;
  if (strong_only <= lb2_value + kDecisionTol) {
    d.kind = c.swapped ? RelayUse::Relay2Only : RelayUse::Relay1Only;
    d.certificate = {"(1+beta)*gamma*(1/g_strong+1/h_strong) <= LB2", strong_only, lb2_value};
    return d;
  }
  const double both_path = 1.0 / c.weak_g + 1.0 / (c.strong_h + c.weak_h);
  d.certificate = {"1/g_weak+1/(h1+h2) <= 1/g_strong+1/h_strong", both_path, strong_path};
  d.kind = both_path <= strong_path + kDecisionTol ? RelayUse::BothRelays : RelayUse::Unknown;
  return d;
}

RelayDecision classify(const ChannelGains& gains, const AsyncParams& params) {
  return classify_with_lb2(gains, params, lb2(gains, params));
}

std::size_t RegionMap::count(RelayUse kind) const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [&](const auto& c) {
    return !c.degenerate && c.decision.kind == kind;
  }));
}

std::size_t RegionMap::degenerate_count() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.degenerate; }));
}

RegionMap region_map(const Scene& scene, const AsyncParams& params, unsigned threads) {
  const int n = scene.grid_resolution();
  RegionMap map;
  map.resolution = n;
  map.cells.resize(static_cast<std::size_t>(n) * n);
  parallel_for(map.cells.size(), threads, [&](std::size_t k) {
    RegionCell& cell = map.cells[k];
    const int ix = static_cast<int>(k % n);
    const int iy = static_cast<int>(k / n);
    cell.position = scene.cell_center(ix, iy);
    try {
      const ChannelGains gains = gains_from_scene(scene, cell.position);
      cell.bounds = compute_bounds(gains, params);
      cell.decision = classify_with_lb2(gains, params, cell.bounds.lb2);
    } catch (const GeometryError&) {
      cell.degenerate = true;
    } catch (const DomainError&) {
      cell.degenerate = true;
    }
  });
  return map;
}

}  // namespace diamondlab
