#include "diamondlab/duality.hpp"

#include <algorithm>
#include <cmath>

#include "diamondlab/bounds.hpp"
#include "diamondlab/parallel.hpp"
#include "diamondlab/random.hpp"

namespace diamondlab {

std::vector<DiamondInstance> random_diamond_instances(std::size_t count, std::uint64_t seed,
                                                      double n0) {
  RandomStream rng(seed);
  auto log_uniform = [&] { return std::pow(10.0, -2.0 + 4.0 * rng.uniform()); };
  std::vector<DiamondInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double g1 = log_uniform();
    const double g2 = log_uniform();
    const double h1 = log_uniform();
    const double h2 = log_uniform();
    const double beta = 5.0 * rng.uniform();
    out.push_back({ChannelGains(g1, g2, h1, h2), AsyncParams(n0, beta)});
  }
  return out;
}

double normalized_gap(double primal, double dual) {
  return std::abs(primal - dual) / std::max(1.0, std::abs(dual));
}

DualitySummary run_duality_suite(std::size_t trials, std::uint64_t seed, double tolerance,
                                 unsigned threads) {
  const auto instances = random_diamond_instances(trials, seed);
  std::vector<double> cut_gap(trials), sync_gap(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    const auto& [gains, params] = instances[i];
    cut_gap[i] = normalized_gap(lp::solve(cutset_primal_lp(gains, params)).value,
                                lp::solve(cutset_dual_lp(gains, params)).value);
    sync_gap[i] = normalized_gap(lp::solve(sync_primal_lp(gains, params)).value,
                                 lp::solve(sync_dual_lp(gains, params)).value);
  });
  DualitySummary s;
  s.trials = trials;
  s.tolerance = tolerance;
  for (std::size_t i = 0; i < trials; ++i) {
    s.max_cutset_gap = std::max(s.max_cutset_gap, cut_gap[i]);
    s.max_sync_gap = std::max(s.max_sync_gap, sync_gap[i]);
    if (!(cut_gap[i] <= tolerance) || !(sync_gap[i] <= tolerance)) ++s.failures;
  }
  return s;
}

}  // namespace diamondlab
