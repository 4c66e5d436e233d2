#pragma once

#include <cstdint>
#include <vector>

#include "diamondlab/model.hpp"

namespace diamondlab {

/// Random diamond instance: gains log-uniform in [1e-2, 1e2], beta uniform in [0, 5].
struct DiamondInstance {
  ChannelGains gains;
  AsyncParams params;
};

std::vector<DiamondInstance> random_diamond_instances(std::size_t count, std::uint64_t seed,
                                                      double n0 = 1.0);

/// |primal - dual| / max(1, |dual|).
double normalized_gap(double primal, double dual);

struct DualitySummary {
  std::size_t trials = 0;
  std::size_t failures = 0;
  double max_cutset_gap = 0;  ///< normalized, cut-set primal vs dual
  double max_sync_gap = 0;    ///< normalized, synchronized-relay primal vs dual
  double tolerance = 0;
  bool passed() const { return failures == 0; }
};

/// Strong-duality check of both LP pairs on seeded random instances.
DualitySummary run_duality_suite(std::size_t trials, std::uint64_t seed, double tolerance = 1e-9,
                                 unsigned threads = 1);

}  // namespace diamondlab
