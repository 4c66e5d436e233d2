#pragma once

#include <array>
#include <vector>

#include "diamondlab/bounds.hpp"
#include "diamondlab/model.hpp"

namespace diamondlab {

/// ub_best / lower bound.
double ratio(const ChannelGains& gains, const AsyncParams& params,
             RatioDenominator denominator = RatioDenominator::Theorem);

/// (1+beta)/(1/2+beta): the symmetric first-hop factor.
double envelope_low(double beta);
/// min(2, 1 + 1/beta), and 2 at beta = 0.
double envelope_high(double beta);

struct RatioSweepResult {
  double beta = 0;
  double worst_ratio = 0;
  std::array<double, 4> argmax_gains{};  ///< (g1, g2, h1, h2)
  int grid_resolution = 0;
  double envelope_low = 0;
  double envelope_high = 0;
};

struct SweepOptions {
  RatioDenominator denominator = RatioDenominator::Theorem;
  /// Evaluate only g1 >= g2; the other half follows by relabeling.
  bool use_symmetry = true;
  unsigned threads = 1;
};

/// Maximum ratio over gains in {1/R, 2/R, ..., 1}^4. Among tuples attaining
/// the maximum the lexicographically smallest (g1, g2, h1, h2) is reported,
/// whether or not the symmetry reduction is used.
RatioSweepResult worst_case_ratio(double beta, int grid_resolution, double n0 = 1.0,
                                  const SweepOptions& options = {});

}  // namespace diamondlab
