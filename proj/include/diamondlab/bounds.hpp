#pragma once

#include <array>

#include "diamondlab/lp.hpp"
#include "diamondlab/model.hpp"

namespace diamondlab {

/// Which lower bound divides the upper bound in a ratio.
enum class RatioDenominator {
  Theorem,  ///< min(LB2, two-hop strong-relay bound)
  Best,     ///< max(cut-set LB, the above)
};

/// Every bound for one parameter point. Energies are per bit, in the same
/// units as gamma / gain.
struct BoundReport {
  double ub_relay1 = 0;
  double ub_relay2 = 0;
  double ub_both = 0;
  double ub_best = 0;
  double lb_cutset = 0;
  double lb2 = 0;
  double lb_theorem = 0;
  double lb_best = 0;
  double ratio = 0;
};

/// CSV/JSON field order of BoundReport.
inline constexpr std::array<const char*, 9> kBoundReportFields = {
    "ub_relay1", "ub_relay2", "ub_both", "ub_best", "lb_cutset",
    "lb2",       "lb_theorem", "lb_best", "ratio"};

std::array<double, 9> fields_of(const BoundReport& report);

/// gamma / h.
double eb_sync_p2p(double h, const AsyncParams& params);
/// (1 + beta) gamma / h.
double eb_async_p2p(double h, const AsyncParams& params);

/// Separation scheme synchronizing and using both relays:
/// (1+beta) gamma (1/weak_g + 1/(h1+h2)).
double ub_separation_both(const ChannelGains& gains, const AsyncParams& params);

/// Decode-and-forward through relay `relay_index` (1 or 2, caller indexing).
double ub_one_relay(const ChannelGains& gains, int relay_index, const AsyncParams& params);

/// Minimum of the two one-relay schemes and the two-relay scheme.
double ub_best(const ChannelGains& gains, const AsyncParams& params);

// The three cut constraints shared by both dual LPs, in canonical labels:
//   (g1+g2) y1 + g2 y3 + g1 y4 <= 1
//   (h1+h2) y2 + h1 y3         <= 1
//   (h1+h2) y2 + h2 y4         <= 1
// The primals minimize x_s + x_r1 + x_r2 over the transposed system.

/// Dual cut-set LP: maximize gamma (1+beta) (y1+y2+y3+y4).
lp::LpProblem cutset_dual_lp(const ChannelGains& gains, const AsyncParams& params);
/// Primal cut-set LP with the vanishing slack set to zero.
lp::LpProblem cutset_primal_lp(const ChannelGains& gains, const AsyncParams& params);
/// Dual LP with the synchronized-relay source coefficient:
/// maximize gamma [y1 (1 + beta + beta g1/g2) + (1+beta)(y2+y3+y4)].
lp::LpProblem sync_dual_lp(const ChannelGains& gains, const AsyncParams& params);
/// Primal of sync_dual_lp.
lp::LpProblem sync_primal_lp(const ChannelGains& gains, const AsyncParams& params);

/// Objective of sync_dual_lp / cutset_dual_lp at an arbitrary y.
double sync_dual_objective(const ChannelGains& gains, const AsyncParams& params,
                           const std::array<double, 4>& y);
double cutset_dual_objective(const ChannelGains& gains, const AsyncParams& params,
                             const std::array<double, 4>& y);

/// Cut-set lower bound (optimum of cutset_dual_lp).
double lb_cutset(const ChannelGains& gains, const AsyncParams& params);
/// Lower bound for codes synchronizing both relays (optimum of sync_dual_lp).
double lb2(const ChannelGains& gains, const AsyncParams& params);
/// min(lb2, (1+beta) gamma (1/strong_g + 1/strong_h)).
double lb_theorem(const ChannelGains& gains, const AsyncParams& params);

/// Per-bit source energy needed to synchronize both relays:
/// gamma (beta/weak_g + 1/(g1+g2)).
double source_energy_lb(const ChannelGains& gains, const AsyncParams& params);

/// Supremum over power of the (1:beta)-capacity per unit cost of the
/// degraded broadcast channel formed by the first hop; the reciprocal of
/// source_energy_lb.
double c1beta_per_cost(const ChannelGains& gains, const AsyncParams& params);

/// Computes every bound at one point. Solves each LP once.
BoundReport compute_bounds(const ChannelGains& gains, const AsyncParams& params,
                           RatioDenominator denominator = RatioDenominator::Theorem);

}  // namespace diamondlab
