#include "diamondlab/bounds.hpp"

#include <algorithm>

namespace diamondlab {

namespace {

void require_positive_gain(double h) {
  if (!(h > 0)) throw DomainError("link gain must be positive");
}

// Rows of the dual LPs for canonical gains.
void fill_dual_rows(lp::LpProblem& p, const CanonicalGains& c) {
  const double g1 = c.strong_g, g2 = c.weak_g, h1 = c.strong_h, h2 = c.weak_h;
  p.set_coeff(0, 0, g1 + g2);
  p.set_coeff(0, 2, g2);
  p.set_coeff(0, 3, g1);
  p.set_coeff(1, 1, h1 + h2);
  p.set_coeff(1, 2, h1);
  p.set_coeff(2, 1, h1 + h2);
  p.set_coeff(2, 3, h2);
  for (std::size_t i = 0; i < 3; ++i) p.set_rhs(i, 1.0);
}

// Transposed system: variables (x_s, x_r1, x_r2), one row per cut.
void fill_primal_rows(lp::LpProblem& p, const CanonicalGains& c) {
  const double g1 = c.strong_g, g2 = c.weak_g, h1 = c.strong_h, h2 = c.weak_h;
  p.set_coeff(0, 0, g1 + g2);
  p.set_coeff(1, 1, h1 + h2);
  p.set_coeff(1, 2, h1 + h2);
  p.set_coeff(2, 0, g2);
  p.set_coeff(2, 1, h1);
  p.set_coeff(3, 0, g1);
  p.set_coeff(3, 2, h2);
  for (std::size_t j = 0; j < 3; ++j) p.set_objective(j, 1.0);
}

double source_coefficient_sync(const CanonicalGains& c, const AsyncParams& params) {
  const double b = params.beta();
  return params.gamma() * (1.0 + b + b * c.strong_g / c.weak_g);
}

double strong_two_hop(const CanonicalGains& c, const AsyncParams& params) {
  return (1.0 + params.beta()) * params.gamma() * (1.0 / c.strong_g + 1.0 / c.strong_h);
}

}  // namespace

std::array<double, 9> fields_of(const BoundReport& r) {
  return {r.ub_relay1, r.ub_relay2, r.ub_both,    r.ub_best, r.lb_cutset,
          r.lb2,       r.lb_theorem, r.lb_best, r.ratio};
}

double eb_sync_p2p(double h, const AsyncParams& params) {
  require_positive_gain(h);
  return params.gamma() / h;
}

double eb_async_p2p(double h, const AsyncParams& params) {
  require_positive_gain(h);
  return (1.0 + params.beta()) * params.gamma() / h;
}

double ub_separation_both(const ChannelGains& gains, const AsyncParams& params) {
  const CanonicalGains c = canonicalize(gains);
  return (1.0 + params.beta()) * params.gamma() *
         (1.0 / c.weak_g + 1.0 / (gains.h1() + gains.h2()));
}

double ub_one_relay(const ChannelGains& gains, int relay_index, const AsyncParams& params) {
  double g = 0, h = 0;
  if (relay_index == 1) {
    g = gains.g1();
    h = gains.h1();
  } else if (relay_index == 2) {
    g = gains.g2();
    h = gains.h2();
  } else {
    throw DomainError("relay index must be 1 or 2");
  }
  return (1.0 + params.beta()) * params.gamma() * (1.0 / g + 1.0 / h);
}

double ub_best(const ChannelGains& gains, const AsyncParams& params) {
  return std::min({ub_one_relay(gains, 1, params), ub_one_relay(gains, 2, params),
                   ub_separation_both(gains, params)});
}

lp::LpProblem cutset_dual_lp(const ChannelGains& gains, const AsyncParams& params) {
  lp::LpProblem p(4, 3, lp::Sense::Maximize, lp::RowSense::LessEqual);
  fill_dual_rows(p, canonicalize(gains));
  const double k = params.gamma() * (1.0 + params.beta());
  for (std::size_t j = 0; j < 4; ++j) p.set_objective(j, k);
  return p;
}

lp::LpProblem sync_dual_lp(const ChannelGains& gains, const AsyncParams& params) {
  const CanonicalGains c = canonicalize(gains);
  lp::LpProblem p(4, 3, lp::Sense::Maximize, lp::RowSense::LessEqual);
  fill_dual_rows(p, c);
  const double k = params.gamma() * (1.0 + params.beta());
  p.set_objective(0, source_coefficient_sync(c, params));
  for (std::size_t j = 1; j < 4; ++j) p.set_objective(j, k);
  return p;
}

lp::LpProblem cutset_primal_lp(const ChannelGains& gains, const AsyncParams& params) {
  lp::LpProblem p(3, 4, lp::Sense::Minimize, lp::RowSense::GreaterEqual);
  fill_primal_rows(p, canonicalize(gains));
  const double k = params.gamma() * (1.0 + params.beta());
  for (std::size_t i = 0; i < 4; ++i) p.set_rhs(i, k);
  return p;
}

lp::LpProblem sync_primal_lp(const ChannelGains& gains, const AsyncParams& params) {
  const CanonicalGains c = canonicalize(gains);
  lp::LpProblem p(3, 4, lp::Sense::Minimize, lp::RowSense::GreaterEqual);
  fill_primal_rows(p, c);
  const double k = params.gamma() * (1.0 + params.beta());
  p.set_rhs(0, source_coefficient_sync(c, params));
  for (std::size_t i = 1; i < 4; ++i) p.set_rhs(i, k);
  return p;
}

double sync_dual_objective(const ChannelGains& gains, const AsyncParams& params,
                           const std::array<double, 4>& y) {
  const CanonicalGains c = canonicalize(gains);
  const double k = params.gamma() * (1.0 + params.beta());
  return source_coefficient_sync(c, params) * y[0] + k * (y[1] + y[2] + y[3]);
}

double cutset_dual_objective(const ChannelGains&, const AsyncParams& params,
                             const std::array<double, 4>& y) {
  return params.gamma() * (1.0 + params.beta()) * (y[0] + y[1] + y[2] + y[3]);
}

double lb_cutset(const ChannelGains& gains, const AsyncParams& params) {
  return lp::solve(cutset_dual_lp(gains, params)).value;
}

double lb2(const ChannelGains& gains, const AsyncParams& params) {
  return lp::solve(sync_dual_lp(gains, params)).value;
}

double lb_theorem(const ChannelGains& gains, const AsyncParams& params) {
  return std::min(lb2(gains, params), strong_two_hop(canonicalize(gains), params));
}

double source_energy_lb(const ChannelGains& gains, const AsyncParams& params) {
  const CanonicalGains c = canonicalize(gains);
  return params.gamma() * (params.beta() / c.weak_g + 1.0 / (c.strong_g + c.weak_g));
}

double c1beta_per_cost(const ChannelGains& gains, const AsyncParams& params) {
  const CanonicalGains c = canonicalize(gains);
  const double sum = c.strong_g + c.weak_g;
  return c.weak_g * sum / (params.gamma() * (params.beta() * sum + c.weak_g));
}

BoundReport compute_bounds(const ChannelGains& gains, const AsyncParams& params,
                           RatioDenominator denominator) {
  const CanonicalGains c = canonicalize(gains);
  BoundReport r;
  r.ub_relay1 = ub_one_relay(gains, 1, params);
  r.ub_relay2 = ub_one_relay(gains, 2, params);
  r.ub_both = ub_separation_both(gains, params);
  r.ub_best = std::min({r.ub_relay1, r.ub_relay2, r.ub_both});
  r.lb_cutset = lb_cutset(gains, params);
  r.lb2 = lb2(gains, params);
  r.lb_theorem = std::min(r.lb2, strong_two_hop(c, params));
  r.lb_best = std::max(r.lb_cutset, r.lb_theorem);
  r.ratio = r.ub_best / (denominator == RatioDenominator::Theorem ? r.lb_theorem : r.lb_best);
  return r;
}

}  // namespace diamondlab
