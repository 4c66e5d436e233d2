#include "diamondlab/gap_analysis.hpp"

#include <algorithm>

#include "diamondlab/parallel.hpp"

namespace diamondlab {

namespace {

using Tuple = std::array<int, 4>;  // grid indices of (g1, g2, h1, h2)

struct Best {
  double value = -1;
  Tuple key{};
};

Tuple mirror(const Tuple& t) { return {t[1], t[0], t[3], t[2]}; }

// Larger ratio wins; equal ratios resolve to the smaller key.
void offer(Best& best, double value, const Tuple& key) {
  if (value > best.value || (value == best.value && key < best.key)) {
    best.value = value;
    best.key = key;
  }
}

}  // namespace

double ratio(const ChannelGains& gains, const AsyncParams& params,
             RatioDenominator denominator) {
  const double ub = ub_best(gains, params);
  const double lt = lb_theorem(gains, params);
  if (denominator == RatioDenominator::Theorem) return ub / lt;
  return ub / std::max(lt, lb_cutset(gains, params));
}

double envelope_low(double beta) { return (1.0 + beta) / (0.5 + beta); }

double envelope_high(double beta) {
  if (beta <= 0) return 2.0;
  return std::min(2.0, 1.0 + 1.0 / beta);
}

RatioSweepResult worst_case_ratio(double beta, int grid_resolution, double n0,
                                  const SweepOptions& options) {
  if (grid_resolution < 2) throw DomainError("grid resolution must be >= 2");
  const AsyncParams params(n0, beta);
  const int r = grid_resolution;
  auto level = [r](int i) { return static_cast<double>(i) / static_cast<double>(r); };

  // One work item per (g1, g2) pair; each scans every (h1, h2).
  std::vector<std::array<int, 2>> first_hop;
  for (int a = 1; a <= r; ++a) {
    for (int b = 1; b <= r; ++b) {
      if (options.use_symmetry && b > a) continue;
      first_hop.push_back({a, b});
    }
  }
  std::vector<Best> partial(first_hop.size());
  parallel_for(first_hop.size(), options.threads, [&](std::size_t k) {
    const auto [a, b] = first_hop[k];
    Best best;
    for (int c = 1; c <= r; ++c) {
      for (int d = 1; d <= r; ++d) {
        const ChannelGains gains(level(a), level(b), level(c), level(d));
        const double v = ratio(gains, params, options.denominator);
        const Tuple t{a, b, c, d};
        // with the reduction, t also stands for its mirror
        const Tuple key = options.use_symmetry && a != b ? std::min(t, mirror(t)) : t;
        offer(best, v, key);
      }
    }
    partial[k] = best;
  });

  Best best;
  for (const auto& p : partial) offer(best, p.value, p.key);

  RatioSweepResult out;
  out.beta = beta;
  out.worst_ratio = best.value;
  for (int i = 0; i < 4; ++i) out.argmax_gains[i] = level(best.key[i]);
  out.grid_resolution = r;
  out.envelope_low = envelope_low(beta);
  out.envelope_high = envelope_high(beta);
  return out;
}

}  // namespace diamondlab
