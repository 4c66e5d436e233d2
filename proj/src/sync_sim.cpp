#include "diamondlab/sync_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "diamondlab/bounds.hpp"
#include "diamondlab/parallel.hpp"
#include "diamondlab/random.hpp"

namespace diamondlab {

namespace {

void require_pulse_inputs(const AsyncParams& params, int bits, double delta) {
  if (bits <= 0) throw DomainError("bits must be positive");
  if (!(params.beta() > 0)) throw DomainError("beta must be positive for a pulse");
  if (!(delta >= 0) || !std::isfinite(delta)) throw DomainError("delta must be >= 0");
}

double received_level(const AsyncParams& params, int bits) {
  return std::sqrt(params.gamma() * params.beta() * bits);
}

struct Counts {
  std::uint64_t trials = 0;
  std::uint64_t false_alarms = 0;
  std::uint64_t misses = 0;
};

// Per-receiver quantities shared by the analytic and simulated paths.
struct Link {
  std::uint64_t window;
  double threshold;
  double sigma;
  double q;
  double src_amp;
  std::array<double, 2> relay_rx{};  // sqrt(g_i) * src_amp (diamond) or the p2p rx
  double dest_rx = 0;                // sum sqrt(h_i) w_i (diamond)
};

Link make_link(const SyncSimConfig& cfg) {
  const AsyncParams params = cfg.params();
  Link l{};
  l.window = cfg.window();
  l.threshold = detection_threshold(params, cfg.bits, cfg.delta);
  l.sigma = std::sqrt(cfg.n0);
  l.q = q_tail(l.threshold / l.sigma);
  if (cfg.mode == SyncMode::PointToPoint) {
    l.src_amp = pulse_amplitude(params, cfg.bits, cfg.delta, cfg.gains.g1());
    l.relay_rx[0] = std::sqrt(cfg.gains.g1()) * l.src_amp;
  } else {
    const CanonicalGains c = canonicalize(cfg.gains);
    l.src_amp = pulse_amplitude(params, cfg.bits, cfg.delta, c.weak_g);
    l.relay_rx[0] = std::sqrt(cfg.gains.g1()) * l.src_amp;
    l.relay_rx[1] = std::sqrt(cfg.gains.g2()) * l.src_amp;
    const auto w = relay_pulse_amplitudes(params, cfg.bits, cfg.delta, cfg.gains);
    l.dest_rx = std::sqrt(cfg.gains.h1()) * w[0] + std::sqrt(cfg.gains.h2()) * w[1];
  }
  return l;
}

// True when a noise-only receiver crosses the threshold within `slots` slots.
bool per_slot_alarm(RandomStream& rng, const Link& l, std::uint64_t slots) {
  for (std::uint64_t t = 0; t < slots; ++t) {
    if (l.sigma * rng.normal() > l.threshold) return true;
  }
  return false;
}

bool shortcut_alarm(RandomStream& rng, const Link& l, std::uint64_t slots) {
  return rng.geometric(l.q) <= slots;
}

bool pulse_missed(RandomStream& rng, const Link& l, double rx) {
  return rx + l.sigma * rng.normal() <= l.threshold;
}

Counts run_chunk(const SyncSimConfig& cfg, const Link& l, std::uint64_t chunk,
                 std::uint64_t trials) {
  RandomStream rng = RandomStream::substream(cfg.seed, chunk);
  auto alarm = [&](std::uint64_t slots) {
    return cfg.per_slot ? per_slot_alarm(rng, l, slots) : shortcut_alarm(rng, l, slots);
  };
  Counts c;
  c.trials = trials;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const std::uint64_t nu = rng.uniform_int(1, l.window);
    if (cfg.mode == SyncMode::PointToPoint) {
      if (alarm(nu - 1)) {
        ++c.false_alarms;
      } else if (pulse_missed(rng, l, l.relay_rx[0])) {
        ++c.misses;
      }
      continue;
    }
    // all three receivers draw every trial
    const bool fa1 = alarm(nu - 1);
    const bool fa2 = alarm(nu - 1);
    const bool fa_dest = alarm(nu);
    if (fa1 || fa2 || fa_dest) {
      ++c.false_alarms;
      continue;
    }
    const bool miss1 = pulse_missed(rng, l, l.relay_rx[0]);
    const bool miss2 = pulse_missed(rng, l, l.relay_rx[1]);
    if (miss1 || miss2 || pulse_missed(rng, l, l.dest_rx)) ++c.misses;
  }
  return c;
}

SyncSimReport simulate(const SyncSimConfig& cfg) {
  cfg.validate();
  const Link link = make_link(cfg);
  const AsyncParams params = cfg.params();

  const std::uint64_t chunks = (cfg.trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
  std::vector<Counts> partial(chunks);
  parallel_for(chunks, cfg.threads, [&](std::size_t k) {
    const std::uint64_t begin = k * kTrialsPerChunk;
    const std::uint64_t n = std::min(kTrialsPerChunk, cfg.trials - begin);
    partial[k] = run_chunk(cfg, link, k, n);
  });
  Counts total;
  for (const auto& p : partial) {
    total.trials += p.trials;
    total.false_alarms += p.false_alarms;
    total.misses += p.misses;
  }

  SyncSimReport r;
  r.config = cfg;
  r.window = link.window;
  r.pulse_amplitude = link.src_amp;
  if (cfg.mode == SyncMode::Diamond) {
    r.relay_pulse_amplitudes = relay_pulse_amplitudes(params, cfg.bits, cfg.delta, cfg.gains);
  }
  r.threshold = link.threshold;
  r.empirical_false_alarm = wilson_estimate(total.false_alarms, total.trials);
  r.empirical_miss = wilson_estimate(total.misses, total.trials - total.false_alarms);
  r.empirical_overall_error = wilson_estimate(total.false_alarms + total.misses, total.trials);
  r.analytic = analytic_error_probs(cfg);
  r.fa_union_bound = std::pow(std::exp2(-cfg.beta * cfg.bits), cfg.delta + cfg.delta * cfg.delta / 4);
  r.energy = energy_accounting(cfg);
  r.rng_algorithm = RandomStream::kAlgorithm;
  return r;
}

}  // namespace

void SyncSimConfig::validate() const {
  if (bits <= 0) throw ConfigError("bits must be positive");
  if (!(beta > 0) || !std::isfinite(beta)) throw ConfigError("beta must be positive");
  if (!(delta > 0) || !(delta <= 4)) throw ConfigError("delta must lie in (0, 4]");
  if (!(n0 > 0) || !std::isfinite(n0)) throw ConfigError("n0 must be positive");
  if (trials == 0) throw ConfigError("trials must be positive");
  if (max_log2_window < 0 || max_log2_window > 62) {
    throw ConfigError("max_log2_window must lie in [0, 62]");
  }
  if (beta * bits > max_log2_window) {
    throw ConfigError("window 2^(beta*bits) exceeds 2^max_log2_window");
  }
  if (mode == SyncMode::Diamond && !(gains.h1() + gains.h2() > 0)) {
    throw ConfigError("degenerate second hop");
  }
  if (per_slot && window() > kMaxPerSlotWindow) {
    throw ConfigError("per-slot simulation needs a window of at most 65536 slots");
  }
}

std::uint64_t SyncSimConfig::window() const {
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(std::exp2(beta * bits))));
}

double pulse_amplitude(const AsyncParams& params, int bits, double delta, double design_gain) {
  require_pulse_inputs(params, bits, delta);
  if (!(design_gain > 0)) throw DomainError("design gain must be positive");
  return (1.0 + delta) * std::sqrt(params.gamma() * params.beta() * bits / design_gain);
}

double detection_threshold(const AsyncParams& params, int bits, double delta) {
  require_pulse_inputs(params, bits, delta);
  return (1.0 + delta / 2.0) * received_level(params, bits);
}

std::array<double, 2> relay_pulse_amplitudes(const AsyncParams& params, int bits, double delta,
                                             const ChannelGains& gains) {
  require_pulse_inputs(params, bits, delta);
  const double level = (1.0 + delta) * received_level(params, bits);
  const double sum = gains.h1() + gains.h2();
  return {level * std::sqrt(gains.h1()) / sum, level * std::sqrt(gains.h2()) / sum};
}

double q_tail(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double false_alarm_probability(double q, std::uint64_t window, int k, int offset) {
  if (q <= 0) return 0.0;
  const double a = static_cast<double>(window);
  if (q >= 1) {
    if (k == 0) return offset == 0 ? 0.0 : 1.0;
    return offset == 0 ? 1.0 - 1.0 / a : 1.0;
  }
  const double log_r = std::log1p(-q);
  // 1 - r^offset
  const double head_alarm = -std::expm1(offset * log_r);
  if (k == 0) return head_alarm;
  // 1 - M with M = (1/A) sum_{j=0}^{A-1} e^{j u}, u = k log r < 0.
  const double u = k * log_r;
  double tail_alarm = 0;
  if (std::abs(a * u) < 1e-4) {
    const double m1 = (a - 1) / 2;
    const double m2 = (a - 1) * (2 * a - 1) / 6;
    const double m3 = (a - 1) * (a - 1) * a / 4;
    tail_alarm = -(u * m1 + u * u * m2 / 2 + u * u * u * m3 / 6);
  } else {
    tail_alarm = 1.0 - std::expm1(a * u) / (a * std::expm1(u));
  }
  return std::clamp(head_alarm + (1.0 - head_alarm) * tail_alarm, 0.0, 1.0);
}

AnalyticErrors analytic_error_probs(const SyncSimConfig& cfg) {
  cfg.validate();
  const Link l = make_link(cfg);
  AnalyticErrors e;
  e.per_slot_false_alarm = l.q;
  if (cfg.mode == SyncMode::PointToPoint) {
    e.miss = q_tail((l.relay_rx[0] - l.threshold) / l.sigma);
    e.false_alarm = false_alarm_probability(l.q, l.window);
  } else {
    const double m1 = q_tail((l.relay_rx[0] - l.threshold) / l.sigma);
    const double m2 = q_tail((l.relay_rx[1] - l.threshold) / l.sigma);
    const double md = q_tail((l.dest_rx - l.threshold) / l.sigma);
    e.miss = 1.0 - (1.0 - m1) * (1.0 - m2) * (1.0 - md);
    // relays listen nu-1 slots each, the destination nu slots: 3(nu-1) + 1
    e.false_alarm = false_alarm_probability(l.q, l.window, 3, 1);
  }
  e.overall = e.false_alarm + (1.0 - e.false_alarm) * e.miss;
  return e;
}

RateEstimate wilson_estimate(std::uint64_t events, std::uint64_t trials) {
  RateEstimate r;
  r.events = events;
  r.trials = trials;
  if (trials == 0) {
    r.upper = 1.0;
    return r;
  }
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(events) / n;
  const double denom = 1.0 + z * z / n;
  const double center = (p + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
  r.rate = p;
  r.lower = std::clamp(center - half, 0.0, p);
  r.upper = std::clamp(center + half, p, 1.0);
  return r;
}

EnergyAccounting energy_accounting(const SyncSimConfig& cfg) {
  const AsyncParams params = cfg.params();
  const double margin = (1.0 + cfg.delta) * (1.0 + cfg.delta);
  double path = 0;  // sum over hops of 1/gain
  if (cfg.mode == SyncMode::PointToPoint) {
    path = 1.0 / cfg.gains.g1();
  } else {
    path = 1.0 / canonicalize(cfg.gains).weak_g + 1.0 / (cfg.gains.h1() + cfg.gains.h2());
  }
  EnergyAccounting e;
  e.sync_energy_per_bit = margin * params.gamma() * params.beta() * path;
  e.comm_energy_per_bit_model = margin * params.gamma() * path;
  e.total_energy_per_bit_model = margin * ((1.0 + params.beta()) * params.gamma() * path);
  return e;
}

SyncSimReport simulate_p2p_sync(const SyncSimConfig& config) {
  if (config.mode != SyncMode::PointToPoint) throw ConfigError("expected point-to-point mode");
  return simulate(config);
}

SyncSimReport simulate_diamond_sync(const SyncSimConfig& config) {
  if (config.mode != SyncMode::Diamond) throw ConfigError("expected diamond mode");
  return simulate(config);
}

SyncSimReport simulate_sync(const SyncSimConfig& config) { return simulate(config); }

}  // namespace diamondlab
