#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "diamondlab/model.hpp"

namespace diamondlab {

/// Pulse-based synchronization.
///
/// A message arrives at slot nu, uniform on [1, A] with A = round(2^(beta B)).
/// The transmitter sends one pulse at nu sized so that the received amplitude
/// is (1+delta) sqrt(gamma beta B); every receiver declares the first slot
/// whose sample exceeds (1+delta/2) sqrt(gamma beta B). In the diamond the
/// source pulse is sized for the weaker relay and the relays answer at nu+1
/// with beamformed pulses that add coherently at the destination.
///
/// Errors: a false alarm is any receiver crossing the threshold before its
/// pulse arrives (relays during slots 1..nu-1, the destination during 1..nu
/// since the relay pulse lands at nu+1); a miss is a pulse sample at or
/// below the threshold.

enum class SyncMode { PointToPoint, Diamond };

struct SyncSimConfig {
  SyncMode mode = SyncMode::Diamond;
  int bits = 32;
  double beta = 0.25;
  double delta = 0.5;
  double n0 = 1.0;
  /// Point-to-point mode uses g1 as the link (and design) gain.
  ChannelGains gains{1.0, 1.0, 1.0, 1.0};
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  int max_log2_window = 24;
  /// Simulate every pre-pulse slot instead of sampling the first false-alarm
  /// time. Only allowed for windows up to kMaxPerSlotWindow.
  bool per_slot = false;
  unsigned threads = 1;

  /// Throws ConfigError.
  void validate() const;
  std::uint64_t window() const;
  AsyncParams params() const { return AsyncParams(n0, beta); }
};

inline constexpr std::uint64_t kMaxPerSlotWindow = 1u << 16;
/// Trials per independent random substream.
inline constexpr std::uint64_t kTrialsPerChunk = 8192;

/// (1+delta) sqrt(gamma beta B / g): transmit amplitude that reaches a
/// receiver behind gain g at (1+delta) sqrt(gamma beta B).
double pulse_amplitude(const AsyncParams& params, int bits, double delta, double design_gain);

/// (1+delta/2) sqrt(gamma beta B), on the received amplitude.
double detection_threshold(const AsyncParams& params, int bits, double delta);

/// Relay pulse amplitudes w_i = (1+delta) sqrt(gamma beta B) sqrt(h_i)/(h1+h2).
std::array<double, 2> relay_pulse_amplitudes(const AsyncParams& params, int bits, double delta,
                                             const ChannelGains& gains);

/// Standard Gaussian upper tail, P(Z > x).
double q_tail(double x);

/// 1 - (1/A) sum_{nu=1..A} (1-q)^(k (nu-1) + offset): probability that at
/// least one of the listening slots (k per arrival step, plus `offset`)
/// crosses the threshold, averaged over a uniform arrival.
double false_alarm_probability(double q, std::uint64_t window, int k = 1, int offset = 0);

struct AnalyticErrors {
  double per_slot_false_alarm = 0;  ///< q for one noise-only sample
  double miss = 0;                  ///< given no false alarm
  double false_alarm = 0;
  double overall = 0;
};

AnalyticErrors analytic_error_probs(const SyncSimConfig& config);

struct RateEstimate {
  std::uint64_t events = 0;
  std::uint64_t trials = 0;
  double rate = 0;
  double lower = 0;  ///< Wilson 95%
  double upper = 0;
};

RateEstimate wilson_estimate(std::uint64_t events, std::uint64_t trials);

struct EnergyAccounting {
  double sync_energy_per_bit = 0;
  double comm_energy_per_bit_model = 0;
  double total_energy_per_bit_model = 0;
};

EnergyAccounting energy_accounting(const SyncSimConfig& config);

struct SyncSimReport {
  SyncSimConfig config;
  std::uint64_t window = 0;
  double pulse_amplitude = 0;  ///< source pulse
  std::array<double, 2> relay_pulse_amplitudes{};  ///< diamond only
  double threshold = 0;

  RateEstimate empirical_miss;  ///< over trials without a false alarm
  RateEstimate empirical_false_alarm;
  RateEstimate empirical_overall_error;
  AnalyticErrors analytic;
  /// (2^-(beta B))^(delta + delta^2/4), the union/Chernoff bound on the
  /// per-receiver false-alarm probability.
  double fa_union_bound = 0;

  EnergyAccounting energy;
  std::string rng_algorithm;
};

SyncSimReport simulate_p2p_sync(const SyncSimConfig& config);
SyncSimReport simulate_diamond_sync(const SyncSimConfig& config);
/// Dispatches on config.mode.
SyncSimReport simulate_sync(const SyncSimConfig& config);

}  // namespace diamondlab
