#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "diamondlab/bounds.hpp"
#include "diamondlab/model.hpp"

namespace diamondlab {

/// Classification tolerance; ties go to the one-relay scheme.
inline constexpr double kDecisionTol = 1e-9;

enum class RelayUse { BothRelays, Relay1Only, Relay2Only, Unknown };

std::string_view to_string(RelayUse kind);

/// The inequality `lhs <= rhs` that was tested last.
struct Certificate {
  std::string inequality;
  double lhs = 0;
  double rhs = 0;
  double margin() const { return rhs - lhs; }
};

struct RelayDecision {
  RelayUse kind = RelayUse::Unknown;
  Certificate certificate;
};

/// Decides which relays an energy-optimal scheme uses, when the bounds allow.
///
/// With relay labels canonicalized (strong relay has the larger first-hop
/// gain) and S = (1+beta) gamma (1/strong_g + 1/strong_h):
///  - S <= lb2 means nothing beats the strong relay alone;
///  - else 1/weak_g + 1/(h1+h2) <= 1/strong_g + 1/strong_h means the
///    two-relay separation scheme beats every one-relay scheme;
///  - otherwise the bounds do not decide.
RelayDecision classify(const ChannelGains& gains, const AsyncParams& params);

/// Same as classify() with lb2 already known, avoiding a second LP solve.
RelayDecision classify_with_lb2(const ChannelGains& gains, const AsyncParams& params,
                                double lb2_value);

struct RegionCell {
  Point2 position;
  bool degenerate = false;
  RelayDecision decision;
  BoundReport bounds;  ///< zeroed for degenerate cells
};

struct RegionMap {
  int resolution = 0;
  std::vector<RegionCell> cells;  ///< row-major, y outer, x inner

  std::size_t count(RelayUse kind) const;
  std::size_t degenerate_count() const;
};

/// Classifies a relay-2 placement at the center of every grid cell. Cells on
/// top of the source or destination, or so far away that a gain drops below
/// kMinGain, are marked degenerate.
RegionMap region_map(const Scene& scene, const AsyncParams& params, unsigned threads = 1);

}  // namespace diamondlab
