#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "diamondlab/errors.hpp"

namespace diamondlab {

/// Smallest gain accepted anywhere in the library.
inline constexpr double kMinGain = 1e-12;

/// 2 N0 ln 2, the synchronous AWGN minimum energy-per-bit at unit gain.
double gamma_of(double n0);

/// Power gains of the two-relay diamond network.
///
///   source --g1--> relay 1 --h1--> destination
///   source --g2--> relay 2 --h2--> destination
class ChannelGains {
 public:
  ChannelGains(double g1, double g2, double h1, double h2);

  double g1() const { return g1_; }
  double g2() const { return g2_; }
  double h1() const { return h1_; }
  double h2() const { return h2_; }

  /// Every gain multiplied by c > 0.
  ChannelGains scaled(double c) const;
  /// Relay indices exchanged.
  ChannelGains swapped() const { return ChannelGains(g2_, g1_, h2_, h1_); }

  auto operator<=>(const ChannelGains&) const = default;

 private:
  double g1_, g2_, h1_, h2_;
};

/// Noise power and asynchronism exponent. gamma is always derived from n0.
class AsyncParams {
 public:
  AsyncParams(double n0, double beta);

  double n0() const { return n0_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_of(n0_); }

  AsyncParams with_beta(double beta) const { return AsyncParams(n0_, beta); }

 private:
  double n0_;
  double beta_;
};

/// Gains relabeled so that the first-hop gain of the "strong" relay is the
/// larger one. Every bound formula below reads relay 1 as the strong relay.
struct CanonicalGains {
  double strong_g;
  double weak_g;
  double strong_h;
  double weak_h;
  bool swapped;

  auto operator<=>(const CanonicalGains&) const = default;
};

/// Ties g1 == g2 keep relay 1 as the strong relay.
CanonicalGains canonicalize(const ChannelGains& gains);

/// Inverse of canonicalize: back to the caller's relay indexing.
ChannelGains recompose(const CanonicalGains& canonical);

struct Point2 {
  double x = 0;
  double y = 0;

  auto operator<=>(const Point2&) const = default;
};

double distance(Point2 a, Point2 b);

struct Rect {
  double xmin = 0;
  double ymin = 0;
  double xmax = 0;
  double ymax = 0;
};

/// Planar placement of source, destination and relay 1; relay 2 sweeps a
/// grid over grid_bounds. Gains follow distance^-pathloss_exponent.
class Scene {
 public:
  Scene(Point2 source, Point2 dest, Point2 relay1, double pathloss_exponent, Rect grid_bounds,
        int grid_resolution);

  Point2 source() const { return source_; }
  Point2 dest() const { return dest_; }
  Point2 relay1() const { return relay1_; }
  double pathloss_exponent() const { return pathloss_exponent_; }
  Rect grid_bounds() const { return grid_bounds_; }
  int grid_resolution() const { return grid_resolution_; }

  /// Center of grid cell (ix, iy), ix along x.
  Point2 cell_center(int ix, int iy) const;

 private:
  Point2 source_, dest_, relay1_;
  double pathloss_exponent_;
  Rect grid_bounds_;
  int grid_resolution_;
};

/// Link gain for a distance: d^-exponent with unit proportionality constant.
double pathloss_gain(double dist, double exponent);

/// Gains with relay 2 at relay2_pos. Throws GeometryError if relay 2 sits on
/// the source or the destination.
ChannelGains gains_from_scene(const Scene& scene, Point2 relay2_pos);

/// Scene used by the region map when none is supplied.
Scene default_scene();

}  // namespace diamondlab
