#include "diamondlab/model.hpp"

#include <cmath>
#include <string>

namespace diamondlab {

namespace {

void require_gain(double value, const char* name) {
  if (!std::isfinite(value) || value < kMinGain) {
    throw DomainError(std::string("gain ") + name + " must be finite and >= 1e-12, got " +
                      std::to_string(value));
  }
}

}  // namespace

double gamma_of(double n0) {
  if (!(n0 > 0) || !std::isfinite(n0)) {
    throw DomainError("noise power n0 must be positive and finite");
  }
  return 2.0 * n0 * std::numbers::ln2;
}

ChannelGains::ChannelGains(double g1, double g2, double h1, double h2)
    : g1_(g1), g2_(g2), h1_(h1), h2_(h2) {
  require_gain(g1, "g1");
  require_gain(g2, "g2");
  require_gain(h1, "h1");
  require_gain(h2, "h2");
}

ChannelGains ChannelGains::scaled(double c) const {
  if (!(c > 0)) throw DomainError("gain scale factor must be positive");
  return ChannelGains(c * g1_, c * g2_, c * h1_, c * h2_);
}

AsyncParams::AsyncParams(double n0, double beta) : n0_(n0), beta_(beta) {
  gamma_of(n0);  // validates n0
  if (!(beta >= 0) || !std::isfinite(beta)) {
    throw DomainError("asynchronism exponent beta must be finite and >= 0");
  }
}

CanonicalGains canonicalize(const ChannelGains& gains) {
  if (gains.g2() > gains.g1()) {
    return {gains.g2(), gains.g1(), gains.h2(), gains.h1(), true};
  }
  return {gains.g1(), gains.g2(), gains.h1(), gains.h2(), false};
}

ChannelGains recompose(const CanonicalGains& c) {
  if (c.swapped) return ChannelGains(c.weak_g, c.strong_g, c.weak_h, c.strong_h);
  return ChannelGains(c.strong_g, c.weak_g, c.strong_h, c.weak_h);
}

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

Scene::Scene(Point2 source, Point2 dest, Point2 relay1, double pathloss_exponent,
             Rect grid_bounds, int grid_resolution)
    : source_(source),
      dest_(dest),
      relay1_(relay1),
      pathloss_exponent_(pathloss_exponent),
      grid_bounds_(grid_bounds),
      grid_resolution_(grid_resolution) {
  if (!(pathloss_exponent > 0) || !std::isfinite(pathloss_exponent)) {
    throw ConfigError("pathloss_exponent must be positive");
  }
  if (grid_resolution < 1) throw ConfigError("grid_resolution must be >= 1");
  if (!(grid_bounds.xmax > grid_bounds.xmin) || !(grid_bounds.ymax > grid_bounds.ymin)) {
    throw ConfigError("grid_bounds must satisfy xmin < xmax and ymin < ymax");
  }
  if (distance(source, dest) <= 0 || distance(source, relay1) <= 0 ||
      distance(relay1, dest) <= 0) {
    throw GeometryError("source, destination and relay 1 must be pairwise distinct");
  }
}

Point2 Scene::cell_center(int ix, int iy) const {
  const double wx = (grid_bounds_.xmax - grid_bounds_.xmin) / grid_resolution_;
  const double wy = (grid_bounds_.ymax - grid_bounds_.ymin) / grid_resolution_;
  return {grid_bounds_.xmin + (ix + 0.5) * wx, grid_bounds_.ymin + (iy + 0.5) * wy};
}

double pathloss_gain(double dist, double exponent) {
  if (!(dist > 0)) throw GeometryError("zero link distance");
  return std::pow(dist, -exponent);
}

ChannelGains gains_from_scene(const Scene& scene, Point2 relay2_pos) {
  const double e = scene.pathloss_exponent();
  const double d_s1 = distance(scene.source(), scene.relay1());
  const double d_1d = distance(scene.relay1(), scene.dest());
  const double d_s2 = distance(scene.source(), relay2_pos);
  const double d_2d = distance(relay2_pos, scene.dest());
  if (d_s2 <= 0) throw GeometryError("relay 2 coincides with the source");
  if (d_2d <= 0) throw GeometryError("relay 2 coincides with the destination");
  return ChannelGains(pathloss_gain(d_s1, e), pathloss_gain(d_s2, e), pathloss_gain(d_1d, e),
                      pathloss_gain(d_2d, e));
}

Scene default_scene() {
  return Scene({0.0, 0.0}, {1.0, 0.0}, {0.3, 0.25}, 3.0, {-0.5, -1.0, 1.5, 1.0}, 100);
}

}  // namespace diamondlab
