#include <cmath>
#include <numbers>

#include "doctest.h"

#include "diamondlab/model.hpp"
#include "diamondlab/random.hpp"

using namespace diamondlab;

TEST_CASE("gamma_of values") {
  CHECK(gamma_of(1.0) == doctest::Approx(1.3862943611198906).epsilon(1e-15));
  CHECK(gamma_of(0.5) == doctest::Approx(0.6931471805599453).epsilon(1e-15));
  CHECK(gamma_of(1.0 / (2.0 * std::numbers::ln2)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(gamma_of(0.0), DomainError);
  CHECK_THROWS_AS(gamma_of(-1.0), DomainError);
  CHECK_THROWS_AS(gamma_of(NAN), DomainError);
}

TEST_CASE("gamma_of is linear in n0") {
  for (double n0 : {1e-3, 0.2, 1.0, 7.5, 1e4}) {
    for (double c : {0.5, 3.0, 1e-2}) {
      CHECK(std::abs(gamma_of(c * n0) - c * gamma_of(n0)) <= 1e-15 * c * gamma_of(n0));
    }
  }
}

TEST_CASE("AsyncParams validation") {
  CHECK_NOTHROW(AsyncParams(1.0, 0.0));
  CHECK_THROWS_AS(AsyncParams(1.0, -0.1), DomainError);
  CHECK_THROWS_AS(AsyncParams(0.0, 1.0), DomainError);
  AsyncParams p(2.0, 1.5);
  CHECK(p.gamma() == gamma_of(2.0));
  CHECK(p.with_beta(0.5).beta() == 0.5);
  CHECK(p.with_beta(0.5).n0() == 2.0);
}

TEST_CASE("ChannelGains rejects non-positive and tiny gains") {
  CHECK_THROWS_AS(ChannelGains(0, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(ChannelGains(1, -1, 1, 1), DomainError);
  CHECK_THROWS_AS(ChannelGains(1, 1, 1e-13, 1), DomainError);
  CHECK_THROWS_AS(ChannelGains(1, 1, 1, INFINITY), DomainError);
  CHECK_NOTHROW(ChannelGains(1e-12, 1, 1, 1));
}

TEST_CASE("canonicalize") {
  auto a = canonicalize(ChannelGains(2, 1, 3, 4));
  CHECK(a == CanonicalGains{2, 1, 3, 4, false});
  auto b = canonicalize(ChannelGains(1, 2, 3, 4));
  CHECK(b == CanonicalGains{2, 1, 4, 3, true});
  auto tie = canonicalize(ChannelGains(1, 1, 3, 4));
  CHECK(tie == CanonicalGains{1, 1, 3, 4, false});
}

TEST_CASE("canonicalize is idempotent and recompose inverts it") {
  RandomStream rng(11);
  for (int i = 0; i < 500; ++i) {
    ChannelGains g(rng.uniform_open(), rng.uniform_open(), rng.uniform_open(),
                   rng.uniform_open());
    const auto c = canonicalize(g);
    CHECK(canonicalize(recompose(c)) == c);
    CHECK(recompose(c) == g);
    CHECK(c.strong_g >= c.weak_g);
  }
}

TEST_CASE("pathloss gains from geometry") {
  CHECK(pathloss_gain(1.0, 3.0) == 1.0);
  CHECK(pathloss_gain(2.0, 3.0) == 0.125);
  CHECK(pathloss_gain(3.0, 2.0) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  CHECK_THROWS_AS(pathloss_gain(0.0, 3.0), GeometryError);

  Scene s({0, 0}, {4, 0}, {1, 0}, 3.0, {-1, -1, 5, 1}, 10);
  auto g = gains_from_scene(s, {2, 0});
  CHECK(g.g1() == 1.0);
  CHECK(g.g2() == 0.125);
  CHECK(g.h1() == doctest::Approx(1.0 / 27.0).epsilon(1e-15));
  CHECK(g.h2() == 0.125);
  CHECK_THROWS_AS(gains_from_scene(s, {0, 0}), GeometryError);
  CHECK_THROWS_AS(gains_from_scene(s, {4, 0}), GeometryError);
}

TEST_CASE("gains_from_scene is invariant under rigid motions") {
  RandomStream rng(5);
  const Point2 src{0.1, -0.2}, dst{1.3, 0.4}, r1{0.5, 0.7};
  Scene base(src, dst, r1, 3.0, {-1, -1, 2, 2}, 4);
  for (int i = 0; i < 200; ++i) {
    const double th = 6.283185307179586 * rng.uniform();
    const Point2 t{4 * rng.uniform() - 2, 4 * rng.uniform() - 2};
    auto move = [&](Point2 p) {
      return Point2{std::cos(th) * p.x - std::sin(th) * p.y + t.x,
                    std::sin(th) * p.x + std::cos(th) * p.y + t.y};
    };
    Scene moved(move(src), move(dst), move(r1), 3.0, {-10, -10, 10, 10}, 4);
    const Point2 r2{2 * rng.uniform() - 0.5, 2 * rng.uniform() - 0.5};
    auto a = gains_from_scene(base, r2);
    auto b = gains_from_scene(moved, move(r2));
    CHECK(std::abs(a.g1() - b.g1()) <= 1e-12 * a.g1());
    CHECK(std::abs(a.g2() - b.g2()) <= 1e-12 * a.g2());
    CHECK(std::abs(a.h1() - b.h1()) <= 1e-12 * a.h1());
    CHECK(std::abs(a.h2() - b.h2()) <= 1e-12 * a.h2());
  }
}

TEST_CASE("Scene validation and cell centers") {
  CHECK_THROWS_AS(Scene({0, 0}, {0, 0}, {1, 1}, 3, {0, 0, 1, 1}, 2), GeometryError);
  CHECK_THROWS_AS(Scene({0, 0}, {1, 0}, {1, 1}, 0, {0, 0, 1, 1}, 2), ConfigError);
  CHECK_THROWS_AS(Scene({0, 0}, {1, 0}, {1, 1}, 3, {0, 0, 1, 1}, 0), ConfigError);
  CHECK_THROWS_AS(Scene({0, 0}, {1, 0}, {1, 1}, 3, {1, 0, 0, 1}, 2), ConfigError);
  Scene s({0, 0}, {1, 0}, {1, 1}, 3, {0, 0, 2, 4}, 2);
  CHECK(s.cell_center(0, 0) == Point2{0.5, 1.0});
  CHECK(s.cell_center(1, 1) == Point2{1.5, 3.0});
}
