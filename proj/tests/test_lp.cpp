#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"

#include "diamondlab/bounds.hpp"
#include "diamondlab/lp.hpp"
#include "diamondlab/random.hpp"
#include "oracle/rational_lp.hpp"

using namespace diamondlab;
using namespace diamondlab::lp;

namespace {

// gamma = 1 exactly.
const double kUnitGammaN0 = 1.0 / (2.0 * std::numbers::ln2);

LpProblem from_oracle(const oracle::RationalLp& r) {
  LpProblem p(r.c.size(), r.a.size(), Sense::Maximize, RowSense::LessEqual);
  for (std::size_t j = 0; j < r.c.size(); ++j) p.set_objective(j, oracle::to_double(r.c[j]));
  for (std::size_t i = 0; i < r.a.size(); ++i) {
    p.set_rhs(i, oracle::to_double(r.b[i]));
    for (std::size_t j = 0; j < r.c.size(); ++j) p.set_coeff(i, j, oracle::to_double(r.a[i][j]));
  }
  return p;
}

}  // namespace

TEST_CASE("single constraint") {
  LpProblem p(Sense::Maximize, RowSense::LessEqual, {1}, {{1}}, {1});
  auto s = solve(p);
  CHECK(s.value == 1.0);
  REQUIRE(s.vertex.size() == 1);
  CHECK(s.vertex[0] == 1.0);
  CHECK(s.active_set == std::vector<std::size_t>{0});
}

TEST_CASE("degenerate optimal face resolves to the lexicographically smallest vertex") {
  LpProblem p(Sense::Maximize, RowSense::LessEqual, {1, 1}, {{1, 1}}, {1});
  auto s = solve(p);
  CHECK(s.value == 1.0);
  CHECK(s.vertex == std::vector<double>{0.0, 1.0});
}

TEST_CASE("minimize over >= rows") {
  // min x + y s.t. x + 2y >= 2, 3x + y >= 3
  LpProblem p(Sense::Minimize, RowSense::GreaterEqual, {1, 1}, {{1, 2}, {3, 1}}, {2, 3});
  auto s = solve(p);
  CHECK(s.value == doctest::Approx(1.4).epsilon(1e-14));
  CHECK(s.vertex[0] == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(s.vertex[1] == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(p.is_feasible(s.vertex));
}

TEST_CASE("infeasible and unbounded problems") {
  LpProblem infeasible(Sense::Maximize, RowSense::LessEqual, {1}, {{1}}, {-1});
  CHECK_THROWS_AS(solve(infeasible), Infeasible);
  LpProblem free_var(Sense::Maximize, RowSense::LessEqual, {1, 1}, {{1, 0}}, {1});
  CHECK_THROWS_AS(solve(free_var), Unbounded);
  // every variable appears positively but x - y <= 1 leaves the ray (1,1)
  LpProblem ray(Sense::Maximize, RowSense::LessEqual, {1, 1}, {{1, -1}, {-1, 1}}, {1, 1});
  CHECK_THROWS_AS(solve(ray), Unbounded);
  LpProblem min_unbounded(Sense::Minimize, RowSense::GreaterEqual, {-1}, {{1}}, {1});
  CHECK_THROWS_AS(solve(min_unbounded), Unbounded);
  // a zero objective coefficient on an unblocked variable is still bounded
  LpProblem zero(Sense::Maximize, RowSense::LessEqual, {1, 0}, {{1, 0}}, {2});
  CHECK(solve(zero).value == 2.0);
}

TEST_CASE("construction checks") {
  CHECK_THROWS_AS(LpProblem(0, 1, Sense::Maximize, RowSense::LessEqual), std::invalid_argument);
  CHECK_THROWS_AS(LpProblem(9, 1, Sense::Maximize, RowSense::LessEqual), std::invalid_argument);
  CHECK_THROWS_AS(LpProblem(Sense::Maximize, RowSense::LessEqual, {1, 1}, {{1}}, {1}),
                  std::invalid_argument);
  LpProblem p(Sense::Maximize, RowSense::LessEqual, {1}, {{1}}, {1});
  p.set_coeff(0, 0, NAN);
  CHECK_THROWS_AS(solve(p), std::invalid_argument);
}

TEST_CASE("cut-set dual instance matches the rational oracle") {
  // oracle: 16/5 with gamma = 1
  AsyncParams params(kUnitGammaN0, 1.0);
  ChannelGains g(1, 0.5, 1, 0.5);
  auto dual = solve(cutset_dual_lp(g, params));
  CHECK(std::abs(dual.value - 3.2) <= 1e-9);
  auto primal = solve(cutset_primal_lp(g, params));
  CHECK(std::abs(primal.value - 3.2) <= 1e-9);
  CHECK(duality_gap(cutset_primal_lp(g, params), cutset_dual_lp(g, params)) <= 1e-9);
  // synchronized-relay pair: oracle gives 4
  CHECK(std::abs(solve(sync_dual_lp(g, params)).value - 4.0) <= 1e-9);
  CHECK(std::abs(solve(sync_primal_lp(g, params)).value - 4.0) <= 1e-9);
}

TEST_CASE("unit diamond at beta 0 matches the rational oracle") {
  // oracle: 5/4 for both primal and dual
  AsyncParams params(kUnitGammaN0, 0.0);
  ChannelGains g(1, 1, 1, 1);
  CHECK(std::abs(solve(cutset_dual_lp(g, params)).value - 1.25) <= 1e-9);
  CHECK(std::abs(solve(cutset_primal_lp(g, params)).value - 1.25) <= 1e-9);
  CHECK(duality_gap(cutset_primal_lp(g, params), cutset_dual_lp(g, params)) <= 1e-9);
}

TEST_CASE("random small LPs agree with exact enumeration") {
  RandomStream rng(2024);
  int bounded = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.uniform_int(0, 3);
    const std::size_t m = 1 + rng.uniform_int(0, 3);
    const bool mixed = trial % 2 == 1;
    oracle::RationalLp r;
    for (std::size_t j = 0; j < n; ++j) r.c.push_back(oracle::Rational(rng.uniform_int(0, 9)));
    for (std::size_t i = 0; i < m; ++i) {
      oracle::RVec row;
      for (std::size_t j = 0; j < n; ++j) {
        auto v = oracle::Rational(static_cast<long>(rng.uniform_int(0, 8)));
        if (mixed) v -= 3;
        row.push_back(v);
      }
      r.a.push_back(row);
      auto rhs = oracle::Rational(static_cast<long>(rng.uniform_int(1, 9)));
      if (mixed) rhs -= 2;
      r.b.push_back(rhs);
    }
    // a box row keeps every instance bounded
    r.a.push_back(oracle::RVec(n, oracle::Rational(1)));
    r.b.push_back(20);
    const auto exact = oracle::max_over_vertices(r);
    const LpProblem p = from_oracle(r);
    if (!exact) {
      CHECK_THROWS_AS(solve(p), Infeasible);
      ++infeasible;
      continue;
    }
    ++bounded;
    const auto s = solve(p);
    const double ref = oracle::to_double(exact->value);
    CHECK(std::abs(s.value - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
    CHECK(p.is_feasible(s.vertex));
    CHECK(std::abs(p.evaluate(s.vertex) - s.value) <= 1e-12 * std::max(1.0, std::abs(s.value)));
  }
  CHECK(bounded > 100);
  CHECK(infeasible > 5);
}

TEST_CASE("scaling the rhs scales the optimum") {
  RandomStream rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    LpProblem p(4, 3, Sense::Maximize, RowSense::LessEqual);
    for (std::size_t j = 0; j < 4; ++j) p.set_objective(j, rng.uniform_open());
    for (std::size_t i = 0; i < 3; ++i) {
      p.set_rhs(i, rng.uniform_open());
      for (std::size_t j = 0; j < 4; ++j) p.set_coeff(i, j, 0.01 + rng.uniform());
    }
    const double c = std::pow(10.0, 4 * rng.uniform() - 2);
    LpProblem q = p;
    for (std::size_t i = 0; i < 3; ++i) q.set_rhs(i, c * p.rhs(i));
    const double a = solve(p).value * c;
    const double b = solve(q).value;
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
  }
}

TEST_CASE("optimum dominates supplied feasible points") {
  RandomStream rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    LpProblem p(3, 3, Sense::Maximize, RowSense::LessEqual);
    for (std::size_t j = 0; j < 3; ++j) p.set_objective(j, rng.uniform_open());
    for (std::size_t i = 0; i < 3; ++i) {
      p.set_rhs(i, 1.0);
      for (std::size_t j = 0; j < 3; ++j) p.set_coeff(i, j, 0.05 + rng.uniform());
    }
    const double opt = solve(p).value;
    for (int k = 0; k < 20; ++k) {
      std::array<double, 3> x{rng.uniform(), rng.uniform(), rng.uniform()};
      if (!p.is_feasible(x)) continue;
      CHECK(opt >= p.evaluate(x) - 1e-9);
    }
  }
}

TEST_CASE("solve is deterministic") {
  AsyncParams params(1.0, 0.7);
  ChannelGains g(0.3, 0.9, 2.1, 0.04);
  auto a = solve(sync_dual_lp(g, params));
  auto b = solve(sync_dual_lp(g, params));
  CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
  CHECK(a.vertex == b.vertex);
  CHECK(a.active_set == b.active_set);
}
