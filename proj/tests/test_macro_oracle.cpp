#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "kinlb/diagnostics.hpp"
#include "kinlb/error.hpp"
#include "kinlb/macro_oracle.hpp"
#include "kinlb/problems.hpp"
#include "support.hpp"

using namespace kinlb;
using kinlb::test::periodic_1d;

namespace {

SolverConfig config_for(const Grid& g, double lambda, BoundarySet bc) {
  SolverConfig c;
  c.lambda = lambda;
  c.dx = g.dx();
  c.boundary = std::move(bc);
  return c;
}

BoundarySet periodic_x() {
  return {BoundaryCondition::periodic(), BoundaryCondition::periodic(),
          BoundaryCondition::outflow(), BoundaryCondition::outflow()};
}

// EO for Burgers written out longhand: g+ = max(u,0)^2/2, g- = -min(u,0)^2/2.
double eo_burgers_cell(double ul, double uc, double ur, double r) {
  auto gp = [](double u) { return u > 0 ? 0.5 * u * u : 0.0; };
  auto gm = [](double u) { return u < 0 ? -0.5 * u * u : 0.0; };
  return uc - r * (gp(uc) - gp(ul)) + r * (gm(ur) - gm(uc));
}

}  // namespace

TEST(EoUpdate, LinearCflOneIsShift) {
  const Grid g(1, {10, 1}, {{0, 0}, {1, 0}}, {true, false});
  ScalarField u(g);
  for (std::size_t c = 0; c < g.size(); ++c) u[c] = std::sqrt(static_cast<double>(c) + 0.5);
  const auto next = eo_update(u, FluxModel::linear({1.0}), config_for(g, 1.0, periodic_x()));
  for (int i = 0; i < 10; ++i) EXPECT_EQ(next.at(i), u.at((i + 9) % 10));
}

TEST(EoUpdate, ConstantStateIsFixed) {
  const Grid g(1, {9, 1}, {{0, 0}, {1, 0}}, {false, false});
  ScalarField u(g, -0.7);
  const BoundarySet bc{BoundaryCondition::dirichlet(-0.7), BoundaryCondition::outflow(),
                       BoundaryCondition::outflow(), BoundaryCondition::outflow()};
  const auto next = eo_update(u, FluxModel::burgers(), config_for(g, 1.0, bc));
  for (std::size_t c = 0; c < g.size(); ++c) EXPECT_EQ(next[c], -0.7);
}

TEST(EoUpdate, StationaryShockWithSonicCell) {
  // 1, 0, -1 across the shock: interface flux g+(1) + g-(0) = 0.5 on both sides of the middle cell
  const Grid g(1, {7, 1}, {{0, 0}, {6, 0}}, {false, false});
  const std::vector<double> init{1, 1, 1, 0, -1, -1, -1};
  ScalarField u(g);
  for (int i = 0; i < 7; ++i) u.at(i) = init[i];
  const BoundarySet bc{BoundaryCondition::dirichlet(1.0), BoundaryCondition::dirichlet(-1.0),
                       BoundaryCondition::outflow(), BoundaryCondition::outflow()};
  const auto cfg = config_for(g, 1.0, bc);
  const auto next = eo_update(u, FluxModel::burgers(), cfg);
  for (int i = 1; i < 6; ++i) {
    EXPECT_EQ(eo_burgers_cell(init[i - 1], init[i], init[i + 1], 1.0), init[i]);
    EXPECT_EQ(next.at(i), init[i]) << i;
  }

  // a bare (1, -1) pair is not a discrete steady state: both cells move toward 0
  EXPECT_EQ(eo_burgers_cell(1, 1, -1, 1.0), 0.5);
  EXPECT_EQ(eo_burgers_cell(1, -1, -1, 1.0), -0.5);
}

TEST(EoUpdate, MatchesLonghandBurgers) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const Grid g(1, {30, 1}, {{0, 0}, {1, 0}}, {true, false});
  ScalarField u(g);
  for (std::size_t c = 0; c < g.size(); ++c) u[c] = d(rng);
  const double lambda = 1.25;
  const auto next = eo_update(u, FluxModel::burgers(), config_for(g, lambda, periodic_x()));
  for (int i = 0; i < 30; ++i) {
    const double want = eo_burgers_cell(u.at((i + 29) % 30), u.at(i), u.at((i + 1) % 30), 1.0 / lambda);
    EXPECT_NEAR(next.at(i), want, 1e-15);
  }
}

TEST(EoUpdate, RejectsCflViolation) {
  const Grid g(1, {8, 1}, {{0, 0}, {1, 0}}, {true, false});
  ScalarField u(g, 2.0);
  EXPECT_THROW(eo_update(u, FluxModel::burgers(), config_for(g, 1.5, periodic_x())), CflViolation);
}

TEST(EoRun, MonotoneOnRandomPairs) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::uniform_real_distribution<double> gap(0.0, 0.5);
  const Grid g(1, {32, 1}, {{0, 0}, {1, 0}}, {true, false});
  const auto model = FluxModel::burgers();
  const auto cfg = config_for(g, 1.6, periodic_x());
  for (int trial = 0; trial < 50; ++trial) {
    ScalarField u(g), v(g);
    for (std::size_t c = 0; c < g.size(); ++c) {
      u[c] = d(rng);
      v[c] = u[c] + gap(rng);
    }
    for (int m = 0; m < 10; ++m) {
      u = eo_update(u, model, cfg);
      v = eo_update(v, model, cfg);
      for (std::size_t c = 0; c < g.size(); ++c) ASSERT_LE(u[c], v[c] + 1e-15);
    }
  }
}

TEST(EoRun, TvdAndConservative) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const Grid g(1, {64, 1}, {{0, 0}, {1, 0}}, {true, false});
  const auto model = FluxModel::burgers();
  const auto cfg = config_for(g, 1.05, periodic_x());
  for (int trial = 0; trial < 20; ++trial) {
    ScalarField u(g);
    for (std::size_t c = 0; c < g.size(); ++c) u[c] = d(rng);
    const double m0 = mass(u);
    for (int m = 0; m < 40; ++m) {
      const double tv = total_variation(u);
      u = eo_update(u, model, cfg);
      ASSERT_LE(total_variation(u), tv + 1e-12);
      ASSERT_NEAR(mass(u), m0, 1e-12 * std::max(1.0, std::abs(m0)));
    }
  }
}

TEST(EoRun, BurgersSineConvergesUnderRefinement) {
  double prev = INFINITY;
  for (int n : {40, 80}) {
    Problem p = make_problem("burgers-sine");
    p.extent = {n, 1};
    p.t_end = 0.5 / (2 * std::numbers::pi);
    const Grid g = make_grid(p);
    const auto res = eo_run(p, g, configure(p, g));
    const double l2 = *res.report.records.back().l2;
    EXPECT_LT(l2, prev) << n;
    prev = l2;
  }
}

TEST(EoRun, SonicFanIsMonotone) {
  const Problem p = make_problem("burgers-square-sonic");
  const Grid g = make_grid(p);
  const auto res = eo_run(p, g, configure(p, g));
  // left half holds the fan rising from -1 through 0 to 1
  int i = 0;
  while (g.position(i)[0] < -0.8) ++i;
  for (; g.position(i + 1)[0] <= 0.2; ++i) EXPECT_LE(res.u.at(i), res.u.at(i + 1) + 1e-14);
}

TEST(EoRun, RejectsSource) {
  const Problem p = make_problem("leveque-yee");
  const Grid g = make_grid(p);
  EXPECT_THROW(eo_run(p, g, configure(p, g)), InvalidInput);
}

TEST(CompareWithEo, OmegaOneAgreesOmegaOtherwiseDiffers) {
  const Problem p = make_problem("burgers-sine");
  const Grid g = make_grid(p);
  auto cmp = compare_with_eo(p, g, configure(p, g));
  EXPECT_LE(cmp.max_linf, 1e-12);
  EXPECT_EQ(cmp.steps.front().step, 0);
  RunOptions o;
  o.omega = 1.5;
  cmp = compare_with_eo(p, g, configure(p, g, o));
  EXPECT_GT(cmp.max_linf, 1e-6);
}
