#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kinlb/diagnostics.hpp"
#include "kinlb/error.hpp"
#include "kinlb/macro_oracle.hpp"
#include "kinlb/problems.hpp"
#include "kinlb/source_ext.hpp"
#include "support.hpp"

using namespace kinlb;
using std::numbers::pi;

namespace {

Grid line(int n, double lo = 0.0, double hi = 1.0, bool periodic = false) {
  return Grid(1, {n, 1}, {{lo, 0}, {hi, 0}}, {periodic, false});
}

}  // namespace

TEST(TotalVariation, Examples) {
  ScalarField step(line(6));
  for (int i = 3; i < 6; ++i) step.at(i) = 1.0;
  EXPECT_EQ(total_variation(step), 1.0);
  EXPECT_EQ(total_variation(ScalarField(line(6), 3.2)), 0.0);

  const Grid g = line(400, 0.0, 1.0, true);
  ScalarField s(g);
  for (int i = 0; i < 400; ++i) s.at(i) = std::sin(2 * pi * g.position(i)[0]);
  EXPECT_NEAR(total_variation(s), 4.0, 4.0 * 2 * pi * g.dx());
}

TEST(TotalVariation, Properties) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  const Grid g = line(50);
  for (int k = 0; k < 100; ++k) {
    ScalarField u(g), v(g);
    const double shift = d(rng);
    for (std::size_t c = 0; c < g.size(); ++c) {
      u[c] = d(rng);
      v[c] = u[c] + shift;
    }
    EXPECT_GT(total_variation(u), 0.0);
    EXPECT_NEAR(total_variation(u), total_variation(v), 1e-12);
  }
}

TEST(TotalVariation, RejectsTwoD) {
  const Grid g(2, {3, 3}, {{0, 0}, {1, 1}}, {false, false});
  EXPECT_THROW(total_variation(ScalarField(g)), InvalidInput);
  ScalarField u(g);
  u.at(1, 1) = 1.0;
  EXPECT_EQ(lattice_total_variation(u), 4.0);
}

TEST(Norms, Examples) {
  const Grid g = line(11);
  ScalarField u(g);
  for (std::size_t c = 0; c < g.size(); ++c) u[c] = std::exp(g.position(c)[0]);
  auto exact = [](const Position& x) { return std::exp(x[0]); };
  EXPECT_EQ(l2_error(u, exact), 0.0);
  EXPECT_EQ(linf_error(u, exact), 0.0);

  const double c = 0.3;
  auto offset = [&](const Position& x) { return std::exp(x[0]) - c; };
  EXPECT_NEAR(l2_error(u, offset), c * std::sqrt(11 * g.dx()), 1e-14);
  EXPECT_NEAR(linf_error(u, offset), c, 1e-14);
}

TEST(Norms, BurgersSineErrorRatio) {
  double e[2];
  int k = 0;
  for (int n : {40, 80}) {
    Problem p = make_problem("burgers-sine");
    p.extent = {n, 1};
    p.t_end = 0.5 / (2 * pi);
    const Grid g = make_grid(p);
    RunOptions o;
    o.omega = 1.99;
    e[k++] = *solve(p, g, configure(p, g, o)).report.records.back().l2;
  }
  EXPECT_GT(e[0] / e[1], 2.5);
}

TEST(Eoc, Examples) {
  EXPECT_NEAR(eoc(0.00979288, 0.00327174), 1.581675, 1e-5);
  EXPECT_EQ(eoc(0.2, 0.2), 0.0);
  EXPECT_DOUBLE_EQ(eoc(4e-3, 1e-3, 2.0), 2.0);
  for (double p : {0.5, 1.0, 1.7, 3.0}) EXPECT_NEAR(eoc(1.0, std::pow(2.0, -p)), p, 1e-14);
  EXPECT_THROW(eoc(0.0, 1.0), InvalidInput);
  EXPECT_THROW(eoc(1.0, -1.0), InvalidInput);
}

TEST(DiffusionMatrix, Examples) {
  const auto m = FluxModel::linear({1.0, 1.0});
  auto d = diffusion_matrix(0.5, {0, 0}, m, 1.0);
  EXPECT_EQ(d[0][0], 0.0);
  EXPECT_EQ(d[0][1], -1.0);
  EXPECT_EQ(d[1][0], -1.0);
  EXPECT_EQ(d[1][1], 0.0);
  EXPECT_FALSE(is_psd(d));

  d = diffusion_matrix(0.5, {0, 0}, m, 2.0);
  EXPECT_EQ(d[0][0], 1.0);
  EXPECT_EQ(d[1][1], 1.0);
  EXPECT_TRUE(is_psd(d));

  for (double lambda : {1.0, 1.5, 7.0}) {
    d = diffusion_matrix(0.5, {0, 0}, FluxModel::linear({1.0, 0.0}), lambda);
    EXPECT_EQ(d[0][0], lambda - 1.0);
    EXPECT_EQ(d[0][1], 0.0);
    EXPECT_EQ(d[1][1], 0.0);
    EXPECT_TRUE(is_psd(d));
  }
}

TEST(DiffusionMatrix, PsdAgreesWithEigenvalues) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> da(-2.0, 2.0);
  std::uniform_real_distribution<double> dl(0.0, 4.0);
  int disagreements = 0;
  for (int k = 0; k < 10000; ++k) {
    const double a1 = da(rng), a2 = da(rng), lambda = dl(rng);
    const auto m = FluxModel::linear({a1, a2});
    const auto d = diffusion_matrix(0.0, {0, 0}, m, lambda);
    // symmetric 2x2: eigenvalues tr/2 +- sqrt((a-c)^2/4 + b^2)
    const double tr = d[0][0] + d[1][1];
    const double disc = std::sqrt(0.25 * (d[0][0] - d[1][1]) * (d[0][0] - d[1][1]) + d[0][1] * d[1][0]);
    const double low = 0.5 * tr - disc;
    const bool eig_psd = low >= -1e-12;
    if (eig_psd != is_psd(d)) {
      // only the tolerance band may disagree
      if (std::abs(low) > 1e-9) ++disagreements;
    }
  }
  EXPECT_EQ(disagreements, 0);
}

TEST(ExactSolutions, BurgersSineSymmetryAndResidual) {
  for (double t : {0.0, 0.05, 0.1, 0.5 / (2 * pi), 0.15}) {
    EXPECT_NEAR(burgers_sine_exact(0.5, t), 0.0, 1e-15) << t;
    for (int k = 1; k < 200; ++k) {
      const double x = k / 200.0;
      const double u = burgers_sine_exact(x, t);
      ASSERT_LT(std::abs(u - std::sin(2 * pi * (x - u * t))), 1e-12) << x << " " << t;
    }
  }
}

TEST(ExactSolutions, BurgersSinePostShockBranch) {
  // after breaking (t > 1/(2 pi)) the jump sits at x = 1/2
  const double t = 0.25;
  EXPECT_GT(burgers_sine_exact(0.49, t), 0.5);
  EXPECT_LT(burgers_sine_exact(0.51, t), -0.5);
  for (int k = 1; k < 100; ++k) {
    const double x = k / 100.0;
    if (std::abs(x - 0.5) < 1e-12) continue;
    const double u = burgers_sine_exact(x, t);
    ASSERT_LT(std::abs(u - std::sin(2 * pi * (x - u * t))), 1e-12) << x;
  }
}

TEST(ExactSolutions, SquareWaves) {
  // shock at 1/3 + t/2
  EXPECT_EQ(burgers_square_exact(0.63, 0.6), 1.0);
  EXPECT_EQ(burgers_square_exact(0.64, 0.6), 0.0);
  EXPECT_NEAR(burgers_square_exact(0.0, 0.6), (0.0 + 1.0 / 3.0) / 0.6, 1e-15);

  // fine-grid EO run as an independent check of the shock position
  Problem p = make_problem("burgers-square");
  p.extent = {1601, 1};
  const Grid g = make_grid(p);
  const auto res = eo_run(p, g, configure(p, g));
  EXPECT_NEAR(test::crossing(res.u, 0.5), -1.0 / 3.0 + 0.5 * 0.6, 0.01);
  double shock = NAN;
  for (int i = g.extent(0) - 1; i > 0; --i) {
    if (res.u.at(i - 1) > 0.5 && res.u.at(i) <= 0.5) {
      shock = g.position(i)[0];
      break;
    }
  }
  EXPECT_NEAR(shock, 1.0 / 3.0 + 0.3, 0.01);

  // sonic case: stationary shock at 1/3
  EXPECT_EQ(burgers_square_sonic_exact(0.33, 0.3), 1.0);
  EXPECT_EQ(burgers_square_sonic_exact(0.34, 0.3), -1.0);
  EXPECT_NEAR(burgers_square_sonic_exact(-1.0 / 3.0, 0.3), 0.0, 1e-15);
  EXPECT_THROW(burgers_square_sonic_exact(0.0, 0.7), InvalidInput);
}

TEST(ExactSolutions, SpekreijseAndRotation) {
  EXPECT_EQ(spekreijse_angle_exact({0.2, 0.8}, 45.0), 1.0);
  EXPECT_EQ(spekreijse_angle_exact({0.8, 0.2}, 45.0), 0.0);
  EXPECT_EQ(spekreijse_semicircle_exact({-0.5, 0.0}), 1.0);
  EXPECT_EQ(spekreijse_semicircle_exact({0.0, 0.5}), 1.0);
  EXPECT_EQ(spekreijse_semicircle_exact({0.0, 0.2}), 0.0);
  EXPECT_EQ(spekreijse_semicircle_exact({0.7, 0.7}), 0.0);

  EXPECT_NEAR(solid_body_rotation_initial({0.5, 1.25}), 0.5, 1e-15);
  const double a = 1.0;
  const Position rotated{0.5 - std::sin(a) * 0.75, 0.5 + std::cos(a) * 0.75};
  EXPECT_NEAR(solid_body_rotation_exact(rotated, a), 0.5, 1e-14);
  EXPECT_NEAR(solid_body_rotation_exact({0.5, 1.25}, 2 * pi), 0.5, 1e-12);
}

TEST(ExactSolutions, Dispatch) {
  EXPECT_TRUE(has_exact_solution("burgers-sine"));
  EXPECT_TRUE(has_exact_solution("spekreijse-angle-30"));
  EXPECT_FALSE(has_exact_solution("embid"));
  EXPECT_FALSE(has_exact_solution("normal-shock"));
  EXPECT_THROW(exact_solution("nosuch", {0, 0}, 0.0), UnknownProblem);
  EXPECT_NEAR(exact_solution("linear-convection", {1.0, 0}, 2 * pi), std::pow(std::sin(1.0), 4), 1e-14);
}
