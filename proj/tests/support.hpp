#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "kinlb/grid.hpp"

#include "kinlb/problem.hpp"

namespace kinlb::test {

inline Problem periodic_1d(FluxModel flux, int n, double length,
                           std::function<double(const Position&)> initial, double t_end) {
  Problem p;
  p.id = "test-periodic-1d";
  p.dim = 1;
  p.domain = {{0.0, 0.0}, {length, 0.0}};
  p.extent = {n, 1};
  p.initial = std::move(initial);
  p.boundary = {BoundaryCondition::periodic(), BoundaryCondition::periodic(),
                BoundaryCondition::outflow(), BoundaryCondition::outflow()};
  p.flux = std::move(flux);
  p.t_end = t_end;
  return p;
}

inline Problem periodic_2d(FluxModel flux, int n, std::function<double(const Position&)> initial,
                           double t_end) {
  Problem p;
  p.id = "test-periodic-2d";
  p.dim = 2;
  p.domain = {{0.0, 0.0}, {1.0, 1.0}};
  p.extent = {n, n};
  p.initial = std::move(initial);
  p.boundary = {BoundaryCondition::periodic(), BoundaryCondition::periodic(),
                BoundaryCondition::periodic(), BoundaryCondition::periodic()};
  p.flux = std::move(flux);
  p.t_end = t_end;
  return p;
}

/// Independent root finder: plain bisection on [lo, hi], no derivative.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iterations = 200) {
  double flo = f(lo);
  for (int k = 0; k < iterations; ++k) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// First x where the 1D field crosses `level` (linear interpolation), NaN if none.
inline double crossing(const ScalarField& u, double level) {
  const Grid& g = u.grid();
  for (int i = 0; i + 1 < g.extent(0); ++i) {
    const double a = u.at(i) - level;
    const double b = u.at(i + 1) - level;
    if (a == 0.0) return g.position(i)[0];
    if ((a > 0.0) != (b > 0.0)) return g.position(i)[0] + a / (a - b) * g.dx();
  }
  return NAN;
}

/// Classic RK4 for du/dx = rhs(x) from (x0, u0) to x1.
inline double integrate_ode(const std::function<double(double)>& rhs, double x0, double u0,
                            double x1, int steps = 2000) {
  const double h = (x1 - x0) / steps;
  double u = u0;
  for (int k = 0; k < steps; ++k) {
    const double x = x0 + k * h;
    u += h / 6.0 * (rhs(x) + 4.0 * rhs(x + 0.5 * h) + rhs(x + h));
  }
  return u;
}

struct EmbidCheck {
  double shock = NAN;          // zero crossing of the computed field
  double branch_error = NAN;   // max |u - branch| outside the shock cells
  double jump_sum = NAN;       // u_L + u_R, each side extrapolated to the shock
};

/// Compares a steady Embid field with the branches of du/dx = 6x - 3 started
/// from u(0) = 1 and u(1) = -0.1.
inline EmbidCheck check_embid(const ScalarField& u) {
  const Grid& g = u.grid();
  const int n = g.extent(0);
  const double dx = g.dx();
  auto rhs = [](double x) { return 6.0 * x - 3.0; };
  EmbidCheck out;
  out.shock = crossing(u, 0.0);
  if (std::isnan(out.shock)) return out;
  const int c = static_cast<int>(std::lround((out.shock - g.domain().lo[0]) / dx));
  out.branch_error = 0.0;
  for (int i = 0; i < n; ++i) {
    if (std::abs(i - c) <= 1) continue;
    const double x = g.position(i)[0];
    const double branch = x < out.shock ? integrate_ode(rhs, 0.0, 1.0, x)
                                        : integrate_ode(rhs, 1.0, -0.1, x);
    out.branch_error = std::max(out.branch_error, std::abs(u.at(i) - branch));
  }
  auto extrapolate = [&](int near, int far) {
    const double xn = g.position(near)[0];
    const double slope = (u.at(near) - u.at(far)) / (xn - g.position(far)[0]);
    return u.at(near) + slope * (out.shock - xn);
  };
  out.jump_sum = extrapolate(c - 2, c - 3) + extrapolate(c + 2, c + 3);
  return out;
}

}  // namespace kinlb::test
