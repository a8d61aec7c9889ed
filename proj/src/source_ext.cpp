#include "kinlb/source_ext.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "kinlb/error.hpp"
#include "kinlb/time_loop.hpp"

namespace kinlb {

namespace {

constexpr double kInversionTolerance = 1e-12;
constexpr int kNewtonIterations = 50;
constexpr int kBracketDoublings = 60;

}  // namespace

void source_populations_into(double u, const Position& x, const FluxModel& model,
                             const SourceModel& source, const VelocitySet& vset, double dt,
                             std::span<double> out) {
  const int dim = vset.dim;
  const double weight = dt * source.value(u, x);
  double rest = 1.0;
  for (int d = 0; d < dim; ++d) {
    const WaveSplit a = wave_speed_split(model.wave_speed(d, u, x));
    out[d] = weight * a.plus / vset.lambda;
    out[dim + 1 + d] = weight * a.minus / vset.lambda;
    rest -= (a.plus + a.minus) / vset.lambda;
  }
  out[dim] = weight * rest;
}

std::vector<double> source_populations(double u, const Position& x, const FluxModel& model,
                                       const SourceModel& source, const VelocitySet& vset,
                                       double dt) {
  std::vector<double> r(vset.count);
  source_populations_into(u, x, model, source, vset, dt, r);
  return r;
}

EffectivePopulations collide_with_source(const DistributionField& f, const ScalarField& u,
                                         const FluxModel& model, const SourceModel& source,
                                         const VelocitySet& vset, double omega, double dt) {
  EffectivePopulations out{DistributionField(f.grid(), f.populations())};
  std::array<double, 5> feq{}, r{};
  for (std::size_t c = 0; c < u.size(); ++c) {
    const Position x = u.grid().position(c);
    equilibrium_into(u[c], x, model, vset, std::span(feq.data(), vset.count));
    source_populations_into(u[c], x, model, source, vset, dt, std::span(r.data(), vset.count));
    for (int n = 0; n < vset.count; ++n) {
      out.values(n, c) = (1.0 - omega) * f(n, c) + omega * feq[n] + 0.5 * r[n];
    }
  }
  return out;
}

double moment_invert(double f_sum, const Position& x, const SourceModel& source, double dt,
                     double u_guess, long cell) {
  if (!(dt > 0.0)) throw InvalidInput("dt must be positive");
  const double half = 0.5 * dt;
  auto residual = [&](double u) { return u - half * source.value(u, x) - f_sum; };

  double u = u_guess;
  for (int it = 0; it < kNewtonIterations; ++it) {
    const double h = residual(u);
    if (!std::isfinite(h)) break;
    if (it > 0 && std::abs(h) < kInversionTolerance) return u;
    const double dh = 1.0 - half * source.derivative(u, x);
    if (!std::isfinite(dh) || dh == 0.0) break;
    const double next = u - h / dh;
    if (!std::isfinite(next)) break;
    u = next;
  }
  if (std::isfinite(u) && std::abs(residual(u)) < kInversionTolerance) return u;

  // Newton failed: bracket around the guess and bisect.
  double half_width = 1.0;
  for (int k = 0; k <= kBracketDoublings; ++k, half_width *= 2.0) {
    double lo = u_guess - half_width;
    double hi = u_guess + half_width;
    double h_lo = residual(lo);
    const double h_hi = residual(hi);
    if (!std::isfinite(h_lo) || !std::isfinite(h_hi) || (h_lo > 0.0) == (h_hi > 0.0)) continue;
    for (int it = 0; it < 400; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double h_mid = residual(mid);
      if (h_mid == 0.0) return mid;
      if ((h_mid > 0.0) == (h_lo > 0.0)) {
        lo = mid;
        h_lo = h_mid;
      } else {
        hi = mid;
      }
    }
    const double root = std::abs(residual(lo)) < std::abs(residual(hi)) ? lo : hi;
    const double r = std::abs(residual(root));
    if (r <= kInversionTolerance * std::max(1.0, std::abs(root))) return root;
    throw InversionError("moment inversion stalled at cell " + std::to_string(cell) +
                             ", residual " + std::to_string(r),
                         cell, r);
  }
  const double r = std::abs(residual(u_guess));
  throw InversionError("moment inversion found no root at cell " + std::to_string(cell) +
                           ", residual " + std::to_string(r),
                       cell, r);
}

BoundaryPopulations source_boundary(const FluxModel& model, const SourceModel& source,
                                    const VelocitySet& vset, double dt) {
  return [&model, &source, &vset, dt](const Position& x, double value, std::span<double> out) {
    std::array<double, 5> r{};
    equilibrium_into(value, x, model, vset, out);
    source_populations_into(value, x, model, source, vset, dt, std::span(r.data(), vset.count));
    for (int n = 0; n < vset.count; ++n) out[n] -= 0.5 * r[n];
  };
}

void step_with_source(LatticeState& state, const FluxModel& model, const SourceModel& source,
                      const SolverConfig& config) {
  const auto& grid = state.u.grid();
  const auto& vset = state.vset;
  const double dt = config.dt();
  const double omega = config.omega;
  std::array<double, 5> feq{}, r{};

  // Collision into effective populations, in place.
  for (std::size_t c = 0; c < grid.size(); ++c) {
    const Position x = grid.position(c);
    equilibrium_into(state.u[c], x, model, vset, std::span(feq.data(), vset.count));
    source_populations_into(state.u[c], x, model, source, vset, dt,
                            std::span(r.data(), vset.count));
    for (int n = 0; n < vset.count; ++n) {
      state.f(n, c) = (1.0 - omega) * state.f(n, c) + omega * feq[n] + 0.5 * r[n];
    }
  }
  stream(state.f, vset, config.boundary, state.scratch);
  apply_bc(state.scratch, vset, config.boundary, source_boundary(model, source, vset, dt));

  // Recover u from sum F = u - dt/2 s(u), then f = F + r(u)/2.
  for (std::size_t c = 0; c < grid.size(); ++c) {
    const Position x = grid.position(c);
    double f_sum = 0.0;
    for (int n = 0; n < vset.count; ++n) f_sum += state.scratch(n, c);
    const double u = moment_invert(f_sum, x, source, dt, state.u[c], static_cast<long>(c));
    source_populations_into(u, x, model, source, vset, dt, std::span(r.data(), vset.count));
    for (int n = 0; n < vset.count; ++n) state.scratch(n, c) += 0.5 * r[n];
    state.u[c] = u;
  }
  std::swap(state.f, state.scratch);
  ++state.step;
  state.t = state.step * dt;
}

RunResult run_with_source(const Problem& problem, const Grid& grid, const SolverConfig& config,
                          const StepObserver& observer) {
  if (!problem.source) throw InvalidInput("problem has no source term");
  LatticeState state = initialize(problem, grid, config);
  const SourceModel& source = *problem.source;
  return detail::drive(
      problem, config, state.u,
      [&]() -> const ScalarField& {
        step_with_source(state, problem.flux, source, config);
        return state.u;
      },
      observer);
}

RunResult solve(const Problem& problem, const Grid& grid, const SolverConfig& config,
                const StepObserver& observer) {
  return problem.source ? run_with_source(problem, grid, config, observer)
                        : run(problem, grid, config, observer);
}

}  // namespace kinlb
