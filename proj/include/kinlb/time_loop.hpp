#pragma once

#include <chrono>
#include <cmath>
#include <string>

#include "kinlb/diagnostics.hpp"
#include "kinlb/error.hpp"
#include "kinlb/kinetic_core.hpp"
#include "kinlb/problem.hpp"

namespace kinlb::detail {

inline StepRecord record_of(const Problem& problem, const ScalarField& u, long step, double t) {
  StepRecord r{step, t, lattice_total_variation(u), mass(u), {}, {}};
  if (problem.has_exact()) {
    auto exact = [&](const Position& x) { return problem.exact(x, t); };
    r.l2 = l2_error(u, exact);
    r.linf = linf_error(u, exact);
  }
  return r;
}

/// Shared driver: transient runs stop once t_end - t <= 1e-8, steady runs
/// once the max change per step drops below steady_tol.
/// `advance()` performs one step and returns the new field.
template <class Advance>
RunResult drive(const Problem& problem, const SolverConfig& config, ScalarField u0,
                Advance&& advance, const StepObserver& observer) {
  const auto started = std::chrono::steady_clock::now();
  RunResult result{std::move(u0), {}};
  double t = 0.0;
  long n = 0;
  result.report.records.push_back(record_of(problem, result.u, 0, 0.0));
  if (observer) observer(0, 0.0, result.u);

  while (true) {
    if (config.steady) {
      if (n >= config.max_steps) {
        throw MaxStepsExceeded("steady state not reached within " +
                               std::to_string(config.max_steps) + " steps");
      }
    } else if (config.t_end - t <= 1e-8) {
      break;
    }
    const ScalarField& next = advance();
    ++n;
    t = n * config.dt();
    if (!config.steady && std::abs(config.t_end - t) <= 1e-8) t = config.t_end;

    double change = 0.0;
    for (std::size_t c = 0; c < next.size(); ++c) {
      if (!std::isfinite(next[c])) {
        throw InstabilityError("non-finite state at step " + std::to_string(n), n);
      }
      change = std::max(change, std::abs(next[c] - result.u[c]));
    }
    result.u = next;
    result.report.records.push_back(record_of(problem, result.u, n, t));
    if (observer) observer(n, t, result.u);
    if (config.steady && change < config.steady_tol) break;
  }
  result.report.steps = n;
  result.report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace kinlb::detail
