#pragma once

#include <vector>

#include "kinlb/kinetic_core.hpp"

namespace kinlb {

/// One Engquist-Osher step with one ghost layer per side:
///   u_i - r sum_d [g+_d(u_i) - g+_d(u_{i-1,d})] + r sum_d [g-_d(u_{i+1,d}) - g-_d(u_i)],
/// r = dt/dx. Periodic axes wrap; on bounded axes the ghost carries the
/// boundary cell's own flux, and Dirichlet points are then reset to their value.
/// Throws CflViolation when dt/dx * |a_d| exceeds 1 anywhere.
ScalarField eo_update(const ScalarField& u, const FluxModel& model, const SolverConfig& config);

struct EoState {
  ScalarField u;
  double t = 0.0;
  long step = 0;
};

EoState eo_initialize(const Problem& problem, const Grid& grid);
void eo_step(EoState& state, const FluxModel& model, const SolverConfig& config);

RunResult eo_run(const Problem& problem, const Grid& grid, const SolverConfig& config,
                 const StepObserver& observer = {});

struct StepDifference {
  long step = 0;
  double t = 0.0;
  double linf = 0.0;
};

struct EoComparison {
  std::vector<StepDifference> steps;
  double max_linf = 0.0;
};

/// Advance the lattice solver and the EO scheme in lockstep from the same
/// initial field; record the L-infinity gap after every step.
EoComparison compare_with_eo(const Problem& problem, const Grid& grid, const SolverConfig& config);

}  // namespace kinlb
