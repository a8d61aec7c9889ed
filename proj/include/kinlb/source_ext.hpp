#pragma once

#include <span>
#include <vector>

#include "kinlb/kinetic_core.hpp"
#include "kinlb/source_model.hpp"

namespace kinlb {

/// Effective populations F_n = f_n - r_n / 2 carried through streaming when
/// a source is active.
struct EffectivePopulations {
  DistributionField values;
};

/// Mesoscopic source populations r_n, weighted like the flux-decomposed
/// equilibrium but with the split wave speeds:
///   sum_n r_n = dt s,   sum_n v_n^(d) r_n = dt a_d s.
void source_populations_into(double u, const Position& x, const FluxModel& model,
                             const SourceModel& source, const VelocitySet& vset, double dt,
                             std::span<double> out);
std::vector<double> source_populations(double u, const Position& x, const FluxModel& model,
                                       const SourceModel& source, const VelocitySet& vset,
                                       double dt);

/// F* = (1 - omega) f + omega f_eq(u) + r(u) / 2
EffectivePopulations collide_with_source(const DistributionField& f, const ScalarField& u,
                                         const FluxModel& model, const SourceModel& source,
                                         const VelocitySet& vset, double omega, double dt);

/// Solve u - (dt/2) s(u; x) = F_sum. Newton from `u_guess` (50 iterations),
/// then bisection on [u_guess - K, u_guess + K] with K doubling up to 60 times.
/// `cell` only labels the error.
double moment_invert(double f_sum, const Position& x, const SourceModel& source, double dt,
                     double u_guess, long cell = -1);

/// One collide -> stream -> invert -> recover step of the source scheme.
void step_with_source(LatticeState& state, const FluxModel& model, const SourceModel& source,
                      const SolverConfig& config);

/// Dirichlet populations for the source scheme, in effective form
/// f_eq(value) - r(value) / 2, so that inversion returns `value` and recovery
/// restores f_eq(value).
BoundaryPopulations source_boundary(const FluxModel& model, const SourceModel& source,
                                    const VelocitySet& vset, double dt);

RunResult run_with_source(const Problem& problem, const Grid& grid, const SolverConfig& config,
                          const StepObserver& observer = {});

/// Runs the source scheme when the problem has a source, the homogeneous one otherwise.
RunResult solve(const Problem& problem, const Grid& grid, const SolverConfig& config,
                const StepObserver& observer = {});

}  // namespace kinlb
