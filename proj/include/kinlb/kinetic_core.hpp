#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "kinlb/boundary.hpp"
#include "kinlb/diagnostics.hpp"
#include "kinlb/flux_split.hpp"
#include "kinlb/grid.hpp"
#include "kinlb/problem.hpp"

namespace kinlb {

/// D-dimensional velocity set with N = 2D+1 populations:
///   n <  D      : +lambda along axis n
///   n == D      : rest
///   n >  D      : -lambda along axis n-D-1
struct VelocitySet {
  int dim = 1;
  int count = 3;
  double lambda = 1.0;
  std::vector<std::array<double, 2>> velocity;

  int axis(int n) const { return n < dim ? n : n - dim - 1; }
  /// +1, 0 or -1: lattice cells moved per step along axis(n).
  int shift(int n) const { return n < dim ? 1 : (n == dim ? 0 : -1); }
  int rest() const { return dim; }
  /// Population entering the domain through `side`.
  int entering(Side side) const;
};

VelocitySet build_velocity_set(int dim, double lambda);

struct SolverConfig {
  double lambda = 1.0;
  double omega = 1.0;
  double dx = 1.0;
  double t_end = 0.0;
  bool steady = false;
  double steady_tol = 1e-10;
  long max_steps = 1'000'000;
  BoundarySet boundary;

  /// Time step, always derived so that dt * lambda == dx.
  double dt() const { return dx / lambda; }
  void validate(int dim) const;
};

/// User-facing knobs from which a SolverConfig is derived.
struct RunOptions {
  double omega = 1.0;
  std::optional<double> lambda_safety;  // default: the problem's, else 1.05
  std::optional<double> lambda;
  std::optional<double> t_end;
  std::optional<double> steady_tol;
  std::optional<long> max_steps;
};

/// Lattice speed for a problem on a grid: safety * sampled wave-speed bound
/// (1D: sup|a|; 2D: sup(|a1|+|a2|)), verified against the diffusion-matrix
/// PSD condition in 2D (raised by 10% up to 5 times), then raised so that a
/// transient run ends on a whole number of steps.
double select_lambda(const Problem& problem, const Grid& grid, double safety,
                     std::optional<double> t_end = std::nullopt);

/// True when the diffusion matrix is PSD at all sampled (u, x).
bool lambda_passes_psd(const FluxModel& model, double lambda, Interval range, const Box& domain);

SolverConfig configure(const Problem& problem, const Grid& grid, const RunOptions& options = {});

// --- per-cell kernels -------------------------------------------------------

void equilibrium_into(double u, const Position& x, const FluxModel& model,
                      const VelocitySet& vset, std::span<double> out);
std::vector<double> equilibrium(double u, const Position& x, const FluxModel& model,
                                const VelocitySet& vset);
double moment0(std::span<const double> f);
double moment1(std::span<const double> f, int d, const VelocitySet& vset);

// --- field kernels ----------------------------------------------------------

DistributionField equilibrium_field(const ScalarField& u, const FluxModel& model,
                                    const VelocitySet& vset);

/// out = (1 - omega) f + omega f_eq(u). `out` may alias `f`.
void collide_into(const DistributionField& f, const ScalarField& u, const FluxModel& model,
                  const VelocitySet& vset, double omega, DistributionField& out);
DistributionField collide(const DistributionField& f, const ScalarField& u,
                          const FluxModel& model, const VelocitySet& vset, double omega);

/// Shift every moving population one cell along its velocity. Periodic axes
/// wrap; cells with no upstream value on bounded axes keep their previous
/// `dst` content until apply_bc fills them. Pure copies, no arithmetic.
void stream(const DistributionField& src, const VelocitySet& vset, const BoundarySet& bc,
            DistributionField& dst);

/// Populations of a Dirichlet lattice point at x holding boundary state `value`.
using BoundaryPopulations =
    std::function<void(const Position& x, double value, std::span<double> out)>;

/// Non-periodic sides after streaming. Outflow: the entering population is
/// copied from the adjacent interior point. Dirichlet: every population of the
/// boundary point is replaced by `boundary(x, value(x))`.
void apply_bc(DistributionField& f, const VelocitySet& vset, const BoundarySet& bc,
              const BoundaryPopulations& boundary);

/// Dirichlet populations for the homogeneous scheme: plain equilibrium.
BoundaryPopulations equilibrium_boundary(const FluxModel& model, const VelocitySet& vset);

void moments_into(const DistributionField& f, ScalarField& u);

// --- time stepping ----------------------------------------------------------

struct LatticeState {
  VelocitySet vset;
  DistributionField f;
  DistributionField scratch;
  ScalarField u;
  double t = 0.0;
  long step = 0;
};

/// f = f_eq(u0), t = 0.
LatticeState initialize(const Problem& problem, const Grid& grid, const SolverConfig& config);

/// One collide -> stream -> apply_bc -> moment step.
void step(LatticeState& state, const FluxModel& model, const SolverConfig& config);

struct RunResult {
  ScalarField u;
  RunReport report;
};

using StepObserver = std::function<void(long step, double t, const ScalarField& u)>;

/// Homogeneous run on `grid`; throws InvalidInput when the problem has a source.
RunResult run(const Problem& problem, const Grid& grid, const SolverConfig& config,
              const StepObserver& observer = {});

}  // namespace kinlb
