#include "kinlb/kinetic_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "kinlb/error.hpp"
#include "kinlb/time_loop.hpp"

namespace kinlb {

int VelocitySet::entering(Side side) const {
  switch (side) {
    case Side::XMin: return 0;
    case Side::XMax: return dim + 1;
    case Side::YMin: return 1;
    case Side::YMax: return dim + 2;
  }
  return 0;
}

VelocitySet build_velocity_set(int dim, double lambda) {
  if (dim != 1 && dim != 2) throw InvalidInput("unsupported dimension " + std::to_string(dim));
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidInput("lambda must be positive");
  VelocitySet v{dim, 2 * dim + 1, lambda, {}};
  v.velocity.assign(v.count, {0.0, 0.0});
  for (int d = 0; d < dim; ++d) {
    v.velocity[d][d] = lambda;
    v.velocity[dim + 1 + d][d] = -lambda;
  }
  return v;
}

void SolverConfig::validate(int dim) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidInput("lambda must be positive");
  if (!(omega > 0.0 && omega < 2.0)) throw InvalidInput("omega must lie in (0, 2)");
  if (!(dx > 0.0)) throw InvalidInput("dx must be positive");
  if (!(t_end >= 0.0)) throw InvalidInput("t_end must be non-negative");
  if (!(steady_tol > 0.0)) throw InvalidInput("steady_tol must be positive");
  if (max_steps <= 0) throw InvalidInput("max_steps must be positive");
  validate_boundaries(boundary, dim);
}

bool lambda_passes_psd(const FluxModel& model, double lambda, Interval range, const Box& domain) {
  constexpr int kStates = 1024;
  constexpr int kSpace = 33;
  const bool dependent = model.position_dependent(0) || model.position_dependent(1);
  const int nx = dependent ? kSpace : 1;
  for (int jy = 0; jy < nx; ++jy) {
    for (int ix = 0; ix < nx; ++ix) {
      Position x{0.5 * (domain.lo[0] + domain.hi[0]), 0.5 * (domain.lo[1] + domain.hi[1])};
      if (dependent) {
        x = {domain.lo[0] + (domain.hi[0] - domain.lo[0]) * ix / (kSpace - 1),
             domain.lo[1] + (domain.hi[1] - domain.lo[1]) * jy / (kSpace - 1)};
      }
      for (int k = 0; k < kStates; ++k) {
        const double u = range.lo + (range.hi - range.lo) * k / (kStates - 1);
        if (!is_psd(diffusion_matrix(u, x, model, lambda))) return false;
      }
    }
  }
  return true;
}

double select_lambda(const Problem& problem, const Grid& grid, double safety,
                     std::optional<double> t_end) {
  if (!(safety >= 1.0)) throw InvalidInput("lambda safety factor must be >= 1");
  const Interval range = admissible_range(problem, grid);
  const Box& domain = grid.domain();
  double sup = grid.dim() == 1 ? problem.flux.sup_speed(0, range, domain)
                               : problem.flux.sup_speed_sum(range, domain);
  if (!(sup > 0.0)) sup = 1.0;
  double lambda = safety * sup;

  if (grid.dim() == 2) {
    constexpr int kRetries = 5;
    int attempt = 0;
    while (!lambda_passes_psd(problem.flux, lambda, range, domain)) {
      if (++attempt > kRetries) {
        throw InvalidInput("no lambda found satisfying the diffusion-matrix PSD condition");
      }
      lambda *= 1.1;
    }
  }

  if (t_end && *t_end > 0.0) {
    const double steps = std::ceil(*t_end * lambda / grid.dx() - 1e-9);
    lambda = steps * grid.dx() / *t_end;
  }
  return lambda;
}

SolverConfig configure(const Problem& problem, const Grid& grid, const RunOptions& options) {
  SolverConfig cfg;
  cfg.omega = options.omega;
  cfg.dx = grid.dx();
  cfg.steady = problem.steady && !options.t_end;
  cfg.t_end = options.t_end.value_or(problem.t_end);
  cfg.steady_tol = options.steady_tol.value_or(cfg.steady_tol);
  cfg.max_steps = options.max_steps.value_or(cfg.max_steps);
  cfg.boundary = problem.boundary;
  if (options.lambda) {
    cfg.lambda = *options.lambda;
    const Interval range = admissible_range(problem, grid);
    for (int d = 0; d < grid.dim(); ++d) {
      if (cfg.lambda < problem.flux.sup_speed(d, range, grid.domain())) {
        throw InvalidInput("lambda is below the wave-speed bound of the flux");
      }
    }
  } else {
    cfg.lambda = select_lambda(problem, grid, options.lambda_safety.value_or(problem.lambda_safety),
                               cfg.steady ? std::nullopt : std::optional<double>(cfg.t_end));
  }
  cfg.validate(grid.dim());
  return cfg;
}

// ---------------------------------------------------------------------------

void equilibrium_into(double u, const Position& x, const FluxModel& model,
                      const VelocitySet& vset, std::span<double> out) {
  const int dim = vset.dim;
  double rest = u;
  for (int d = 0; d < dim; ++d) {
    const SplitFlux g = model.split(d, u, x);
    out[d] = g.plus / vset.lambda;
    out[dim + 1 + d] = g.minus / vset.lambda;
    rest -= (g.plus + g.minus) / vset.lambda;
  }
  out[dim] = rest;
}

std::vector<double> equilibrium(double u, const Position& x, const FluxModel& model,
                                const VelocitySet& vset) {
  if (model.dim() != vset.dim) throw InvalidInput("flux model and velocity set disagree on D");
  std::vector<double> f(vset.count);
  equilibrium_into(u, x, model, vset, f);
  return f;
}

double moment0(std::span<const double> f) {
  double sum = 0.0;
  for (double v : f) sum += v;
  return sum;
}

double moment1(std::span<const double> f, int d, const VelocitySet& vset) {
  if (d < 0 || d >= vset.dim) throw InvalidInput("direction out of range");
  double sum = 0.0;
  for (int n = 0; n < vset.count; ++n) sum += vset.velocity[n][d] * f[n];
  return sum;
}

DistributionField equilibrium_field(const ScalarField& u, const FluxModel& model,
                                    const VelocitySet& vset) {
  DistributionField f(u.grid(), vset.count);
  std::array<double, 5> feq{};
  for (std::size_t c = 0; c < u.size(); ++c) {
    equilibrium_into(u[c], u.grid().position(c), model, vset, std::span(feq.data(), vset.count));
    for (int n = 0; n < vset.count; ++n) f(n, c) = feq[n];
  }
  return f;
}

void collide_into(const DistributionField& f, const ScalarField& u, const FluxModel& model,
                  const VelocitySet& vset, double omega, DistributionField& out) {
  const auto& grid = u.grid();
  std::array<double, 5> feq{};
  for (std::size_t c = 0; c < u.size(); ++c) {
    equilibrium_into(u[c], grid.position(c), model, vset, std::span(feq.data(), vset.count));
    for (int n = 0; n < vset.count; ++n) out(n, c) = (1.0 - omega) * f(n, c) + omega * feq[n];
  }
}

DistributionField collide(const DistributionField& f, const ScalarField& u,
                          const FluxModel& model, const VelocitySet& vset, double omega) {
  DistributionField out(f.grid(), f.populations());
  collide_into(f, u, model, vset, omega, out);
  return out;
}

void stream(const DistributionField& src, const VelocitySet& vset, const BoundarySet& bc,
            DistributionField& dst) {
  const Grid& g = src.grid();
  const int nx = g.extent(0);
  const int ny = g.dim() > 1 ? g.extent(1) : 1;
  for (int n = 0; n < vset.count; ++n) {
    const auto in = src.plane(n);
    auto out = dst.plane(n);
    const int s = vset.shift(n);
    if (s == 0) {
      std::copy(in.begin(), in.end(), out.begin());
      continue;
    }
    const int axis = vset.axis(n);
    const bool wrap = on(bc, axis == 0 ? Side::XMin : Side::YMin).kind ==
                      BoundaryCondition::Kind::Periodic;
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        int si = i, sj = j;
        (axis == 0 ? si : sj) -= s;
        const int extent = axis == 0 ? nx : ny;
        int& moved = axis == 0 ? si : sj;
        if (moved < 0 || moved >= extent) {
          if (!wrap) continue;
          moved = (moved + extent) % extent;
        }
        out[g.index(i, j)] = in[g.index(si, sj)];
      }
    }
  }
}

void apply_bc(DistributionField& f, const VelocitySet& vset, const BoundarySet& bc,
              const BoundaryPopulations& boundary) {
  const Grid& g = f.grid();
  // outflow first so Dirichlet points keep their full population set
  for (int s = 0; s < 2 * g.dim(); ++s) {
    const Side side = static_cast<Side>(s);
    if (bc[s].kind != BoundaryCondition::Kind::Outflow) continue;
    const int n = vset.entering(side);
    const int axis = axis_of(side);
    const int inward = side == Side::XMin || side == Side::YMin ? 1 : -1;
    for (const auto& [i, j] : side_cells(g, side)) {
      const std::size_t from = axis == 0 ? g.index(i + inward, j) : g.index(i, j + inward);
      f(n, g.index(i, j)) = f(n, from);
    }
  }
  std::array<double, 5> buf{};
  for (int s = 0; s < 2 * g.dim(); ++s) {
    if (bc[s].kind != BoundaryCondition::Kind::Dirichlet) continue;
    for (const auto& [i, j] : side_cells(g, static_cast<Side>(s))) {
      const Position x = g.position(i, j);
      boundary(x, bc[s].value(x), std::span(buf.data(), vset.count));
      const std::size_t cell = g.index(i, j);
      for (int n = 0; n < vset.count; ++n) f(n, cell) = buf[n];
    }
  }
}

BoundaryPopulations equilibrium_boundary(const FluxModel& model, const VelocitySet& vset) {
  return [&model, &vset](const Position& x, double value, std::span<double> out) {
    equilibrium_into(value, x, model, vset, out);
  };
}

void moments_into(const DistributionField& f, ScalarField& u) {
  for (std::size_t c = 0; c < u.size(); ++c) {
    double sum = 0.0;
    for (int n = 0; n < f.populations(); ++n) sum += f(n, c);
    u[c] = sum;
  }
}

LatticeState initialize(const Problem& problem, const Grid& grid, const SolverConfig& config) {
  config.validate(grid.dim());
  if (problem.flux.dim() != grid.dim()) throw InvalidInput("flux dimension does not match grid");
  LatticeState s;
  s.vset = build_velocity_set(grid.dim(), config.lambda);
  s.u = ScalarField(grid);
  for (std::size_t c = 0; c < grid.size(); ++c) s.u[c] = problem.initial(grid.position(c));
  pin_dirichlet(s.u, config.boundary);
  if (!s.u.all_finite()) throw InvalidInput("initial condition is not finite");
  s.f = equilibrium_field(s.u, problem.flux, s.vset);
  s.scratch = s.f;
  return s;
}

void step(LatticeState& state, const FluxModel& model, const SolverConfig& config) {
  collide_into(state.f, state.u, model, state.vset, config.omega, state.f);
  stream(state.f, state.vset, config.boundary, state.scratch);
  apply_bc(state.scratch, state.vset, config.boundary, equilibrium_boundary(model, state.vset));
  std::swap(state.f, state.scratch);
  moments_into(state.f, state.u);
  ++state.step;
  state.t = state.step * config.dt();
}

RunResult run(const Problem& problem, const Grid& grid, const SolverConfig& config,
              const StepObserver& observer) {
  if (problem.source) throw InvalidInput("problem has a source term; use run_with_source");
  LatticeState state = initialize(problem, grid, config);
  return detail::drive(
      problem, config, state.u,
      [&]() -> const ScalarField& {
        step(state, problem.flux, config);
        return state.u;
      },
      observer);
}

}  // namespace kinlb
