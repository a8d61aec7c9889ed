#include "kinlb/macro_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "kinlb/error.hpp"
#include "kinlb/time_loop.hpp"

namespace kinlb {

ScalarField eo_update(const ScalarField& u, const FluxModel& model, const SolverConfig& config) {
  const Grid& g = u.grid();
  const int dim = g.dim();
  const int nx = g.extent(0);
  const int ny = dim > 1 ? g.extent(1) : 1;
  const double ratio = config.dt() / config.dx;

  std::vector<std::vector<SplitFlux>> split(dim, std::vector<SplitFlux>(g.size()));
  for (int d = 0; d < dim; ++d) {
    double sup = 0.0;
    for (std::size_t c = 0; c < g.size(); ++c) {
      const Position x = g.position(c);
      split[d][c] = model.split(d, u[c], x);
      sup = std::max(sup, std::abs(model.wave_speed(d, u[c], x)));
    }
    if (ratio * sup > 1.0 + 1e-12) {
      throw CflViolation("CFL number " + std::to_string(ratio * sup) + " exceeds 1 in direction " +
                         std::to_string(d + 1));
    }
  }

  ScalarField next(g);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t c = g.index(i, j);
      double value = u[c];
      for (int d = 0; d < dim; ++d) {
        const int extent = d == 0 ? nx : ny;
        const int pos = d == 0 ? i : j;
        const bool periodic = g.periodic(d);

        auto neighbour = [&](int p) {
          return d == 0 ? g.index(p, j) : g.index(i, p);
        };
        double plus_left, minus_right;
        if (pos > 0) {
          plus_left = split[d][neighbour(pos - 1)].plus;
        } else if (periodic) {
          plus_left = split[d][neighbour(extent - 1)].plus;
        } else {
          plus_left = split[d][c].plus;
        }
        if (pos < extent - 1) {
          minus_right = split[d][neighbour(pos + 1)].minus;
        } else if (periodic) {
          minus_right = split[d][neighbour(0)].minus;
        } else {
          minus_right = split[d][c].minus;
        }
        value -= ratio * (split[d][c].plus - plus_left);
        value += ratio * (minus_right - split[d][c].minus);
      }
      next[c] = value;
    }
  }
  pin_dirichlet(next, config.boundary);
  return next;
}

EoState eo_initialize(const Problem& problem, const Grid& grid) {
  EoState s{ScalarField(grid), 0.0, 0};
  for (std::size_t c = 0; c < grid.size(); ++c) s.u[c] = problem.initial(grid.position(c));
  pin_dirichlet(s.u, problem.boundary);
  return s;
}

void eo_step(EoState& state, const FluxModel& model, const SolverConfig& config) {
  state.u = eo_update(state.u, model, config);
  ++state.step;
  state.t = state.step * config.dt();
}

RunResult eo_run(const Problem& problem, const Grid& grid, const SolverConfig& config,
                 const StepObserver& observer) {
  if (problem.source) throw InvalidInput("the Engquist-Osher oracle has no source treatment");
  config.validate(grid.dim());
  EoState state = eo_initialize(problem, grid);
  return detail::drive(
      problem, config, state.u,
      [&]() -> const ScalarField& {
        eo_step(state, problem.flux, config);
        return state.u;
      },
      observer);
}

EoComparison compare_with_eo(const Problem& problem, const Grid& grid,
                             const SolverConfig& config) {
  if (problem.source) throw InvalidInput("the Engquist-Osher oracle has no source treatment");
  config.validate(grid.dim());
  LatticeState lb = initialize(problem, grid, config);
  EoState eo = eo_initialize(problem, grid);

  EoComparison out;
  out.steps.push_back({0, 0.0, 0.0});
  auto observer = [&](long n, double t, const ScalarField&) {
    if (n == 0) return;
    double d = 0.0;
    for (std::size_t c = 0; c < lb.u.size(); ++c) d = std::max(d, std::abs(lb.u[c] - eo.u[c]));
    out.steps.push_back({n, t, d});
    out.max_linf = std::max(out.max_linf, d);
  };
  detail::drive(
      problem, config, lb.u,
      [&]() -> const ScalarField& {
        step(lb, problem.flux, config);
        eo_step(eo, problem.flux, config);
        return lb.u;
      },
      observer);
  return out;
}

}  // namespace kinlb
