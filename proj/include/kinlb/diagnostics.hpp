#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kinlb/flux_split.hpp"
#include "kinlb/grid.hpp"

namespace kinlb {

struct StepRecord {
  long step = 0;
  double t = 0.0;
  double tv = 0.0;
  double mass = 0.0;
  std::optional<double> l2;
  std::optional<double> linf;
};

struct RunReport {
  std::vector<StepRecord> records;
  long steps = 0;
  double wall_seconds = 0.0;
};

/// sum_i |u_{i+1} - u_i| of a 1D field. Throws InvalidInput on 2D fields.
double total_variation(const ScalarField& u);

/// Total variation of a 1D field, or the sum of the variations along both
/// axes of a 2D field. Periodic wraparound is not included.
double lattice_total_variation(const ScalarField& u);

/// sum_cells u * dx^D
double mass(const ScalarField& u);

using PointFn = std::function<double(const Position&)>;

/// sqrt(dx^D * sum (u - exact)^2)
double l2_error(const ScalarField& u, const PointFn& exact);
double linf_error(const ScalarField& u, const PointFn& exact);

/// log(e_coarse / e_fine) / log(ratio)
double eoc(double e_coarse, double e_fine, double ratio = 2.0);

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Numerical-diffusion matrix of the 2D scheme at state u and position x.
Matrix2 diffusion_matrix(double u, const Position& x, const FluxModel& model, double lambda);
bool is_psd(const Matrix2& m);

// Exact solutions of the catalog problems.

double linear_convection_exact(double x, double t);
/// Burgers with u0 = sin(2 pi x) on the unit period; shock pinned at x = 1/2.
double burgers_sine_exact(double x, double t);
double burgers_square_exact(double x, double t);
/// Valid for t < 2/3 (before the fan reaches the stationary shock).
double burgers_square_sonic_exact(double x, double t);
double spekreijse_angle_exact(const Position& x, double theta_degrees);
double spekreijse_semicircle_exact(const Position& x);
double solid_body_rotation_initial(const Position& x);
double solid_body_rotation_exact(const Position& x, double t);
double leveque_yee_exact(double x, double t);

bool has_exact_solution(const std::string& problem_id);
/// Throws UnknownProblem for ids without a registered exact solution.
double exact_solution(const std::string& problem_id, const Position& x, double t);

}  // namespace kinlb
