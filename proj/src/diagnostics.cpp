#include "kinlb/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kinlb/error.hpp"

namespace kinlb {

using std::numbers::pi;

double total_variation(const ScalarField& u) {
  if (u.grid().dim() != 1) throw InvalidInput("total_variation expects a 1D field");
  double tv = 0.0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) tv += std::abs(u[i + 1] - u[i]);
  return tv;
}

double lattice_total_variation(const ScalarField& u) {
  const auto& g = u.grid();
  if (g.dim() == 1) return total_variation(u);
  double tv = 0.0;
  for (int j = 0; j < g.extent(1); ++j)
    for (int i = 0; i + 1 < g.extent(0); ++i) tv += std::abs(u.at(i + 1, j) - u.at(i, j));
  for (int j = 0; j + 1 < g.extent(1); ++j)
    for (int i = 0; i < g.extent(0); ++i) tv += std::abs(u.at(i, j + 1) - u.at(i, j));
  return tv;
}

double mass(const ScalarField& u) {
  double sum = 0.0;
  for (double v : u.values()) sum += v;
  return sum * u.grid().cell_volume();
}

double l2_error(const ScalarField& u, const PointFn& exact) {
  double sum = 0.0;
  for (std::size_t c = 0; c < u.size(); ++c) {
    const double e = u[c] - exact(u.grid().position(c));
    sum += e * e;
  }
  return std::sqrt(u.grid().cell_volume() * sum);
}

double linf_error(const ScalarField& u, const PointFn& exact) {
  double worst = 0.0;
  for (std::size_t c = 0; c < u.size(); ++c) {
    worst = std::max(worst, std::abs(u[c] - exact(u.grid().position(c))));
  }
  return worst;
}

double eoc(double e_coarse, double e_fine, double ratio) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0)) throw InvalidInput("EOC needs positive errors");
  if (!(ratio > 0.0) || ratio == 1.0) throw InvalidInput("EOC needs a refinement ratio != 1");
  return std::log(e_coarse / e_fine) / std::log(ratio);
}

Matrix2 diffusion_matrix(double u, const Position& x, const FluxModel& model, double lambda) {
  if (model.dim() != 2) throw InvalidInput("diffusion matrix is defined for 2D models");
  const double a1 = model.wave_speed(0, u, x);
  const double a2 = model.wave_speed(1, u, x);
  return {{{(lambda - std::abs(a1)) * std::abs(a1), -a1 * a2},
           {-a2 * a1, (lambda - std::abs(a2)) * std::abs(a2)}}};
}

bool is_psd(const Matrix2& m) {
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return m[0][0] >= -1e-14 && m[1][1] >= -1e-14 && det >= -1e-12;
}

// ---------------------------------------------------------------------------
// Exact solutions

double linear_convection_exact(double x, double t) { return std::pow(std::sin(x - t), 4); }

namespace {

// Foot xi in [0, x] of the surviving characteristic through (x, t), x in (0, 1/2].
double burgers_sine_foot(double x, double t) {
  auto h = [&](double xi) { return xi + t * std::sin(2.0 * pi * xi) - x; };
  // Smallest root: after the shock forms the map xi -> x folds near 1/2,
  // and only characteristics that have not reached the shock survive.
  constexpr int kScan = 512;
  double a = 0.0;
  double b = x;
  for (int k = 1; k <= kScan; ++k) {
    const double xi = x * k / kScan;
    if (h(xi) >= 0.0) {
      b = xi;
      a = x * (k - 1) / kScan;
      break;
    }
  }
  for (int it = 0; it < 200 && b - a > 4e-16 * std::max(1.0, b); ++it) {
    const double m = 0.5 * (a + b);
    (h(m) < 0.0 ? a : b) = m;
  }
  double xi = 0.5 * (a + b);
  const double dh = 1.0 + 2.0 * pi * t * std::cos(2.0 * pi * xi);
  if (std::abs(dh) > 1e-8) {
    const double polished = xi - h(xi) / dh;
    if (polished >= a - 1e-12 && polished <= b + 1e-12) xi = polished;
  }
  if (std::abs(h(xi)) > 1e-10) throw Error("characteristic solver did not converge");
  return xi;
}

}  // namespace

double burgers_sine_exact(double x, double t) {
  if (t <= 0.0) return std::sin(2.0 * pi * x);
  double xm = x - std::floor(x);
  if (xm == 0.0 || xm == 0.5) return 0.0;
  if (xm > 0.5) return -burgers_sine_exact(1.0 - xm, t);
  return std::sin(2.0 * pi * burgers_sine_foot(xm, t));
}

double burgers_square_exact(double x, double t) {
  constexpr double third = 1.0 / 3.0;
  if (t <= 0.0) return std::abs(x) <= third ? 1.0 : 0.0;
  if (t < 4.0 / 3.0) {
    const double shock = third + 0.5 * t;
    if (x <= -third || x > shock) return 0.0;
    if (x < -third + t) return (x + third) / t;
    return 1.0;
  }
  // The fan has caught the shock: s + 1/3 = sqrt(4t/3).
  const double shock = std::sqrt(4.0 * t / 3.0) - third;
  if (x <= -third || x > shock) return 0.0;
  return (x + third) / t;
}

double burgers_square_sonic_exact(double x, double t) {
  constexpr double third = 1.0 / 3.0;
  if (t <= 0.0) return std::abs(x) <= third ? 1.0 : -1.0;
  if (t >= 2.0 / 3.0) throw InvalidInput("sonic square-wave exact solution is registered for t < 2/3");
  if (x > third) return -1.0;
  if (x <= -third - t) return -1.0;
  if (x < -third + t) return (x + third) / t;
  return 1.0;
}

double spekreijse_angle_exact(const Position& x, double theta_degrees) {
  const double theta = theta_degrees * pi / 180.0;
  const double side = std::sin(theta) * x[0] - std::cos(theta) * x[1];
  if (side < 0.0) return 1.0;
  if (side > 0.0) return 0.0;
  return 0.5;
}

double spekreijse_semicircle_exact(const Position& x) {
  const double r = std::hypot(x[0], x[1]);
  return (r >= 0.35 && r <= 0.65) ? 1.0 : 0.0;
}

double solid_body_rotation_initial(const Position& x) {
  constexpr double x0 = 0.5, y0 = 1.25, r0 = 0.2;
  const double r = std::min(std::hypot(x[0] - x0, x[1] - y0), r0) / r0;
  return 0.25 * (1.0 + std::cos(pi * r));
}

double solid_body_rotation_exact(const Position& x, double t) {
  // Counter-clockwise rotation with unit angular speed about (1/2, 1/2).
  const double px = x[0] - 0.5;
  const double py = x[1] - 0.5;
  const double c = std::cos(t), s = std::sin(t);
  return solid_body_rotation_initial({0.5 + c * px + s * py, 0.5 - s * px + c * py});
}

double leveque_yee_exact(double x, double t) { return x <= 0.3 + t ? 1.0 : 0.0; }

namespace {

std::optional<double> angle_of(const std::string& id) {
  const std::string prefix = "spekreijse-angle-";
  if (id.rfind(prefix, 0) != 0) return std::nullopt;
  try {
    return std::stod(id.substr(prefix.size()));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

bool has_exact_solution(const std::string& id) {
  return id == "linear-convection" || id == "burgers-sine" || id == "burgers-square" ||
         id == "burgers-square-sonic" || id == "spekreijse-semicircle" ||
         id == "solid-body-rotation" || id == "leveque-yee" || angle_of(id).has_value();
}

double exact_solution(const std::string& id, const Position& x, double t) {
  if (id == "linear-convection") return linear_convection_exact(x[0], t);
  if (id == "burgers-sine") return burgers_sine_exact(x[0], t);
  if (id == "burgers-square") return burgers_square_exact(x[0], t);
  if (id == "burgers-square-sonic") return burgers_square_sonic_exact(x[0], t);
  if (id == "spekreijse-semicircle") return spekreijse_semicircle_exact(x);
  if (id == "solid-body-rotation") return solid_body_rotation_exact(x, t);
  if (id == "leveque-yee") return leveque_yee_exact(x[0], t);
  if (auto theta = angle_of(id)) return spekreijse_angle_exact(x, *theta);
  throw UnknownProblem("no exact solution registered for '" + id + "'");
}

}  // namespace kinlb
