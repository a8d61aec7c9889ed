#include "kinlb/problems.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "kinlb/diagnostics.hpp"
#include "kinlb/error.hpp"

namespace kinlb {

namespace {

using std::numbers::pi;
using Params = std::map<std::string, double>;

BoundarySet all(BoundaryCondition bc) { return {bc, bc, bc, bc}; }

void attach_exact(Problem& p) {
  if (!has_exact_solution(p.id)) return;
  const std::string id = p.id;
  p.exact = [id](const Position& x, double t) { return exact_solution(id, x, t); };
}

Problem linear_convection() {
  Problem p;
  p.id = "linear-convection";
  p.title = "1D linear convection of sin^4 with periodic boundaries";
  p.origin = "Chen & Shu (2017)";
  p.dim = 1;
  p.domain = {{0.0, 0.0}, {2.0 * pi, 0.0}};
  p.extent = {41, 1};
  p.initial = [](const Position& x) { return std::pow(std::sin(x[0]), 4); };
  p.boundary = all(BoundaryCondition::periodic());
  p.flux = FluxModel::linear({1.0});
  p.t_end = 2.0 * pi;
  return p;
}

Problem spekreijse_angle(double degrees) {
  if (!(degrees > 0.0 && degrees < 90.0)) throw InvalidInput("angle must lie in (0, 90) degrees");
  const double theta = degrees * pi / 180.0;
  Problem p;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", degrees);
  p.id = std::string("spekreijse-angle-") + buf;
  p.title = "2D linear advection of a discontinuity at an angle to the lattice";
  p.origin = "Spekreijse (1987)";
  p.dim = 2;
  p.domain = {{0.0, 0.0}, {1.0, 1.0}};
  p.extent = {65, 65};
  p.initial = [](const Position&) { return 0.0; };
  p.boundary = {BoundaryCondition::dirichlet(1.0), BoundaryCondition::outflow(),
                BoundaryCondition::dirichlet(0.0), BoundaryCondition::outflow()};
  p.flux = FluxModel::linear({std::cos(theta), std::sin(theta)});
  p.steady = true;
  p.params = {{"theta", degrees}};
  return p;
}

Problem spekreijse_semicircle() {
  Problem p;
  p.id = "spekreijse-semicircle";
  p.title = "2D advection along circles producing semi-circular discontinuities";
  p.origin = "Spekreijse (1987)";
  p.dim = 2;
  p.domain = {{-1.0, 0.0}, {1.0, 1.0}};
  p.extent = {65, 33};
  p.initial = [](const Position&) { return 0.0; };
  auto bottom = [](const Position& x) { return (x[0] >= -0.65 && x[0] <= -0.35) ? 1.0 : 0.0; };
  p.boundary = {BoundaryCondition::dirichlet(0.0), BoundaryCondition::dirichlet(0.0),
                BoundaryCondition::dirichlet(bottom), BoundaryCondition::dirichlet(0.0)};
  // Clockwise rotation about the origin: inflow through the bottom for x1 < 0.
  p.flux = FluxModel("rotation", {variable_linear_direction([](const Position& x) { return x[1]; }),
                                  variable_linear_direction([](const Position& x) { return -x[0]; })});
  p.steady = true;
  return p;
}

Problem solid_body_rotation() {
  Problem p;
  p.id = "solid-body-rotation";
  p.title = "Counter-clockwise solid-body rotation of a cosine bell";
  p.origin = "LeVeque (1996)";
  p.dim = 2;
  p.domain = {{-1.0, -0.5}, {1.0, 1.5}};
  p.extent = {65, 65};
  p.initial = solid_body_rotation_initial;
  p.boundary = all(BoundaryCondition::dirichlet(0.0));
  p.flux = FluxModel(
      "rotation", {variable_linear_direction([](const Position& x) { return -(x[1] - 0.5); }),
                   variable_linear_direction([](const Position& x) { return x[0] - 0.5; })});
  p.t_end = 3.0;
  for (int k = 0; k < 10; ++k) p.contour_levels.push_back(0.1 + 0.4 * k / 9.0);
  return p;
}

Problem burgers_sine() {
  Problem p;
  p.id = "burgers-sine";
  p.title = "Inviscid Burgers equation with a sine-wave initial profile";
  p.origin = "Ben-Artzi & Falcovitz (2003)";
  p.dim = 1;
  p.domain = {{0.0, 0.0}, {1.0, 0.0}};
  p.extent = {81, 1};
  p.initial = [](const Position& x) { return std::sin(2.0 * pi * x[0]); };
  p.boundary = all(BoundaryCondition::periodic());
  p.flux = FluxModel::burgers();
  p.t_end = 0.25;
  return p;
}

Problem burgers_square(bool sonic) {
  Problem p;
  p.id = sonic ? "burgers-square-sonic" : "burgers-square";
  p.title = sonic ? "Burgers square wave whose expansion fan contains a sonic point"
                  : "Burgers square wave without a sonic point";
  p.origin = "Laney (1998)";
  p.dim = 1;
  p.domain = {{-1.0, 0.0}, {1.0, 0.0}};
  p.extent = {41, 1};
  const double outside = sonic ? -1.0 : 0.0;
  p.initial = [outside](const Position& x) { return std::abs(x[0]) <= 1.0 / 3.0 ? 1.0 : outside; };
  p.boundary = all(BoundaryCondition::dirichlet(outside));
  p.flux = FluxModel::burgers();
  p.t_end = sonic ? 0.3 : 0.6;
  return p;
}

Problem shock_2d(bool oblique) {
  const double left = oblique ? 1.5 : 1.0;
  const double right = oblique ? -0.5 : -1.0;
  Problem p;
  p.id = oblique ? "oblique-shock" : "normal-shock";
  p.title = oblique ? "2D steady oblique shock, g1 = u^2/2, g2 = u"
                    : "2D steady normal shock, g1 = u^2/2, g2 = u";
  p.origin = "Spekreijse (1987)";
  p.dim = 2;
  p.domain = {{0.0, 0.0}, {1.0, 1.0}};
  p.extent = {65, 65};
  auto profile = [left](const Position& x) { return left - 2.0 * x[0]; };
  p.initial = profile;
  p.boundary = {BoundaryCondition::dirichlet(left), BoundaryCondition::dirichlet(right),
                BoundaryCondition::dirichlet(profile), BoundaryCondition::outflow()};
  p.flux = FluxModel("burgers-convection", {burgers_direction(), linear_direction(1.0)});
  p.steady = true;
  return p;
}

Problem leveque_yee(double mu) {
  if (!(mu >= 0.0)) throw InvalidInput("mu must be non-negative");
  Problem p;
  p.id = "leveque-yee";
  p.title = "Linear advection with a stiff bistable source";
  p.origin = "LeVeque & Yee (1990)";
  p.dim = 1;
  p.domain = {{0.0, 0.0}, {1.0, 0.0}};
  p.extent = {51, 1};
  p.initial = [](const Position& x) { return x[0] <= 0.3 ? 1.0 : 0.0; };
  p.boundary = {BoundaryCondition::dirichlet(1.0), BoundaryCondition::outflow(),
                BoundaryCondition::outflow(), BoundaryCondition::outflow()};
  p.flux = FluxModel::linear({1.0});
  p.source = SourceModel{
      [mu](double u, const Position&) { return -mu * u * (u - 1.0) * (u - 0.5); },
      [mu](double u, const Position&) { return -mu * (3.0 * u * u - 3.0 * u + 0.5); }};
  p.t_end = 0.3;
  // exact unit speed: run at CFL 1
  p.lambda_safety = 1.0;
  p.params = {{"mu", mu}};
  return p;
}

Problem embid() {
  Problem p;
  p.id = "embid";
  p.title = "Burgers flux with the linear source (6x - 3) u, steady shock";
  p.origin = "Embid, Goodman & Majda (1984)";
  p.dim = 1;
  p.domain = {{0.0, 0.0}, {1.0, 0.0}};
  p.extent = {41, 1};
  p.initial = [](const Position& x) { return x[0] <= 0.18 ? 1.0 : -0.1; };
  p.boundary = {BoundaryCondition::dirichlet(1.0), BoundaryCondition::dirichlet(-0.1),
                BoundaryCondition::outflow(), BoundaryCondition::outflow()};
  p.flux = FluxModel::burgers();
  p.source = SourceModel{[](double u, const Position& x) { return (6.0 * x[0] - 3.0) * u; },
                         [](double, const Position& x) { return 6.0 * x[0] - 3.0; }};
  p.steady = true;
  return p;
}

double take(Params& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  const double v = it->second;
  params.erase(it);
  return v;
}

}  // namespace

std::vector<std::string> catalog_ids() {
  return {"linear-convection",     "spekreijse-angle-15", "spekreijse-angle-30",
          "spekreijse-angle-45",   "spekreijse-angle-60", "spekreijse-angle-75",
          "spekreijse-semicircle", "solid-body-rotation", "burgers-sine",
          "burgers-square",        "burgers-square-sonic", "normal-shock",
          "oblique-shock",         "leveque-yee",         "embid"};
}

Problem make_problem(const std::string& id, const Params& params) {
  Params rest = params;
  Problem p;
  const std::string angle_prefix = "spekreijse-angle-";
  if (id == "linear-convection") {
    p = linear_convection();
  } else if (id.rfind(angle_prefix, 0) == 0) {
    double degrees = 0.0;
    try {
      std::size_t used = 0;
      degrees = std::stod(id.substr(angle_prefix.size()), &used);
      if (used != id.size() - angle_prefix.size()) throw std::invalid_argument(id);
    } catch (const std::exception&) {
      throw UnknownProblem("unknown problem '" + id + "'");
    }
    degrees = take(rest, "theta", degrees);
    p = spekreijse_angle(degrees);
  } else if (id == "spekreijse-semicircle") {
    p = spekreijse_semicircle();
  } else if (id == "solid-body-rotation") {
    p = solid_body_rotation();
  } else if (id == "burgers-sine") {
    p = burgers_sine();
  } else if (id == "burgers-square") {
    p = burgers_square(false);
  } else if (id == "burgers-square-sonic") {
    p = burgers_square(true);
  } else if (id == "normal-shock") {
    p = shock_2d(false);
  } else if (id == "oblique-shock") {
    p = shock_2d(true);
  } else if (id == "leveque-yee") {
    p = leveque_yee(take(rest, "mu", 1000.0));
  } else if (id == "embid") {
    p = embid();
  } else {
    throw UnknownProblem("unknown problem '" + id + "'");
  }
  if (!rest.empty()) {
    throw InvalidInput("problem '" + id + "' has no parameter '" + rest.begin()->first + "'");
  }
  attach_exact(p);
  return p;
}

std::vector<Problem> catalog() {
  std::vector<Problem> out;
  for (const auto& id : catalog_ids()) out.push_back(make_problem(id));
  return out;
}

}  // namespace kinlb
