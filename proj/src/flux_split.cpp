#include "kinlb/flux_split.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kinlb/error.hpp"

namespace kinlb {

namespace {

constexpr double kQuadTolerance = 1e-10;
constexpr int kQuadMaxDepth = 30;
constexpr long kQuadMaxIntervals = 100000;
constexpr int kStateSamples = 1024;
constexpr int kSpaceSamples = 33;

struct SimpsonState {
  double error_estimate = 0.0;
  bool converged = true;
  long intervals = 0;
};

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth,
                        SimpsonState& state) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) {
    state.error_estimate += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  if (depth >= kQuadMaxDepth || ++state.intervals > kQuadMaxIntervals) {
    state.converged = false;
    state.error_estimate += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, state) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, state);
}

double integrate(const std::function<double(double)>& f, double a, double b, SimpsonState& state) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  return adaptive_simpson(f, a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), kQuadTolerance, 0,
                          state);
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (int k = 0; k < n; ++k) out[k] = lo + (hi - lo) * k / (n - 1);
  return out;
}

std::vector<Position> space_samples(const Box& domain, int dim, bool dependent) {
  if (!dependent) return {Position{0.5 * (domain.lo[0] + domain.hi[0]), 0.5 * (domain.lo[1] + domain.hi[1])}};
  std::vector<Position> out;
  const auto xs = linspace(domain.lo[0], domain.hi[0], kSpaceSamples);
  const auto ys = dim > 1 ? linspace(domain.lo[1], domain.hi[1], kSpaceSamples)
                          : std::vector<double>{domain.lo[1]};
  for (double y : ys)
    for (double x : xs) out.push_back({x, y});
  return out;
}

}  // namespace

WaveSplit wave_speed_split(double a) {
  if (!std::isfinite(a)) throw InvalidInput("wave speed is not finite");
  if (a >= 0.0) return {a, 0.0};
  return {0.0, -a};
}

SplitFlux quad_split_flux(const std::function<double(double)>& wave_speed, double u) {
  SimpsonState state;
  auto plus = [&](double s) { return wave_speed_split(wave_speed(s)).plus; };
  auto minus = [&](double s) { return wave_speed_split(wave_speed(s)).minus; };
  SplitFlux out{integrate(plus, 0.0, u, state), integrate(minus, 0.0, u, state)};
  if (!state.converged) {
    throw QuadratureError("split-flux quadrature did not converge, achieved tolerance " +
                              std::to_string(state.error_estimate),
                          state.error_estimate);
  }
  return out;
}

DirectionalFlux linear_direction(double speed) {
  DirectionalFlux d;
  d.flux = [speed](double u, const Position&) { return speed * u; };
  d.wave_speed = [speed](double, const Position&) { return speed; };
  d.split = [speed](double u, const Position&) -> SplitFlux {
    const auto w = wave_speed_split(speed);
    return {w.plus * u, w.minus * u};
  };
  return d;
}

DirectionalFlux variable_linear_direction(std::function<double(const Position&)> speed) {
  DirectionalFlux d;
  d.flux = [speed](double u, const Position& x) { return speed(x) * u; };
  d.wave_speed = [speed](double, const Position& x) { return speed(x); };
  d.split = [speed](double u, const Position& x) -> SplitFlux {
    const auto w = wave_speed_split(speed(x));
    return {w.plus * u, w.minus * u};
  };
  d.position_dependent = true;
  return d;
}

DirectionalFlux burgers_direction() {
  DirectionalFlux d;
  d.flux = [](double u, const Position&) { return 0.5 * u * u; };
  d.wave_speed = [](double u, const Position&) { return u; };
  d.split = [](double u, const Position&) -> SplitFlux {
    const double p = std::max(u, 0.0);
    const double m = std::min(u, 0.0);
    return {0.5 * p * p, -0.5 * m * m};
  };
  return d;
}

DirectionalFlux general_direction(StateFn flux, StateFn wave_speed, bool position_dependent) {
  DirectionalFlux d;
  d.flux = std::move(flux);
  d.wave_speed = std::move(wave_speed);
  d.position_dependent = position_dependent;
  return d;
}

FluxModel::FluxModel(std::string name, std::vector<DirectionalFlux> directions)
    : name_(std::move(name)), directions_(std::move(directions)) {
  if (directions_.empty() || directions_.size() > 2) {
    throw InvalidInput("flux model must have 1 or 2 directions");
  }
  for (const auto& d : directions_) {
    if (!d.flux || !d.wave_speed) throw InvalidInput("flux model direction lacks an evaluator");
  }
}

SplitFlux FluxModel::split(int d, double u, const Position& x) const {
  const auto& dir = directions_[d];
  if (dir.split) return dir.split(u, x);
  return quad_split_flux([&](double s) { return dir.wave_speed(s, x); }, u);
}

double FluxModel::sup_speed(int d, Interval range, const Box& domain) const {
  const auto states = linspace(range.lo, range.hi, kStateSamples);
  double sup = 0.0;
  for (const auto& x : space_samples(domain, dim(), position_dependent(d)))
    for (double u : states) sup = std::max(sup, std::abs(wave_speed(d, u, x)));
  return sup;
}

double FluxModel::sup_speed_sum(Interval range, const Box& domain) const {
  bool dependent = false;
  for (int d = 0; d < dim(); ++d) dependent = dependent || position_dependent(d);
  const auto states = linspace(range.lo, range.hi, kStateSamples);
  double sup = 0.0;
  for (const auto& x : space_samples(domain, dim(), dependent)) {
    for (double u : states) {
      double total = 0.0;
      for (int d = 0; d < dim(); ++d) total += std::abs(wave_speed(d, u, x));
      sup = std::max(sup, total);
    }
  }
  return sup;
}

FluxModel FluxModel::linear(std::vector<double> speeds) {
  std::vector<DirectionalFlux> dirs;
  for (double c : speeds) dirs.push_back(linear_direction(c));
  return FluxModel("linear", std::move(dirs));
}

FluxModel FluxModel::burgers() { return FluxModel("burgers", {burgers_direction()}); }

}  // namespace kinlb
