#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kinlb/grid.hpp"

namespace kinlb {

/// Closed interval of admissible states.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool operator==(const Interval&) const = default;
};

struct WaveSplit {
  double plus = 0.0;
  double minus = 0.0;
};

/// g = plus - minus, with plus and minus both non-decreasing in u and zero at u = 0.
struct SplitFlux {
  double plus = 0.0;
  double minus = 0.0;
};

using StateFn = std::function<double(double u, const Position& x)>;
using SplitFn = std::function<SplitFlux(double u, const Position& x)>;

/// Flux of one coordinate direction. `split` may be empty, in which case
/// the decomposition is computed by quadrature of the split wave speed.
struct DirectionalFlux {
  StateFn flux;
  StateFn wave_speed;
  SplitFn split;
  bool position_dependent = false;
};

DirectionalFlux linear_direction(double speed);
DirectionalFlux variable_linear_direction(std::function<double(const Position&)> speed);
DirectionalFlux burgers_direction();
DirectionalFlux general_direction(StateFn flux, StateFn wave_speed, bool position_dependent = false);

/// Positive/negative parts of a wave speed: a = plus - minus, plus*minus = 0.
WaveSplit wave_speed_split(double a);

/// Adaptive-Simpson evaluation of the integrals of a+ and a- from 0 to u.
/// Absolute tolerance 1e-10, subdivision depth <= 30.
SplitFlux quad_split_flux(const std::function<double(double)>& wave_speed, double u);

class FluxModel {
 public:
  FluxModel() = default;
  FluxModel(std::string name, std::vector<DirectionalFlux> directions);

  int dim() const { return static_cast<int>(directions_.size()); }
  const std::string& name() const { return name_; }

  double flux(int d, double u, const Position& x) const { return directions_[d].flux(u, x); }
  double wave_speed(int d, double u, const Position& x) const {
    return directions_[d].wave_speed(u, x);
  }
  bool has_analytic_split(int d) const { return static_cast<bool>(directions_[d].split); }
  bool position_dependent(int d) const { return directions_[d].position_dependent; }

  /// Split fluxes of direction d; analytic when registered, quadrature otherwise.
  SplitFlux split(int d, double u, const Position& x) const;

  /// Sampled sup |a_d| over 1024 states in `range` and, for position-dependent
  /// directions, a 33-point-per-axis sample of `domain`.
  double sup_speed(int d, Interval range, const Box& domain) const;

  /// Sampled sup of sum_d |a_d| over the same sample set.
  double sup_speed_sum(Interval range, const Box& domain) const;

  static FluxModel linear(std::vector<double> speeds);
  static FluxModel burgers();

 private:
  std::string name_;
  std::vector<DirectionalFlux> directions_;
};

/// Both split fluxes for direction d (free-function form of FluxModel::split).
inline SplitFlux split_fluxes(const FluxModel& model, int d, double u, const Position& x) {
  return model.split(d, u, x);
}

}  // namespace kinlb
