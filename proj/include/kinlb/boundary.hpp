#pragma once

#include <array>
#include <functional>
#include <vector>

#include "kinlb/grid.hpp"

namespace kinlb {

enum class Side { XMin = 0, XMax = 1, YMin = 2, YMax = 3 };

struct BoundaryCondition {
  enum class Kind { Periodic, Dirichlet, Outflow };

  Kind kind = Kind::Outflow;
  /// Boundary state as a function of the boundary-point position (Dirichlet only).
  std::function<double(const Position&)> value;

  static BoundaryCondition periodic() { return {Kind::Periodic, {}}; }
  static BoundaryCondition outflow() { return {Kind::Outflow, {}}; }
  static BoundaryCondition dirichlet(double v) {
    return {Kind::Dirichlet, [v](const Position&) { return v; }};
  }
  static BoundaryCondition dirichlet(std::function<double(const Position&)> profile) {
    return {Kind::Dirichlet, std::move(profile)};
  }
};

/// One condition per side, indexed by Side.
using BoundarySet = std::array<BoundaryCondition, 4>;

inline const BoundaryCondition& on(const BoundarySet& set, Side s) {
  return set[static_cast<int>(s)];
}

/// Throws InvalidInput when a periodic side is paired with a non-periodic one.
void validate_boundaries(const BoundarySet& set, int dim);

/// Position one lattice spacing outside boundary cell (i, j) across `side`.
/// Lattice points (i, j) lying on `side`.
std::vector<std::array<int, 2>> side_cells(const Grid& grid, Side side);

/// Overwrite every lattice point on a Dirichlet side with the boundary value.
/// Sides are applied in order XMin, XMax, YMin, YMax; corners take the last.
void pin_dirichlet(ScalarField& u, const BoundarySet& bc);

inline int axis_of(Side s) { return static_cast<int>(s) / 2; }

}  // namespace kinlb
