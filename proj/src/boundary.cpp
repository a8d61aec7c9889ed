#include "kinlb/boundary.hpp"

#include "kinlb/error.hpp"

namespace kinlb {

void validate_boundaries(const BoundarySet& set, int dim) {
  for (int axis = 0; axis < dim; ++axis) {
    const bool lo = set[2 * axis].kind == BoundaryCondition::Kind::Periodic;
    const bool hi = set[2 * axis + 1].kind == BoundaryCondition::Kind::Periodic;
    if (lo != hi) throw InvalidInput("periodic boundary must be declared on both opposing sides");
    for (int s : {2 * axis, 2 * axis + 1}) {
      if (set[s].kind == BoundaryCondition::Kind::Dirichlet && !set[s].value) {
        throw InvalidInput("Dirichlet boundary without a value");
      }
    }
  }
}

std::vector<std::array<int, 2>> side_cells(const Grid& grid, Side side) {
  const int nx = grid.extent(0);
  const int ny = grid.dim() > 1 ? grid.extent(1) : 1;
  std::vector<std::array<int, 2>> cells;
  if (axis_of(side) == 0) {
    const int i = side == Side::XMin ? 0 : nx - 1;
    for (int j = 0; j < ny; ++j) cells.push_back({i, j});
  } else {
    const int j = side == Side::YMin ? 0 : ny - 1;
    for (int i = 0; i < nx; ++i) cells.push_back({i, j});
  }
  return cells;
}

void pin_dirichlet(ScalarField& u, const BoundarySet& bc) {
  const Grid& g = u.grid();
  for (int s = 0; s < 2 * g.dim(); ++s) {
    if (bc[s].kind != BoundaryCondition::Kind::Dirichlet) continue;
    for (const auto& [i, j] : side_cells(g, static_cast<Side>(s))) {
      u.at(i, j) = bc[s].value(g.position(i, j));
    }
  }
}

}  // namespace kinlb
