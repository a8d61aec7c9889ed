#include "kinlb/problem.hpp"

#include <algorithm>
#include <cmath>

namespace kinlb {

Grid make_grid(const Problem& problem, std::optional<std::array<int, 2>> extent) {
  const auto n = extent.value_or(problem.extent);
  std::array<bool, 2> periodic{};
  for (int axis = 0; axis < problem.dim; ++axis) {
    periodic[axis] = problem.boundary[2 * axis].kind == BoundaryCondition::Kind::Periodic;
  }
  return Grid(problem.dim, n, problem.domain, periodic);
}

Interval admissible_range(const Problem& problem, const Grid& grid) {
  double lo = INFINITY;
  double hi = -INFINITY;
  auto include = [&](double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  };
  for (std::size_t c = 0; c < grid.size(); ++c) include(problem.initial(grid.position(c)));

  for (int s = 0; s < 2 * grid.dim(); ++s) {
    const auto& bc = problem.boundary[s];
    if (bc.kind != BoundaryCondition::Kind::Dirichlet) continue;
    for (const auto& [i, j] : side_cells(grid, static_cast<Side>(s))) {
      include(bc.value(grid.position(i, j)));
    }
  }
  const double span = hi - lo;
  const double margin = span > 0.0 ? 0.05 * span : 0.05 * std::max(std::abs(lo), 1.0);
  return {lo - margin, hi + margin};
}

}  // namespace kinlb
