#include "kinlb/grid.hpp"

#include <cmath>
#include <string>

#include "kinlb/error.hpp"

namespace kinlb {

Grid::Grid(int dim, std::array<int, 2> extent, Box domain, std::array<bool, 2> periodic)
    : dim_(dim), extent_(extent), domain_(domain), periodic_(periodic) {
  if (dim != 1 && dim != 2) throw InvalidInput("unsupported dimension " + std::to_string(dim));
  if (dim == 1) {
    extent_[1] = 1;
    periodic_[1] = false;
    domain_.lo[1] = domain_.hi[1] = 0.0;
  }
  std::array<double, 2> spacing{};
  for (int a = 0; a < dim_; ++a) {
    if (extent_[a] < 3) throw InvalidInput("grid extent must be at least 3");
    const double length = domain_.hi[a] - domain_.lo[a];
    if (!(length > 0.0)) throw InvalidInput("empty domain");
    spacing[a] = length / (periodic_[a] ? extent_[a] : extent_[a] - 1);
  }
  dx_ = spacing[0];
  if (dim_ == 2 && std::abs(spacing[1] - spacing[0]) > 1e-12 * spacing[0]) {
    throw InvalidInput("lattice spacing differs between axes");
  }
}

std::size_t Grid::size() const {
  return static_cast<std::size_t>(extent_[0]) * (dim_ > 1 ? extent_[1] : 1);
}

double Grid::cell_volume() const { return dim_ == 1 ? dx_ : dx_ * dx_; }

bool ScalarField::all_finite() const {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace kinlb
