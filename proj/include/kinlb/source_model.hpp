#pragma once

#include <functional>

#include "kinlb/grid.hpp"

namespace kinlb {

/// Source term s(u; x) with its state derivative (used by the Newton inversion).
struct SourceModel {
  std::function<double(double u, const Position& x)> value;
  std::function<double(double u, const Position& x)> derivative;
};

}  // namespace kinlb
