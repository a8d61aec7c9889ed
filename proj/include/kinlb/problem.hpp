#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kinlb/boundary.hpp"
#include "kinlb/flux_split.hpp"
#include "kinlb/grid.hpp"
#include "kinlb/source_model.hpp"

namespace kinlb {

/// A named test case: domain, data, physics and reporting hints.
struct Problem {
  std::string id;
  std::string title;
  std::string origin;  // literature source of the test case
  int dim = 1;
  Box domain;
  std::array<int, 2> extent{3, 1};
  std::function<double(const Position&)> initial;
  BoundarySet boundary;
  FluxModel flux;
  std::optional<SourceModel> source;
  double t_end = 0.0;
  bool steady = false;
  std::map<std::string, double> params;
  std::function<double(const Position&, double)> exact;
  std::vector<double> contour_levels;
  double lambda_safety = 1.05;

  bool has_exact() const { return static_cast<bool>(exact); }
};

/// Grid for the problem's domain; `extent` defaults to the problem's grid.
Grid make_grid(const Problem& problem, std::optional<std::array<int, 2>> extent = std::nullopt);

/// Interval spanned by the initial data and Dirichlet data on `grid`,
/// widened by 5% of its span on each side.
Interval admissible_range(const Problem& problem, const Grid& grid);

}  // namespace kinlb
