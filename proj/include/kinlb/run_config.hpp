#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "kinlb/kinetic_core.hpp"
#include "kinlb/problem.hpp"

namespace kinlb {

/// Flat `key = value` run description. Recognised keys: problem, points
/// ("81" or "65x33"), omega, lambda_safety, lambda, t_end, steady_tol,
/// max_steps, out. Every other key is a numeric problem parameter (mu, theta).
struct RunConfigFile {
  std::string problem;
  std::optional<std::array<int, 2>> points;
  std::optional<double> omega;
  std::optional<double> lambda_safety;
  std::optional<double> lambda;
  std::optional<double> t_end;
  std::optional<double> steady_tol;
  std::optional<long> max_steps;
  std::map<std::string, double> params;
  std::optional<std::string> out;

  bool operator==(const RunConfigFile&) const = default;
};

RunConfigFile parse_run_config(std::string_view text);
std::string print_run_config(const RunConfigFile& config);

/// Parse "81", "65x33"; a single number on a 2D problem applies to both axes.
std::array<int, 2> parse_points(std::string_view text);

/// Overlay: fields set in `top` replace those of `base`.
RunConfigFile merge(RunConfigFile base, const RunConfigFile& top);

/// Throws InvalidInput for out-of-range overrides (omega outside (0,2), grid < 3, ...).
void validate(const RunConfigFile& config);

/// Serializable description of a problem (id, grid, parameters, end time).
RunConfigFile describe(const Problem& problem);

/// Catalog problem with the file's parameters, grid and end time applied.
/// An explicit t_end turns a steady problem into a transient run.
Problem instantiate(const RunConfigFile& config);

RunOptions run_options(const RunConfigFile& config);

}  // namespace kinlb
