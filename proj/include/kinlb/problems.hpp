#pragma once

#include <map>
#include <string>
#include <vector>

#include "kinlb/problem.hpp"

namespace kinlb {

/// Every registered test problem with its default parameters.
std::vector<Problem> catalog();

/// Ids of the catalog, in catalog order.
std::vector<std::string> catalog_ids();

/// Build one problem. `params` overrides named parameters (e.g. "mu" for
/// leveque-yee); unknown ids throw UnknownProblem, unknown parameters
/// InvalidInput. Ids of the form spekreijse-angle-<degrees> accept any
/// angle strictly between 0 and 90.
Problem make_problem(const std::string& id, const std::map<std::string, double>& params = {});

}  // namespace kinlb
