#pragma once

#include <ostream>
#include <string>

#include "kinlb/diagnostics.hpp"
#include "kinlb/grid.hpp"

namespace kinlb {

/// 17 significant digits; round-trips every double.
std::string format_double(double v);

/// `x,u` (1D) or `x1,x2,u` (2D), one row per lattice point, x1 fastest.
void write_field_csv(std::ostream& out, const ScalarField& u);

/// `step,t,tv,mass` plus `,l2,linf` when the records carry errors.
void write_report_csv(std::ostream& out, const RunReport& report);

}  // namespace kinlb
