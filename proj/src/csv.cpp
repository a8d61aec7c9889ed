#include "kinlb/csv.hpp"

#include <cstdio>

namespace kinlb {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_field_csv(std::ostream& out, const ScalarField& u) {
  const Grid& g = u.grid();
  out << (g.dim() == 1 ? "x,u\n" : "x1,x2,u\n");
  for (std::size_t c = 0; c < u.size(); ++c) {
    const Position x = g.position(c);
    out << format_double(x[0]) << ',';
    if (g.dim() > 1) out << format_double(x[1]) << ',';
    out << format_double(u[c]) << '\n';
  }
}

void write_report_csv(std::ostream& out, const RunReport& report) {
  const bool errors = !report.records.empty() && report.records.front().l2.has_value();
  out << "step,t,tv,mass" << (errors ? ",l2,linf" : "") << '\n';
  for (const auto& r : report.records) {
    out << r.step << ',' << format_double(r.t) << ',' << format_double(r.tv) << ','
        << format_double(r.mass);
    if (errors) out << ',' << format_double(*r.l2) << ',' << format_double(*r.linf);
    out << '\n';
  }
}

}  // namespace kinlb
