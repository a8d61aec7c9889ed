#include "kinlb/run_config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "kinlb/error.hpp"
#include "kinlb/problems.hpp"

namespace kinlb {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double to_double(const std::string& key, const std::string& value) {
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(value.c_str(), &end);
  if (value.empty() || *end != '\0' || errno == ERANGE) {
    throw InvalidInput("config key '" + key + "': not a number: '" + value + "'");
  }
  return v;
}

long to_long(const std::string& key, const std::string& value) {
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(value.c_str(), &end, 10);
  if (value.empty() || *end != '\0' || errno == ERANGE) {
    throw InvalidInput("config key '" + key + "': not an integer: '" + value + "'");
  }
  return v;
}

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::array<int, 2> parse_points(std::string_view text) {
  const std::string s = trim(text);
  const auto x = s.find('x');
  const long first = to_long("points", s.substr(0, x));
  const long second = x == std::string::npos ? 0 : to_long("points", s.substr(x + 1));
  if (first < 3 || (x != std::string::npos && second < 3)) {
    throw InvalidInput("grid needs at least 3 points per axis");
  }
  return {static_cast<int>(first), static_cast<int>(second)};
}

RunConfigFile parse_run_config(std::string_view text) {
  RunConfigFile cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw InvalidInput("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(stripped).substr(0, eq));
    const std::string value = trim(std::string_view(stripped).substr(eq + 1));
    if (key == "problem") cfg.problem = value;
    else if (key == "points") cfg.points = parse_points(value);
    else if (key == "omega") cfg.omega = to_double(key, value);
    else if (key == "lambda_safety") cfg.lambda_safety = to_double(key, value);
    else if (key == "lambda") cfg.lambda = to_double(key, value);
    else if (key == "t_end") cfg.t_end = to_double(key, value);
    else if (key == "steady_tol") cfg.steady_tol = to_double(key, value);
    else if (key == "max_steps") cfg.max_steps = to_long(key, value);
    else if (key == "out") cfg.out = value;
    else cfg.params[key] = to_double(key, value);
  }
  return cfg;
}

std::string print_run_config(const RunConfigFile& cfg) {
  std::ostringstream out;
  out << "problem = " << cfg.problem << '\n';
  if (cfg.points) {
    out << "points = " << (*cfg.points)[0];
    if ((*cfg.points)[1] > 0) out << 'x' << (*cfg.points)[1];
    out << '\n';
  }
  if (cfg.omega) out << "omega = " << number(*cfg.omega) << '\n';
  if (cfg.lambda_safety) out << "lambda_safety = " << number(*cfg.lambda_safety) << '\n';
  if (cfg.lambda) out << "lambda = " << number(*cfg.lambda) << '\n';
  if (cfg.t_end) out << "t_end = " << number(*cfg.t_end) << '\n';
  if (cfg.steady_tol) out << "steady_tol = " << number(*cfg.steady_tol) << '\n';
  if (cfg.max_steps) out << "max_steps = " << *cfg.max_steps << '\n';
  for (const auto& [key, value] : cfg.params) out << key << " = " << number(value) << '\n';
  if (cfg.out) out << "out = " << *cfg.out << '\n';
  return out.str();
}

RunConfigFile merge(RunConfigFile base, const RunConfigFile& top) {
  if (!top.problem.empty()) base.problem = top.problem;
  if (top.points) base.points = top.points;
  if (top.omega) base.omega = top.omega;
  if (top.lambda_safety) base.lambda_safety = top.lambda_safety;
  if (top.lambda) base.lambda = top.lambda;
  if (top.t_end) base.t_end = top.t_end;
  if (top.steady_tol) base.steady_tol = top.steady_tol;
  if (top.max_steps) base.max_steps = top.max_steps;
  for (const auto& [k, v] : top.params) base.params[k] = v;
  if (top.out) base.out = top.out;
  return base;
}

void validate(const RunConfigFile& cfg) {
  if (cfg.problem.empty()) throw InvalidInput("no problem given");
  if (cfg.omega && !(*cfg.omega > 0.0 && *cfg.omega < 2.0)) {
    throw InvalidInput("omega must lie in (0, 2)");
  }
  if (cfg.points && ((*cfg.points)[0] < 3 || ((*cfg.points)[1] != 0 && (*cfg.points)[1] < 3))) {
    throw InvalidInput("grid needs at least 3 points per axis");
  }
  if (cfg.lambda_safety && !(*cfg.lambda_safety >= 1.0)) {
    throw InvalidInput("lambda_safety must be >= 1");
  }
  if (cfg.lambda && !(*cfg.lambda > 0.0)) throw InvalidInput("lambda must be positive");
  if (cfg.t_end && !(*cfg.t_end >= 0.0)) throw InvalidInput("t_end must be non-negative");
  if (cfg.steady_tol && !(*cfg.steady_tol > 0.0)) throw InvalidInput("steady_tol must be positive");
  if (cfg.max_steps && *cfg.max_steps <= 0) throw InvalidInput("max_steps must be positive");
}

RunConfigFile describe(const Problem& p) {
  RunConfigFile cfg;
  cfg.problem = p.id;
  cfg.points = std::array<int, 2>{p.extent[0], p.dim > 1 ? p.extent[1] : 0};
  if (!p.steady) cfg.t_end = p.t_end;
  cfg.params = p.params;
  // The angle is encoded in the id.
  if (p.id.rfind("spekreijse-angle-", 0) == 0) cfg.params.erase("theta");
  return cfg;
}

Problem instantiate(const RunConfigFile& cfg) {
  validate(cfg);
  Problem p = make_problem(cfg.problem, cfg.params);
  if (cfg.points) {
    const auto& n = *cfg.points;
    p.extent = {n[0], p.dim > 1 ? (n[1] > 0 ? n[1] : n[0]) : 1};
  }
  if (cfg.t_end) {
    p.t_end = *cfg.t_end;
    p.steady = false;
  }
  return p;
}

RunOptions run_options(const RunConfigFile& cfg) {
  RunOptions o;
  if (cfg.omega) o.omega = *cfg.omega;
  o.lambda_safety = cfg.lambda_safety;
  o.lambda = cfg.lambda;
  o.steady_tol = cfg.steady_tol;
  o.max_steps = cfg.max_steps;
  return o;
}

}  // namespace kinlb
