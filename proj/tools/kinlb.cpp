// kinlb command-line front end: run, convergence, compare-eo, list.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kinlb/csv.hpp"
#include "kinlb/error.hpp"
#include "kinlb/macro_oracle.hpp"
#include "kinlb/problems.hpp"
#include "kinlb/run_config.hpp"
#include "kinlb/source_ext.hpp"

namespace fs = std::filesystem;
using namespace kinlb;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kSolver = 2;

// Raw flag values; empty / unset means "not given".
struct Flags {
  std::string config;
  std::string problem;
  std::string points;
  std::string out;
  double omega = 0, lambda = 0, lambda_safety = 0, t_end = 0, steady_tol = 0, mu = 0, theta = 0;
  long max_steps = 0;
  std::vector<CLI::Option*> numeric;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "key = value run description")->check(CLI::ExistingFile);
  cmd->add_option("--problem,-p", f.problem, "catalog id (see `list`)");
  cmd->add_option("--points", f.points, "grid points, e.g. 81 or 65x33");
  cmd->add_option("--out,-o", f.out, "output directory (env KINLB_OUT)");
  f.numeric = {
      cmd->add_option("--omega", f.omega, "relaxation parameter in (0, 2)"),
      cmd->add_option("--lambda", f.lambda, "lattice speed override"),
      cmd->add_option("--lambda-safety", f.lambda_safety, "factor on the sampled wave speed"),
      cmd->add_option("--t-end", f.t_end, "final time (makes steady problems transient)"),
      cmd->add_option("--steady-tol", f.steady_tol, "steady-state tolerance on max |du|"),
      cmd->add_option("--max-steps", f.max_steps, "step limit for steady runs"),
      cmd->add_option("--mu", f.mu, "source stiffness (leveque-yee)"),
      cmd->add_option("--theta", f.theta, "advection angle in degrees (spekreijse-angle)"),
  };
}

RunConfigFile resolve(const Flags& f) {
  RunConfigFile file;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    std::stringstream text;
    text << in.rdbuf();
    file = parse_run_config(text.str());
  }
  RunConfigFile cli;
  cli.problem = f.problem;
  if (!f.points.empty()) cli.points = parse_points(f.points);
  if (f.numeric[0]->count()) cli.omega = f.omega;
  if (f.numeric[1]->count()) cli.lambda = f.lambda;
  if (f.numeric[2]->count()) cli.lambda_safety = f.lambda_safety;
  if (f.numeric[3]->count()) cli.t_end = f.t_end;
  if (f.numeric[4]->count()) cli.steady_tol = f.steady_tol;
  if (f.numeric[5]->count()) cli.max_steps = f.max_steps;
  if (f.numeric[6]->count()) cli.params["mu"] = f.mu;
  if (f.numeric[7]->count()) cli.params["theta"] = f.theta;
  RunConfigFile merged = merge(file, cli);

  // --out > KINLB_OUT > config file > cwd
  if (!f.out.empty()) {
    merged.out = f.out;
  } else if (const char* env = std::getenv("KINLB_OUT"); env && *env) {
    merged.out = env;
  }
  validate(merged);
  return merged;
}

fs::path output_dir(const RunConfigFile& cfg) {
  fs::path dir = cfg.out ? fs::path(*cfg.out) : fs::current_path();
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

int cmd_run(const Flags& flags) {
  const RunConfigFile cfg = resolve(flags);
  const Problem problem = instantiate(cfg);
  const Grid grid = make_grid(problem);
  const SolverConfig config = configure(problem, grid, run_options(cfg));

  const RunResult result = solve(problem, grid, config);
  const fs::path dir = output_dir(cfg);

  std::ostringstream field, report;
  write_field_csv(field, result.u);
  write_report_csv(report, result.report);
  write_file(dir / (problem.id + "_final.csv"), field.str());
  write_file(dir / (problem.id + "_report.csv"), report.str());

  std::cout << problem.id << ": " << result.report.steps << " steps, t = "
            << format_double(result.report.records.back().t) << ", lambda = "
            << format_double(config.lambda) << ", omega = " << format_double(config.omega)
            << "\n";
  return kOk;
}

std::vector<int> parse_ladder(const std::string& text) {
  std::vector<int> ladder;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto pts = parse_points(item);
    ladder.push_back(pts[0]);
  }
  if (ladder.size() < 2) throw InvalidInput("ladder needs at least two grids");
  for (std::size_t k = 1; k < ladder.size(); ++k) {
    if (ladder[k] <= ladder[k - 1]) throw InvalidInput("ladder must be strictly increasing");
  }
  return ladder;
}

int cmd_convergence(const Flags& flags, const std::string& ladder_text) {
  RunConfigFile cfg = resolve(flags);
  if (!cfg.omega) cfg.omega = 1.99;
  if (!cfg.t_end && cfg.problem == "burgers-sine") cfg.t_end = 0.5 / (2.0 * std::numbers::pi);
  const std::vector<int> ladder = parse_ladder(ladder_text);

  const Problem base = instantiate(cfg);
  if (!base.has_exact()) throw InvalidInput(base.id + " has no exact solution");
  if (base.dim != 1) throw InvalidInput("convergence studies are 1D only");

  std::ostringstream table;
  table << "points,h,l2,eoc\n";
  double prev_l2 = 0.0, prev_h = 0.0;
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    RunConfigFile level = cfg;
    level.points = std::array<int, 2>{ladder[k], 0};
    const Problem problem = instantiate(level);
    const Grid grid = make_grid(problem);
    const SolverConfig config = configure(problem, grid, run_options(level));
    const RunResult result = solve(problem, grid, config);
    const double l2 = *result.report.records.back().l2;
    const double h = grid.dx();
    table << ladder[k] << ',' << format_double(h) << ',' << format_double(l2) << ',';
    if (k > 0) table << format_double(eoc(prev_l2, l2, prev_h / h));
    table << '\n';
    prev_l2 = l2;
    prev_h = h;
  }
  write_file(output_dir(cfg) / (base.id + "_convergence.csv"), table.str());
  std::cout << table.str();
  return kOk;
}

int cmd_compare_eo(const Flags& flags, const std::string& tol_text) {
  RunConfigFile cfg = resolve(flags);
  double tol = 0.0;
  try {
    std::size_t used = 0;
    tol = std::stod(tol_text, &used);
    if (used != tol_text.size()) throw std::invalid_argument(tol_text);
  } catch (const std::exception&) {
    throw InvalidInput("--tol: not a number: '" + tol_text + "'");
  }
  const Problem problem = instantiate(cfg);
  if (problem.source) throw InvalidInput(problem.id + " has a source term; the EO oracle is homogeneous only");
  const Grid grid = make_grid(problem);
  const SolverConfig config = configure(problem, grid, run_options(cfg));
  const EoComparison cmp = compare_with_eo(problem, grid, config);

  std::ostringstream csv;
  csv << "step,t,linf_diff\n";
  for (const auto& s : cmp.steps) {
    csv << s.step << ',' << format_double(s.t) << ',' << format_double(s.linf) << '\n';
  }
  write_file(output_dir(cfg) / (problem.id + "_compare_eo.csv"), csv.str());
  std::cout << problem.id << ": max |u_LB - u_EO| = " << format_double(cmp.max_linf) << " over "
            << cmp.steps.size() - 1 << " steps (omega = " << format_double(config.omega) << ")\n";
  if (!(cmp.max_linf <= tol)) {
    std::cerr << "difference exceeds tolerance " << format_double(tol) << "\n";
    return kSolver;
  }
  return kOk;
}

int cmd_list() {
  for (const auto& p : catalog()) {
    std::cout << p.id << "\t" << p.dim << "D\t" << p.title << "\t[" << p.origin << "]\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flux-decomposition lattice Boltzmann solver for scalar conservation laws"};
  app.require_subcommand(1);

  Flags run_flags, conv_flags, cmp_flags;
  auto* run = app.add_subcommand("run", "run one catalog problem, write field and report CSVs");
  add_common(run, run_flags);

  auto* conv = app.add_subcommand("convergence", "grid-refinement study with EOC table");
  add_common(conv, conv_flags);
  std::string ladder = "40,80,160,320";
  conv->add_option("--ladder", ladder, "comma-separated grid sizes")->capture_default_str();
  conv_flags.problem = "burgers-sine";

  auto* cmp = app.add_subcommand("compare-eo", "lattice solver vs. Engquist-Osher, step by step");
  add_common(cmp, cmp_flags);
  std::string tol = "1e-10";
  cmp->add_option("--tol", tol, "max allowed L-infinity difference (or inf)")
      ->capture_default_str();

  app.add_subcommand("list", "catalog ids and their literature origin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run) return cmd_run(run_flags);
    if (*conv) return cmd_convergence(conv_flags, ladder);
    if (*cmp) return cmd_compare_eo(cmp_flags, tol);
    return cmd_list();
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownProblem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kSolver;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSolver;
  }
}
