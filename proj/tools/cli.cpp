#include "cli.hpp"

#include <landing/csv.hpp>
#include <landing/landing.hpp>
#include <landing/problems.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace landing::cli {

namespace {

struct Options {
  std::string problem = "rayleigh";
  int n = 20;
  int p = 5;
  double beta = 0.5;
  std::vector<double> betas;
  double omega = 1.0;
  std::optional<double> eta;
  double tol = 1e-8;
  int max_iters = 10000;
  std::uint64_t seed = 42;
  std::optional<double> delta = 0.5;
  bool gaussian_start = false;
  std::string step_policy = "fixed";
  std::string matrix_a;
  std::string matrix_b;
  std::string out;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void add_common_options(CLI::App &cmd, Options &opt) {
  cmd.add_option("--problem", opt.problem, "Objective: rayleigh or procrustes")
      ->check(CLI::IsMember({"rayleigh", "procrustes"}));
  cmd.add_option("--n", opt.n, "Rows of X (ignored when matrices are loaded)");
  cmd.add_option("--p", opt.p, "Columns of X");
  cmd.add_option("--omega", opt.omega, "Weight of the infeasibility term");
  cmd.add_option("--eta", opt.eta,
                 "Step size (default 0.1 / (1 + sigma_max(X0)^2))");
  cmd.add_option("--tol", opt.tol, "Stopping tolerance on ||grad|| + ||h||");
  cmd.add_option("--max-iters", opt.max_iters, "Iteration cap");
  cmd.add_option("--seed", opt.seed, "Seed of the random instance");
  cmd.add_option("--delta", opt.delta, "Start at ||h(X0)|| ~ delta from St(n,p)");
  cmd.add_flag("--gaussian-start", opt.gaussian_start,
               "Start from a standard normal X0 instead (overrides --delta)");
  cmd.add_option("--step-policy", opt.step_policy, "fixed or backtracking")
      ->check(CLI::IsMember({"fixed", "backtracking"}));
  cmd.add_option("--matrix-a", opt.matrix_a, "CSV file with the matrix A");
  cmd.add_option("--matrix-b", opt.matrix_b,
                 "CSV file with the matrix B (procrustes)");
  cmd.add_option("--out", opt.out, "Output CSV file");
}

ProblemInstance build_instance(Options opt) {
  const ProblemKind kind = parse_problem_kind(opt.problem);
  if (opt.gaussian_start)
    opt.delta.reset();
  if (opt.matrix_a.empty() && opt.matrix_b.empty()) {
    if (opt.n < 1 || opt.p < 1)
      throw UsageError("n and p must be positive");
    if (opt.p > opt.n)
      throw UsageError("p must satisfy p <= n");
    return random_instance(kind, opt.n, opt.p, opt.seed, opt.delta);
  }

  if (opt.matrix_a.empty())
    throw UsageError("--matrix-b requires --matrix-a");
  const Matrix a = csv::read_matrix(opt.matrix_a);
  ProblemInstance inst;
  inst.seed = opt.seed;
  if (kind == ProblemKind::rayleigh) {
    if (!opt.matrix_b.empty())
      throw UsageError("--matrix-b is only used by the procrustes problem");
    if (opt.p < 1 || opt.p > a.rows())
      throw UsageError("p must satisfy p <= n");
    inst.objective = rayleigh(a, opt.p);
  } else {
    if (opt.matrix_b.empty())
      throw UsageError("procrustes needs both --matrix-a and --matrix-b");
    const Matrix b = csv::read_matrix(opt.matrix_b);
    if (b.cols() > a.cols())
      throw UsageError("p must satisfy p <= n");
    inst.objective = procrustes(a, b);
  }
  Rng rng(opt.seed);
  inst.x0 = random_initial_point(inst.objective.n, inst.objective.p, opt.delta, rng);
  return inst;
}

LandingConfig build_config(const Options &opt, double beta) {
  LandingConfig config;
  config.beta = MetricParam(beta);
  config.omega = opt.omega;
  config.epsilon = opt.tol;
  config.max_iters = opt.max_iters;
  config.step = opt.step_policy == "backtracking" ? StepPolicy::backtracking(opt.eta)
                                                  : StepPolicy::fixed(opt.eta);
  config.validate();
  return config;
}

int exit_code(LandingStatus status) {
  switch (status) {
  case LandingStatus::converged:
    return kConverged;
  case LandingStatus::max_iters:
    return kMaxIters;
  default:
    return kBreakdown;
  }
}

nlohmann::json summary(const LandingResult &result, double beta) {
  const IterationRecord &last = result.trace.back();
  return {{"status", to_string(result.status)},
          {"beta", beta},
          {"iterations", last.k},
          {"final_f", last.f_value},
          {"final_h_norm", last.h_norm},
          {"final_grad_norm", last.grad_norm}};
}

int do_run(const Options &opt, std::ostream &out) {
  const ProblemInstance inst = build_instance(opt);
  const LandingConfig config = build_config(opt, opt.beta);
  const LandingResult result = solve(inst.objective, inst.x0, config);
  if (!opt.out.empty())
    csv::write_trace(opt.out, result.trace);

  nlohmann::json s = summary(result, opt.beta);
  if (inst.optimum)
    s["optimum"] = *inst.optimum;
  out << s.dump() << '\n';
  return exit_code(result.status);
}

int do_sweep(const Options &opt, std::ostream &out) {
  if (opt.betas.empty())
    throw UsageError("--betas needs at least one value");
  const ProblemInstance inst = build_instance(opt);

  std::ostringstream table;
  table << "beta,status,iterations,final_f,final_h_norm,final_grad_norm\n";
  int code = kConverged;
  for (double beta : opt.betas) {
    const LandingResult result = solve(inst.objective, inst.x0, build_config(opt, beta));
    const IterationRecord &last = result.trace.back();
    table << csv::format_number(beta) << ',' << to_string(result.status) << ','
          << last.k << ',' << csv::format_number(last.f_value) << ','
          << csv::format_number(last.h_norm) << ','
          << csv::format_number(last.grad_norm) << '\n';
    code = std::max(code, exit_code(result.status));
  }

  if (opt.out.empty()) {
    out << table.str();
  } else {
    std::ofstream file(opt.out);
    if (!file)
      throw std::runtime_error("cannot write '" + opt.out + "'");
    file << table.str();
  }
  return code;
}

} // namespace

int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Landing method for optimization under orthogonality constraints"};
  app.require_subcommand(1);

  Options opt;
  CLI::App *run = app.add_subcommand("run", "Solve one instance and write its trace");
  add_common_options(*run, opt);
  run->add_option("--beta", opt.beta, "Metric parameter beta > 0");

  CLI::App *sweep =
      app.add_subcommand("sweep", "Solve one instance for several beta values");
  add_common_options(*sweep, opt);
  sweep->add_option("--betas", opt.betas, "Comma-separated beta values")
      ->delimiter(',')
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (run->parsed())
      return do_run(opt, out);
    return do_sweep(opt, out);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const SingularLayerError &e) {
    err << "error: " << e.what() << '\n';
    return kBreakdown;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

} // namespace landing::cli
