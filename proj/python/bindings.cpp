#include <landing/geometry.hpp>
#include <landing/landing.hpp>
#include <landing/oracle.hpp>
#include <landing/problems.hpp>

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace landing;

namespace {

AmbientPoint point(const Matrix &x) { return AmbientPoint(x); }

StepPolicy make_policy(const std::string &kind, std::optional<double> eta) {
  if (kind == "fixed")
    return StepPolicy::fixed(eta);
  if (kind == "backtracking")
    return StepPolicy::backtracking(eta);
  throw std::invalid_argument("step_policy must be 'fixed' or 'backtracking'");
}

py::dict result_to_dict(const LandingResult &result) {
  py::list trace;
  for (const auto &r : result.trace) {
    py::dict row;
    row["iter"] = r.k;
    row["f"] = r.f_value;
    row["grad_norm"] = r.grad_norm;
    row["h_norm"] = r.h_norm;
    row["N"] = r.N_value;
    row["eta"] = r.eta;
    row["sigma_min_ratio"] = r.sigma_min_ratio;
    trace.append(row);
  }
  py::dict out;
  out["x"] = result.final_point.matrix();
  out["status"] = to_string(result.status);
  out["trace"] = trace;
  return out;
}

LandingConfig make_config(double beta, double omega, std::optional<double> eta,
                          double tol, int max_iters, const std::string &step_policy) {
  LandingConfig config;
  config.beta = MetricParam(beta);
  config.omega = omega;
  config.epsilon = tol;
  config.max_iters = max_iters;
  config.step = make_policy(step_policy, eta);
  return config;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Landing iteration for orthogonality constraints with beta-metric tangent terms.";

  py::register_exception<SingularLayerError>(m, "SingularLayerError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<IllConditionedError>(m, "IllConditionedError",
                                              PyExc_ArithmeticError);

  // constraint
  m.def("constraint_h", [](const Matrix &x) { return constraint_h(x).matrix(); },
        py::arg("x"), "X^T X - I");
  m.def("infeasibility", &infeasibility, py::arg("x"));
  m.def("grad_infeasibility", &grad_infeasibility, py::arg("x"));
  m.def("phi_map", [](const Matrix &x, const Matrix &y) { return phi_map(point(x), y); },
        py::arg("x"), py::arg("y"));
  m.def("ortho_complement",
        [](const Matrix &x) { return ortho_complement(point(x)).basis; }, py::arg("x"));
  m.def("tangent_basis",
        [](const Matrix &x) { return tangent_basis(point(x)).vectors; }, py::arg("x"));
  m.def("is_tangent", &is_tangent, py::arg("x"), py::arg("xi"), py::arg("tol") = 1e-10);

  // metric
  m.def("metric_eval",
        [](const Matrix &x, double beta, const Matrix &xi, const Matrix &zeta) {
          return metric_eval(point(x), MetricParam(beta), xi, zeta);
        },
        py::arg("x"), py::arg("beta"), py::arg("xi"), py::arg("zeta"));
  m.def("metric_eval_stiefel",
        [](const Matrix &x, double beta, const Matrix &xi, const Matrix &zeta) {
          return metric_eval_stiefel(x, MetricParam(beta), xi, zeta);
        },
        py::arg("x"), py::arg("beta"), py::arg("xi"), py::arg("zeta"));
  m.def("gram_matrix",
        [](const Matrix &x, double beta) { return gram_matrix(point(x), MetricParam(beta)); },
        py::arg("x"), py::arg("beta"));

  // geometry
  m.def("is_normal",
        [](const Matrix &x, const Matrix &eta, double tol) {
          return is_normal(point(x), eta, tol);
        },
        py::arg("x"), py::arg("eta"), py::arg("tol") = 1e-10);
  m.def("project_tangent",
        [](const Matrix &x, const Matrix &z) { return project_tangent(point(x), z); },
        py::arg("x"), py::arg("z"));
  m.def("grad_unconstrained",
        [](const Matrix &x, double beta, const Matrix &g) {
          return grad_unconstrained(point(x), MetricParam(beta), g);
        },
        py::arg("x"), py::arg("beta"), py::arg("eucl_grad"));
  m.def("grad_constrained",
        [](const Matrix &x, double beta, const Matrix &g) {
          return grad_constrained(point(x), MetricParam(beta), g);
        },
        py::arg("x"), py::arg("beta"), py::arg("eucl_grad"));
  m.def("grad_canonical",
        [](const Matrix &x, const Matrix &g) { return grad_canonical(point(x), g); },
        py::arg("x"), py::arg("eucl_grad"));
  m.def("first_order_feasibility_drift", &first_order_feasibility_drift, py::arg("x"),
        py::arg("xi"));

  // oracles
  m.def("gradient_via_gram",
        [](const Matrix &x, double beta, const Matrix &g) {
          return oracle::gradient_via_gram(point(x), MetricParam(beta), g);
        },
        py::arg("x"), py::arg("beta"), py::arg("eucl_grad"));
  m.def("projection_via_lsq",
        [](const Matrix &x, double beta, const Matrix &z) {
          return oracle::projection_via_lsq(point(x), MetricParam(beta), z);
        },
        py::arg("x"), py::arg("beta"), py::arg("z"));
  m.def("eigen_reference",
        [](const Matrix &a, Eigen::Index p) {
          const auto ref = oracle::eigen_reference(a, p);
          return py::make_tuple(ref.value, ref.basis);
        },
        py::arg("a"), py::arg("p"));

  // landing
  m.def("landing_step",
        [](const Matrix &x, double beta, double omega, double eta, const Matrix &g) {
          return landing_step(point(x), MetricParam(beta), omega, eta, g).matrix();
        },
        py::arg("x"), py::arg("beta"), py::arg("omega"), py::arg("eta"),
        py::arg("eucl_grad"));

  m.def("solve",
        [](std::function<double(const Matrix &)> f,
           std::function<Matrix(const Matrix &)> grad, const Matrix &x0, double beta,
           double omega, std::optional<double> eta, double tol, int max_iters,
           const std::string &step_policy) {
          Objective obj{std::move(f), std::move(grad), "python", x0.rows(), x0.cols()};
          return result_to_dict(
              solve(obj, x0, make_config(beta, omega, eta, tol, max_iters, step_policy)));
        },
        py::arg("f"), py::arg("eucl_grad"), py::arg("x0"), py::arg("beta") = 0.5,
        py::arg("omega") = 1.0, py::arg("eta") = py::none(), py::arg("tol") = 1e-8,
        py::arg("max_iters") = 10000, py::arg("step_policy") = "fixed",
        "Landing iteration with Python callables for f and its Euclidean gradient.");

  m.def("solve_instance",
        [](const std::string &kind, Eigen::Index n, Eigen::Index p, std::uint64_t seed,
           std::optional<double> delta, double beta, double omega,
           std::optional<double> eta, double tol, int max_iters,
           const std::string &step_policy) {
          const ProblemInstance inst =
              random_instance(parse_problem_kind(kind), n, p, seed, delta);
          py::dict out = result_to_dict(
              solve(inst.objective, inst.x0,
                    make_config(beta, omega, eta, tol, max_iters, step_policy)));
          out["x0"] = inst.x0;
          if (inst.optimum)
            out["optimum"] = *inst.optimum;
          return out;
        },
        py::arg("kind"), py::arg("n"), py::arg("p"), py::arg("seed"),
        py::arg("delta") = py::none(), py::arg("beta") = 0.5, py::arg("omega") = 1.0,
        py::arg("eta") = py::none(), py::arg("tol") = 1e-8, py::arg("max_iters") = 10000,
        py::arg("step_policy") = "fixed",
        "Generates a seeded rayleigh/procrustes instance and solves it.");
}
