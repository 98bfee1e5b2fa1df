#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qbs/analysis.hpp"
#include "qbs/functions.hpp"
#include "qbs/moments.hpp"
#include "qbs/operators.hpp"
#include "qbs/verify.hpp"

namespace py = pybind11;

namespace {

qbs::StancuParams params_from(const std::vector<double>& p) {
    if (p.size() != 4)
        throw std::invalid_argument("params must be (alpha1, alpha2, beta1, beta2)");
    return {p[0], p[1], p[2], p[3]};
}

qbs::TargetFunction resolve_function(const py::object& f) {
    if (py::isinstance<py::str>(f)) return qbs::parse_function(f.cast<std::string>());
    auto fn = f.cast<std::function<double(double)>>();
    return qbs::TargetFunction("py", fn);
}

qbs::OperatorSpec make_spec(const std::string& kind, int n, double q,
                            const std::vector<double>& params) {
    using qbs::OperatorSpec;
    if (kind == "bernstein") return OperatorSpec::bernstein(n);
    if (kind == "kantorovich") return OperatorSpec::kantorovich(n);
    if (kind == "q-bernstein-kantorovich")
        return OperatorSpec::q_bernstein_kantorovich(n, qbs::QValue(q));
    if (kind == "stancu-shifted") return OperatorSpec::stancu_shifted(n, params_from(params));
    if (kind == "kantorovich-stancu")
        return OperatorSpec::kantorovich_stancu(n, params_from(params));
    if (kind == "q-kantorovich-stancu")
        return OperatorSpec::q_kantorovich_stancu(n, qbs::QValue(q), params_from(params));
    throw std::invalid_argument("unknown operator kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Kantorovich-type q-Bernstein-Stancu operators (C++ core)";

    m.def("q_integer",
          [](int n, double q) { return qbs::q_integer(n, qbs::QValue(q)); },
          py::arg("n"), py::arg("q"));
    m.def("q_factorial",
          [](int n, double q) { return qbs::q_factorial(n, qbs::QValue(q)); },
          py::arg("n"), py::arg("q"));
    m.def("q_binomial",
          [](int n, int k, double q) { return qbs::q_binomial(n, k, qbs::QValue(q)); },
          py::arg("n"), py::arg("k"), py::arg("q"));
    m.def("q_pochhammer_one_minus",
          [](double x, int mm, double q) {
              return qbs::q_pochhammer_one_minus(x, mm, qbs::QValue(q));
          },
          py::arg("x"), py::arg("m"), py::arg("q"));
    m.def("jackson_integral",
          [](const std::function<double(double)>& f, double upper, double q, double abs_tol,
             int max_terms) {
              return qbs::jackson_integral(f, upper, qbs::QValue(q),
                                           {abs_tol, max_terms});
          },
          py::arg("f"), py::arg("upper"), py::arg("q"), py::arg("abs_tol") = 1e-14,
          py::arg("max_terms") = 4096);

    m.def("stancu_domain",
          [](int n, double q, const std::vector<double>& params) {
              const qbs::StancuDomain d =
                  qbs::stancu_domain(n, qbs::QValue(q), params_from(params));
              return std::make_pair(d.a, d.b);
          },
          py::arg("n"), py::arg("q"), py::arg("params"));
    m.def("q_bernstein_weights",
          [](int n, double q, double u) {
              return qbs::q_bernstein_weights(n, qbs::QValue(q), u).w;
          },
          py::arg("n"), py::arg("q"), py::arg("u"));
    m.def("stancu_weights",
          [](int n, double q, const std::vector<double>& params, double x) {
              const qbs::BasisWeights w =
                  qbs::stancu_weights(n, qbs::QValue(q), params_from(params), x);
              return std::make_pair(w.w, w.in_domain);
          },
          py::arg("n"), py::arg("q"), py::arg("params"), py::arg("x"),
          "returns (weights, x_was_inside_domain)");

    py::class_<qbs::Evaluator>(m, "Operator",
                               "one operator applied to one target function; call it at x")
        .def(py::init([](const std::string& kind, int n, double q,
                         const std::vector<double>& params, const py::object& f,
                         double abs_tol, int max_terms) {
                 return qbs::Evaluator(make_spec(kind, n, q, params), resolve_function(f),
                                       {abs_tol, max_terms});
             }),
             py::arg("kind"), py::arg("n"), py::arg("q") = 0.5,
             py::arg("params") = std::vector<double>{0, 0, 0, 0}, py::arg("f") = "fig6",
             py::arg("abs_tol") = 1e-14, py::arg("max_terms") = 1 << 20)
        .def("__call__", [](const qbs::Evaluator& e, double x) { return e(x); }, py::arg("x"))
        .def("domain",
             [](const qbs::Evaluator& e) {
                 const qbs::StancuDomain d = e.spec().domain();
                 return std::make_pair(d.a, d.b);
             })
        .def("nodes", [](const qbs::Evaluator& e) {
            std::vector<std::tuple<int, double, double>> out;
            for (const qbs::NodeSegment& s : qbs::sample_nodes(e.spec()))
                out.emplace_back(s.k, s.lo, s.hi);
            return out;
        });

    m.def("first_moment",
          [](int n, double q, const std::vector<double>& params, double x) {
              return qbs::first_moment(n, qbs::QValue(q), params_from(params), x);
          },
          py::arg("n"), py::arg("q"), py::arg("params"), py::arg("x"));
    m.def("second_moment",
          [](int n, double q, const std::vector<double>& params, double x) {
              return qbs::second_moment(n, qbs::QValue(q), params_from(params), x);
          },
          py::arg("n"), py::arg("q"), py::arg("params"), py::arg("x"));
    m.def("central_second_moment",
          [](int n, double q, const std::vector<double>& params, double x) {
              return qbs::central_second_moment(n, qbs::QValue(q), params_from(params), x);
          },
          py::arg("n"), py::arg("q"), py::arg("params"), py::arg("x"));
    m.def("central_second_moment_bound",
          [](int n, double q, const std::vector<double>& params) {
              return qbs::central_second_moment_bound(n, qbs::QValue(q), params_from(params));
          },
          py::arg("n"), py::arg("q"), py::arg("params"));
    m.def("delta_global",
          [](int n, double q, const std::vector<double>& params) {
              return qbs::delta_global(n, qbs::QValue(q), params_from(params));
          },
          py::arg("n"), py::arg("q"), py::arg("params"));
    m.def("delta_local",
          [](int n, double q, const std::vector<double>& params, double x) {
              return qbs::delta_local(n, qbs::QValue(q), params_from(params), x);
          },
          py::arg("n"), py::arg("q"), py::arg("params"), py::arg("x"));
    m.def("first_moment_line",
          [](int n, double q, const std::vector<double>& params) {
              const qbs::AffineCoeffs c =
                  qbs::first_moment_line(n, qbs::QValue(q), params_from(params));
              return std::make_pair(c.slope, c.offset);
          },
          py::arg("n"), py::arg("q"), py::arg("params"), "returns (slope, offset)");
    m.def("voronovskaja_limit",
          [](double x, double a, const std::vector<double>& params) {
              const qbs::VoronovskajaLimit lim =
                  qbs::voronovskaja_limit(x, a, params_from(params));
              return std::make_pair(lim.drift, lim.diffusion);
          },
          py::arg("x"), py::arg("a"), py::arg("params"), "returns (drift, diffusion)");

    m.def("modulus",
          [](const py::object& f, double delta, int grid_points) {
              return qbs::modulus(resolve_function(f), delta, grid_points).value;
          },
          py::arg("f"), py::arg("delta"), py::arg("grid_points") = 2001);
    m.def("second_modulus",
          [](const py::object& f, double delta, int grid_points) {
              return qbs::second_modulus(resolve_function(f), delta, grid_points).value;
          },
          py::arg("f"), py::arg("delta"), py::arg("grid_points") = 2001);
    m.def("global_modulus_bound",
          [](const py::object& f, int n, double q, const std::vector<double>& params) {
              return qbs::global_modulus_bound(resolve_function(f), n, qbs::QValue(q),
                                               params_from(params));
          },
          py::arg("f"), py::arg("n"), py::arg("q"), py::arg("params"));

    m.def("builtin_function_names", [] { return qbs::builtin_function_names(); });
    m.def("eval_function",
          [](const std::string& name_or_expr, double x) {
              return qbs::parse_function(name_or_expr)(x);
          },
          py::arg("f"), py::arg("x"));

    m.def("run_verify", [] {
        const qbs::VerifyReport r = qbs::run_verify();
        std::vector<std::tuple<std::string, bool, double>> out;
        for (const qbs::VerifyCheck& c : r.checks) out.emplace_back(c.name, c.pass, c.deviation);
        return out;
    });
}
