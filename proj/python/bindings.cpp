#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <sstream>

#include "wirtinger/cli.hpp"
#include "wirtinger/core.hpp"
#include "wirtinger/errors.hpp"
#include "wirtinger/oracle.hpp"
#include "wirtinger/profile.hpp"
#include "wirtinger/rootfind.hpp"
#include "wirtinger/solver.hpp"
#include "wirtinger/specfun.hpp"
#include "wirtinger/verify.hpp"

namespace py = pybind11;
using namespace wirtinger;

namespace {

Exponent to_exponent(const py::handle& obj) {
    if (py::isinstance<py::str>(obj)) return Exponent::parse(obj.cast<std::string>());
    const double v = obj.cast<double>();
    return std::isinf(v) && v > 0 ? Exponent::infinity() : Exponent::finite(v);
}

Params to_params(const py::handle& p, const py::handle& q, double r) {
    return Params::make(to_exponent(p), to_exponent(q), r);
}

QuadConfig quad(double rel_tol) {
    QuadConfig cfg;
    cfg.rel_tol = rel_tol;
    cfg.abs_tol = rel_tol / 10.0;
    return cfg;
}

py::dict alpha_dict(const AlphaResult& res) {
    py::dict d;
    d["alpha"] = res.alpha;
    d["m_star"] = res.m_star;
    d["regime"] = to_string(res.regime);
    d["alpha_qq"] = res.alpha_qq;
    d["gap"] = res.gap();
    d["k_at_one"] = res.k_at_one;
    d["k_values"] = res.k_values;
    d["quad_error"] = res.quad_error;
    if (res.roots) {
        d["interior_roots"] = res.roots->interior_roots;
    } else {
        d["interior_roots"] = py::none();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sharp constants of periodic Wirtinger-type inequalities";

    static py::exception<NumericalError> numerical_error(m, "NumericalError", PyExc_RuntimeError);
    py::register_exception<InadmissibleError>(m, "InadmissibleError", PyExc_ValueError);

    m.def("beta", &beta, py::arg("a"), py::arg("b"));
    m.def("ln_gamma", &ln_gamma, py::arg("x"));

    m.def(
        "admissibility",
        [](py::object p, py::object q, double r) { return to_string(to_params(p, q, r).admissibility()); },
        py::arg("p"), py::arg("q"), py::arg("r"));

    m.def(
        "K",
        [](double mm, double p, double q, double r, double tol) {
            return K_of_m(mm, Params::finite(p, q, r), quad(tol));
        },
        py::arg("m"), py::arg("p"), py::arg("q"), py::arg("r"), py::arg("tol") = 1e-10);
    m.def(
        "F",
        [](double mm, double p, double q, double r, double tol) {
            return F_of_m(mm, Params::finite(p, q, r), quad(tol));
        },
        py::arg("m"), py::arg("p"), py::arg("q"), py::arg("r"), py::arg("tol") = 1e-10);
    m.def(
        "f_prime_at_1", [](double p, double q, double r) { return f_prime_at_1(Params::finite(p, q, r)); },
        py::arg("p"), py::arg("q"), py::arg("r"));
    m.def("alpha_closed_form", &alpha_closed_form, py::arg("p"), py::arg("q"));
    m.def("alpha_q1_r2", &alpha_q1_r2, py::arg("p"));
    m.def("alpha_q_infinity_r2", &alpha_q_infinity_r2, py::arg("p"));
    m.def("alpha_p_infinity", &alpha_p_infinity, py::arg("q"));

    m.def(
        "find_roots",
        [](double p, double q, double r) { return find_roots(Params::finite(p, q, r)).interior_roots; },
        py::arg("p"), py::arg("q"), py::arg("r"));

    m.def(
        "best_constant",
        [](py::object p, py::object q, double r, double tol) {
            const Params prm = to_params(p, q, r);
            AlphaResult res;
            {
                py::gil_scoped_release release;
                res = best_constant(prm, quad(tol));
            }
            return alpha_dict(res);
        },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("tol") = 1e-10);

    m.def(
        "rescale",
        [](double alpha, py::object p, py::object q, double r, double a, double b) {
            return rescale(alpha, to_params(p, q, r), a, b);
        },
        py::arg("alpha"), py::arg("p"), py::arg("q"), py::arg("r"), py::arg("a"), py::arg("b"));

    m.def(
        "classify_regime",
        [](py::object p, py::object q, double r) { return to_string(classify_regime(to_params(p, q, r))); },
        py::arg("p"), py::arg("q"), py::arg("r"));

    m.def(
        "breakpoint_scan",
        [](double p, double r, double q_lo, double q_hi, int n, bool parallel) {
            BreakpointScan scan;
            {
                py::gil_scoped_release release;
                scan = breakpoint_scan(p, r, q_lo, q_hi, n, {}, {.parallel = parallel});
            }
            py::list rows;
            for (const ScanRow& row : scan.rows) {
                py::dict d = row.result ? alpha_dict(*row.result) : py::dict();
                d["q"] = row.q;
                d["error"] = row.error;
                rows.append(d);
            }
            py::dict out;
            out["rows"] = rows;
            out["q_star"] = scan.q_star ? py::cast(*scan.q_star) : py::none();
            out["failures"] = scan.failures;
            return out;
        },
        py::arg("p"), py::arg("r"), py::arg("q_lo"), py::arg("q_hi"), py::arg("n"),
        py::arg("parallel") = false);

    m.def(
        "build_profile",
        [](double p, double q, double r, double mm, int n) {
            const Profile prof = build_profile(mm, Params::finite(p, q, r), n);
            const ProfileResiduals res = verify_profile(prof);
            py::dict d;
            d["m"] = prof.m;
            d["gamma"] = prof.gamma;
            d["x"] = prof.nodes;
            d["u"] = prof.u_values;
            d["du"] = prof.du_values;
            py::dict residuals;
            for (const auto& [name, value] : res.named()) residuals[py::str(name)] = value;
            d["residuals"] = residuals;
            return d;
        },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("m"), py::arg("n") = 256);

    m.def(
        "quotient",
        [](const std::vector<double>& u, double p, double q, double r) {
            const QuotientValue v = quotient(u, Params::finite(p, q, r));
            return py::make_tuple(v.value, v.gradient);
        },
        py::arg("u"), py::arg("p"), py::arg("q"), py::arg("r"));

    m.def(
        "minimize_direct",
        [](double p, double q, double r, int n_grid, std::uint64_t seed, int restarts) {
            OracleOptions opts;
            opts.restarts = restarts;
            OracleResult res;
            {
                py::gil_scoped_release release;
                res = minimize_direct(Params::finite(p, q, r), n_grid, seed, opts);
            }
            py::dict d;
            d["alpha_estimate"] = res.alpha_estimate;
            d["n_grid"] = res.n_grid;
            d["iterations"] = res.iterations;
            d["constraint_residual"] = res.constraint_residual;
            d["converged"] = res.converged;
            d["minimizer_samples"] = res.minimizer_samples;
            std::vector<double> values;
            for (const auto& o : res.restarts) values.push_back(o.value);
            d["restart_values"] = values;
            return d;
        },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("n_grid") = 800, py::arg("seed") = 1,
        py::arg("restarts") = 5);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));

#ifdef VERSION_INFO
#define WIRTINGER_STR(x) #x
#define WIRTINGER_XSTR(x) WIRTINGER_STR(x)
    m.attr("__version__") = WIRTINGER_XSTR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
