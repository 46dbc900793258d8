#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bisphere/asymptotics.hpp"
#include "bisphere/forces.hpp"
#include "bisphere/geometry.hpp"
#include "bisphere/quadrature.hpp"
#include "bisphere/series.hpp"
#include "bisphere/sweep.hpp"

namespace py = pybind11;
using namespace bisphere;

namespace {

const ConstantTable& paper_table() {
    static const ConstantTable t = ConstantTable::paper_defaults();
    return t;
}

Method method_from(const std::string& s) {
    if (s == "direct") return Method::Direct;
    if (s == "asym" || s == "asymptotic") return Method::Asymptotic;
    throw std::invalid_argument("method must be 'direct' or 'asymptotic'");
}

}  // namespace

PYBIND11_MODULE(_bisphere, m) {
    m.doc() = "Near-contact electrostatics of two equal charged conducting spheres "
              "in a uniform external field";

    py::class_<EvalReport>(m, "EvalReport")
        .def_readonly("value", &EvalReport::value)
        .def_readonly("terms_used", &EvalReport::terms_used)
        .def_readonly("tail_bound", &EvalReport::tail_bound)
        .def_readonly("within_validity", &EvalReport::within_validity)
        .def("__repr__", [](const EvalReport& r) {
            return "EvalReport(value=" + std::to_string(r.value) +
                   ", terms=" + std::to_string(r.terms_used) + ")";
        });

    m.def(
        "eta_from_xi",
        [](double xi, const std::string& policy) {
            return eta_from_xi(xi, policy == "arccosh" ? EtaMap::ExactArccosh
                                                       : EtaMap::SqrtApprox);
        },
        py::arg("xi"), py::arg("policy") = "sqrt");

    m.def("series_ids", [] {
        std::vector<std::string> keys;
        for (const SeriesId& id : SeriesId::all()) keys.push_back(id.key());
        return keys;
    });

    m.def(
        "series_term",
        [](const std::string& id, double eta1, std::uint64_t n) {
            return series_term(SeriesId::from_key(id), eta1, n);
        },
        py::arg("id"), py::arg("eta1"), py::arg("n"));

    m.def(
        "eval_series",
        [](const std::string& id, double eta1, const std::string& method, double rel_tol) {
            const SeriesId sid = SeriesId::from_key(id);
            return method_from(method) == Method::Direct
                       ? eval_series_direct(sid, eta1, rel_tol)
                       : eval_series_asymptotic(sid, eta1, paper_table());
        },
        py::arg("id"), py::arg("eta1"), py::arg("method") = "direct",
        py::arg("rel_tol") = 1e-12);

    m.def("eval_constant", &eval_constant, py::arg("label"), py::arg("abs_tol") = 1e-9);

    // split-parameter expansions for T0/U0; inner+outer is X-free
    m.def("t0_inner", &t0_inner, py::arg("eta1"), py::arg("X"));
    m.def("u0_inner", &u0_inner, py::arg("eta1"), py::arg("X"));
    m.def(
        "t0_outer", [](double eta1, double X) { return t0_outer(eta1, X, paper_table()); },
        py::arg("eta1"), py::arg("X"));
    m.def(
        "u0_outer", [](double eta1, double X) { return u0_outer(eta1, X, paper_table()); },
        py::arg("eta1"), py::arg("X"));

    m.def(
        "constants_table",
        [](double abs_tol) {
            py::dict out;
            for (const auto& [label, e] : build_constant_table(abs_tol).entries()) {
                py::dict row;
                row["computed"] = e.computed;
                if (e.paper_value) row["paper_value"] = *e.paper_value;
                row["abs_err"] = e.abs_err;
                row["known_anomalous"] = e.known_anomalous;
                out[label.c_str()] = row;
            }
            return out;
        },
        py::arg("abs_tol") = 1e-9);

    m.def(
        "force_components",
        [](double alpha, double beta, double theta, double xi, const std::string& method,
           double rel_tol) {
            static SeriesCache cache;
            const ForceResult r = force_components(
                NearContactGeometry::from_xi(xi), FieldConfig{alpha, beta, theta},
                method_from(method), RecipeSet::builtin(), paper_table(), &cache, rel_tol);
            py::dict out;
            out["fz"] = r.fz;
            out["fx"] = r.fx;
            out["coefficients"] = r.coefficients;
            return out;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("theta"), py::arg("xi"),
        py::arg("method") = "direct", py::arg("rel_tol") = 1e-12);

    m.def(
        "error_sweep",
        [](double xi_min, double xi_max, int points, double rel_tol) {
            SweepConfig cfg;
            cfg.xi_min = xi_min;
            cfg.xi_max = xi_max;
            cfg.points = points;
            cfg.rel_tol = rel_tol;
            py::list out;
            for (const ErrorRow& r : run_error_sweep(cfg, paper_table())) {
                py::dict row;
                row["series"] = r.series.key();
                row["xi"] = r.xi;
                row["direct"] = r.direct;
                row["asymptotic"] = r.asymptotic;
                row["pct_error"] = r.pct_error;
                out.append(row);
            }
            return out;
        },
        py::arg("xi_min") = 1e-6, py::arg("xi_max") = 1e-2, py::arg("points") = 20,
        py::arg("rel_tol") = 1e-10);
}
