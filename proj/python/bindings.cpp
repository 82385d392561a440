#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperspec/bounds.hpp"
#include "hyperspec/eigen.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/matrix.hpp"
#include "hyperspec/oracle.hpp"
#include "hyperspec/structure.hpp"
#include "hyperspec/verify.hpp"

namespace py = pybind11;
using namespace hyperspec;

namespace {

MatrixKind parse_kind(const std::string& s) {
    if (s == "A" || s == "adjacency") return MatrixKind::Adjacency;
    if (s == "L" || s == "laplacian") return MatrixKind::Laplacian;
    if (s == "Q" || s == "signless") return MatrixKind::SignlessLaplacian;
    throw py::value_error("matrix kind must be one of A, L, Q");
}

py::dict evaluation_dict(const bounds::BoundEvaluation& e) {
    py::dict d;
    d["bound_id"] = e.bound_id;
    d["target"] = std::string(bounds::to_string(e.target));
    d["assurance"] = std::string(bounds::to_string(e.assurance));
    d["strict"] = e.strict;
    d["applicable"] = e.applicable;
    d["reason"] = e.reason;
    d["lhs"] = e.lhs;
    d["rhs"] = e.rhs;
    d["slack"] = e.slack;
    d["holds"] = e.holds;
    d["rhs_lower"] = e.rhs_lower;
    d["rhs_upper"] = e.rhs_upper;
    d["equality_expected"] = e.equality_expected;
    d["equality_observed"] = e.equality_observed;
    d["consistent"] = e.consistent;
    py::dict details;
    for (const auto& [k, v] : e.details) details[py::str(k)] = v;
    d["details"] = details;
    d["violation"] = e.violation();
    d["finding"] = e.finding();
    return d;
}

py::dict summary_dict(const SpectralSummary& s) {
    py::dict d;
    d["q_max"] = s.q_max;
    d["q_min"] = s.q_min;
    d["mu_max"] = s.mu_max;
    d["lambda_max"] = s.lambda_max;
    d["lambda_min"] = s.lambda_min;
    d["s_q"] = s.s_q;
    d["s_a"] = s.s_a;
    d["degenerate"] = s.degenerate;
    return d;
}

}  // namespace

PYBIND11_MODULE(_hyperspec, m) {
    m.doc() = "Spectral bounds for uniform hypergraphs";

    static py::exception<Error> error(m, "HyperspecError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init([](int n, std::vector<Edge> edges, std::optional<int> k) {
                 return validate(n, std::move(edges), k);
             }),
             py::arg("n"), py::arg("edges"), py::arg("k") = py::none())
        .def_property_readonly("n", &Hypergraph::n)
        .def_property_readonly("m", &Hypergraph::m)
        .def_property_readonly("edges", &Hypergraph::edges)
        .def_property_readonly("k", &Hypergraph::uniformity)
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
        .def("__repr__", [](const Hypergraph& h) {
            return "Hypergraph(n=" + std::to_string(h.n()) + ", m=" + std::to_string(h.m()) + ")";
        });

    m.def("parse", [](const std::string& text) { return io::parse(text); });
    m.def("read_file", &io::read_file);
    m.def("to_hg", &io::to_hg);
    m.def("to_json", py::overload_cast<const Hypergraph&>(&io::to_json));

    m.def("complete_uniform", [](int n, int k) { return generate(CompleteUniform{n, k}); });
    m.def("single_edge", [](int k) { return generate(SingleEdge{k}); });
    m.def("complete_bipartite_graph", [](int a, int b) { return generate(CompleteBipartiteGraph{a, b}); });
    m.def("complete_bipartite_uniform",
          [](int k, int m1, int m2) { return generate(CompleteBipartiteUniform{k, m1, m2}); });
    m.def("random_connected_uniform",
          [](int n, int k, int edges, std::uint64_t seed) {
              return generate(RandomConnectedUniform{n, k, edges, seed});
          },
          py::arg("n"), py::arg("k"), py::arg("m"), py::arg("seed"));
    m.def("complement", &complement);
    m.def("is_connected", &is_connected);

    m.def("invariants", [](const Hypergraph& h) {
        const auto inv = invariants(h);
        py::dict d;
        d["n"] = inv.n;
        d["m"] = inv.m;
        d["k"] = inv.k;
        d["degrees"] = inv.degrees;
        d["two_degrees"] = inv.two_degrees;
        d["average_degrees"] = inv.average_degrees;
        d["z1"] = inv.z1;
        d["alpha"] = inv.alpha;
        d["d_max"] = inv.d_max;
        d["d_min"] = inv.d_min;
        d["t_min"] = inv.t_min;
        d["d_bar"] = inv.d_bar;
        return d;
    });
    m.def("weak_independence_number", &weak_independence_number);
    m.def("strong_chromatic_number", &strong_chromatic_number);

    m.def("spectrum", [](const Hypergraph& h, const std::string& kind) {
        const auto k = parse_kind(kind);
        const auto mat = k == MatrixKind::Adjacency ? adjacency_matrix(h)
                         : k == MatrixKind::Laplacian ? laplacian(h)
                                                      : signless_laplacian(h);
        return eigenvalues(mat, k).reported();
    }, py::arg("h"), py::arg("kind") = "Q");
    m.def("spectral_summary", [](const Hypergraph& h) { return summary_dict(spectral_summary(h)); });
    m.def("exact_charpoly", [](const Hypergraph& h, const std::string& kind) {
        py::list out;
        for (const auto& c : oracle::exact_charpoly(h, parse_kind(kind)).to_strings())
            out.append(py::int_(py::str(c)));
        return out;
    }, py::arg("h"), py::arg("kind") = "Q");

    m.def("evaluate_bounds", [](const Hypergraph& h, double slack, double equality) {
        py::list out;
        for (const auto& e : bounds::evaluate_all(h, bounds::Tolerances{slack, equality}))
            out.append(evaluation_dict(e));
        return out;
    }, py::arg("h"), py::arg("slack_tol") = 1e-9, py::arg("equality_tol") = 1e-7);
    m.def("bound_ids", [] {
        std::vector<std::string> ids;
        for (const auto& s : bounds::catalog()) ids.push_back(s.id);
        return ids;
    });

    m.def("verify", [](const Hypergraph& h) {
        const auto r = verify(h);
        py::list checks;
        for (const auto& c : r.checks) {
            py::dict d;
            d["check"] = c.name;
            d["status"] = !c.ran ? "skipped" : (c.passed ? "pass" : "fail");
            d["detail"] = c.detail;
            checks.append(d);
        }
        py::dict d;
        d["passed"] = r.passed();
        d["checks"] = checks;
        return d;
    });
}
