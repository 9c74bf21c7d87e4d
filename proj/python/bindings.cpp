#include "colcount/error.hpp"
#include "colcount/estimator.hpp"
#include "colcount/graph.hpp"
#include "colcount/oracles.hpp"
#include "colcount/percolation.hpp"
#include "colcount/report.hpp"
#include "colcount/verifier.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace colcount;

namespace {

using EdgePairs = std::vector<std::pair<int, int>>;

Graph make_graph(int n, const EdgePairs& edges)
{
    std::vector<Edge> list;
    list.reserve(edges.size());
    for (const auto& [a, b] : edges)
        list.push_back(make_edge(a, b));
    return Graph(n, std::move(list));
}

EdgePairs edge_pairs(const Graph& g)
{
    EdgePairs out;
    for (const auto& e : g.edges())
        out.emplace_back(e.a, e.b);
    return out;
}

EstimatorConfig estimator_config(std::optional<int> t, std::optional<int> ell, std::optional<double> d,
                                 std::uint64_t budget, std::uint64_t enumeration_budget, double r_exponent,
                                 unsigned threads)
{
    EstimatorConfig cfg;
    cfg.t = t;
    cfg.ell = ell;
    cfg.d = d;
    cfg.budget = budget;
    cfg.enumeration_budget = enumeration_budget;
    cfg.r_threshold_exponent = r_exponent;
    cfg.threads = threads;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_colcount, m)
{
    m.doc() = "Exact and approximate counting of proper graph colourings";

    static py::exception<Error> error_type(m, "ColcountError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(std::string(to_string(e.kind())) + ": " + e.what());
            py::setattr(exc, "kind", py::str(to_string(e.kind())));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    m.attr("SCHEMA_VERSION") = kSchemaVersion;

    m.def(
        "generate_gnp",
        [](int n, double d, std::uint64_t seed) { return edge_pairs(generate_gnp(n, d, seed)); },
        py::arg("n"), py::arg("d"), py::arg("seed"));

    m.def(
        "read_edge_list",
        [](const std::string& text) {
            std::istringstream in(text);
            const Graph g = read_edge_list(in, "<string>");
            return std::make_pair(g.n(), edge_pairs(g));
        },
        py::arg("text"));

    m.def(
        "write_edge_list",
        [](int n, const EdgePairs& edges) {
            std::ostringstream out;
            write_edge_list(out, make_graph(n, edges));
            return out.str();
        },
        py::arg("n"), py::arg("edges"));

    m.def(
        "estimate_json",
        [](int n, const EdgePairs& edges, int k, std::optional<int> t, std::optional<int> ell,
           std::optional<double> d, std::uint64_t budget, std::uint64_t enumeration_budget, double r_exponent,
           unsigned threads) {
            const Graph g = make_graph(n, edges);
            const auto cfg = estimator_config(t, ell, d, budget, enumeration_budget, r_exponent, threads);
            py::gil_scoped_release release;
            return dump(estimate_json(estimate_log_z(g, k, cfg)));
        },
        py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("t") = py::none(), py::arg("ell") = py::none(),
        py::arg("d") = py::none(), py::arg("budget") = kDefaultEliminationBudget,
        py::arg("enumeration_budget") = kDefaultEnumerationBudget, py::arg("r_exponent") = 0.3,
        py::arg("threads") = 1u);

    m.def(
        "error_decomposition_json",
        [](int n, const EdgePairs& edges, int k, std::optional<int> t, std::optional<int> ell,
           std::optional<double> d, std::uint64_t enumeration_budget, unsigned threads) {
            const Graph g = make_graph(n, edges);
            const auto cfg =
                estimator_config(t, ell, d, kDefaultEliminationBudget, enumeration_budget, 0.3, threads);
            py::gil_scoped_release release;
            return dump(error_decomposition_json(error_decomposition(g, k, cfg)));
        },
        py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("t") = py::none(), py::arg("ell") = py::none(),
        py::arg("d") = py::none(), py::arg("enumeration_budget") = kDefaultEnumerationBudget,
        py::arg("threads") = 1u);

    m.def(
        "verify_json",
        [](int n, const EdgePairs& edges, double d, int k, double epsilon1, std::optional<int> ell,
           std::size_t path_cap, unsigned threads) {
            const Graph g = make_graph(n, edges);
            VerifierConfig cfg;
            cfg.epsilon1 = epsilon1;
            cfg.ell = ell;
            cfg.path_cap = path_cap;
            cfg.threads = threads;
            py::gil_scoped_release release;
            return dump(verifier_json(verify_concentration(g, d, k, cfg)));
        },
        py::arg("n"), py::arg("edges"), py::arg("d"), py::arg("k"), py::arg("epsilon1"),
        py::arg("ell") = py::none(), py::arg("path_cap") = kDefaultPathCap, py::arg("threads") = 1u);

    m.def(
        "brute_force_count",
        [](int n, const EdgePairs& edges, int k, std::uint64_t budget) {
            return to_decimal(brute_force_count(make_graph(n, edges), k, budget));
        },
        py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("budget") = kDefaultEnumerationBudget);

    m.def(
        "chromatic_polynomial",
        [](int n, const EdgePairs& edges) {
            const auto poly = chromatic_polynomial(make_graph(n, edges));
            std::vector<std::string> out;
            for (const auto& c : poly.coefficients())
                out.push_back(to_decimal(c));
            return out;
        },
        py::arg("n"), py::arg("edges"));

    m.def(
        "first_moment", [](double d, int k) { return first_moment_formula(d, k); }, py::arg("d"), py::arg("k"));

    m.def(
        "exact_tv",
        [](int n, const EdgePairs& edges, int x, int sigma, int eta, const std::vector<int>& lambda, int k) {
            return exact_tv(make_graph(n, edges), x, sigma, eta, lambda, k);
        },
        py::arg("n"), py::arg("edges"), py::arg("x"), py::arg("sigma"), py::arg("eta"), py::arg("lambda_"),
        py::arg("k"));

    m.def(
        "tv_check_json",
        [](int n, const EdgePairs& edges, int x, const std::vector<int>& lambda, int k) {
            const Graph g = make_graph(n, edges);
            return dump(tv_json(x, lambda, k, std::nullopt, std::nullopt, tv_vs_percolation_check(g, x, lambda, k)));
        },
        py::arg("n"), py::arg("edges"), py::arg("x"), py::arg("lambda_"), py::arg("k"));

    m.def(
        "percolation_exact",
        [](int n, const EdgePairs& edges, int root, const std::vector<int>& target, int s) {
            const Graph g = make_graph(n, edges);
            return percolation_probability_exact(g, DisagreementConfig::from_degrees(g, s, root), target);
        },
        py::arg("n"), py::arg("edges"), py::arg("root"), py::arg("target"), py::arg("s"));

    m.def(
        "percolation_mc",
        [](int n, const EdgePairs& edges, int root, const std::vector<int>& target, int s, std::uint64_t samples,
           std::uint64_t seed, unsigned threads) {
            const Graph g = make_graph(n, edges);
            const auto cfg = DisagreementConfig::from_degrees(g, s, root);
            py::gil_scoped_release release;
            const auto est = percolation_probability_mc(g, cfg, target, samples, seed, threads);
            return std::make_pair(est.estimate, est.half_width_95);
        },
        py::arg("n"), py::arg("edges"), py::arg("root"), py::arg("target"), py::arg("s"), py::arg("samples"),
        py::arg("seed"), py::arg("threads") = 1u);

    m.def(
        "coupling_map",
        [](int n, const EdgePairs& edges, int x, int sigma, int eta, const std::vector<int>& xi, int k) {
            return coupling_map_T(make_graph(n, edges), x, sigma, eta, xi, k);
        },
        py::arg("n"), py::arg("edges"), py::arg("x"), py::arg("sigma"), py::arg("eta"), py::arg("xi"),
        py::arg("k"));

    m.def(
        "decay_json",
        [](int n, const EdgePairs& edges, int x, int k, int t_max) {
            return dump(decay_json(x, k, decay_profile(make_graph(n, edges), x, k, t_max)));
        },
        py::arg("n"), py::arg("edges"), py::arg("x"), py::arg("k"), py::arg("t_max"));

    m.def(
        "glauber_json",
        [](int n, const EdgePairs& edges, int k, int v, int u, std::uint64_t sweeps, std::uint64_t burn_in,
           std::uint64_t seed) {
            const Graph g = make_graph(n, edges);
            py::gil_scoped_release release;
            return dump(glauber_json(v, u, k, burn_in, seed, glauber_disagreement(g, k, v, u, sweeps, burn_in, seed),
                                     std::nullopt));
        },
        py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("v"), py::arg("u"), py::arg("sweeps"),
        py::arg("burn_in"), py::arg("seed"));
}
