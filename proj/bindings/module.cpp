#include "homcount/corpus.hpp"
#include "homcount/density.hpp"
#include "homcount/errors.hpp"
#include "homcount/graph.hpp"
#include "homcount/graph_io.hpp"
#include "homcount/hom_engine.hpp"
#include "homcount/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
namespace hc = homcount;

namespace {

// cpp_int values exceed every fixed-width lane, so they cross the boundary as
// decimal strings and land as Python ints.
py::int_ to_py_int(const hc::Count& value) {
    const std::string digits = value.str();
    PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::object to_fraction(const hc::Density& d) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py_int(d.num()), to_py_int(d.den()));
}

hc::EngineOptions engine_options(int threads, std::uint64_t budget) {
    return {threads, budget};
}

hc::CorpusSpec corpus_spec(int n_min, int n_max, const std::string& edge_probability,
                           std::uint64_t samples, std::uint64_t seed) {
    hc::CorpusSpec spec{n_min, n_max, hc::parse_probability(edge_probability), samples, seed};
    hc::validate(spec);
    return spec;
}

std::string graph_repr(const hc::Graph& g) {
    std::ostringstream out;
    out << "Graph(order=" << g.order() << ", edges=[";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        if (!first) out << ", ";
        out << "(" << u << ", " << v << ")";
        first = false;
    }
    out << "])";
    return out.str();
}

constexpr std::uint64_t kDefaultBudget = hc::EngineOptions{}.naive_budget;

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact homomorphism counting and density bounds for finite simple graphs";
    m.attr("DEFAULT_BUDGET") = kDefaultBudget;

    // Base first: pybind11 tries translators most-recent-first, so derived
    // exceptions must be registered after their base to win the match.
    py::object error = py::register_exception<hc::Error>(m, "Error");
    py::register_exception<hc::ParseError>(m, "ParseError", error.ptr());
    py::register_exception<hc::BudgetExceededError>(m, "BudgetExceededError", error.ptr());
    py::register_exception<hc::EmptyCodomainError>(m, "EmptyCodomainError", error.ptr());

    py::class_<hc::Graph>(m, "Graph")
        .def(py::init<int, std::vector<hc::Edge>>(), py::arg("order"),
             py::arg("edges") = std::vector<hc::Edge>{})
        .def_property_readonly("order", &hc::Graph::order)
        .def_property_readonly("edge_count", &hc::Graph::edge_count)
        .def_property_readonly("edges", [](const hc::Graph& g) { return g.edges(); })
        .def("neighbors", [](const hc::Graph& g, int v) { return g.neighbors(v); }, py::arg("v"))
        .def("degree", &hc::Graph::degree, py::arg("v"))
        .def("adjacent", &hc::Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("is_edgeless", &hc::Graph::is_edgeless)
        .def("is_complete", &hc::Graph::is_complete)
        .def("isolated_vertices", [](const hc::Graph& g) { return isolated_vertices(g); })
        .def("__eq__", [](const hc::Graph& a, const hc::Graph& b) { return a == b; })
        .def("__repr__", &graph_repr);

    m.def("complete", &hc::complete, py::arg("n"));
    m.def("path", &hc::path, py::arg("n"));
    m.def("cycle", &hc::cycle, py::arg("n"));
    m.def("edgeless", &hc::edgeless, py::arg("n"));
    m.def("complement", &hc::complement, py::arg("g"));
    m.def("append_isolated", &hc::append_isolated, py::arg("g"), py::arg("count") = 1);
    m.def(
        "strip_isolated",
        [](const hc::Graph& g) {
            hc::StrippedGraph s = hc::strip_isolated(g);
            return py::make_tuple(s.graph, s.removed);
        },
        py::arg("g"), "Returns (graph without isolated vertices, number removed).");

    m.def("parse_graph6", &hc::parse_graph6, py::arg("text"));
    m.def("write_graph6", &hc::write_graph6, py::arg("g"));
    m.def("parse_graph6_lines", &hc::parse_graph6_lines, py::arg("text"));
    m.def("parse_edge_list", &hc::parse_edge_list, py::arg("text"));
    m.def("write_edge_list", &hc::write_edge_list, py::arg("g"));

    py::class_<hc::SearchStats>(m, "SearchStats")
        .def_readonly("nodes_expanded", &hc::SearchStats::nodes_expanded)
        .def_readonly("prunes", &hc::SearchStats::prunes)
        .def_property_readonly(
            "fast_path",
            [](const hc::SearchStats& s) { return std::string(to_string(s.fast_path)); })
        .def_property_readonly("elapsed",
                               [](const hc::SearchStats& s) { return s.elapsed.count(); })
        .def("__repr__", [](const hc::SearchStats& s) {
            std::ostringstream out;
            out << "SearchStats(nodes_expanded=" << s.nodes_expanded << ", prunes=" << s.prunes
                << ", fast_path='" << to_string(s.fast_path) << "')";
            return out.str();
        });

    m.def("is_homomorphism", &hc::is_homomorphism, py::arg("g"), py::arg("f"), py::arg("mapping"));
    m.def(
        "count_mappings",
        [](const hc::Graph& g, const hc::Graph& f) { return to_py_int(hc::count_mappings(g, f)); },
        py::arg("g"), py::arg("f"));
    m.def(
        "count_injective",
        [](const hc::Graph& g, const hc::Graph& f) {
            return to_py_int(hc::count_injective(g, f));
        },
        py::arg("g"), py::arg("f"));
    m.def(
        "count_homomorphisms",
        [](const hc::Graph& g, const hc::Graph& f, int threads, std::uint64_t budget) {
            auto [count, stats] = hc::count_homomorphisms(g, f, engine_options(threads, budget));
            return py::make_tuple(to_py_int(count), stats);
        },
        py::arg("g"), py::arg("f"), py::arg("threads") = 1, py::arg("budget") = kDefaultBudget);
    m.def(
        "count_homomorphisms_naive",
        [](const hc::Graph& g, const hc::Graph& f, std::uint64_t budget) {
            return to_py_int(hc::count_homomorphisms_naive(g, f, engine_options(1, budget)));
        },
        py::arg("g"), py::arg("f"), py::arg("budget") = kDefaultBudget);
    m.def(
        "count_ordered_cliques",
        [](const hc::Graph& f, int size) { return to_py_int(hc::count_ordered_cliques(f, size)); },
        py::arg("f"), py::arg("size"));
    m.def(
        "count_proper_colorings",
        [](const hc::Graph& g, int colors) {
            return to_py_int(hc::count_proper_colorings(g, colors));
        },
        py::arg("g"), py::arg("colors"));

    py::class_<hc::BoundCheck>(m, "BoundCheck")
        .def_property_readonly("lhs", [](const hc::BoundCheck& c) { return to_fraction(c.lhs); })
        .def_property_readonly("rhs", [](const hc::BoundCheck& c) { return to_fraction(c.rhs); })
        .def_property_readonly(
            "relation",
            [](const hc::BoundCheck& c) { return std::string(to_string(c.relation)); })
        .def_readonly("holds", &hc::BoundCheck::holds)
        .def_readonly("witness", &hc::BoundCheck::witness)
        .def("__repr__", [](const hc::BoundCheck& c) {
            std::ostringstream out;
            out << "BoundCheck(" << c.lhs.str() << " " << to_string(c.relation) << " "
                << c.rhs.str() << ", holds=" << (c.holds ? "True" : "False") << ")";
            return out.str();
        });

    m.def(
        "density",
        [](const hc::Graph& g, const hc::Graph& f, int threads, std::uint64_t budget) {
            return to_fraction(hc::density(g, f, engine_options(threads, budget)));
        },
        py::arg("g"), py::arg("f"), py::arg("threads") = 1, py::arg("budget") = kDefaultBudget);
    m.def(
        "injective_density",
        [](const hc::Graph& g, const hc::Graph& f) {
            return to_fraction(hc::injective_density(g, f));
        },
        py::arg("g"), py::arg("f"));
    m.def(
        "density_complete_complete",
        [](int n, int m_) { return to_fraction(hc::density_complete_complete(n, m_)); },
        py::arg("n"), py::arg("m"));
    m.def(
        "check_edgeless_iff_one",
        [](const hc::Graph& g, const hc::Graph& f) { return hc::check_edgeless_iff_one(g, f); },
        py::arg("g"), py::arg("f"));
    m.def(
        "check_complete_domain_bound",
        [](int n, const hc::Graph& f) { return hc::check_complete_domain_bound(n, f); },
        py::arg("n"), py::arg("f"));
    m.def(
        "check_complete_codomain_bound",
        [](const hc::Graph& g, int m_) { return hc::check_complete_codomain_bound(g, m_); },
        py::arg("g"), py::arg("m"));
    m.def(
        "check_isolated_invariance",
        [](const hc::Graph& g, const hc::Graph& f) { return hc::check_isolated_invariance(g, f); },
        py::arg("g"), py::arg("f"));

    py::class_<hc::SuiteViolation>(m, "SuiteViolation")
        .def_readonly("domain", &hc::SuiteViolation::domain)
        .def_readonly("codomain", &hc::SuiteViolation::codomain)
        .def_readonly("mapping", &hc::SuiteViolation::mapping)
        .def_readonly("detail", &hc::SuiteViolation::detail);

    py::class_<hc::SuiteResult>(m, "SuiteResult")
        .def_readonly("selector", &hc::SuiteResult::selector)
        .def_readonly("checks", &hc::SuiteResult::checks)
        .def_readonly("violations", &hc::SuiteResult::violations)
        .def_property_readonly("passed", &hc::SuiteResult::passed)
        .def("__repr__", [](const hc::SuiteResult& r) {
            std::ostringstream out;
            out << "SuiteResult(selector='" << r.selector << "', checks=" << r.checks
                << ", violations=" << r.violations.size() << ")";
            return out.str();
        });

    m.def("all_suite_selectors", [] { return hc::all_suite_selectors(); });
    m.def(
        "suite_description",
        [](const std::string& selector) { return std::string(hc::suite_description(selector)); },
        py::arg("selector"));
    m.def(
        "run_suite",
        [](const std::string& selector, int n_min, int n_max, const std::string& edge_probability,
           std::uint64_t samples, std::uint64_t seed, int threads, std::uint64_t budget) {
            return hc::run_suite(selector, corpus_spec(n_min, n_max, edge_probability, samples, seed),
                                 engine_options(threads, budget));
        },
        py::arg("selector"), py::arg("n_min") = 1, py::arg("n_max") = 5,
        py::arg("edge_probability") = "1/2", py::arg("samples") = 200, py::arg("seed") = 42,
        py::arg("threads") = 1, py::arg("budget") = kDefaultBudget);
    m.def(
        "generate_corpus",
        [](int n_min, int n_max, const std::string& edge_probability, std::uint64_t samples,
           std::uint64_t seed) {
            hc::GraphSampler sampler(corpus_spec(n_min, n_max, edge_probability, samples, seed));
            std::vector<hc::Graph> graphs;
            graphs.reserve(samples);
            for (std::uint64_t i = 0; i < samples; ++i) graphs.push_back(sampler.next_graph());
            return graphs;
        },
        py::arg("n_min") = 1, py::arg("n_max") = 5, py::arg("edge_probability") = "1/2",
        py::arg("samples") = 200, py::arg("seed") = 42);
}
