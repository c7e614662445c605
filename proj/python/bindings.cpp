#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli/cli.hpp"
#include "shadowchi/cayley.hpp"
#include "shadowchi/chi.hpp"
#include "shadowchi/errors.hpp"
#include "shadowchi/grid.hpp"
#include "shadowchi/line.hpp"
#include "shadowchi/quotient.hpp"
#include "shadowchi/shift.hpp"
#include "shadowchi/two_ended.hpp"

namespace py = pybind11;
using namespace shadowchi;

namespace {

Budget budget_of(std::int64_t ms) { return ms > 0 ? Budget::milliseconds(ms) : Budget::from_environment(); }

py::dict chi_dict(const ChiResult& r) {
    py::dict d;
    d["exact"] = r.exact();
    d["lower"] = r.lower;
    d["upper"] = r.upper;
    d["chi"] = r.exact() ? py::cast(r.value()) : py::none();
    d["witness"] = r.witness ? py::cast(r.witness->colors) : py::none();
    return d;
}

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["check"] = r.check;
    d["k"] = r.k;
    d["twisted"] = r.twisted;
    d["palette"] = r.palette;
    d["enumeration"] = r.enumeration;
    d["enumerated"] = r.enumerated;
    d["total"] = r.total;
    d["complete"] = r.complete;
    d["violation_count"] = r.violation_count;
    d["passed"] = r.passed();
    return d;
}

LineInstance builtin_line(const std::string& name, int blocks, int k, const std::string& mode) {
    auto m = parse_line_mode(mode);
    if (name == "path") return path_line(blocks, m);
    if (name == "ladder") return ladder_line(blocks, m);
    if (name == "delta") return cayley_line(MarkedGroupSpec::delta(k), blocks, m);
    if (name == "gamma") return cayley_line(MarkedGroupSpec::gamma(k), blocks, m);
    throw InputError("unknown builtin '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_shadowchi, m) {
    m.doc() = "Exact chromatic computations on Cayley graphs of Z_k^2 x Z and their finite pieces";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);
    py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_TimeoutError);

    py::class_<MarkedGroupSpec>(m, "MarkedGroupSpec")
        .def(py::init<int, bool>(), py::arg("k"), py::arg("twisted"))
        .def_static("delta", &MarkedGroupSpec::delta)
        .def_static("gamma", &MarkedGroupSpec::gamma)
        .def_property_readonly("k", &MarkedGroupSpec::k)
        .def_property_readonly("twisted", &MarkedGroupSpec::twisted)
        .def_property_readonly("degree", &MarkedGroupSpec::degree)
        .def("__repr__", [](const MarkedGroupSpec& s) {
            return std::string(s.twisted() ? "gamma(" : "delta(") + std::to_string(s.k()) + ")";
        });

    py::class_<GroupElement>(m, "GroupElement")
        .def(py::init([](int a, int b, std::int64_t n) { return GroupElement{a, b, n}; }), py::arg("a"), py::arg("b"),
             py::arg("n"))
        .def_readwrite("a", &GroupElement::a)
        .def_readwrite("b", &GroupElement::b)
        .def_readwrite("n", &GroupElement::n)
        .def("as_tuple", [](const GroupElement& g) { return py::make_tuple(g.a, g.b, g.n); })
        .def(py::self == py::self)
        .def("__repr__", [](const GroupElement& g) {
            std::ostringstream s;
            s << g;
            return s.str();
        });

    m.def("multiply", &multiply, py::arg("spec"), py::arg("g"), py::arg("h"));
    m.def("inverse", &inverse, py::arg("spec"), py::arg("g"));
    m.def("swap_odd_levels", &swap_odd_levels);
    m.def("generators", [](const MarkedGroupSpec& spec) {
        std::vector<std::tuple<int, int, int>> out;
        for (auto g : generators(spec)) out.emplace_back(g.s1, g.s2, g.eps);
        return out;
    });

    py::class_<FiniteGraph>(m, "FiniteGraph")
        .def_static(
            "from_edges",
            [](int n, const std::vector<Edge>& edges) { return FiniteGraph::from_edges(n, edges); },
            py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &FiniteGraph::vertex_count)
        .def_property_readonly("edge_count", &FiniteGraph::edge_count)
        .def("edges", &FiniteGraph::edges)
        .def("neighbors",
             [](const FiniteGraph& g, Vertex v) {
                 if (!g.valid(v)) throw InputError("vertex out of range");
                 auto n = g.neighbors(v);
                 return std::vector<Vertex>(n.begin(), n.end());
             })
        .def("has_edge", &FiniteGraph::has_edge)
        .def("regular_degree", &FiniteGraph::regular_degree);

    m.def("cayley_window", &cayley_window, py::arg("spec"), py::arg("lo"), py::arg("hi"));
    m.def("cayley_quotient", &cayley_quotient, py::arg("spec"), py::arg("M"));
    m.def("grid_graph", &grid_graph, py::arg("k"));

    m.def(
        "is_proper", [](const FiniteGraph& g, std::vector<int> colors, int palette) {
            return is_proper(g, {std::move(colors), palette});
        },
        py::arg("graph"), py::arg("colors"), py::arg("palette"));
    m.def(
        "chromatic_number",
        [](const FiniteGraph& g, std::int64_t budget_ms) {
            py::gil_scoped_release release;
            auto r = chromatic_number(g, std::nullopt, budget_of(budget_ms));
            py::gil_scoped_acquire acquire;
            return chi_dict(r);
        },
        py::arg("graph"), py::arg("budget_ms") = 0);
    m.def(
        "find_coloring",
        [](const FiniteGraph& g, int palette, const std::vector<std::pair<int, int>>& pins,
           std::int64_t budget_ms) -> py::object {
            std::vector<Pin> p;
            for (auto [v, c] : pins) p.push_back({v, c});
            auto r = find_coloring(g, palette, p, budget_of(budget_ms));
            if (r.status == SearchStatus::Undecided) throw BudgetExhausted("search budget exhausted");
            if (!r.coloring) return py::none();
            return py::cast(r.coloring->colors);
        },
        py::arg("graph"), py::arg("palette"), py::arg("pins") = std::vector<std::pair<int, int>>{},
        py::arg("budget_ms") = 0);
    m.def(
        "count_colorings",
        [](const FiniteGraph& g, int palette, int jobs) {
            EnumerateOptions opt;
            opt.jobs = jobs;
            py::gil_scoped_release release;
            return enumerate_colorings(g, palette, [](std::span<const int>) {}, opt).count;
        },
        py::arg("graph"), py::arg("palette"), py::arg("jobs") = 1);

    m.def(
        "verify_dichotomy", [](int k) { return report_dict(verify_dichotomy(k)); }, py::arg("k") = 3);
    m.def(
        "verify_invariance", [](int k, bool twisted) { return report_dict(verify_invariance(k, twisted)); },
        py::arg("k") = 3, py::arg("twisted") = false);
    m.def(
        "verify_rigidity", [](int k) { return report_dict(verify_rigidity(k)); }, py::arg("k") = 3);

    m.def(
        "quotient_chi",
        [](const MarkedGroupSpec& spec, int M, std::int64_t budget_ms) {
            return chi_dict(quotient_chi(spec, M, budget_of(budget_ms)));
        },
        py::arg("spec"), py::arg("M"), py::arg("budget_ms") = 0);
    m.def("verify_swap_isomorphism", &verify_swap_isomorphism, py::arg("k"), py::arg("M"));
    m.def(
        "verify_alternation_obstruction",
        [](int k, int M) {
            auto r = verify_alternation_obstruction(k, M);
            py::dict d;
            d["passed"] = r.passed();
            d["parity_obstruction"] = r.parity_obstruction;
            d["solver_infeasible"] = r.solver == SearchStatus::Infeasible;
            d["solver_nodes"] = r.solver_nodes;
            return d;
        },
        py::arg("k"), py::arg("M"));

    m.def(
        "color_two_ended",
        [](const std::string& builtin, int blocks, int k, const std::string& mode, int window, int cap) {
            auto inst = builtin_line(builtin, blocks, k, mode);
            TwoEndedParams p;
            if (window > 0) p.window_blocks = window;
            if (cap > 0) p.size_cap = cap;
            auto r = color_two_ended(inst, p);
            py::dict d;
            d["colors"] = r.coloring.colors;
            d["chi"] = r.chi;
            d["colors_used"] = r.colors_used;
            std::vector<std::vector<int>> members;
            for (const auto& s : r.psi.members) members.push_back(s.members());
            d["psi"] = members;
            d["t_degrees"] = r.psi.t_degrees();
            d["graph"] = inst.graph();
            return d;
        },
        py::arg("builtin"), py::arg("blocks") = 12, py::arg("k") = 3, py::arg("mode") = "cycle",
        py::arg("window") = 0, py::arg("cap") = 0);

    m.def(
        "color_tower",
        [](int k, const std::vector<std::tuple<std::int64_t, int, int>>& anchors, int extent, const std::string& mode) {
            AnchoredTower t;
            t.k = k;
            t.extent = extent;
            t.mode = parse_line_mode(mode);
            for (auto [p, a0, b0] : anchors) t.anchors.push_back({p, a0, b0});
            auto c = color_tower(t);
            return py::make_tuple(c.colors, tower_graph(t));
        },
        py::arg("k"), py::arg("anchors"), py::arg("extent"), py::arg("mode") = "segment");

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "shadowchi");
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
