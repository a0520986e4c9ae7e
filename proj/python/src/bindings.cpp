#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "locgame/coloring.hpp"
#include "locgame/error.hpp"
#include "locgame/game_structure.hpp"
#include "locgame/generators.hpp"
#include "locgame/graph.hpp"
#include "locgame/solver.hpp"
#include "locgame/strategy.hpp"
#include "locgame/verify.hpp"

namespace py = pybind11;
using namespace locgame;

namespace {

std::vector<std::vector<std::vector<int>>> rows_as_lists(const std::vector<std::vector<VertexSet>>& rows)
{
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& row : rows) {
        auto& dst = out.emplace_back();
        for (VertexSet s : row) dst.push_back(s.to_vector());
    }
    return out;
}

std::vector<Coloring> pick_colorings(const Graph& g, int k, const std::optional<std::vector<std::string>>& colorings)
{
    if (!colorings) return distance_colorings(g, k);
    std::vector<Coloring> out;
    for (const std::string& line : *colorings) out.push_back(parse_coloring(line, g.order()));
    return out;
}

std::string simulate(const Graph& g, const std::string& strategy, std::optional<int> k)
{
    std::unique_ptr<CopStrategy> s;
    std::optional<int> bound;
    if (strategy == "one-cop-tree") {
        s = std::make_unique<OneCopTreeStrategy>(g);
        bound = leaf_count(g);
    } else if (strategy == "two-cop-tree") {
        s = std::make_unique<TwoCopTreeStrategy>(g);
        bound = leaf_count(g) / 2 - 1;
    } else if (strategy == "optimal") {
        auto solver = std::make_shared<const ExactSolver>(g, k.value_or(1));
        bound = solver->game_value();
        s = std::make_unique<OptimalStrategy>(solver);
    } else {
        throw PreconditionError("unknown strategy " + strategy);
    }
    if (k && *k != s->cops()) throw PreconditionError(strategy + " plays with " + std::to_string(s->cops()) + " cop(s)");
    const SimulationReport report = simulate_adversarial(g, *s);
    return simulation_json(g, *s, report, bound, game_value(g, s->cops()));
}

std::string verify(const std::string& suite, int n_max, int seeds, int samples, int threads)
{
    const VerifyOptions options{threads, nullptr};
    if (suite == "trees") return verify_tree_bounds(n_max > 0 ? n_max : 10, options).json();
    if (suite == "outerplanar") return verify_outerplanar(n_max > 0 ? n_max : 8, samples, 10, options).json();
    if (suite == "two-colorings") {
        const std::vector<int> sizes = n_max > 0 ? std::vector<int>{n_max} : std::vector<int>{4, 5, 6};
        return verify_two_colorings(sizes, seeds, options).json();
    }
    throw PreconditionError("unknown suite " + suite);
}

}  // namespace

PYBIND11_MODULE(_locgame, m)
{
    m.doc() = "Localization game solver";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<StrategyError>(m, "StrategyError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def_static(
            "from_edges",
            [](int n, const std::vector<std::pair<int, int>>& edges) {
                std::vector<Edge> list;
                for (auto [u, v] : edges) list.push_back({std::min(u, v), std::max(u, v)});
                return Graph::from_edges(n, list);
            },
            py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("is_connected", &Graph::is_connected)
        .def("to_graph6", [](const Graph& g) { return encode_graph6(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph('" + encode_graph6(g) + "')"; });

    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); }, py::arg("text"));
    m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); }, py::arg("text"));
    m.def("named", &parse_named, py::arg("name"), "Named graph such as 'T33', 'Gm:5' or 'cycle:6'.");
    m.def("trees", &generate_trees, py::arg("n"));
    m.def("connected_graphs", &generate_connected_graphs, py::arg("n"));
    m.def("leaf_count", &leaf_count, py::arg("tree"));
    m.def("contains_t33", &contains_t33, py::arg("tree"));

    m.def("game_value", [](const Graph& g, int k) { return game_value(g, k); }, py::arg("graph"), py::arg("k") = 1,
          "Exact capture time with k cops, or None when the cops cannot win.");
    m.def("zeta", [](const Graph& g, int k_max) { return zeta(g, k_max); }, py::arg("graph"), py::arg("k_max") = 3);
    m.def("metric_dimension", &metric_dimension, py::arg("graph"));

    m.def(
        "distance_colorings",
        [](const Graph& g, int k) {
            std::vector<std::string> out;
            for (const Coloring& c : distance_colorings(g, k)) out.push_back(c.to_string());
            return out;
        },
        py::arg("graph"), py::arg("k") = 1);

    m.def(
        "structure_rows",
        [](const Graph& g, int k, const std::optional<std::vector<std::string>>& colorings, bool reduced) {
            const auto cs = pick_colorings(g, k, colorings);
            const GameStructure gs = build_structure(g, cs);
            return rows_as_lists(reduced ? reduce_structure(gs, cs).rows() : gs.rows());
        },
        py::arg("graph"), py::arg("k") = 1, py::arg("colorings") = py::none(), py::arg("reduced") = false,
        "Rows of the game structure, row 1 first, as lists of 0-based vertex lists.");
    m.def(
        "format_structure",
        [](const Graph& g, int k, const std::optional<std::vector<std::string>>& colorings, bool reduced) {
            const auto cs = pick_colorings(g, k, colorings);
            const GameStructure gs = build_structure(g, cs);
            return format_rows(reduced ? reduce_structure(gs, cs).rows() : gs.rows(), g.order());
        },
        py::arg("graph"), py::arg("k") = 1, py::arg("colorings") = py::none(), py::arg("reduced") = false);

    m.def("_simulate_json", &simulate, py::arg("graph"), py::arg("strategy"), py::arg("k") = py::none(),
          py::call_guard<py::gil_scoped_release>());
    m.def("_verify_json", &verify, py::arg("suite"), py::arg("n_max") = 0, py::arg("seeds") = 200,
          py::arg("samples") = 200, py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
}
