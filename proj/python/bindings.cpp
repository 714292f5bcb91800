#include "cellsim/baselines.hpp"
#include "cellsim/case_study.hpp"
#include "cellsim/cell_graph.hpp"
#include "cellsim/clustering.hpp"
#include "cellsim/error.hpp"
#include "cellsim/generator.hpp"
#include "cellsim/io.hpp"
#include "cellsim/measure.hpp"
#include "cellsim/mobility.hpp"
#include "cellsim/similarity.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace cellsim;

namespace {

MobilityPattern pattern_from_pairs(const std::vector<std::pair<long long, int>>& points, bool pairs_only) {
    return make_pattern(points, pairs_only ? EqualTimestamps::PairsOnly : EqualTimestamps::AnyRun);
}

std::vector<std::pair<CellId, int>> pattern_points(const MobilityPattern& p) {
    std::vector<std::pair<CellId, int>> out;
    out.reserve(p.size());
    for (const auto& pt : p) {
        out.emplace_back(pt.cell, pt.time.index());
    }
    return out;
}

Measure measure_from_name(const std::string& name) {
    const auto m = parse_measure(name);
    if (!m) {
        throw DomainError("unknown measure '" + name + "'");
    }
    return *m;
}

DissimilarityMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
    std::vector<double> values;
    values.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
        if (row.size() != rows.size()) {
            throw DomainError("dissimilarity matrix must be square");
        }
        values.insert(values.end(), row.begin(), row.end());
    }
    return DissimilarityMatrix(rows.size(), Measure::Composite, std::move(values));
}

std::vector<std::vector<double>> matrix_rows(const DissimilarityMatrix& m) {
    std::vector<std::vector<double>> rows(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        rows[i].assign(m.row(i).begin(), m.row(i).end());
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(cellsim, mod) {
    mod.doc() = "Spatiotemporal similarity of cell-level mobility patterns";

    py::register_exception<GraphNotConnected>(mod, "GraphNotConnected");
    py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);

    mod.attr("SLOT_COUNT") = kSlotCount;
    mod.attr("SLOT_MINUTES") = kSlotMinutes;

    py::class_<CellGraph>(mod, "CellGraph")
        .def(py::init([](std::size_t n, const std::vector<CellEdge>& edges) { return CellGraph(n, edges); }),
             py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &CellGraph::vertex_count)
        .def("neighbors",
             [](const CellGraph& g, CellId c) {
                 const auto n = g.neighbors(c);
                 return std::vector<CellId>(n.begin(), n.end());
             })
        .def("has_edge", &CellGraph::has_edge)
        .def("edges", &CellGraph::edges)
        .def("is_connected", &CellGraph::is_connected)
        .def("__repr__", [](const CellGraph& g) {
            return "CellGraph(" + std::to_string(g.vertex_count()) + " cells, " +
                   std::to_string(g.edges().size()) + " edges)";
        });

    mod.def("hop_distance", &hop_distance, py::arg("graph"), py::arg("source"), py::arg("target"));
    mod.def("diameter", &diameter, py::arg("graph"));
    mod.def("example_graph", &example_graph, py::return_value_policy::copy);
    mod.def("hex_grid", &hex_grid, py::arg("rows"), py::arg("cols"));
    mod.def("load_graph", &load_graph, py::arg("path"));

    py::class_<MobilityPattern>(mod, "Pattern")
        .def(py::init(&pattern_from_pairs), py::arg("points"), py::arg("pairs_only") = false,
             "Build from (cell, slot index) pairs with slot indices in 1..11.")
        .def_property_readonly("points", &pattern_points)
        .def("cells", &MobilityPattern::cells)
        .def("__len__", &MobilityPattern::size)
        .def("__eq__", [](const MobilityPattern& a, const MobilityPattern& b) { return a == b; })
        .def("__repr__", [](const MobilityPattern& p) {
            std::ostringstream s;
            s << "Pattern([";
            for (std::size_t i = 0; i < p.size(); ++i) {
                s << (i ? ", " : "") << "(" << p[i].cell << ", " << p[i].time.index() << ")";
            }
            s << "])";
            return s.str();
        });

    mod.def("timestamp_of_minute", [](int minute) { return timestamp_of_minute(minute).index(); },
            py::arg("minute"));
    mod.def("is_subpattern", &is_subpattern, py::arg("sub"), py::arg("pattern"));

    mod.def("uncommon_count", &uncommon_count, py::arg("a"), py::arg("b"));
    mod.def("d_space", &d_space, py::arg("a"), py::arg("b"));
    mod.def("d_time", &d_time, py::arg("a"), py::arg("b"));
    mod.def(
        "d_composite",
        [](const MobilityPattern& a, const MobilityPattern& b, double w_space, double w_time) {
            return d_composite(a, b, Weights(w_space, w_time));
        },
        py::arg("a"), py::arg("b"), py::arg("w_space") = 0.5, py::arg("w_time") = 0.5);

    mod.def("tiakas_net", py::overload_cast<const CellGraph&, const MobilityPattern&, const MobilityPattern&>(&tiakas_net),
            py::arg("graph"), py::arg("a"), py::arg("b"));
    mod.def("tiakas_time", &tiakas_time, py::arg("a"), py::arg("b"));
    mod.def("tiakas_total",
            py::overload_cast<const CellGraph&, const MobilityPattern&, const MobilityPattern&, double, double>(
                &tiakas_total),
            py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("w_net") = 0.5, py::arg("w_time") = 0.5);
    mod.def(
        "oss_parts",
        [](const MobilityPattern& a, const MobilityPattern& b) {
            const auto p = oss_parts(a, b);
            return py::dict(py::arg("f") = p.f, py::arg("g") = p.g, py::arg("value") = p.value);
        },
        py::arg("a"), py::arg("b"));
    mod.def("oss", &oss, py::arg("a"), py::arg("b"));
    mod.def("lcss", &lcss, py::arg("a"), py::arg("b"));
    mod.def("cvti", &cvti, py::arg("a"), py::arg("b"));

    mod.def("measures", [] {
        std::vector<std::string> names;
        for (auto m : kAllMeasures) {
            names.emplace_back(measure_name(m));
        }
        return names;
    });

    mod.def(
        "dissimilarity_matrix",
        [](const std::vector<MobilityPattern>& patterns, const std::string& measure, double w_space,
           double w_time, const CellGraph* graph, unsigned threads) {
            const PairMeasure pm(measure_from_name(measure), Weights(w_space, w_time), graph);
            DissimilarityMatrix m(1, Measure::Space);
            {
                py::gil_scoped_release release;
                m = build_matrix(patterns, pm, threads);
            }
            return matrix_rows(m);
        },
        py::arg("patterns"), py::arg("measure") = "composite", py::arg("w_space") = 0.5,
        py::arg("w_time") = 0.5, py::arg("graph") = nullptr, py::arg("threads") = 0);

    mod.def(
        "kmedoids",
        [](const std::vector<std::vector<double>>& rows, std::size_t k, std::uint64_t seed) {
            const auto r = kmedoids(matrix_from_rows(rows), k, seed);
            return py::dict(py::arg("medoids") = r.medoids, py::arg("assignment") = r.assignment,
                            py::arg("total_cost") = r.total_cost, py::arg("cost_history") = r.cost_history);
        },
        py::arg("matrix"), py::arg("k"), py::arg("seed") = 0);

    mod.def(
        "generate_walks",
        [](const CellGraph& g, std::size_t count, std::size_t min_len, std::size_t max_len, std::uint64_t seed) {
            std::vector<std::pair<std::string, MobilityPattern>> out;
            for (auto& w : generate_walks(g, count, min_len, max_len, seed)) {
                out.emplace_back(std::move(w.id), std::move(w.pattern));
            }
            return out;
        },
        py::arg("graph"), py::arg("count"), py::arg("min_len"), py::arg("max_len"), py::arg("seed") = 0);

    mod.def("load_trace", [](const std::string& path) {
        std::vector<std::pair<std::string, MobilityPattern>> out;
        for (auto& t : load_trace(path)) {
            out.emplace_back(std::move(t.id), std::move(t.pattern));
        }
        return out;
    }, py::arg("path"));

    mod.def("case_study_patterns", [] { return std::make_pair(case_study_pattern_a(), case_study_pattern_b()); });
    mod.def("case_study", [] {
        const auto r = run_case_study();
        return py::dict(py::arg("graph_diameter") = r.graph_diameter, py::arg("tiakas_net") = r.tiakas_net,
                        py::arg("tiakas_time") = r.tiakas_time, py::arg("tiakas_total") = r.tiakas_total,
                        py::arg("oss_g") = r.oss_g, py::arg("oss_f") = r.oss_f, py::arg("oss") = r.oss,
                        py::arg("uncommon") = r.uncommon, py::arg("d_space") = r.d_space,
                        py::arg("d_time") = r.d_time, py::arg("d_composite") = r.d_composite,
                        py::arg("lcss") = r.lcss, py::arg("cvti") = r.cvti);
    });
    mod.def("format_case_study", [] { return format_case_study(run_case_study()); });
}
