#include <pybind11/pybind11.h>

#include <string>

#include "spgenus/decompose.hpp"
#include "spgenus/engine.hpp"
#include "spgenus/errors.hpp"
#include "spgenus/multigraph.hpp"
#include "spgenus/oracle.hpp"

namespace py = pybind11;
using namespace spgenus;

namespace {

// Counts routinely outgrow 64 bits, so hand Python real integers built from
// the decimal form instead of lossy casts.
py::object big_to_pyint(const BigInt& value) {
    const std::string digits = value.str();
    PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

py::list gd_to_list(const GenusDistribution& gd) {
    py::list out;
    for (int i = 0; i < gd.size(); ++i) out.append(big_to_pyint(gd.at(i)));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact genus distributions of series-parallel and treewidth-2 graphs";
    m.attr("__version__") = "0.1.0";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const ValidationError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const LimitError& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    m.def(
        "genus_distribution",
        [](const std::string& edge_list) {
            return gd_to_list(gd_auto(parse_graph(edge_list)).gd);
        },
        py::arg("edge_list"),
        "Exact genus distribution of the graph given as an edge-list document.\n"
        "Entry g is the number of embeddings into the orientable surface of\n"
        "genus g.  Raises ValueError for malformed documents and for graphs\n"
        "outside the supported class (degree > 3 or treewidth > 2).");

    m.def(
        "genus_distribution_oracle",
        [](const std::string& edge_list, long limit) {
            return gd_to_list(gd_brute_force(parse_graph(edge_list), BigInt(limit)));
        },
        py::arg("edge_list"), py::arg("limit") = kDefaultOracleLimit,
        "Same distribution by exhaustive rotation-system enumeration.  Works\n"
        "for any connected graph but refuses a census larger than `limit`.");

    m.def(
        "generate",
        [](int tau_steps, std::uint64_t seed) {
            if (tau_steps < 0) throw py::value_error("tau_steps must be nonnegative");
            return serialize_graph(random_cubic_sp(tau_steps, seed));
        },
        py::arg("tau_steps"), py::arg("seed") = 0,
        "Random cubic biconnected series-parallel graph with 2 + 2*tau_steps\n"
        "vertices, as an edge-list document.  Deterministic per (tau_steps, seed).");

    m.def(
        "compute_report",
        [](const std::string& edge_list) {
            const Multigraph g = parse_graph(edge_list);
            const ComputationReport r = gd_auto(g);
            py::dict d;
            d["vertices"] = r.num_vertices;
            d["edges"] = r.num_edges;
            d["method"] = r.method == Method::CubicSp ? "cubic-series-parallel"
                                                      : "blocks-and-bridges";
            d["genus_distribution"] = gd_to_list(r.gd);
            d["min_genus"] = r.gd.min_genus();
            d["max_genus"] = r.gd.max_genus();
            d["total_embeddings"] = big_to_pyint(r.gd.total());
            return d;
        },
        py::arg("edge_list"),
        "Distribution plus a summary of how it was computed.");
}
