#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "eideal/betti.hpp"
#include "eideal/canonical.hpp"
#include "eideal/enumerate.hpp"
#include "eideal/graph_io.hpp"
#include "eideal/harness.hpp"
#include "eideal/symbolic.hpp"
#include "eideal/version.hpp"

namespace py = pybind11;
using namespace eideal;

namespace {

std::string report_text(const Report& r, const std::string& format, bool timing) {
    std::ostringstream out;
    if (format == "csv") {
        write_csv(r, out, timing);
    } else {
        write_json(r, out, timing);
    }
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_eideal, m) {
    m.doc() = "edge ideals of graphs: powers, Betti tables, regularity, checks";
    m.attr("__version__") = EIDEAL_VERSION;

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const OverflowError& e) {
            PyErr_SetString(PyExc_OverflowError, e.what());
        } catch (const ResourceError& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<Field>(m, "Field")
        .def_static("rationals", &Field::rationals)
        .def_static("prime", &Field::prime, py::arg("p"))
        .def_static("parse", &Field::parse, py::arg("text"))
        .def_property_readonly("characteristic", &Field::characteristic)
        .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
        .def("__str__", &Field::str)
        .def("__repr__", [](const Field& f) { return "Field(" + f.str() + ")"; });

    py::class_<Monomial>(m, "Monomial")
        .def(py::init<std::vector<Monomial::Exponent>>(), py::arg("exponents"))
        .def_static("unit", &Monomial::unit, py::arg("vars"))
        .def_static("variable", &Monomial::variable, py::arg("vars"), py::arg("index"))
        .def_property_readonly("exponents",
                               [](const Monomial& m_) { return m_.exponents(); })
        .def_property_readonly("degree", &Monomial::degree)
        .def("divides", &Monomial::divides, py::arg("other"))
        .def("times", &Monomial::times, py::arg("other"))
        .def("__eq__", [](const Monomial& a, const Monomial& b) { return a == b; })
        .def("__hash__", [](const Monomial& m_) { return MonomialHash{}(m_); })
        .def("__str__", &Monomial::str)
        .def("__repr__", [](const Monomial& m_) { return "Monomial(" + m_.str() + ")"; });
    m.def("lcm", &lcm, py::arg("a"), py::arg("b"));
    m.def("gcd", &gcd, py::arg("a"), py::arg("b"));

    py::class_<MonomialIdeal>(m, "MonomialIdeal")
        .def_static("zero", &MonomialIdeal::zero, py::arg("vars"))
        .def_static("whole_ring", &MonomialIdeal::whole_ring, py::arg("vars"))
        .def_static("make", &MonomialIdeal::make, py::arg("vars"), py::arg("generators"))
        .def_property_readonly("vars", &MonomialIdeal::vars)
        .def_property_readonly("generators",
                               [](const MonomialIdeal& I) { return I.generators(); })
        .def("contains", &MonomialIdeal::contains, py::arg("monomial"))
        .def("contains_ideal", &MonomialIdeal::contains_ideal, py::arg("other"))
        .def("is_zero", &MonomialIdeal::is_zero)
        .def("is_whole_ring", &MonomialIdeal::is_whole_ring)
        .def("__len__", &MonomialIdeal::generator_count)
        .def("__eq__",
             [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
        .def("__str__", &MonomialIdeal::str)
        .def("__repr__",
             [](const MonomialIdeal& I) { return "MonomialIdeal(" + I.str() + ")"; });
    m.def("sum", &sum, py::arg("lhs"), py::arg("rhs"));
    m.def("product", &product, py::arg("lhs"), py::arg("rhs"));
    m.def("power", &power, py::arg("ideal"), py::arg("s"));
    m.def("intersect", &intersect, py::arg("lhs"), py::arg("rhs"));
    m.def("colon", &colon, py::arg("ideal"), py::arg("monomial"));
    m.def("intersect_max_power", &intersect_max_power, py::arg("ideal"), py::arg("d"));

    py::class_<Cycle>(m, "Cycle")
        .def_readonly("vertices", &Cycle::vertices)
        .def_readonly("edges", &Cycle::edges);

    py::class_<SimpleGraph>(m, "SimpleGraph")
        .def_static("empty", &SimpleGraph::empty, py::arg("n"))
        .def_static("from_edges", &SimpleGraph::from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("ambient", &SimpleGraph::ambient)
        .def_property_readonly("vertices", &SimpleGraph::vertices)
        .def_property_readonly("edges", &SimpleGraph::edges)
        .def("degree", &SimpleGraph::degree, py::arg("v"))
        .def("neighbors", &SimpleGraph::neighbors, py::arg("v"))
        .def("delete_vertex", &SimpleGraph::delete_vertex, py::arg("v"))
        .def("delete_edge", &SimpleGraph::delete_edge, py::arg("u"), py::arg("v"))
        .def("induced_subgraph", &SimpleGraph::induced_subgraph, py::arg("vertices"))
        .def("unique_cycle", &SimpleGraph::unique_cycle)
        .def("minimal_vertex_covers", &SimpleGraph::minimal_vertex_covers)
        .def("induced_matching_number", &SimpleGraph::induced_matching_number)
        .def("is_bipartite", &SimpleGraph::is_bipartite)
        .def("is_connected", &SimpleGraph::is_connected)
        .def("leaves", &SimpleGraph::leaves)
        .def("__eq__",
             [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; })
        .def("__str__", &SimpleGraph::str)
        .def("__repr__",
             [](const SimpleGraph& g) { return "SimpleGraph(" + encode_graph6(g) + ")"; });

    m.def("parse_graph6", &parse_graph6, py::arg("text"));
    m.def("encode_graph6", &encode_graph6, py::arg("graph"));
    m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
    m.def("canonical_code", &canonical_code, py::arg("graph"));

    m.def("enumerate_unicyclic", &enumerate_unicyclic, py::arg("n"), py::arg("cap") = 9);
    m.def("enumerate_forests", &enumerate_forests, py::arg("n"), py::arg("cap") = 9);
    m.def("enumerate_connected", &enumerate_connected, py::arg("n"), py::arg("cap") = 7);
    m.def("enumerate_all_graphs", &enumerate_all_graphs, py::arg("n"), py::arg("cap") = 6);

    m.def("edge_ideal", &edge_ideal, py::arg("graph"));
    m.def("symbolic_power", &symbolic_power, py::arg("graph"), py::arg("s"),
          py::arg("basis_cap") = kDefaultBasisCap);
    m.def("symbolic_member", &symbolic_member, py::arg("graph"), py::arg("monomial"),
          py::arg("s"));
    m.def("odd_cycle_symbolic_sum", &odd_cycle_symbolic_sum, py::arg("cycle"),
          py::arg("s"));
    m.def("mixed_ideal", &mixed_ideal, py::arg("h1"), py::arg("s"), py::arg("h2"),
          py::arg("basis_cap") = kDefaultBasisCap);

    py::class_<BettiTable>(m, "BettiTable")
        .def_property_readonly("vars", &BettiTable::vars)
        .def("entries",
             [](const BettiTable& t) {
                 std::vector<std::tuple<int, std::vector<Monomial::Exponent>, std::size_t>>
                     rows;
                 for (const auto& [key, rank] : t.entries()) {
                     rows.emplace_back(key.i, key.alpha, rank);
                 }
                 return rows;
             })
        .def("regularity", &BettiTable::regularity)
        .def("__eq__",
             [](const BettiTable& a, const BettiTable& b) { return a == b; })
        .def("__str__", &BettiTable::str);

    m.def(
        "betti_table",
        [](const MonomialIdeal& I, const Field& field, int jobs, std::size_t cap) {
            return betti_table(I, field, jobs, cap);
        },
        py::arg("ideal"), py::arg("field") = Field::rationals(), py::arg("jobs") = 1,
        py::arg("lattice_cap") = kDefaultLatticeCap);
    m.def(
        "regularity",
        [](const MonomialIdeal& I, const Field& field, int jobs, std::size_t cap) {
            return regularity(I, field, jobs, cap);
        },
        py::arg("ideal"), py::arg("field") = Field::rationals(), py::arg("jobs") = 1,
        py::arg("lattice_cap") = kDefaultLatticeCap);
    m.def(
        "taylor_strand_betti",
        [](const MonomialIdeal& I, const Field& field, std::size_t gen_cap) {
            return taylor_strand_betti(I, field, gen_cap);
        },
        py::arg("ideal"), py::arg("field") = Field::rationals(), py::arg("gen_cap") = 12);

    py::class_<Config>(m, "Config")
        .def(py::init<>())
        .def_readwrite("max_n", &Config::max_n)
        .def_readwrite("max_s", &Config::max_s)
        .def_readwrite("fields", &Config::fields)
        .def_readwrite("lattice_cap", &Config::lattice_cap)
        .def_readwrite("jobs", &Config::jobs)
        .def_readwrite("corpus", &Config::corpus)
        .def_readwrite("format", &Config::format)
        .def_readwrite("seed", &Config::seed)
        .def_readwrite("partition_cap", &Config::partition_cap)
        .def_readwrite("forest_max_n", &Config::forest_max_n)
        .def_readwrite("case2_intermediate", &Config::case2_intermediate)
        .def_readwrite("timing", &Config::timing)
        .def_readwrite("inject_failure", &Config::inject_failure);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("check_id", &CheckResult::check_id)
        .def_readonly("instance", &CheckResult::instance)
        .def_readonly("status", &CheckResult::status)
        .def_readonly("observed", &CheckResult::observed);

    py::class_<Report>(m, "Report")
        .def_readonly("tool", &Report::tool)
        .def_readonly("version", &Report::version)
        .def_readonly("config", &Report::config)
        .def_readonly("results", &Report::results)
        .def("count", &Report::count, py::arg("status"))
        .def("has_failures", &Report::has_failures)
        .def(
            "text",
            [](const Report& r, const std::string& format, bool timing) {
                return report_text(r, format, timing);
            },
            py::arg("format") = "json", py::arg("timing") = false);

    m.def("check_main", &check_main, py::arg("config"));
    m.def("check_lemmas", &check_lemmas, py::arg("config"));
    m.def("check_prop_sum", &check_prop_sum, py::arg("config"));
    m.def("check_bounds", &check_bounds, py::arg("config"));
    m.def("check_case2_monotonicity", &check_case2_monotonicity, py::arg("config"));
    m.def("report_exit_code", &report_exit_code, py::arg("report"));
}
