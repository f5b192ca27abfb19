#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "amt/io.hpp"
#include "amt/matchsearch.hpp"
#include "amt/reduce.hpp"
#include "amt/verify.hpp"

namespace py = pybind11;
using namespace amt;

namespace {

Matching matching_from_pairs(std::vector<std::pair<std::string, std::string>> edges) {
    return Matching(std::move(edges));
}

py::dict homology_dict(const HomologyProfile& profile) {
    py::dict out;
    for (const auto& [degree, h] : profile) {
        py::dict entry;
        entry["betti"] = h.betti;
        py::list torsion;
        for (const Int& t : h.torsion) torsion.append(py::int_(py::str(t.str())));
        entry["torsion"] = torsion;
        out[py::int_(degree)] = entry;
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact chain complex reduction via Morse matchings";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_RuntimeError);

    py::class_<Cell>(m, "Cell")
        .def(py::init([](std::string id, int degree, int rank) {
                 return Cell{std::move(id), degree, rank};
             }),
             py::arg("id"), py::arg("degree"), py::arg("rank") = 1)
        .def_readonly("id", &Cell::id)
        .def_readonly("degree", &Cell::degree)
        .def_readonly("rank", &Cell::rank)
        .def("__repr__", [](const Cell& c) {
            std::ostringstream os;
            os << "Cell(id='" << c.id << "', degree=" << c.degree << ", rank=" << c.rank << ")";
            return os.str();
        });

    py::class_<BasedComplex>(m, "Complex")
        .def_static("from_json", [](const std::string& text) { return parse_complex(text); },
                    py::arg("text"), "Parse an amt-complex/1 JSON document")
        .def_static(
            "from_simplicial",
            [](const std::string& facets, const std::string& ring) {
                return from_simplicial(facets, RingSpec::parse(ring));
            },
            py::arg("facets"), py::arg("ring") = "Z",
            "Chain complex of a simplicial complex given by facet lines")
        .def_static(
            "random",
            [](std::size_t cells, int max_degree, int max_rank, double density,
               const std::string& ring, std::uint64_t seed) {
                return gen_random(cells, max_degree, max_rank, density, RingSpec::parse(ring), seed);
            },
            py::arg("cells"), py::arg("max_degree"), py::arg("max_rank"), py::arg("density"),
            py::arg("ring"), py::arg("seed"), "Seed-deterministic random complex with d^2 = 0")
        .def("to_json", &write_complex)
        .def_property_readonly("ring", [](const BasedComplex& c) { return c.ring_spec().token(); })
        .def_property_readonly("cells", [](const BasedComplex& c) { return c.cells(); })
        .def("homology", [](const BasedComplex& c) { return homology_dict(homology(c)); })
        .def("check_d_squared",
             [](const BasedComplex& c) {
                 Ring ring = c.ring();
                 py::list out;
                 for (const auto& v : check_d_squared(c))
                     out.append(py::make_tuple(v.tgt, v.src, v.row, v.col, ring.format(v.value)));
                 return out;
             })
        .def("__eq__", [](const BasedComplex& a, const BasedComplex& b) { return a == b; })
        .def("__len__", [](const BasedComplex& c) { return c.cells().size(); })
        .def("__repr__", [](const BasedComplex& c) {
            std::ostringstream os;
            os << "Complex(ring='" << c.ring_spec().token() << "', cells=" << c.cells().size()
               << ", components=" << c.components().size() << ")";
            return os.str();
        });

    py::class_<ReductionResult>(m, "Reduction")
        .def_property_readonly("reduced", [](const ReductionResult& r) { return r.reduced; })
        .def_property_readonly("matching", [](const ReductionResult& r) { return r.matching.edges; })
        .def_property_readonly("stats",
                               [](const ReductionResult& r) {
                                   py::dict d;
                                   d["cells_before"] = r.stats.cells_before;
                                   d["cells_after"] = r.stats.cells_after;
                                   d["graph_edges"] = r.stats.graph_edges;
                                   d["matching_size"] = r.stats.matching_size;
                                   d["series_terms"] = r.stats.series_terms;
                                   return d;
                               })
        .def("maps_json",
             [](const ReductionResult& r) {
                 return write_maps(r.reduced.ring(), r.f, r.g, r.h);
             })
        .def("__repr__", [](const ReductionResult& r) {
            std::ostringstream os;
            os << "Reduction(" << r.stats.cells_before << " -> " << r.stats.cells_after
               << " cells)";
            return os.str();
        });

    m.def(
        "greedy_matching",
        [](const BasedComplex& c, std::uint64_t seed) { return greedy_matching(c, seed).edges; },
        py::arg("complex"), py::arg("seed") = 0,
        "Greedy Morse matching; returns the matched (src, tgt) pairs");

    m.def(
        "validate_matching",
        [](const BasedComplex& c, std::vector<std::pair<std::string, std::string>> edges) {
            MatchingValidation v = validate_matching(c, matching_from_pairs(std::move(edges)));
            py::list out;
            if (auto* errors = std::get_if<std::vector<MatchingError>>(&v))
                for (const auto& e : *errors) out.append(to_string(e));
            return out;
        },
        py::arg("complex"), py::arg("matching"),
        "Diagnoses a matching; an empty list means it is a valid Morse matching");

    m.def(
        "critical_cells",
        [](const BasedComplex& c, std::vector<std::pair<std::string, std::string>> edges) {
            return critical_cells(c, matching_from_pairs(std::move(edges)));
        },
        py::arg("complex"), py::arg("matching"));

    m.def(
        "reduce",
        [](const BasedComplex& c,
           std::optional<std::vector<std::pair<std::string, std::string>>> edges,
           const std::string& engine, std::uint64_t seed,
           std::optional<std::size_t> max_iterations) {
            Matching m = edges ? matching_from_pairs(std::move(*edges)) : greedy_matching(c, seed);
            return run_reduction(c, m, parse_engine(engine), max_iterations);
        },
        py::arg("complex"), py::arg("matching") = py::none(), py::arg("engine") = "both",
        py::arg("seed") = 0, py::arg("max_iterations") = py::none(),
        "Reduce onto the critical cells; engine 'both' cross-checks the two constructions");

    m.def(
        "verify_reduction",
        [](const BasedComplex& c, const ReductionResult& r) {
            Contraction ctr{c, r.reduced, r.f, r.g, r.h};
            IdentityReport report = verify_contraction(ctr);
            py::dict out;
            for (const auto& check : report.checks) out[py::str(check.name)] = check.passed();
            out["homology_preserved"] = compare_homology(c, r.reduced);
            return out;
        },
        py::arg("complex"), py::arg("reduction"),
        "Re-checks the nine contraction identities plus homology preservation");

    m.def(
        "export_dot",
        [](const BasedComplex& c,
           std::optional<std::vector<std::pair<std::string, std::string>>> edges) {
            std::optional<Matching> m;
            if (edges) m = matching_from_pairs(std::move(*edges));
            return export_dot(c, m);
        },
        py::arg("complex"), py::arg("matching") = py::none());

    m.def(
        "smith_normal_form",
        [](const std::vector<std::vector<long long>>& rows) {
            if (rows.empty()) throw InputError("smith_normal_form: empty matrix");
            Ring ring(RingSpec::integers());
            Matrix mat(rows.size(), rows[0].size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].size() != rows[0].size())
                    throw InputError("smith_normal_form: ragged rows");
                for (std::size_t j = 0; j < rows[i].size(); ++j)
                    mat.at(i, j) = ring.from_int(rows[i][j]);
            }
            py::list out;
            for (const Int& d : smith_normal_form(mat)) out.append(py::int_(py::str(d.str())));
            return out;
        },
        py::arg("rows"), "Smith invariants of an integer matrix given as nested lists");
}
