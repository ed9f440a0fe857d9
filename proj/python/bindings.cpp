#include "hypermorse/commands.hpp"
#include "hypermorse/embedded.hpp"
#include "hypermorse/errors.hpp"
#include "hypermorse/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>

namespace py = pybind11;
using namespace hypermorse;

namespace {

Hypergraph from_edges(const std::vector<std::vector<std::string>>& edges, std::vector<std::string> labels) {
    if (labels.empty()) {
        std::set<std::string> seen;
        for (const auto& e : edges) seen.insert(e.begin(), e.end());
        labels.assign(seen.begin(), seen.end());
    }
    return build_hypergraph(labels, edges);
}

py::dict homology_dict(const HomologyResult& r) {
    py::list betti, torsion;
    for (const auto& d : r.degrees) {
        betti.append(d.betti);
        py::list t;
        for (const auto& f : d.torsion) t.append(py::int_(py::str(f.get_str())));
        torsion.append(t);
    }
    py::dict out;
    out["ring"] = r.ring.name();
    out["betti"] = betti;
    out["torsion"] = torsion;
    return out;
}

Method method_of(const std::string& m) {
    if (m == "inf") return Method::inf;
    if (m == "sup") return Method::sup;
    throw ValidationError("method must be 'inf' or 'sup'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Embedded homology and discrete Morse theory for hypergraphs";

    // translators run newest first, so the base class goes first
    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<ValidationError>(m, "ValidationError", base);
    py::register_exception<ConditionCError>(m, "ConditionCError", base);

    m.def(
        "embedded_homology",
        [](const std::vector<std::vector<std::string>>& edges, const std::string& ring, const std::string& method,
           const std::vector<std::string>& labels) {
            return homology_dict(embedded_homology(from_edges(edges, labels), Ring::parse(ring), method_of(method)));
        },
        py::arg("edges"), py::arg("ring") = "Z", py::arg("method") = "inf", py::arg("labels") = std::vector<std::string>{});

    m.def(
        "simplicial_homology",
        [](const std::vector<std::vector<std::string>>& edges, const std::string& ring) {
            return homology_dict(simplicial_homology(associated_complex(from_edges(edges, {})), Ring::parse(ring)));
        },
        py::arg("edges"), py::arg("ring") = "Z");

    m.def(
        "condition_c",
        [](const std::vector<std::vector<std::string>>& edges) { return check_condition_c(from_edges(edges, {})).holds; },
        py::arg("edges"));

    m.def(
        "parse_hypergraph",
        [](const std::string& content) {
            Hypergraph h = parse_hypergraph(content);
            std::vector<std::vector<std::string>> out;
            for (const auto& c : h.cells()) {
                std::vector<std::string> e;
                for (Vertex v : c.vertices()) e.push_back(h.table().name(v));
                out.push_back(e);
            }
            return out;
        },
        py::arg("content"));

    py::class_<CommandResult>(m, "CommandResult")
        .def_readonly("exit_code", &CommandResult::exit_code)
        .def_readonly("output", &CommandResult::output)
        .def_readonly("diagnostics", &CommandResult::diagnostics);

    // Same options as the command-line tool, as keyword arguments.
    m.def(
        "run",
        [](const std::string& command, const std::string& input, const py::kwargs& kw) {
            RunConfig c;
            c.command = command;
            c.input = input;
            c.max_cells = max_cells_from_env();
            for (auto [k, v] : kw) {
                const auto key = k.cast<std::string>();
                if (key == "ring") c.ring = v.cast<std::string>();
                else if (key == "method") c.method = v.cast<std::string>();
                else if (key == "ambient") c.ambient = v.cast<std::string>();
                else if (key == "morse") c.morse = v.cast<std::string>();
                else if (key == "steps") c.steps = v.cast<std::string>();
                else if (key == "witness") c.witness = v.cast<std::string>();
                else if (key == "out") c.out = v.cast<std::string>();
                else if (key == "json") c.json = v.cast<bool>();
                else if (key == "seed") c.seed = v.cast<std::uint64_t>();
                else if (key == "vertices") c.vertices = v.cast<std::size_t>();
                else if (key == "edges") c.edges = v.cast<std::size_t>();
                else if (key == "max_size") c.max_size = v.cast<std::size_t>();
                else if (key == "insertions") c.insertions = v.cast<std::size_t>();
                else if (key == "condition_c") c.condition_c = v.cast<bool>();
                else if (key == "collapsible") c.collapsible = v.cast<bool>();
                else if (key == "level_a") c.level_a = py::str(v).cast<std::string>();
                else if (key == "level_b") c.level_b = py::str(v).cast<std::string>();
                else if (key == "level_c") c.level_c = py::str(v).cast<std::string>();
                else if (key == "budget") c.budget = v.cast<std::size_t>();
                else throw py::type_error("unknown option '" + key + "'");
            }
            py::gil_scoped_release release;
            return run_command(c);
        },
        py::arg("command"), py::arg("input") = "");
}
