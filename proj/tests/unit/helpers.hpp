#pragma once

#include "hypermorse/hypergraph.hpp"
#include "hypermorse/io.hpp"
#include "hypermorse/linalg.hpp"

#include "../support/oracle.hpp"

#include <sstream>
#include <string>

namespace testutil {

inline hypermorse::Cell cell(const hypermorse::Hypergraph& h, const std::string& labels) {
    std::vector<hypermorse::Vertex> vs;
    std::istringstream in(labels);
    std::string l;
    while (in >> l) vs.push_back(h.table().find(l).value());
    return hypermorse::Cell(vs);
}

inline std::string data(const std::string& name) { return std::string(HYPERMORSE_TEST_DATA) + "/" + name; }

inline hypermorse::Hypergraph load(const std::string& name) {
    return hypermorse::parse_hypergraph(hypermorse::read_file(data(name)));
}

inline oracle::Family family(const hypermorse::Hypergraph& h) {
    oracle::Family f;
    for (const auto& c : h.cells()) f.insert(oracle::Simplex(c.vertices().begin(), c.vertices().end()));
    return f;
}

inline std::vector<long> betti(const hypermorse::HomologyResult& r) {
    std::vector<long> out;
    for (auto b : r.betti()) out.push_back(static_cast<long>(b));
    return out;
}

}  // namespace testutil
