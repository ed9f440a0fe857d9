#include "hypermorse/io.hpp"

#include "hypermorse/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace hypermorse {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> lexicographic_labels(const std::vector<std::vector<std::string>>& edges) {
    std::set<std::string> seen;
    for (const auto& e : edges) seen.insert(e.begin(), e.end());
    return {seen.begin(), seen.end()};
}

json parse_json(std::string_view content, const char* what) {
    try {
        return json::parse(content);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

Cell resolve_cell(const std::string& key, const VertexTable& table) {
    auto labels = split_ws(key);
    if (labels.empty()) throw ParseError("empty cell key \"" + key + "\"");
    std::vector<Vertex> vs;
    for (const auto& l : labels) {
        auto v = table.find(l);
        if (!v) throw ValidationError("unknown vertex \"" + l + "\" in cell \"" + key + "\"");
        vs.push_back(*v);
    }
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw ParseError("repeated vertex in cell \"" + key + "\"");
    return Cell(std::move(vs));
}

std::string cell_key(const Cell& c, const VertexTable& table) {
    std::string out;
    for (Vertex v : c.vertices()) {
        if (!out.empty()) out += ' ';
        out += table.name(v);
    }
    return out;
}

}  // namespace

Hypergraph parse_hypergraph_text(std::string_view content) {
    std::optional<std::vector<std::string>> labels;
    std::vector<std::vector<std::string>> edges;
    bool first = true;
    std::size_t lineno = 0;
    std::istringstream in{std::string(content)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.starts_with("vertices:")) {
            if (!first) throw ParseError("line " + std::to_string(lineno) + ": `vertices:` must be the first line");
            labels = split_ws(line.substr(9));
            if (labels->empty()) throw ParseError("empty vertex list");
        } else {
            edges.push_back(split_ws(line));
        }
        first = false;
    }
    if (edges.empty()) throw ParseError("no hyperedges");
    return build_hypergraph(labels ? *labels : lexicographic_labels(edges), edges);
}

Hypergraph parse_hypergraph_json(std::string_view content) {
    json doc = parse_json(content, "hypergraph");
    if (!doc.is_object() || !doc.contains("edges")) throw ParseError("hypergraph JSON needs an \"edges\" array");
    for (const auto& [key, _] : doc.items())
        if (key != "vertices" && key != "edges") throw ParseError("unexpected key \"" + key + "\" in hypergraph JSON");
    auto strings = [](const json& arr, const std::string& what) {
        if (!arr.is_array()) throw ParseError(what + " must be an array");
        std::vector<std::string> out;
        for (const auto& x : arr) {
            if (!x.is_string()) throw ParseError(what + " entries must be strings");
            out.push_back(x.get<std::string>());
        }
        return out;
    };
    std::vector<std::vector<std::string>> edges;
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) edges.push_back(strings(e, "hyperedge"));
    if (edges.empty()) throw ParseError("no hyperedges");
    std::vector<std::string> labels =
        doc.contains("vertices") ? strings(doc["vertices"], "\"vertices\"") : lexicographic_labels(edges);
    return build_hypergraph(labels, edges);
}

Hypergraph parse_hypergraph(std::string_view content) {
    std::string_view t = trim(content);
    if (!t.empty() && t.front() == '{') return parse_hypergraph_json(content);
    return parse_hypergraph_text(content);
}

std::string format_hypergraph(const Hypergraph& h, FileFormat fmt) {
    const VertexTable& table = h.table();
    std::vector<std::string> vertices;
    for (Vertex v : h.support()) vertices.push_back(table.name(v));
    if (fmt == FileFormat::json) {
        json doc;
        doc["vertices"] = vertices;
        doc["edges"] = json::array();
        for (const auto& c : h.cells()) {
            std::vector<std::string> e;
            for (Vertex v : c.vertices()) e.push_back(table.name(v));
            doc["edges"].push_back(e);
        }
        return doc.dump(2) + "\n";
    }
    std::string out = "vertices:";
    for (const auto& v : vertices) out += " " + v;
    out += "\n";
    for (const auto& c : h.cells()) out += cell_key(c, table) + "\n";
    return out;
}

CellValues parse_morse_values(std::string_view content, const VertexTable& table) {
    json doc = parse_json(content, "Morse function");
    if (!doc.is_object()) throw ParseError("Morse function JSON must be an object mapping cells to values");
    CellValues out;
    for (const auto& [key, value] : doc.items()) {
        Cell c = resolve_cell(key, table);
        Scalar x;
        if (value.is_string()) {
            x = parse_rational(value.get<std::string>());
        } else if (value.is_number_integer()) {
            x = Scalar(value.dump());
        } else {
            throw ParseError("value of \"" + key + "\" must be a rational string such as \"3/2\"");
        }
        if (!out.emplace(std::move(c), x).second) throw ParseError("cell \"" + key + "\" listed twice");
    }
    return out;
}

std::string format_morse_function(const MorseFunction& f) {
    json doc = json::object();
    for (const auto& [c, v] : f.values()) doc[cell_key(c, f.domain().table())] = to_string(v);
    return doc.dump(2) + "\n";
}

std::vector<CollapseStep> parse_collapse_steps(std::string_view content, const VertexTable& table) {
    json doc = parse_json(content, "collapse sequence");
    if (!doc.is_array()) throw ParseError("collapse sequence must be an array of [sigma, tau] pairs");
    std::vector<CollapseStep> out;
    for (const auto& step : doc) {
        if (!step.is_array() || step.size() != 2 || !step[0].is_string() || !step[1].is_string())
            throw ParseError("each collapse step must be [\"sigma\", \"tau\"]");
        out.push_back({resolve_cell(step[0].get<std::string>(), table), resolve_cell(step[1].get<std::string>(), table)});
    }
    return out;
}

std::string format_collapse_steps(const std::vector<CollapseStep>& steps, const VertexTable& table) {
    json doc = json::array();
    for (const auto& s : steps) doc.push_back({cell_key(s.sigma, table), cell_key(s.tau, table)});
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    out << content;
    if (!out) throw ValidationError("failed writing " + path);
}

}  // namespace hypermorse
