#pragma once

#include "hypermorse/collapse.hpp"
#include "hypermorse/morse.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hypermorse {

enum class FileFormat { text, json };

/// Text format:
///   vertices: a b c
///   a b
///   b c      # comment
/// Without a `vertices:` line the order is lexicographic in the labels.
Hypergraph parse_hypergraph_text(std::string_view content);
/// {"vertices": [...], "edges": [[...], ...]}; "vertices" is optional.
Hypergraph parse_hypergraph_json(std::string_view content);
/// JSON when the first non-blank character is '{', text otherwise.
Hypergraph parse_hypergraph(std::string_view content);

/// Writes the support vertices only, in table order, and the cells in
/// canonical order. parse(format(h)) == h and the output is a fixpoint.
std::string format_hypergraph(const Hypergraph& h, FileFormat fmt);

/// Morse file: {"v0 v1": "3/2", ...}. Cells are resolved against `table`;
/// integer JSON numbers are accepted, floating point is rejected.
CellValues parse_morse_values(std::string_view content, const VertexTable& table);
std::string format_morse_function(const MorseFunction& f);

/// [["sigma labels", "tau labels"], ...]
std::vector<CollapseStep> parse_collapse_steps(std::string_view content, const VertexTable& table);
std::string format_collapse_steps(const std::vector<CollapseStep>& steps, const VertexTable& table);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace hypermorse
