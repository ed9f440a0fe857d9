#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hypermorse {

using Vertex = std::uint32_t;

/// Totally ordered vertex labels. Position in `names` is the vertex index and
/// fixes every incidence sign.
class VertexTable {
public:
    explicit VertexTable(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(Vertex v) const { return names_.at(v); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<Vertex> find(const std::string& label) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Vertex> index_;
};

/// A nonempty strictly increasing vertex list. Cells order by dimension, then
/// lexicographically by vertex index.
class Cell {
public:
    Cell() = default;
    /// Sorts and deduplicates; throws ValidationError when empty.
    explicit Cell(std::vector<Vertex> vertices);
    Cell(std::initializer_list<Vertex> vertices) : Cell(std::vector<Vertex>(vertices)) {}

    int dim() const noexcept { return static_cast<int>(v_.size()) - 1; }
    const std::vector<Vertex>& vertices() const noexcept { return v_; }
    std::size_t size() const noexcept { return v_.size(); }
    Vertex operator[](std::size_t i) const { return v_[i]; }

    /// Cell with the i-th vertex removed (dim must be >= 1).
    Cell face(std::size_t i) const;
    /// Codimension-one faces in deletion order; face i carries sign (-1)^i.
    std::vector<Cell> facets() const;
    /// Every nonempty subset, including the cell itself.
    std::vector<Cell> subsets() const;

    bool is_subset_of(const Cell& other) const;
    bool is_proper_face_of(const Cell& other) const { return size() < other.size() && is_subset_of(other); }
    bool contains(Vertex v) const;
    /// With `other` a proper face of codimension one, the sign (-1)^i of the
    /// missing vertex position i, else 0.
    int incidence(const Cell& face) const;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend std::strong_ordering operator<=>(const Cell& a, const Cell& b);

private:
    std::vector<Vertex> v_;
};

struct CellHash {
    std::size_t operator()(const Cell& c) const noexcept;
};

/// Hyperedges over a shared vertex table. Cells are kept sorted and unique.
/// The vertex table may be larger than the support (sub-hypergraphs keep their
/// parent's labels so indices stay comparable).
class Hypergraph {
public:
    Hypergraph() : Hypergraph(std::make_shared<VertexTable>(std::vector<std::string>{}), {}) {}
    /// Throws ValidationError on duplicate cells or out-of-range vertices.
    Hypergraph(std::shared_ptr<const VertexTable> table, std::vector<Cell> cells);

    const std::shared_ptr<const VertexTable>& table_ptr() const noexcept { return table_; }
    const VertexTable& table() const noexcept { return *table_; }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }
    /// -1 for the empty hypergraph.
    int max_dim() const noexcept { return cells_.empty() ? -1 : cells_.back().dim(); }

    bool contains(const Cell& c) const;
    std::vector<Cell> cells_of_dim(int n) const;
    /// Vertices covered by some hyperedge, increasing.
    std::vector<Vertex> support() const;
    bool is_simplicial_complex() const;
    /// Cells not properly contained in another cell.
    std::vector<Cell> maximal_cells() const;

    /// Space-separated labels, e.g. "v0 v1".
    std::string label(const Cell& c) const;
    std::string describe() const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b);

private:
    std::shared_ptr<const VertexTable> table_;
    std::vector<Cell> cells_;
};

/// Builds a hypergraph from labels and label-set hyperedges. Rejects
/// duplicate or malformed labels, empty hyperedges, unknown labels, duplicate
/// hyperedges and uncovered vertices (ParseError).
Hypergraph build_hypergraph(const std::vector<std::string>& labels,
                            const std::vector<std::vector<std::string>>& edges);

/// A hypergraph closed under nonempty subsets.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Throws ValidationError if `h` is not closed.
    explicit SimplicialComplex(Hypergraph h);

    const Hypergraph& hypergraph() const noexcept { return h_; }
    const std::vector<Cell>& cells() const noexcept { return h_.cells(); }
    bool contains(const Cell& c) const { return h_.contains(c); }
    int max_dim() const noexcept { return h_.max_dim(); }
    const VertexTable& table() const noexcept { return h_.table(); }

private:
    Hypergraph h_;
};

SimplicialComplex associated_complex(const Hypergraph& h);
/// Largest subcomplex of h; may be empty.
SimplicialComplex lower_complex(const Hypergraph& h);

/// Cone over k with a fresh apex vertex appended after every existing vertex.
SimplicialComplex cone(const SimplicialComplex& k);

/// Translates a cell between vertex tables through labels. Throws
/// ValidationError when a label is missing from `to`.
Cell rebase(const Cell& c, const VertexTable& from, const VertexTable& to);
Hypergraph rebase(const Hypergraph& h, std::shared_ptr<const VertexTable> to);

struct ConditionCWitness {
    Cell beta, alpha, gamma;
};

struct ConditionCReport {
    bool holds = true;
    std::vector<ConditionCWitness> witnesses;
};

ConditionCReport check_condition_c(const Hypergraph& h);

/// Vertex map inducing hyperedge images as vertex sets (a non-injective map
/// may lower the dimension of an image).
class Morphism {
public:
    const Hypergraph& source() const noexcept { return src_; }
    const Hypergraph& target() const noexcept { return dst_; }
    const std::vector<Vertex>& vertex_map() const noexcept { return map_; }

    Cell apply(const Cell& c) const;
    /// The induced map on ΔH -> ΔH' and on δH -> δH', as (cell, image) lists.
    std::vector<std::pair<Cell, Cell>> on_associated() const;
    std::vector<std::pair<Cell, Cell>> on_lower() const;

private:
    friend Morphism validate_morphism(const Hypergraph&, const Hypergraph&, const std::vector<Vertex>&);
    Morphism(Hypergraph s, Hypergraph d, std::vector<Vertex> m) : src_(std::move(s)), dst_(std::move(d)), map_(std::move(m)) {}

    Hypergraph src_, dst_;
    std::vector<Vertex> map_;
};

/// `map[v]` is the target index of source vertex v, indexed by the source
/// table. Throws ValidationError when some hyperedge image is missing.
Morphism validate_morphism(const Hypergraph& src, const Hypergraph& dst, const std::vector<Vertex>& map);

}  // namespace hypermorse
