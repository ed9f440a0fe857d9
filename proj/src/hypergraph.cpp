#include "hypermorse/hypergraph.hpp"

#include "hypermorse/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace hypermorse {

VertexTable::VertexTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], static_cast<Vertex>(i)).second)
            throw ParseError("duplicate vertex label '" + names_[i] + "'");
    }
}

std::optional<Vertex> VertexTable::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------

Cell::Cell(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    if (v_.empty()) throw ValidationError("empty cell");
}

Cell Cell::face(std::size_t i) const {
    if (v_.size() < 2) throw InternalError("a vertex has no faces");
    Cell f;
    f.v_.reserve(v_.size() - 1);
    for (std::size_t j = 0; j < v_.size(); ++j)
        if (j != i) f.v_.push_back(v_[j]);
    return f;
}

std::vector<Cell> Cell::facets() const {
    std::vector<Cell> out;
    if (v_.size() < 2) return out;
    for (std::size_t i = 0; i < v_.size(); ++i) out.push_back(face(i));
    return out;
}

std::vector<Cell> Cell::subsets() const {
    if (v_.size() > 24) throw ValidationError("cell too large to enumerate its faces");
    std::vector<Cell> out;
    const std::uint32_t n = static_cast<std::uint32_t>(v_.size());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Cell c;
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask & (1u << i)) c.v_.push_back(v_[i]);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Cell::is_subset_of(const Cell& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

bool Cell::contains(Vertex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

int Cell::incidence(const Cell& f) const {
    if (f.v_.size() + 1 != v_.size()) return 0;
    std::size_t i = 0;
    while (i < f.v_.size() && f.v_[i] == v_[i]) ++i;
    // v_[i] is the dropped vertex; the rest must match shifted by one
    for (std::size_t j = i; j < f.v_.size(); ++j)
        if (f.v_[j] != v_[j + 1]) return 0;
    return i % 2 == 0 ? 1 : -1;
}

std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.v_.size() <=> b.v_.size(); c != 0) return c;
    return a.v_ <=> b.v_;
}

std::size_t CellHash::operator()(const Cell& c) const noexcept {
    std::size_t h = c.size();
    for (Vertex v : c.vertices()) h = h * 1000003u ^ (v + 0x9e3779b9u + (h << 6) + (h >> 2));
    return h;
}

// ---------------------------------------------------------------------------

Hypergraph::Hypergraph(std::shared_ptr<const VertexTable> table, std::vector<Cell> cells)
    : table_(std::move(table)), cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    for (std::size_t i = 0; i + 1 < cells_.size(); ++i)
        if (cells_[i] == cells_[i + 1]) throw ValidationError("duplicate hyperedge {" + label(cells_[i]) + "}");
    for (const auto& c : cells_)
        if (c.vertices().back() >= table_->size()) throw ValidationError("cell vertex outside the vertex table");
}

bool Hypergraph::contains(const Cell& c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

std::vector<Cell> Hypergraph::cells_of_dim(int n) const {
    std::vector<Cell> out;
    for (const auto& c : cells_)
        if (c.dim() == n) out.push_back(c);
    return out;
}

std::vector<Vertex> Hypergraph::support() const {
    std::vector<bool> seen(table_->size());
    for (const auto& c : cells_)
        for (Vertex v : c.vertices()) seen[v] = true;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < seen.size(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

bool Hypergraph::is_simplicial_complex() const {
    for (const auto& c : cells_)
        for (const auto& f : c.facets())
            if (!contains(f)) return false;
    return true;
}

std::vector<Cell> Hypergraph::maximal_cells() const {
    std::vector<Cell> out;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = i + 1; j < cells_.size() && maximal; ++j)
            if (cells_[i].is_proper_face_of(cells_[j])) maximal = false;
        if (maximal) out.push_back(cells_[i]);
    }
    return out;
}

std::string Hypergraph::label(const Cell& c) const {
    std::string s;
    for (Vertex v : c.vertices()) {
        if (!s.empty()) s += ' ';
        s += v < table_->size() ? table_->name(v) : "#" + std::to_string(v);
    }
    return s;
}

std::string Hypergraph::describe() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < cells_.size(); ++i) os << (i ? ", " : "") << "{" << label(cells_[i]) << "}";
    os << "}";
    return os.str();
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
    if (a.cells_.size() != b.cells_.size()) return false;
    if (a.table_ == b.table_ || a.table_->names() == b.table_->names()) return a.cells_ == b.cells_;
    for (std::size_t i = 0; i < a.cells_.size(); ++i)
        if (a.label(a.cells_[i]) != b.label(b.cells_[i])) return false;
    return true;
}

namespace {

bool valid_label(const std::string& s) {
    if (s.empty() || s.front() == '#') return false;
    for (unsigned char ch : s)
        if (std::isspace(ch) || ch == '"') return false;
    return true;
}

}  // namespace

Hypergraph build_hypergraph(const std::vector<std::string>& labels, const std::vector<std::vector<std::string>>& edges) {
    if (labels.empty()) throw ParseError("hypergraph has no vertices");
    for (const auto& l : labels)
        if (!valid_label(l)) throw ParseError("invalid vertex label '" + l + "'");
    auto table = std::make_shared<const VertexTable>(labels);
    std::vector<Cell> cells;
    std::set<Cell> seen;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].empty()) throw ParseError("hyperedge " + std::to_string(e + 1) + " is empty");
        std::vector<Vertex> vs;
        for (const auto& l : edges[e]) {
            auto v = table->find(l);
            if (!v) throw ParseError("hyperedge " + std::to_string(e + 1) + " uses unknown vertex '" + l + "'");
            vs.push_back(*v);
        }
        Cell c(std::move(vs));
        if (c.size() != edges[e].size())
            throw ParseError("hyperedge " + std::to_string(e + 1) + " repeats a vertex");
        if (!seen.insert(c).second) throw ParseError("duplicate hyperedge " + std::to_string(e + 1));
        cells.push_back(std::move(c));
    }
    Hypergraph h(table, std::move(cells));
    auto sup = h.support();
    if (sup.size() != labels.size()) {
        std::vector<std::string> missing;
        std::size_t k = 0;
        for (Vertex v = 0; v < labels.size(); ++v) {
            if (k < sup.size() && sup[k] == v) ++k;
            else missing.push_back(labels[v]);
        }
        throw ParseError("vertex '" + missing.front() + "' lies in no hyperedge", missing);
    }
    return h;
}

// ---------------------------------------------------------------------------

SimplicialComplex::SimplicialComplex(Hypergraph h) : h_(std::move(h)) {
    for (const auto& c : h_.cells())
        for (const auto& f : c.facets())
            if (!h_.contains(f))
                throw ValidationError("not a simplicial complex: {" + h_.label(f) + "} is missing below {" + h_.label(c) + "}");
}

SimplicialComplex associated_complex(const Hypergraph& h) {
    std::set<Cell> all;
    for (const auto& c : h.maximal_cells())
        for (auto& s : c.subsets()) all.insert(std::move(s));
    return SimplicialComplex(Hypergraph(h.table_ptr(), {all.begin(), all.end()}));
}

SimplicialComplex lower_complex(const Hypergraph& h) {
    // cells come sorted by dimension, so faces are decided before cofaces
    std::set<Cell> kept;
    for (const auto& c : h.cells()) {
        bool ok = true;
        for (const auto& f : c.facets())
            if (!kept.count(f)) {
                ok = false;
                break;
            }
        if (ok) kept.insert(c);
    }
    return SimplicialComplex(Hypergraph(h.table_ptr(), {kept.begin(), kept.end()}));
}

SimplicialComplex cone(const SimplicialComplex& k) {
    auto names = k.table().names();
    std::string apex = "apex";
    for (int i = 0; k.table().find(apex); ++i) apex = "apex" + std::to_string(i);
    names.push_back(apex);
    const Vertex a = static_cast<Vertex>(names.size() - 1);
    auto table = std::make_shared<const VertexTable>(std::move(names));
    std::vector<Cell> cells = k.cells();
    cells.push_back(Cell{a});
    for (const auto& c : k.cells()) {
        auto vs = c.vertices();
        vs.push_back(a);
        cells.emplace_back(std::move(vs));
    }
    return SimplicialComplex(Hypergraph(table, std::move(cells)));
}

Cell rebase(const Cell& c, const VertexTable& from, const VertexTable& to) {
    std::vector<Vertex> vs;
    for (Vertex v : c.vertices()) {
        auto w = to.find(from.name(v));
        if (!w) throw ValidationError("vertex '" + from.name(v) + "' is missing from the target vertex table");
        vs.push_back(*w);
    }
    return Cell(std::move(vs));
}

Hypergraph rebase(const Hypergraph& h, std::shared_ptr<const VertexTable> to) {
    std::vector<Cell> cells;
    for (const auto& c : h.cells()) cells.push_back(rebase(c, h.table(), *to));
    return Hypergraph(std::move(to), std::move(cells));
}

ConditionCReport check_condition_c(const Hypergraph& h) {
    ConditionCReport r;
    for (const auto& beta : h.cells()) {
        if (beta.dim() < 2) continue;
        for (const auto& alpha : beta.facets()) {
            if (!h.contains(alpha)) continue;
            for (std::size_t i = 0; i < alpha.size(); ++i) {
                Cell gamma = alpha.face(i);
                if (!h.contains(gamma)) continue;
                // the only other facet of beta above gamma drops alpha's vertex i and keeps the one alpha dropped
                bool found = false;
                for (const auto& other : beta.facets())
                    if (other != alpha && gamma.is_subset_of(other) && h.contains(other)) found = true;
                if (!found) r.witnesses.push_back({beta, alpha, gamma});
            }
        }
    }
    r.holds = r.witnesses.empty();
    return r;
}

// ---------------------------------------------------------------------------

Cell Morphism::apply(const Cell& c) const {
    std::vector<Vertex> vs;
    for (Vertex v : c.vertices()) vs.push_back(map_.at(v));
    return Cell(std::move(vs));
}

std::vector<std::pair<Cell, Cell>> Morphism::on_associated() const {
    std::vector<std::pair<Cell, Cell>> out;
    const SimplicialComplex k = associated_complex(src_);
    for (const auto& c : k.cells()) out.emplace_back(c, apply(c));
    return out;
}

std::vector<std::pair<Cell, Cell>> Morphism::on_lower() const {
    std::vector<std::pair<Cell, Cell>> out;
    const SimplicialComplex k = lower_complex(src_);
    for (const auto& c : k.cells()) out.emplace_back(c, apply(c));
    return out;
}

Morphism validate_morphism(const Hypergraph& src, const Hypergraph& dst, const std::vector<Vertex>& map) {
    if (map.size() != src.table().size()) throw ValidationError("vertex map must be total on the source vertices");
    for (Vertex w : map)
        if (w >= dst.table().size()) throw ValidationError("vertex map leaves the target vertex table");
    Morphism m(src, dst, map);
    std::vector<std::string> missing;
    for (const auto& c : src.cells()) {
        Cell img = m.apply(c);
        if (!dst.contains(img)) missing.push_back("{" + src.label(c) + "} -> {" + dst.label(img) + "}");
    }
    if (!missing.empty()) throw ValidationError("hyperedge image is not a hyperedge of the target", missing);
    return m;
}

}  // namespace hypermorse
