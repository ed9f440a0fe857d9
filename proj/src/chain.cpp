#include "hypermorse/chain.hpp"

#include "hypermorse/errors.hpp"

namespace hypermorse {

CellIndex::CellIndex(const SimplicialComplex& k) {
    by_dim_.resize(static_cast<std::size_t>(k.max_dim() + 1));
    for (const auto& c : k.cells()) {
        auto& bucket = by_dim_[static_cast<std::size_t>(c.dim())];
        pos_.emplace(c, bucket.size());
        bucket.push_back(c);
    }
}

const std::vector<Cell>& CellIndex::cells(int n) const {
    static const std::vector<Cell> none;
    if (n < 0 || n > max_dim()) return none;
    return by_dim_[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> CellIndex::position(const Cell& c) const {
    auto it = pos_.find(c);
    if (it == pos_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> CellIndex::positions(const std::vector<Cell>& cells) const {
    std::vector<std::size_t> out;
    for (const auto& c : cells)
        if (auto p = position(c)) out.push_back(*p);
    return out;
}

ExactMatrix boundary_matrix(const CellIndex& index, int n, const Ring& ring) {
    const auto& cols = index.cells(n);
    ExactMatrix d(ring, n == 0 ? 0 : index.count(n - 1), cols.size());
    if (n == 0) return d;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto faces = cols[j].facets();
        for (std::size_t i = 0; i < faces.size(); ++i) {
            auto row = index.position(faces[i]);
            if (!row) throw InternalError("simplicial complex is missing a face");
            d.set(*row, j, i % 2 == 0 ? 1 : -1);
        }
    }
    return d;
}

ExactMatrix boundary_matrix(const SimplicialComplex& k, int n, const Ring& ring) {
    return boundary_matrix(CellIndex(k), n, ring);
}

std::vector<ExactMatrix> boundary_matrices(const CellIndex& index, int top, const Ring& ring) {
    std::vector<ExactMatrix> out;
    for (int n = 0; n <= top; ++n) out.push_back(boundary_matrix(index, n, ring));
    return out;
}

}  // namespace hypermorse
