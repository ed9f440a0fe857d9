#pragma once

#include "hypermorse/hypergraph.hpp"
#include "hypermorse/matrix.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace hypermorse {

/// Position of each simplex inside its degree of a simplicial complex; the
/// degree-n chain group has the degree-n simplices, in Cell order, as basis.
class CellIndex {
public:
    CellIndex() = default;
    explicit CellIndex(const SimplicialComplex& k);

    int max_dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
    /// Empty for degrees outside [0, max_dim].
    const std::vector<Cell>& cells(int n) const;
    std::size_t count(int n) const { return cells(n).size(); }
    std::optional<std::size_t> position(const Cell& c) const;
    /// Basis indices of the given cells of degree n that the complex contains.
    std::vector<std::size_t> positions(const std::vector<Cell>& cells) const;

private:
    std::vector<std::vector<Cell>> by_dim_;
    std::unordered_map<Cell, std::size_t, CellHash> pos_;
};

/// Matrix of ∂_n : C_n -> C_{n-1} with ∂σ = Σ_i (-1)^i d_i σ. Degree 0 maps
/// to the zero space (0 rows).
ExactMatrix boundary_matrix(const CellIndex& index, int n, const Ring& ring);
ExactMatrix boundary_matrix(const SimplicialComplex& k, int n, const Ring& ring);

/// Boundaries ∂_0 .. ∂_top.
std::vector<ExactMatrix> boundary_matrices(const CellIndex& index, int top, const Ring& ring);

}  // namespace hypermorse
