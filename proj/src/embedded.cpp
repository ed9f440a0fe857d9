#include "hypermorse/embedded.hpp"

#include "hypermorse/errors.hpp"

#include <algorithm>

namespace hypermorse {

std::string to_string(Method m) { return m == Method::inf ? "inf" : "sup"; }

AmbientChoice AmbientChoice::associated(const Hypergraph& h) { return AmbientChoice(h, associated_complex(h)); }

AmbientChoice AmbientChoice::make(const Hypergraph& h, SimplicialComplex k) {
    Hypergraph inside = rebase(h, k.hypergraph().table_ptr());
    std::vector<std::string> missing;
    for (const auto& c : inside.cells())
        if (!k.contains(c)) missing.push_back("{" + inside.label(c) + "}");
    if (!missing.empty()) throw ValidationError("ambient complex does not contain every hyperedge", missing);
    return AmbientChoice(std::move(inside), std::move(k));
}

int processed_top(const Hypergraph& h) { return std::max(h.max_dim(), 0) + 1; }
int reported_top(const Hypergraph& h) { return std::max(h.max_dim(), 0); }

HomologyResult SubChainComplex::homology(int report_top, std::stop_token stop) const {
    HomologyResult h = homology_of_subcomplex(spaces, boundaries, stop);
    h.degrees.resize(static_cast<std::size_t>(std::min(report_top + 1, top() + 1)));
    return h;
}

ChainSpace hyperedge_chains(const AmbientChoice& a, int n, const Ring& ring) {
    return ChainSpace::coordinate(ring, a.index().count(n), a.index().positions(a.hypergraph().cells_of_dim(n)));
}

SubChainComplex infimum_complex(const AmbientChoice& a, const Ring& ring) {
    const auto& idx = a.index();
    const auto& h = a.hypergraph();
    const int top = processed_top(h);
    SubChainComplex out{ring, {}, boundary_matrices(idx, top, ring)};
    for (int n = 0; n <= top; ++n) {
        std::vector<std::size_t> cols = idx.positions(h.cells_of_dim(n));
        if (n == 0 || cols.empty()) {
            out.spaces.push_back(ChainSpace::coordinate(ring, idx.count(n), cols));
            continue;
        }
        // chains on H's n-cells whose boundary has no coefficient outside H
        std::vector<std::size_t> outside;
        for (std::size_t r = 0; r < idx.count(n - 1); ++r)
            if (!h.contains(idx.cells(n - 1)[r])) outside.push_back(r);
        ExactMatrix block = out.boundaries[static_cast<std::size_t>(n)].select_rows(outside).select_cols(cols);
        ChainSpace ker = kernel_of(block);
        ExactMatrix embed(ring, idx.count(n), ker.rank());
        for (std::size_t c = 0; c < ker.rank(); ++c)
            for (std::size_t i = 0; i < cols.size(); ++i)
                if (ker.basis()(i, c) != 0) embed.set(cols[i], c, ker.basis()(i, c));
        out.spaces.push_back(ChainSpace::span(embed));
    }
    return out;
}

SubChainComplex supremum_complex(const AmbientChoice& a, const Ring& ring) {
    const auto& idx = a.index();
    const int top = processed_top(a.hypergraph());
    SubChainComplex out{ring, {}, boundary_matrices(idx, top + 1, ring)};
    for (int n = 0; n <= top; ++n) {
        ChainSpace here = hyperedge_chains(a, n, ring);
        ChainSpace above = hyperedge_chains(a, n + 1, ring);
        out.spaces.push_back(sum(here, image_of(out.boundaries[static_cast<std::size_t>(n + 1)], above)));
    }
    out.boundaries.pop_back();
    return out;
}

SubChainComplex embedded_complex(const AmbientChoice& a, const Ring& ring, Method via) {
    return via == Method::inf ? infimum_complex(a, ring) : supremum_complex(a, ring);
}

HomologyResult embedded_homology(const AmbientChoice& a, const Ring& ring, Method via, std::stop_token stop) {
    return embedded_complex(a, ring, via).homology(reported_top(a.hypergraph()), stop);
}

HomologyResult embedded_homology(const Hypergraph& h, const Ring& ring, Method via) {
    return embedded_homology(AmbientChoice::associated(h), ring, via);
}

HomologyResult simplicial_homology(const SimplicialComplex& k, const Ring& ring) {
    CellIndex idx(k);
    const int top = std::max(k.max_dim(), 0) + 1;
    SubChainComplex full{ring, {}, boundary_matrices(idx, top, ring)};
    for (int n = 0; n <= top; ++n) full.spaces.push_back(ChainSpace::full(ring, idx.count(n)));
    return full.homology(top - 1);
}

}  // namespace hypermorse
