#pragma once

#include "hypermorse/chain.hpp"
#include "hypermorse/linalg.hpp"

#include <string>

namespace hypermorse {

enum class Method { inf, sup };

std::string to_string(Method m);

/// A simplicial complex K containing H, with H rewritten in K's vertex table.
class AmbientChoice {
public:
    /// K = ΔH.
    static AmbientChoice associated(const Hypergraph& h);
    /// H is matched into K by vertex labels. Throws ValidationError when a
    /// hyperedge of H is not a simplex of K.
    static AmbientChoice make(const Hypergraph& h, SimplicialComplex k);

    const SimplicialComplex& complex() const noexcept { return k_; }
    const CellIndex& index() const noexcept { return index_; }
    /// H in K's vertex table.
    const Hypergraph& hypergraph() const noexcept { return h_; }

private:
    AmbientChoice(Hypergraph h, SimplicialComplex k) : h_(std::move(h)), k_(std::move(k)), index_(k_) {}

    Hypergraph h_;
    SimplicialComplex k_;
    CellIndex index_;
};

/// Per-degree submodules of C_*(K) for degrees 0..top, with the ambient
/// boundaries ∂_0..∂_top.
struct SubChainComplex {
    Ring ring = Ring::integers();
    std::vector<ChainSpace> spaces;
    std::vector<ExactMatrix> boundaries;

    int top() const noexcept { return static_cast<int>(spaces.size()) - 1; }
    /// Homology in degrees 0..report_top (report_top < top() keeps the
    /// degree above available for the rank of the incoming boundary).
    HomologyResult homology(int report_top, std::stop_token stop = {}) const;
};

/// Highest degree processed for H: max dim plus one.
int processed_top(const Hypergraph& h);
/// Highest degree reported for H.
int reported_top(const Hypergraph& h);

/// R(H)_n inside C_n(K).
ChainSpace hyperedge_chains(const AmbientChoice& a, int n, const Ring& ring);

/// Inf_n = R(H)_n ∩ ∂_n^{-1} R(H)_{n-1}.
SubChainComplex infimum_complex(const AmbientChoice& a, const Ring& ring);
/// Sup_n = R(H)_n + ∂_{n+1} R(H)_{n+1}.
SubChainComplex supremum_complex(const AmbientChoice& a, const Ring& ring);
SubChainComplex embedded_complex(const AmbientChoice& a, const Ring& ring, Method via);

HomologyResult embedded_homology(const AmbientChoice& a, const Ring& ring, Method via, std::stop_token stop = {});
HomologyResult embedded_homology(const Hypergraph& h, const Ring& ring, Method via = Method::inf);

/// Classical homology of K from its full boundary matrices.
HomologyResult simplicial_homology(const SimplicialComplex& k, const Ring& ring);

}  // namespace hypermorse
