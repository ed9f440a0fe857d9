#pragma once

#include "hypermorse/embedded.hpp"
#include "hypermorse/morse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypermorse {

/// Φ = Id + ∂V + V∂ on C_*(K) and its stabilization Φ^∞ = Φ^N, degrees
/// 0..max dim K.
struct FlowOperator {
    Ring ring = Ring::integers();
    CellIndex index;
    GradientField field;
    std::vector<ExactMatrix> boundary;  // ∂_0 .. ∂_{top+1}
    std::vector<ExactMatrix> v;         // V_n : C_n -> C_{n+1}
    std::vector<ExactMatrix> phi;
    std::vector<ExactMatrix> phi_inf;
    /// Smallest N >= 1 with Φ^N = Φ^{N+1} in every degree.
    std::size_t stabilization_exponent = 1;

    int top() const noexcept { return static_cast<int>(phi.size()) - 1; }
    /// Unpaired cells of degree n, in index order, and their positions.
    std::vector<Cell> critical(int n) const;
    std::vector<std::size_t> critical_positions(int n) const;
};

/// Requires v proper and acyclic on k (ValidationError otherwise). Throws
/// InternalError if Φ fails to stabilize within #cells + 1 steps.
FlowOperator build_flow(const SimplicialComplex& k, const GradientField& v, const Ring& ring, std::stop_token stop = {});

/// C^Φ_n = ker(Φ_n - Id); checked against the image of Φ^∞.
std::vector<ChainSpace> invariant_chains(const FlowOperator& flow);

/// Free module on critical cells with ∂̃_n = π_M ∂_n Φ^∞ |R(M)_n.
struct MorseComplex {
    std::vector<std::vector<Cell>> critical;  // per degree
    std::vector<ExactMatrix> reduced;         // ∂̃_n : R(M)_n -> R(M)_{n-1}, n = 0..top

    bool operator==(const MorseComplex& o) const { return critical == o.critical && reduced == o.reduced; }
};

/// Matrix route. Throws InternalError unless ∂̃∂̃ = 0.
MorseComplex morse_boundary(const FlowOperator& flow);
/// Gradient-path route: ⟨∂̃τ, σ⟩ sums the signed multiplicities of gradient
/// paths from faces of τ to σ.
MorseComplex morse_boundary_via_paths(const FlowOperator& flow);

/// π_M Φ^∞ restricted to R(M) is the identity in every degree.
bool projection_inverts_flow(const FlowOperator& flow);

/// {R(M)_k ∩ X_k, ∂̃_k} with X = Inf or Sup of H inside the flow's ambient,
/// expressed in the critical-cell bases. Degrees 0..processed_top(H).
struct ReducedComplex {
    Method which = Method::inf;
    std::vector<ChainSpace> spaces;
    std::vector<ExactMatrix> reduced;
    std::optional<ClosureViolation> violation;  // ∂̃ leaving the spaces

    bool closed() const noexcept { return !violation; }
    std::vector<std::size_t> ranks() const;
    HomologyResult homology(int report_top) const;
};

ReducedComplex reduced_embedded_complex(const AmbientChoice& ambient, const FlowOperator& flow,
                                        const MorseComplex& mc, Method which);

/// Result of the Morse pipeline for a Morse function g on H.
struct MorsePipeline {
    HomologyResult homology;              // from {R(M) ∩ Sup, ∂̃}
    GradientField gradient;               // grad g on H
    MorseFunction fbar;                   // on the ambient, grad f̄ = extension of grad g
    FlowOperator flow;
    MorseComplex complex;
    std::vector<Cell> critical_g;         // M(g, H)
    bool critical_sets_match = false;     // M(g,H) = M(f̄,K) ∩ H
    ReducedComplex sup;
    /// {R(M(g,H))_k ∩ ∂_k^{-1} R(H)_{k-1}, ∂̃_k}; its homology when closed.
    ReducedComplex literal;
    std::optional<HomologyResult> literal_homology;
    bool literal_agrees = false;
};

/// Throws ConditionCError (with witnesses) when H violates condition (C),
/// ValidationError when g is not a Morse function on H.
MorsePipeline embedded_homology_via_morse(const Hypergraph& h, const MorseFunction& g, const Ring& ring,
                                          const AmbientChoice& ambient, std::stop_token stop = {});

/// Reduction for a Morse function f̄ given directly on the ambient complex:
/// both {R(M(f̄)) ∩ Inf, ∂̃} and {R(M(f̄)) ∩ Sup, ∂̃}.
struct AmbientMorseReduction {
    FlowOperator flow;
    MorseComplex complex;
    ReducedComplex inf;
    ReducedComplex sup;
    std::optional<HomologyResult> inf_homology;  // when closed
    std::optional<HomologyResult> sup_homology;
};

AmbientMorseReduction reduce_with_ambient_function(const AmbientChoice& ambient, const MorseFunction& fbar,
                                                   const Ring& ring, std::stop_token stop = {});

struct InequalityReport {
    Ring ring = Ring::rationals();
    std::vector<long> b, r, R;  // degrees 0..top
    std::vector<bool> weak;     // R_N >= r_N >= b_N
    std::vector<bool> weak_R;   // R_N >= b_N
    std::vector<bool> strong_r, strong_R;
    bool euler_r = false, euler_R = false;
    long euler_b = 0, euler_sum_r = 0, euler_sum_R = 0;
    /// Sup_{n-1}(R(H)) ⊆ C^Φ_{n-1}, per n.
    std::vector<bool> sup_invariant;

    bool weak_ok() const;
    bool strong_ok() const;
    bool euler_ok() const { return euler_r && euler_R; }
    bool all_ok() const { return weak_ok() && strong_ok() && euler_ok(); }
};

/// b_n, r_n = rank(R(M(f̄)) ∩ Inf_n), R_n = rank(R(M(f̄)) ∩ Sup_n) over a
/// field. f̄ must be a Morse function on the ambient complex. Throws
/// ValidationError over Z.
InequalityReport morse_inequalities_report(const AmbientChoice& ambient, const MorseFunction& fbar, const Ring& field);

/// Lattice relations between Φ^∞ and the Inf/Sup constructions, per degree.
struct FlowLatticeReport {
    std::vector<bool> inf_contained;   // Φ^∞ Inf_n ⊆ Inf_n(Φ^∞ R(H))
    std::vector<bool> inf_equal;
    std::vector<bool> hypothesis;      // Sup_{n-1}(R(H)) ⊆ C^Φ_{n-1}
    std::vector<bool> sup_equal;       // Φ^∞ Sup_n = Sup_n(Φ^∞ R(H))
};

FlowLatticeReport flow_lattice_report(const AmbientChoice& ambient, const FlowOperator& flow);

}  // namespace hypermorse
