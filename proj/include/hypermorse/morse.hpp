#pragma once

#include "hypermorse/chain.hpp"
#include "hypermorse/hypergraph.hpp"
#include "hypermorse/ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hypermorse {

using CellValues = std::map<Cell, Scalar>;

/// Exact values on every cell of a domain, satisfying the Morse conditions:
/// each cell has at most one coface β with f(β) <= f(α) and at most one face
/// γ with f(γ) >= f(α).
class MorseFunction {
public:
    MorseFunction() = default;
    const Hypergraph& domain() const noexcept { return domain_; }
    const CellValues& values() const noexcept { return values_; }
    const Scalar& operator()(const Cell& c) const;

private:
    friend struct MorseCheck check_morse_function(const Hypergraph&, CellValues);
    friend MorseFunction validate_morse_function(const Hypergraph&, CellValues);
    MorseFunction(Hypergraph d, CellValues v) : domain_(std::move(d)), values_(std::move(v)) {}

    Hypergraph domain_;
    CellValues values_;
};

/// Per-cell counts behind the Morse conditions and conditions (A)/(B).
struct CellConditions {
    Cell cell;
    std::vector<Cell> low_cofaces;   // β > α in the domain with f(β) <= f(α)
    std::vector<Cell> high_faces;    // γ < α in the domain with f(γ) >= f(α)

    bool condition_a() const noexcept { return !low_cofaces.empty(); }
    bool condition_b() const noexcept { return !high_faces.empty(); }
    bool critical() const noexcept { return !condition_a() && !condition_b(); }
};

struct MorseCheck {
    bool valid = false;
    std::vector<CellConditions> cells;   // in domain order
    std::vector<std::string> diagnostics;
    std::vector<Cell> both_a_and_b;
    std::optional<MorseFunction> function;
};

/// Full report; never throws for Morse violations. Throws ValidationError if
/// `raw` is not total on the domain or names cells outside it.
MorseCheck check_morse_function(const Hypergraph& domain, CellValues raw);
/// Throws ValidationError with per-cell diagnostics if f is not Morse.
MorseFunction validate_morse_function(const Hypergraph& domain, CellValues raw);

/// f(σ) = dim σ.
MorseFunction dimension_function(const Hypergraph& domain);
/// f restricted to a sub-hypergraph sharing the vertex table.
MorseFunction restrict_function(const MorseFunction& f, const Hypergraph& sub);

/// Cells with no low coface and no high face, in domain order.
std::vector<Cell> critical_cells(const MorseFunction& f);
std::vector<Cell> critical_cells(const MorseCheck& check);
/// Critical values f(σ) for σ critical, increasing and unique.
std::vector<Scalar> critical_values(const MorseFunction& f);

struct GradientPair {
    Cell alpha;  // dim n
    Cell beta;   // dim n+1, alpha < beta

    friend bool operator==(const GradientPair&, const GradientPair&) = default;
    friend auto operator<=>(const GradientPair&, const GradientPair&) = default;
};

/// Pairs α^(n) < β^(n+1) of cells of the domain.
class GradientField {
public:
    GradientField() = default;
    const Hypergraph& domain() const noexcept { return domain_; }
    const std::vector<GradientPair>& pairs() const noexcept { return pairs_; }
    /// No directed cycle in the modified Hasse digraph of the domain.
    bool acyclic() const noexcept { return acyclic_; }
    /// Every cell lies in at most one pair.
    bool proper() const noexcept { return proper_; }

    /// Partners for proper fields.
    std::optional<Cell> up(const Cell& alpha) const;
    std::optional<Cell> down(const Cell& beta) const;
    bool is_paired(const Cell& c) const { return up(c) || down(c); }

    /// V(σ) as a combination of cells: Σ over pairs (σ, β) of -<∂β, σ> β.
    std::vector<std::pair<Cell, int>> apply(const Cell& sigma) const;

private:
    friend GradientField validate_gradient_field(const Hypergraph&, std::vector<GradientPair>);
    GradientField(Hypergraph d, std::vector<GradientPair> p, bool acyclic, bool proper);

    Hypergraph domain_;
    std::vector<GradientPair> pairs_;
    bool acyclic_ = true;
    bool proper_ = true;
    std::map<Cell, Cell> up_, down_;
};

/// Checks shape (codimension one, containment, membership) and throws
/// ValidationError on malformed pairs; decides the acyclic/proper flags.
GradientField validate_gradient_field(const Hypergraph& domain, std::vector<GradientPair> pairs);

/// grad f = {(α, β) : β > α, f(β) <= f(α)}.
GradientField gradient_from_function(const MorseFunction& f);

/// Whether some closed V-path α_0, β_0, α_1, ..., α_{r+1} = α_0 exists, with
/// each (α_i, β_i) a pair and α_{i+1} ≠ α_i a face of β_i in the domain.
bool has_closed_v_path(const GradientField& v);
/// Whether the modified Hasse digraph (β -> α for faces, reversed on pairs)
/// has a directed cycle.
bool hasse_has_cycle(const GradientField& v);

/// The same pairs on an ambient complex (H rebased by labels). Throws
/// ValidationError unless v is proper and acyclic.
GradientField extend_gradient(const GradientField& v, const SimplicialComplex& k);

/// Pairs with both cells in `sub`.
GradientField restrict_gradient(const GradientField& v, const Hypergraph& sub);

/// An integer-valued Morse function on k with grad f = v and exactly the
/// unpaired cells critical: f(x) is the length of the longest path leaving x
/// in the modified Hasse digraph. Throws ValidationError unless v is proper and
/// acyclic on the simplicial complex k.
MorseFunction function_from_gradient(const SimplicialComplex& k, const GradientField& v);

/// Matrix of V : C_n(K) -> C_{n+1}(K) in the index's bases.
ExactMatrix gradient_matrix(const GradientField& v, const CellIndex& index, int n, const Ring& ring);

/// Which of the three cases describing σ ∈ M(f,H) \ (M(f̄,K) ∩ H) hold for σ,
/// with v̄ = grad f̄ on K and H ⊆ K sharing K's vertex table. Bit 0 = (a),
/// bit 1 = (b), bit 2 = (c).
unsigned critical_shift_cases(const GradientField& vbar, const Hypergraph& h, const Cell& sigma);

}  // namespace hypermorse
