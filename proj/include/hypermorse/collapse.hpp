#pragma once

#include "hypermorse/embedded.hpp"
#include "hypermorse/morse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypermorse {

struct CollapseStep {
    Cell sigma;  // dim n
    Cell tau;    // dim n+1

    friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

/// Why (σ, τ) is not an elementary collapse of h, or nullopt if it is.
std::optional<std::string> collapse_obstruction(const Hypergraph& h, const CollapseStep& step);

/// h ∖ {σ, τ}. Throws ValidationError with the obstruction when illegal.
/// Vertices left uncovered drop out of the support; the label table is kept.
Hypergraph elementary_collapse(const Hypergraph& h, const CollapseStep& step);

/// Every legal step, ordered by (dim τ descending, τ, σ).
std::vector<CollapseStep> legal_collapses(const Hypergraph& h);

/// Greedy maximal sequence: repeatedly take the first legal step. Stops
/// after `budget` steps.
std::vector<CollapseStep> find_collapse_sequence(const Hypergraph& h, std::size_t budget = 100000);

struct CollapseInvariance {
    Ring ring = Ring::integers();
    std::vector<CollapseStep> steps;
    std::vector<std::size_t> cell_counts;  // per stage, starting with h
    std::vector<std::string> dropped_vertices;
    Hypergraph final;
    HomologyResult before, after;                  // embedded
    HomologyResult before_upper, after_upper;      // ΔH
    HomologyResult before_lower, after_lower;      // δH
    /// Each step also removes exactly {σ, τ} from ΔH and from δH.
    bool cellwise = true;

    bool embedded_preserved() const { return same_homology(before, after); }
    bool upper_preserved() const { return same_homology(before_upper, after_upper); }
    bool lower_preserved() const { return same_homology(before_lower, after_lower); }
    bool all_preserved() const { return embedded_preserved() && upper_preserved() && lower_preserved() && cellwise; }
};

/// Replays `steps` (ValidationError on an illegal step) and compares the
/// embedded, Δ- and δ-homology of the first and last stage.
CollapseInvariance verify_collapse_invariance(const Hypergraph& h, const std::vector<CollapseStep>& steps, const Ring& ring);

/// H[c] = hyperedges with f <= c.
struct LevelHypergraph {
    Scalar c;
    Hypergraph cells;
    SimplicialComplex associated;  // Δ(H[c])
    SimplicialComplex lower;       // δ(H[c])
};

LevelHypergraph level_hypergraph(const Hypergraph& h, const MorseFunction& f, const Scalar& c);

/// Forman's sublevel complex: every face of a cell with value <= c.
SimplicialComplex sublevel_complex(const MorseFunction& f, const Scalar& c);
/// Union of the closures of the maximal cells of `h`.
SimplicialComplex closure_of_maximal(const Hypergraph& h);

struct LevelCollapseReport {
    Scalar a, b;
    std::vector<Scalar> critical_values_in_interval;
    std::vector<Cell> diff_h, diff_upper, diff_lower;  // H[b]∖H[a], Δ(H[b])∖Δ(H[a]), δ(H[b])∖δ(H[a])
    bool differences_equal = false;
    bool hypotheses_hold = false;
    bool collapsed = false;
    std::vector<CollapseStep> sequence;
    /// Δ(H[c]) equals the sublevel complex of f̄ at c = a and at c = b.
    bool upper_matches_sublevel_a = false, upper_matches_sublevel_b = false;
    /// δ(H[c]) ⊆ (δH)(c) at c = a and c = b.
    bool lower_contained_a = false, lower_contained_b = false;
};

/// f̄ lives on the ambient complex; H is taken from `ambient`. When the
/// hypotheses hold, a collapse sequence from H[b] to H[a] using only cells of
/// the difference is searched for exhaustively (up to `budget` visited states).
LevelCollapseReport level_collapse_check(const AmbientChoice& ambient, const MorseFunction& fbar, const Scalar& a,
                                         const Scalar& b, std::size_t budget = 200000);

}  // namespace hypermorse
