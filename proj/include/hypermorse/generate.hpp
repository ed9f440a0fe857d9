#pragma once

#include "hypermorse/collapse.hpp"
#include "hypermorse/morse.hpp"

#include <cstdint>
#include <random>

namespace hypermorse {

/// Seeded generator with a platform-independent bounded draw (the standard
/// distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template <class T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// Labels v0 .. v{n-1}.
std::vector<std::string> default_labels(std::size_t n);

/// `edges` distinct hyperedges of size <= max_size on `vertices` vertices.
/// Vertices no hyperedge covers are left out of the label list. Throws
/// ValidationError when more edges are requested than exist.
Hypergraph random_hypergraph(Rng& rng, std::size_t vertices, std::size_t edges, std::size_t max_size = 4);

/// Adds missing middle cells until condition (C) holds (stays inside ΔH).
Hypergraph repair_condition_c(const Hypergraph& h);

/// Random proper acyclic gradient field on k. With `within` set, only pairs
/// with both cells in that hypergraph are used.
GradientField random_gradient(Rng& rng, const SimplicialComplex& k, const Hypergraph* within = nullptr);

/// Random Morse function on the complex k (longest-path values of a random
/// gradient, then a random increasing rational rescale).
MorseFunction random_morse_on_complex(Rng& rng, const SimplicialComplex& k, const Hypergraph* within = nullptr);

/// Random Morse function on h: the restriction of a Morse function on ΔH
/// whose gradient pairs lie in h.
MorseFunction random_morse_on_hypergraph(Rng& rng, const Hypergraph& h);

/// A hypergraph built from `base` by `insertions` inverse elementary
/// collapses, with the witness sequence that collapses it back to `base`.
struct CollapsibleInstance {
    Hypergraph base;
    Hypergraph h;
    std::vector<CollapseStep> witness;
};

/// Candidate vertex labels come from `base`'s table; the table must be large
/// enough to admit new vertices (unused labels are available).
CollapsibleInstance inverse_collapse(Rng& rng, const Hypergraph& base, std::size_t insertions);

/// Random collapsible instance on up to `vertices` labels.
CollapsibleInstance random_collapsible(Rng& rng, std::size_t vertices, std::size_t base_edges, std::size_t insertions);

/// A level-collapse instance: H = H_a plus inserted pairs, f̄ on ΔH with the
/// inserted pairs as gradient pairs valued inside (a, b).
struct LevelInstance {
    CollapsibleInstance collapsible;
    MorseFunction fbar;
    Scalar a, b;
};

LevelInstance random_level_instance(Rng& rng, std::size_t vertices, std::size_t base_edges, std::size_t insertions);

}  // namespace hypermorse
