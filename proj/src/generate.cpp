#include "hypermorse/generate.hpp"

#include "hypermorse/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>

namespace hypermorse {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw InternalError("empty range for a random draw");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % n;
}

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
    return out;
}

namespace {

Cell cell_of_mask(std::uint32_t mask) {
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < 32; ++v)
        if (mask & (1u << v)) vs.push_back(v);
    return Cell(std::move(vs));
}

// Increasing positive rescale keeps every comparison, hence the gradient.
MorseFunction rescale(Rng& rng, const MorseFunction& f) {
    const Scalar s(static_cast<long>(rng.below(3) + 1), static_cast<long>(rng.below(3) + 1));
    const Scalar t(static_cast<long>(rng.below(7)) - 3);
    CellValues v;
    for (const auto& [c, x] : f.values()) {
        Scalar y = x * s + t;
        y.canonicalize();
        v.emplace(c, y);
    }
    return validate_morse_function(f.domain(), std::move(v));
}

}  // namespace

Hypergraph random_hypergraph(Rng& rng, std::size_t vertices, std::size_t edges, std::size_t max_size) {
    if (vertices == 0) throw ValidationError("need at least one vertex");
    if (vertices > 24) throw ValidationError("random hypergraphs support at most 24 vertices");
    if (max_size == 0) throw ValidationError("hyperedge size bound must be positive");
    const std::size_t top = std::min(max_size, vertices);
    std::vector<std::vector<std::uint32_t>> by_size(top + 1);
    for (std::uint32_t mask = 1; mask < (1u << vertices); ++mask) {
        auto s = static_cast<std::size_t>(std::popcount(mask));
        if (s <= top) by_size[s].push_back(mask);
    }
    std::size_t available = 0;
    for (const auto& b : by_size) available += b.size();
    if (edges > available)
        throw ValidationError("cannot place " + std::to_string(edges) + " distinct hyperedges; only " +
                              std::to_string(available) + " exist");
    if (edges == 0) throw ValidationError("need at least one hyperedge");

    std::vector<std::uint32_t> chosen;
    while (chosen.size() < edges) {
        std::vector<std::size_t> sizes;
        for (std::size_t s = 1; s <= top; ++s)
            if (!by_size[s].empty()) sizes.push_back(s);
        auto& bucket = by_size[sizes[rng.below(sizes.size())]];
        std::size_t i = rng.below(bucket.size());
        chosen.push_back(bucket[i]);
        bucket.erase(bucket.begin() + static_cast<std::ptrdiff_t>(i));
    }
    std::uint32_t covered = 0;
    for (auto m : chosen) covered |= m;
    auto all = default_labels(vertices);
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < vertices; ++v)
        if (covered & (1u << v)) labels.push_back(all[v]);
    std::vector<std::vector<std::string>> named;
    for (auto m : chosen) {
        std::vector<std::string> e;
        for (std::size_t v = 0; v < vertices; ++v)
            if (m & (1u << v)) e.push_back(all[v]);
        named.push_back(std::move(e));
    }
    return build_hypergraph(labels, named);
}

Hypergraph repair_condition_c(const Hypergraph& h) {
    Hypergraph cur = h;
    for (;;) {
        auto rep = check_condition_c(cur);
        if (rep.holds) return cur;
        std::set<Cell> cells(cur.cells().begin(), cur.cells().end());
        for (const auto& w : rep.witnesses)
            for (const auto& other : w.beta.facets())
                if (other != w.alpha && w.gamma.is_subset_of(other)) cells.insert(other);
        cur = Hypergraph(cur.table_ptr(), {cells.begin(), cells.end()});
    }
}

GradientField random_gradient(Rng& rng, const SimplicialComplex& k, const Hypergraph* within) {
    std::vector<GradientPair> candidates;
    for (const auto& beta : k.cells())
        for (const auto& alpha : beta.facets())
            if (!within || (within->contains(alpha) && within->contains(beta))) candidates.push_back({alpha, beta});
    rng.shuffle(candidates);
    std::vector<GradientPair> pairs;
    std::set<Cell> used;
    for (const auto& p : candidates) {
        if (used.count(p.alpha) || used.count(p.beta) || rng.chance(1, 4)) continue;
        pairs.push_back(p);
        if (validate_gradient_field(k.hypergraph(), pairs).acyclic()) {
            used.insert(p.alpha);
            used.insert(p.beta);
        } else {
            pairs.pop_back();
        }
    }
    return validate_gradient_field(k.hypergraph(), std::move(pairs));
}

MorseFunction random_morse_on_complex(Rng& rng, const SimplicialComplex& k, const Hypergraph* within) {
    return rescale(rng, function_from_gradient(k, random_gradient(rng, k, within)));
}

MorseFunction random_morse_on_hypergraph(Rng& rng, const Hypergraph& h) {
    SimplicialComplex k = associated_complex(h);
    MorseFunction fbar = function_from_gradient(k, random_gradient(rng, k, &h));
    return rescale(rng, restrict_function(fbar, h));
}

CollapsibleInstance inverse_collapse(Rng& rng, const Hypergraph& base, std::size_t insertions) {
    const std::size_t n = base.table().size();
    if (n > 16) throw ValidationError("inverse collapse generator supports at most 16 labels");
    CollapsibleInstance out{base, base, {}};
    std::vector<CollapseStep> inserted;
    for (std::size_t step = 0; step < insertions; ++step) {
        const Hypergraph& h = out.h;
        const SimplicialComplex closure = associated_complex(h);
        std::vector<CollapseStep> candidates;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            const int size = std::popcount(mask);
            if (size < 2 || size > 5) continue;
            Cell tau = cell_of_mask(mask);
            if (h.contains(tau)) continue;
            for (const auto& sigma : tau.facets()) {
                if (closure.contains(sigma)) continue;  // σ must be new and free
                bool ok = true;
                for (const auto& s : tau.subsets())
                    if (s != tau && s != sigma && !h.contains(s)) {
                        ok = false;
                        break;
                    }
                if (ok) candidates.push_back({sigma, tau});
            }
        }
        if (candidates.empty()) break;
        const CollapseStep pick = candidates[rng.below(candidates.size())];
        std::vector<Cell> cells = h.cells();
        cells.push_back(pick.sigma);
        cells.push_back(pick.tau);
        out.h = Hypergraph(h.table_ptr(), std::move(cells));
        inserted.push_back(pick);
    }
    out.witness.assign(inserted.rbegin(), inserted.rend());
    return out;
}

CollapsibleInstance random_collapsible(Rng& rng, std::size_t vertices, std::size_t base_edges, std::size_t insertions) {
    if (vertices < 2) throw ValidationError("collapsible instances need at least two vertices");
    const std::size_t base_vertices = std::max<std::size_t>(1, vertices - 2);
    Hypergraph small = random_hypergraph(rng, base_vertices, std::min<std::size_t>(base_edges, (1u << base_vertices) - 1));
    auto table = std::make_shared<const VertexTable>(default_labels(vertices));
    return inverse_collapse(rng, rebase(small, table), insertions);
}

LevelInstance random_level_instance(Rng& rng, std::size_t vertices, std::size_t base_edges, std::size_t insertions) {
    CollapsibleInstance ci = random_collapsible(rng, vertices, base_edges, insertions);
    SimplicialComplex ka = associated_complex(ci.base);
    MorseFunction fa = function_from_gradient(ka, random_gradient(rng, ka));
    Scalar top = 0;
    for (const auto& [c, v] : fa.values()) top = std::max(top, v);
    const Scalar start = top + 1;

    CellValues values = fa.values();
    const std::size_t k = ci.witness.size();
    for (std::size_t i = 0; i < k; ++i) {
        const CollapseStep& step = ci.witness[k - 1 - i];  // insertion order
        values[step.sigma] = start + static_cast<long>(i);
        values[step.tau] = start + static_cast<long>(i);
    }
    SimplicialComplex kb = associated_complex(ci.h);
    MorseFunction fbar = validate_morse_function(kb.hypergraph(), std::move(values));
    return {std::move(ci), std::move(fbar), start - Scalar(1, 2), start + static_cast<long>(k)};
}

}  // namespace hypermorse
