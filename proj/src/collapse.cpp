#include "hypermorse/collapse.hpp"

#include "hypermorse/errors.hpp"

#include <algorithm>
#include <set>

namespace hypermorse {

namespace {

std::string braces(const Hypergraph& h, const Cell& c) { return "{" + h.label(c) + "}"; }

Hypergraph without(const Hypergraph& h, const std::vector<Cell>& drop) {
    std::vector<Cell> keep;
    for (const auto& c : h.cells())
        if (std::find(drop.begin(), drop.end(), c) == drop.end()) keep.push_back(c);
    return Hypergraph(h.table_ptr(), std::move(keep));
}

std::vector<Cell> difference(const std::vector<Cell>& big, const std::vector<Cell>& small) {
    std::vector<Cell> out;
    std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(out));
    return out;
}

bool all_proper_subsets_in(const Hypergraph& h, const Cell& tau) {
    for (const auto& s : tau.subsets())
        if (s != tau && !h.contains(s)) return false;
    return true;
}

}  // namespace

std::optional<std::string> collapse_obstruction(const Hypergraph& h, const CollapseStep& step) {
    const auto& [sigma, tau] = step;
    if (!h.contains(sigma)) return braces(h, sigma) + " is not a hyperedge";
    if (!h.contains(tau)) return braces(h, tau) + " is not a hyperedge";
    if (sigma.dim() + 1 != tau.dim() || !sigma.is_subset_of(tau))
        return braces(h, sigma) + " is not a codimension-one face of " + braces(h, tau);
    for (const auto& c : h.cells())
        if (c != tau && sigma.is_proper_face_of(c))
            return "condition (1) fails: " + braces(h, sigma) + " also lies in " + braces(h, c);
    for (const auto& s : tau.subsets())
        if (s != tau && !h.contains(s))
            return "condition (2) fails: " + braces(h, s) + " is missing below " + braces(h, tau);
    return std::nullopt;
}

Hypergraph elementary_collapse(const Hypergraph& h, const CollapseStep& step) {
    if (auto why = collapse_obstruction(h, step)) throw ValidationError("illegal elementary collapse: " + *why);
    return without(h, {step.sigma, step.tau});
}

std::vector<CollapseStep> legal_collapses(const Hypergraph& h) {
    std::vector<CollapseStep> out;
    const auto& cells = h.cells();
    for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
        const Cell& tau = *it;
        if (tau.dim() < 1 || !all_proper_subsets_in(h, tau)) continue;
        for (const auto& sigma : tau.facets()) {
            bool free = true;
            for (const auto& c : cells)
                if (c != tau && sigma.is_proper_face_of(c)) {
                    free = false;
                    break;
                }
            if (free) out.push_back({sigma, tau});
        }
    }
    std::sort(out.begin(), out.end(), [](const CollapseStep& x, const CollapseStep& y) {
        if (x.tau.dim() != y.tau.dim()) return x.tau.dim() > y.tau.dim();
        if (x.tau != y.tau) return x.tau < y.tau;
        return x.sigma < y.sigma;
    });
    return out;
}

std::vector<CollapseStep> find_collapse_sequence(const Hypergraph& h, std::size_t budget) {
    std::vector<CollapseStep> seq;
    Hypergraph cur = h;
    while (seq.size() < budget) {
        auto steps = legal_collapses(cur);
        if (steps.empty()) break;
        cur = elementary_collapse(cur, steps.front());
        seq.push_back(steps.front());
    }
    return seq;
}

CollapseInvariance verify_collapse_invariance(const Hypergraph& h, const std::vector<CollapseStep>& steps, const Ring& ring) {
    CollapseInvariance rep;
    rep.ring = ring;
    rep.steps = steps;
    Hypergraph cur = h;
    rep.cell_counts.push_back(cur.size());
    for (const auto& step : steps) {
        Hypergraph next = elementary_collapse(cur, step);
        // both closures lose exactly the pair
        auto up_before = associated_complex(cur).cells(), up_after = associated_complex(next).cells();
        auto lo_before = lower_complex(cur).cells(), lo_after = lower_complex(next).cells();
        std::vector<Cell> pair{step.sigma, step.tau};
        std::sort(pair.begin(), pair.end());
        if (difference(up_before, up_after) != pair || difference(lo_before, lo_after) != pair) rep.cellwise = false;
        if (!std::includes(up_before.begin(), up_before.end(), up_after.begin(), up_after.end()) ||
            !std::includes(lo_before.begin(), lo_before.end(), lo_after.begin(), lo_after.end()))
            rep.cellwise = false;
        cur = std::move(next);
        rep.cell_counts.push_back(cur.size());
    }
    auto s0 = h.support(), s1 = cur.support();
    for (Vertex v : s0)
        if (!std::binary_search(s1.begin(), s1.end(), v)) rep.dropped_vertices.push_back(h.table().name(v));

    rep.before = embedded_homology(h, ring);
    rep.after = embedded_homology(cur, ring);
    rep.before_upper = simplicial_homology(associated_complex(h), ring);
    rep.after_upper = simplicial_homology(associated_complex(cur), ring);
    rep.before_lower = simplicial_homology(lower_complex(h), ring);
    rep.after_lower = simplicial_homology(lower_complex(cur), ring);
    rep.final = std::move(cur);
    return rep;
}

// ---------------------------------------------------------------------------

LevelHypergraph level_hypergraph(const Hypergraph& h, const MorseFunction& f, const Scalar& c) {
    std::vector<Cell> cells;
    for (const auto& s : h.cells())
        if (f(s) <= c) cells.push_back(s);
    Hypergraph level(h.table_ptr(), std::move(cells));
    return {c, level, associated_complex(level), lower_complex(level)};
}

SimplicialComplex sublevel_complex(const MorseFunction& f, const Scalar& c) {
    std::set<Cell> all;
    for (const auto& [s, v] : f.values())
        if (v <= c)
            for (auto& t : s.subsets()) all.insert(std::move(t));
    return SimplicialComplex(Hypergraph(f.domain().table_ptr(), {all.begin(), all.end()}));
}

SimplicialComplex closure_of_maximal(const Hypergraph& h) {
    std::set<Cell> all;
    for (const auto& m : h.maximal_cells())
        for (auto& t : m.subsets()) all.insert(std::move(t));
    return SimplicialComplex(Hypergraph(h.table_ptr(), {all.begin(), all.end()}));
}

namespace {

// Depth-first search for a collapse sequence from `start` down to `target`
// using only steps inside `allowed`.
bool search_collapse(const Hypergraph& start, const Hypergraph& target, const std::set<Cell>& allowed,
                     std::size_t budget, std::vector<CollapseStep>& out) {
    std::set<std::vector<Cell>> dead;
    std::size_t visited = 0;
    auto go = [&](auto&& self, const Hypergraph& cur) -> bool {
        if (cur.cells() == target.cells()) return true;
        if (dead.count(cur.cells()) || ++visited > budget) return false;
        for (const auto& step : legal_collapses(cur)) {
            if (!allowed.count(step.sigma) || !allowed.count(step.tau)) continue;
            out.push_back(step);
            if (self(self, without(cur, {step.sigma, step.tau}))) return true;
            out.pop_back();
        }
        dead.insert(cur.cells());
        return false;
    };
    return go(go, start);
}

}  // namespace

LevelCollapseReport level_collapse_check(const AmbientChoice& ambient, const MorseFunction& fbar, const Scalar& a,
                                         const Scalar& b, std::size_t budget) {
    const Hypergraph& h = ambient.hypergraph();
    if (fbar.domain().cells() != ambient.complex().cells())
        throw ValidationError("Morse function must be defined on the ambient complex");
    MorseFunction f = restrict_function(fbar, h);

    LevelCollapseReport rep;
    rep.a = a;
    rep.b = b;
    for (const auto& v : critical_values(fbar))
        if (a <= v && v <= b) rep.critical_values_in_interval.push_back(v);

    LevelHypergraph la = level_hypergraph(h, f, a), lb = level_hypergraph(h, f, b);
    rep.diff_h = difference(lb.cells.cells(), la.cells.cells());
    rep.diff_upper = difference(lb.associated.cells(), la.associated.cells());
    rep.diff_lower = difference(lb.lower.cells(), la.lower.cells());
    rep.differences_equal = rep.diff_h == rep.diff_upper && rep.diff_h == rep.diff_lower;

    rep.upper_matches_sublevel_a = la.associated.cells() == sublevel_complex(fbar, a).cells();
    rep.upper_matches_sublevel_b = lb.associated.cells() == sublevel_complex(fbar, b).cells();
    const Hypergraph lower_h = lower_complex(h).hypergraph();
    auto lower_sublevel = [&](const Scalar& c) {
        std::set<Cell> all;
        for (const auto& s : lower_h.cells())
            if (fbar(s) <= c)
                for (auto& t : s.subsets()) all.insert(std::move(t));
        return std::vector<Cell>(all.begin(), all.end());
    };
    auto contained = [](const std::vector<Cell>& small, const std::vector<Cell>& big) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    rep.lower_contained_a = contained(la.lower.cells(), lower_sublevel(a));
    rep.lower_contained_b = contained(lb.lower.cells(), lower_sublevel(b));

    rep.hypotheses_hold = a < b && rep.critical_values_in_interval.empty() && rep.differences_equal;
    if (rep.hypotheses_hold) {
        std::set<Cell> allowed(rep.diff_h.begin(), rep.diff_h.end());
        rep.collapsed = search_collapse(lb.cells, la.cells, allowed, budget, rep.sequence);
        if (!rep.collapsed) rep.sequence.clear();
    }
    return rep;
}

}  // namespace hypermorse
