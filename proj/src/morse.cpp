#include "hypermorse/morse.hpp"

#include "hypermorse/errors.hpp"

#include <algorithm>
#include <set>

namespace hypermorse {

namespace {

std::string braces(const Hypergraph& h, const Cell& c) { return "{" + h.label(c) + "}"; }

// Cofaces of codimension one that belong to the domain.
std::vector<Cell> cofaces_in(const Hypergraph& h, const Cell& c) {
    std::vector<Cell> out;
    for (Vertex v : h.support()) {
        if (c.contains(v)) continue;
        auto vs = c.vertices();
        vs.push_back(v);
        Cell up(std::move(vs));
        if (h.contains(up)) out.push_back(std::move(up));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cell> faces_in(const Hypergraph& h, const Cell& c) {
    std::vector<Cell> out;
    for (auto& f : c.facets())
        if (h.contains(f)) out.push_back(std::move(f));
    return out;
}

// Adjacency of the modified Hasse digraph over the domain's cells.
std::map<Cell, std::vector<Cell>> hasse_edges(const GradientField& v) {
    std::set<GradientPair> pairs(v.pairs().begin(), v.pairs().end());
    std::map<Cell, std::vector<Cell>> adj;
    for (const auto& beta : v.domain().cells()) {
        adj[beta];
        for (const auto& alpha : faces_in(v.domain(), beta)) {
            if (pairs.count({alpha, beta})) adj[alpha].push_back(beta);
            else adj[beta].push_back(alpha);
        }
    }
    return adj;
}

template <class Adj>
bool has_cycle(const Adj& adj) {
    // iterative three-colour DFS
    std::map<Cell, int> colour;
    for (const auto& [start, _] : adj) {
        if (colour[start] != 0) continue;
        std::vector<std::pair<Cell, std::size_t>> stack{{start, 0}};
        colour[start] = 1;
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            auto it = adj.find(node);
            if (it == adj.end() || next >= it->second.size()) {
                colour[node] = 2;
                stack.pop_back();
                continue;
            }
            const Cell& to = it->second[next++];
            int& c = colour[to];
            if (c == 1) return true;
            if (c == 0) {
                c = 1;
                stack.emplace_back(to, 0);
            }
        }
    }
    return false;
}

}  // namespace

const Scalar& MorseFunction::operator()(const Cell& c) const {
    auto it = values_.find(c);
    if (it == values_.end()) throw ValidationError("no Morse value for " + braces(domain_, c));
    return it->second;
}

MorseCheck check_morse_function(const Hypergraph& domain, CellValues raw) {
    for (const auto& [c, _] : raw)
        if (!domain.contains(c)) throw ValidationError("Morse value given for " + braces(domain, c) + ", which is not a cell");
    std::vector<std::string> missing;
    for (const auto& c : domain.cells())
        if (!raw.count(c)) missing.push_back(braces(domain, c));
    if (!missing.empty()) throw ValidationError("Morse function is not defined on every cell", missing);

    MorseCheck out;
    for (const auto& alpha : domain.cells()) {
        CellConditions cc{alpha, {}, {}};
        const Scalar& fa = raw.at(alpha);
        for (auto& beta : cofaces_in(domain, alpha))
            if (raw.at(beta) <= fa) cc.low_cofaces.push_back(std::move(beta));
        for (auto& gamma : faces_in(domain, alpha))
            if (raw.at(gamma) >= fa) cc.high_faces.push_back(std::move(gamma));
        auto list = [&](const std::vector<Cell>& cs) {
            std::string s;
            for (const auto& c : cs) s += (s.empty() ? "" : ", ") + braces(domain, c);
            return s;
        };
        if (cc.low_cofaces.size() > 1)
            out.diagnostics.push_back(braces(domain, alpha) + ": " + std::to_string(cc.low_cofaces.size()) +
                                      " cofaces with value <= " + to_string(fa) + ": " + list(cc.low_cofaces));
        if (cc.high_faces.size() > 1)
            out.diagnostics.push_back(braces(domain, alpha) + ": " + std::to_string(cc.high_faces.size()) +
                                      " faces with value >= " + to_string(fa) + ": " + list(cc.high_faces));
        if (cc.condition_a() && cc.condition_b()) out.both_a_and_b.push_back(alpha);
        out.cells.push_back(std::move(cc));
    }
    out.valid = out.diagnostics.empty();
    if (out.valid) out.function = MorseFunction(domain, std::move(raw));
    return out;
}

MorseFunction validate_morse_function(const Hypergraph& domain, CellValues raw) {
    auto check = check_morse_function(domain, std::move(raw));
    if (!check.valid) throw ValidationError("not a discrete Morse function", check.diagnostics);
    return std::move(*check.function);
}

MorseFunction dimension_function(const Hypergraph& domain) {
    CellValues v;
    for (const auto& c : domain.cells()) v.emplace(c, Scalar(c.dim()));
    return validate_morse_function(domain, std::move(v));
}

MorseFunction restrict_function(const MorseFunction& f, const Hypergraph& sub) {
    CellValues v;
    for (const auto& c : sub.cells()) v.emplace(c, f(c));
    return validate_morse_function(sub, std::move(v));
}

std::vector<Cell> critical_cells(const MorseCheck& check) {
    std::vector<Cell> out;
    for (const auto& cc : check.cells)
        if (cc.critical()) out.push_back(cc.cell);
    return out;
}

std::vector<Cell> critical_cells(const MorseFunction& f) {
    return critical_cells(check_morse_function(f.domain(), f.values()));
}

std::vector<Scalar> critical_values(const MorseFunction& f) {
    std::set<Scalar> vals;
    for (const auto& c : critical_cells(f)) vals.insert(f(c));
    return {vals.begin(), vals.end()};
}

// ---------------------------------------------------------------------------

GradientField::GradientField(Hypergraph d, std::vector<GradientPair> p, bool acyclic, bool proper)
    : domain_(std::move(d)), pairs_(std::move(p)), acyclic_(acyclic), proper_(proper) {
    for (const auto& [a, b] : pairs_) {
        up_.emplace(a, b);
        down_.emplace(b, a);
    }
}

std::optional<Cell> GradientField::up(const Cell& alpha) const {
    auto it = up_.find(alpha);
    if (it == up_.end()) return std::nullopt;
    return it->second;
}

std::optional<Cell> GradientField::down(const Cell& beta) const {
    auto it = down_.find(beta);
    if (it == down_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<Cell, int>> GradientField::apply(const Cell& sigma) const {
    std::vector<std::pair<Cell, int>> out;
    for (const auto& [a, b] : pairs_)
        if (a == sigma) out.emplace_back(b, -b.incidence(a));
    return out;
}

GradientField validate_gradient_field(const Hypergraph& domain, std::vector<GradientPair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [a, b] = pairs[i];
        const std::string what = "(" + braces(domain, a) + ", " + braces(domain, b) + ")";
        if (i > 0 && pairs[i - 1] == pairs[i]) bad.push_back(what + " listed twice");
        if (a.dim() + 1 != b.dim() || !a.is_subset_of(b)) bad.push_back(what + " is not a codimension-one face pair");
        if (!domain.contains(a) || !domain.contains(b)) bad.push_back(what + " uses a cell outside the domain");
    }
    if (!bad.empty()) throw ValidationError("malformed gradient pairs", bad);

    std::map<Cell, int> uses;
    for (const auto& [a, b] : pairs) {
        ++uses[a];
        ++uses[b];
    }
    bool proper = std::all_of(uses.begin(), uses.end(), [](const auto& kv) { return kv.second <= 1; });
    GradientField v(domain, std::move(pairs), true, proper);
    v.acyclic_ = !hasse_has_cycle(v);
    return v;
}

GradientField gradient_from_function(const MorseFunction& f) {
    std::vector<GradientPair> pairs;
    for (const auto& alpha : f.domain().cells())
        for (const auto& beta : cofaces_in(f.domain(), alpha))
            if (f(beta) <= f(alpha)) pairs.push_back({alpha, beta});
    return validate_gradient_field(f.domain(), std::move(pairs));
}

bool hasse_has_cycle(const GradientField& v) { return has_cycle(hasse_edges(v)); }

bool has_closed_v_path(const GradientField& v) {
    std::set<Cell> tails;
    for (const auto& p : v.pairs()) tails.insert(p.alpha);
    std::map<Cell, std::vector<Cell>> adj;
    for (const auto& [a, b] : v.pairs()) {
        auto& out = adj[a];
        for (const auto& next : faces_in(v.domain(), b))
            if (next != a && tails.count(next)) out.push_back(next);
    }
    return has_cycle(adj);
}

GradientField extend_gradient(const GradientField& v, const SimplicialComplex& k) {
    if (!v.proper()) throw ValidationError("gradient field is not proper; it cannot be extended");
    if (!v.acyclic()) throw ValidationError("gradient field has a closed path; it cannot be extended");
    std::vector<GradientPair> pairs;
    for (const auto& [a, b] : v.pairs())
        pairs.push_back({rebase(a, v.domain().table(), k.table()), rebase(b, v.domain().table(), k.table())});
    GradientField out = validate_gradient_field(k.hypergraph(), std::move(pairs));
    if (!out.proper() || !out.acyclic()) throw InternalError("extended gradient field lost properness or acyclicity");
    return out;
}

GradientField restrict_gradient(const GradientField& v, const Hypergraph& sub) {
    std::vector<GradientPair> pairs;
    for (const auto& p : v.pairs())
        if (sub.contains(p.alpha) && sub.contains(p.beta)) pairs.push_back(p);
    return validate_gradient_field(sub, std::move(pairs));
}

MorseFunction function_from_gradient(const SimplicialComplex& k, const GradientField& v) {
    if (!v.proper()) throw ValidationError("gradient field is not proper");
    for (const auto& [a, b] : v.pairs())
        if (!k.contains(a) || !k.contains(b)) throw ValidationError("gradient pair outside the complex");
    GradientField on_k = validate_gradient_field(k.hypergraph(), v.pairs());
    if (!on_k.acyclic()) throw ValidationError("gradient field has a closed path");

    auto adj = hasse_edges(on_k);
    // reverse postorder DFS gives a topological order; longest paths fill in backwards
    std::vector<Cell> order;
    std::set<Cell> seen;
    for (const auto& [start, _] : adj) {
        if (seen.count(start)) continue;
        std::vector<std::pair<Cell, std::size_t>> stack{{start, 0}};
        seen.insert(start);
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            const auto& out = adj.at(node);
            if (next >= out.size()) {
                order.push_back(node);
                stack.pop_back();
                continue;
            }
            const Cell& to = out[next++];
            if (seen.insert(to).second) stack.emplace_back(to, 0);
        }
    }
    CellValues values;
    for (const auto& x : order) {  // postorder: successors first
        long best = 0;
        for (const auto& y : adj.at(x)) best = std::max(best, values.at(y).get_num().get_si() + 1);
        values.emplace(x, Scalar(best));
    }
    MorseFunction f = validate_morse_function(k.hypergraph(), std::move(values));
    if (gradient_from_function(f).pairs() != on_k.pairs()) throw InternalError("constructed Morse function has the wrong gradient");
    return f;
}

ExactMatrix gradient_matrix(const GradientField& v, const CellIndex& index, int n, const Ring& ring) {
    ExactMatrix m(ring, index.count(n + 1), index.count(n));
    for (const auto& [a, b] : v.pairs()) {
        if (a.dim() != n) continue;
        auto col = index.position(a), row = index.position(b);
        if (!col || !row) throw InternalError("gradient pair outside the indexed complex");
        m.set(*row, *col, m(*row, *col) - b.incidence(a));
    }
    return m;
}

unsigned critical_shift_cases(const GradientField& vbar, const Hypergraph& h, const Cell& sigma) {
    auto head = vbar.up(sigma);    // V̄(σ) = ±head
    auto tail = vbar.down(sigma);  // V̄(tail) = ±σ
    const bool head_outside = head && !h.contains(*head);
    const bool tail_outside = tail && !h.contains(*tail);
    unsigned cases = 0;
    if (head_outside && !tail) cases |= 1u;
    if (head_outside && tail_outside) cases |= 2u;
    if (!head && tail_outside) cases |= 4u;
    return cases;
}

}  // namespace hypermorse
