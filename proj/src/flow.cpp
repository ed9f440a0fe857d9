#include "hypermorse/flow.hpp"

#include "hypermorse/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hypermorse {

namespace {

void check_stop(const std::stop_token& stop) {
    if (stop.stop_requested()) throw Cancelled();
}

std::size_t as_index(int n) { return static_cast<std::size_t>(n); }

// Zero matrix standing in for degrees the ambient does not have.
const ExactMatrix& degree_or_empty(const std::vector<ExactMatrix>& ms, int n, ExactMatrix& scratch) {
    if (n >= 0 && as_index(n) < ms.size()) return ms[as_index(n)];
    return scratch;
}

ChainSpace in_critical_coordinates(const ChainSpace& s, const std::vector<std::size_t>& positions) {
    return ChainSpace::span(s.basis().select_rows(positions));
}

}  // namespace

std::vector<Cell> FlowOperator::critical(int n) const {
    std::vector<Cell> out;
    for (const auto& c : index.cells(n))
        if (!field.is_paired(c)) out.push_back(c);
    return out;
}

std::vector<std::size_t> FlowOperator::critical_positions(int n) const {
    std::vector<std::size_t> out;
    const auto& cells = index.cells(n);
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (!field.is_paired(cells[i])) out.push_back(i);
    return out;
}

FlowOperator build_flow(const SimplicialComplex& k, const GradientField& v, const Ring& ring, std::stop_token stop) {
    if (!v.proper()) throw ValidationError("gradient field is not proper");
    GradientField on_k = validate_gradient_field(k.hypergraph(), v.pairs());
    if (!on_k.acyclic()) throw ValidationError("gradient field has a closed path");

    FlowOperator flow;
    flow.ring = ring;
    flow.index = CellIndex(k);
    flow.field = std::move(on_k);
    const int top = k.max_dim();
    flow.boundary = boundary_matrices(flow.index, top + 1, ring);
    for (int n = 0; n <= top; ++n) flow.v.push_back(gradient_matrix(flow.field, flow.index, n, ring));

    for (int n = 0; n <= top; ++n) {
        const std::size_t dim = flow.index.count(n);
        ExactMatrix phi = ExactMatrix::identity(ring, dim) + flow.boundary[as_index(n + 1)] * flow.v[as_index(n)];
        if (n > 0) phi = phi + flow.v[as_index(n - 1)] * flow.boundary[as_index(n)];
        flow.phi.push_back(std::move(phi));
    }

    // Φ^N for the first N with Φ^N Φ = Φ^N
    const std::size_t cap = k.cells().size() + 1;
    std::size_t exponent = 1;
    for (int n = 0; n <= top; ++n) {
        const ExactMatrix& phi = flow.phi[as_index(n)];
        ExactMatrix power = phi;
        std::size_t N = 1;
        for (;;) {
            check_stop(stop);
            ExactMatrix next = power * phi;
            if (next == power) break;
            if (++N > cap) throw InternalError("discrete gradient flow did not stabilize in degree " + std::to_string(n));
            power = std::move(next);
        }
        exponent = std::max(exponent, N);
        flow.phi_inf.push_back(std::move(power));
    }
    flow.stabilization_exponent = exponent;
    return flow;
}

std::vector<ChainSpace> invariant_chains(const FlowOperator& flow) {
    std::vector<ChainSpace> out;
    for (int n = 0; n <= flow.top(); ++n) {
        const auto& phi = flow.phi[as_index(n)];
        ChainSpace fixed = kernel_of(phi - ExactMatrix::identity(flow.ring, phi.rows()));
        if (!(fixed == ChainSpace::span(flow.phi_inf[as_index(n)])))
            throw InternalError("invariant chains differ from the image of the stabilized flow in degree " + std::to_string(n));
        out.push_back(std::move(fixed));
    }
    return out;
}

MorseComplex morse_boundary(const FlowOperator& flow) {
    MorseComplex mc;
    for (int n = 0; n <= flow.top(); ++n) {
        mc.critical.push_back(flow.critical(n));
        auto cols = flow.critical_positions(n);
        if (n == 0) {
            mc.reduced.emplace_back(flow.ring, 0, cols.size());
            continue;
        }
        auto rows = flow.critical_positions(n - 1);
        ExactMatrix full = flow.boundary[as_index(n)] * flow.phi_inf[as_index(n)];
        mc.reduced.push_back(full.select_rows(rows).select_cols(cols));
    }
    for (std::size_t n = 2; n < mc.reduced.size(); ++n)
        if (!(mc.reduced[n - 1] * mc.reduced[n]).is_zero())
            throw InternalError("reduced boundary does not square to zero in degree " + std::to_string(n));
    return mc;
}

MorseComplex morse_boundary_via_paths(const FlowOperator& flow) {
    const Ring& ring = flow.ring;
    MorseComplex mc;
    for (int n = 0; n <= flow.top(); ++n) {
        mc.critical.push_back(flow.critical(n));
        const auto& crit = mc.critical.back();
        if (n == 0) {
            mc.reduced.emplace_back(ring, 0, crit.size());
            continue;
        }
        const auto& below = mc.critical[as_index(n - 1)];
        std::map<Cell, std::size_t> row_of;
        for (std::size_t i = 0; i < below.size(); ++i) row_of.emplace(below[i], i);

        // total signed multiplicity of gradient paths from a to each critical (n-1)-cell
        std::map<Cell, std::vector<Scalar>> memo;
        auto reach = [&](auto&& self, const Cell& a) -> const std::vector<Scalar>& {
            if (auto it = memo.find(a); it != memo.end()) return it->second;
            std::vector<Scalar> acc(below.size());
            if (auto r = row_of.find(a); r != row_of.end()) {
                acc[r->second] = 1;
            } else if (auto b = flow.field.up(a)) {
                for (const auto& next : b->facets()) {
                    if (next == a) continue;
                    const Scalar step = -Scalar(b->incidence(a) * b->incidence(next));
                    const auto& sub = self(self, next);
                    for (std::size_t i = 0; i < acc.size(); ++i)
                        if (sub[i] != 0) acc[i] = ring.add(acc[i], ring.mul(step, sub[i]));
                }
            }
            return memo.emplace(a, std::move(acc)).first->second;
        };

        ExactMatrix d(ring, below.size(), crit.size());
        for (std::size_t j = 0; j < crit.size(); ++j) {
            for (const auto& face : crit[j].facets()) {
                const Scalar sign(crit[j].incidence(face));
                const auto& contrib = reach(reach, face);
                for (std::size_t i = 0; i < contrib.size(); ++i)
                    if (contrib[i] != 0) d.set(i, j, d(i, j) + sign * contrib[i]);
            }
        }
        mc.reduced.push_back(std::move(d));
    }
    return mc;
}

bool projection_inverts_flow(const FlowOperator& flow) {
    for (int n = 0; n <= flow.top(); ++n) {
        auto m = flow.critical_positions(n);
        if (!(flow.phi_inf[as_index(n)].select_rows(m).select_cols(m) == ExactMatrix::identity(flow.ring, m.size())))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> ReducedComplex::ranks() const {
    std::vector<std::size_t> r;
    for (const auto& s : spaces) r.push_back(s.rank());
    return r;
}

HomologyResult ReducedComplex::homology(int report_top) const {
    if (violation) {
        std::ostringstream os;
        os << "reduced " << to_string(which) << " complex is not closed under the reduced boundary in degree "
           << violation->degree;
        throw InternalError(os.str());
    }
    HomologyResult h = homology_of_subcomplex(spaces, reduced);
    h.degrees.resize(std::min(h.degrees.size(), as_index(report_top + 1)));
    return h;
}

namespace {

// Degrees 0..top of the reduced complex on subspaces of R(M) (ambient coordinates).
ReducedComplex assemble(Method which, const FlowOperator& flow, const MorseComplex& mc,
                        const std::vector<ChainSpace>& ambient_spaces) {
    ReducedComplex out;
    out.which = which;
    for (std::size_t n = 0; n < ambient_spaces.size(); ++n) {
        const int deg = static_cast<int>(n);
        auto pos = flow.critical_positions(deg);
        out.spaces.push_back(in_critical_coordinates(ambient_spaces[n], pos));
        if (n < mc.reduced.size()) {
            out.reduced.push_back(mc.reduced[n]);
        } else {
            out.reduced.emplace_back(flow.ring, n == 0 ? 0 : flow.critical_positions(deg - 1).size(), pos.size());
        }
    }
    out.violation = find_closure_violation(out.spaces, out.reduced);
    return out;
}

ChainSpace critical_span(const FlowOperator& flow, int n) {
    return ChainSpace::coordinate(flow.ring, flow.index.count(n), flow.critical_positions(n));
}

}  // namespace

ReducedComplex reduced_embedded_complex(const AmbientChoice& ambient, const FlowOperator& flow,
                                        const MorseComplex& mc, Method which) {
    SubChainComplex x = embedded_complex(ambient, flow.ring, which);
    std::vector<ChainSpace> spaces;
    for (int n = 0; n <= x.top(); ++n) spaces.push_back(intersection(critical_span(flow, n), x.spaces[as_index(n)]));
    return assemble(which, flow, mc, spaces);
}

MorsePipeline embedded_homology_via_morse(const Hypergraph& h, const MorseFunction& g, const Ring& ring,
                                          const AmbientChoice& ambient, std::stop_token stop) {
    auto cc = check_condition_c(h);
    if (!cc.holds) {
        std::vector<std::string> w;
        for (const auto& t : cc.witnesses)
            w.push_back("({" + h.label(t.beta) + "}, {" + h.label(t.alpha) + "}, {" + h.label(t.gamma) + "})");
        throw ConditionCError("hypergraph violates condition (C)", w);
    }
    if (!(g.domain() == h)) throw ValidationError("Morse function is defined on a different hypergraph");

    MorsePipeline out;
    out.gradient = gradient_from_function(g);
    if (!out.gradient.proper() || !out.gradient.acyclic())
        throw InternalError("gradient of a Morse function on a condition (C) hypergraph is not proper and acyclic");
    const SimplicialComplex& k = ambient.complex();
    GradientField vbar = extend_gradient(out.gradient, k);
    out.fbar = function_from_gradient(k, vbar);
    out.flow = build_flow(k, vbar, ring, stop);
    out.complex = morse_boundary(out.flow);

    // M(g,H) in the ambient's vertex table
    const Hypergraph& hk = ambient.hypergraph();
    for (const auto& c : critical_cells(g)) out.critical_g.push_back(rebase(c, h.table(), k.table()));
    std::vector<Cell> restricted;
    for (const auto& c : critical_cells(out.fbar))
        if (hk.contains(c)) restricted.push_back(c);
    std::sort(out.critical_g.begin(), out.critical_g.end());
    out.critical_sets_match = restricted == out.critical_g;

    out.sup = reduced_embedded_complex(ambient, out.flow, out.complex, Method::sup);
    out.homology = out.sup.homology(reported_top(hk));

    // literal form on M(g,H)
    if (out.critical_sets_match) {
        std::vector<ChainSpace> lit;
        for (int n = 0; n <= processed_top(hk); ++n) {
            std::vector<Cell> cells;
            for (const auto& c : out.critical_g)
                if (c.dim() == n) cells.push_back(c);
            ChainSpace mg = ChainSpace::coordinate(ring, out.flow.index.count(n), out.flow.index.positions(cells));
            if (n > 0) {
                ExactMatrix scratch(ring, 0, 0);
                const ExactMatrix& d = degree_or_empty(out.flow.boundary, n, scratch);
                mg = intersection(mg, preimage_under(d, hyperedge_chains(ambient, n - 1, ring)));
            }
            lit.push_back(std::move(mg));
        }
        out.literal = assemble(Method::inf, out.flow, out.complex, lit);
        if (out.literal.closed()) {
            out.literal_homology = out.literal.homology(reported_top(hk));
            out.literal_agrees = same_homology(*out.literal_homology, out.homology);
        }
    }
    return out;
}

AmbientMorseReduction reduce_with_ambient_function(const AmbientChoice& ambient, const MorseFunction& fbar,
                                                   const Ring& ring, std::stop_token stop) {
    const SimplicialComplex& k = ambient.complex();
    if (fbar.domain().cells() != k.cells()) throw ValidationError("Morse function must be defined on the ambient complex");
    GradientField vbar = gradient_from_function(fbar);
    if (!vbar.proper() || !vbar.acyclic()) throw InternalError("gradient of a Morse function on a complex is not proper");
    AmbientMorseReduction out;
    out.flow = build_flow(k, vbar, ring, stop);
    out.complex = morse_boundary(out.flow);
    out.inf = reduced_embedded_complex(ambient, out.flow, out.complex, Method::inf);
    out.sup = reduced_embedded_complex(ambient, out.flow, out.complex, Method::sup);
    const int top = reported_top(ambient.hypergraph());
    if (out.inf.closed()) out.inf_homology = out.inf.homology(top);
    if (out.sup.closed()) out.sup_homology = out.sup.homology(top);
    return out;
}

// ---------------------------------------------------------------------------

bool InequalityReport::weak_ok() const {
    return std::all_of(weak.begin(), weak.end(), [](bool x) { return x; });
}

bool InequalityReport::strong_ok() const {
    return std::all_of(strong_r.begin(), strong_r.end(), [](bool x) { return x; }) &&
           std::all_of(strong_R.begin(), strong_R.end(), [](bool x) { return x; });
}

InequalityReport morse_inequalities_report(const AmbientChoice& ambient, const MorseFunction& fbar, const Ring& field) {
    if (!field.is_field())
        throw ValidationError("Morse inequalities are stated over a field; use --ring Q or Zp:<prime>");
    const SimplicialComplex& k = ambient.complex();
    if (fbar.domain().cells() != k.cells()) throw ValidationError("Morse function must be defined on the ambient complex");
    GradientField vbar = gradient_from_function(fbar);
    if (!vbar.proper() || !vbar.acyclic()) throw InternalError("gradient of a Morse function on a complex is not proper");
    FlowOperator flow = build_flow(k, vbar, field);

    const Hypergraph& h = ambient.hypergraph();
    const int top = reported_top(h);
    InequalityReport rep;
    rep.ring = field;
    HomologyResult b = embedded_homology(ambient, field, Method::inf);
    SubChainComplex inf = infimum_complex(ambient, field), sup = supremum_complex(ambient, field);
    auto fixed = invariant_chains(flow);
    for (int n = 0; n <= top; ++n) {
        ChainSpace m = critical_span(flow, n);
        rep.b.push_back(static_cast<long>(b.betti(n)));
        rep.r.push_back(static_cast<long>(intersection(m, inf.spaces[as_index(n)]).rank()));
        rep.R.push_back(static_cast<long>(intersection(m, sup.spaces[as_index(n)]).rank()));
        bool hyp = true;
        if (n > 0 && n - 1 <= flow.top()) hyp = fixed[as_index(n - 1)].contains(sup.spaces[as_index(n - 1)]);
        rep.sup_invariant.push_back(hyp);
    }
    long sb = 0, sr = 0, sR = 0;
    for (int N = 0; N <= top; ++N) {
        const std::size_t i = as_index(N);
        rep.weak.push_back(rep.R[i] >= rep.r[i] && rep.r[i] >= rep.b[i]);
        rep.weak_R.push_back(rep.R[i] >= rep.b[i]);
        long ab = 0, ar = 0, aR = 0;
        for (int j = 0; j <= N; ++j) {
            const long sign = j % 2 == 0 ? 1 : -1;
            ab += sign * rep.b[as_index(N - j)];
            ar += sign * rep.r[as_index(N - j)];
            aR += sign * rep.R[as_index(N - j)];
        }
        rep.strong_r.push_back(ar >= ab);
        rep.strong_R.push_back(aR >= ab);
        const long sign = N % 2 == 0 ? 1 : -1;
        sb += sign * rep.b[i];
        sr += sign * rep.r[i];
        sR += sign * rep.R[i];
    }
    rep.euler_b = sb;
    rep.euler_sum_r = sr;
    rep.euler_sum_R = sR;
    rep.euler_r = sr == sb;
    rep.euler_R = sR == sb;
    return rep;
}

FlowLatticeReport flow_lattice_report(const AmbientChoice& ambient, const FlowOperator& flow) {
    const Ring& ring = flow.ring;
    const int top = processed_top(ambient.hypergraph());
    SubChainComplex inf = infimum_complex(ambient, ring), sup = supremum_complex(ambient, ring);
    auto fixed = invariant_chains(flow);

    std::vector<ChainSpace> moved;  // Φ^∞ R(H)_n
    for (int n = 0; n <= top + 1; ++n) {
        if (n <= flow.top()) moved.push_back(image_of(flow.phi_inf[as_index(n)], hyperedge_chains(ambient, n, ring)));
        else moved.push_back(ChainSpace::zero(ring, flow.index.count(n)));
    }
    FlowLatticeReport rep;
    for (int n = 0; n <= top; ++n) {
        const std::size_t i = as_index(n);
        if (n > flow.top()) {
            rep.inf_contained.push_back(true);
            rep.inf_equal.push_back(true);
            rep.hypothesis.push_back(true);
            rep.sup_equal.push_back(true);
            continue;
        }
        const ExactMatrix& pinf = flow.phi_inf[i];
        ChainSpace inf_of_moved = moved[i];
        if (n > 0) inf_of_moved = intersection(moved[i], preimage_under(flow.boundary[i], moved[i - 1]));
        ChainSpace moved_inf = image_of(pinf, inf.spaces[i]);
        rep.inf_contained.push_back(inf_of_moved.contains(moved_inf));
        rep.inf_equal.push_back(inf_of_moved == moved_inf);
        rep.hypothesis.push_back(n == 0 || fixed[i - 1].contains(sup.spaces[i - 1]));
        ChainSpace sup_of_moved = sum(moved[i], image_of(flow.boundary[i + 1], moved[i + 1]));
        rep.sup_equal.push_back(sup_of_moved == image_of(pinf, sup.spaces[i]));
    }
    return rep;
}

}  // namespace hypermorse
