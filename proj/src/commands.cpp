#include "hypermorse/commands.hpp"

#include "hypermorse/collapse.hpp"
#include "hypermorse/errors.hpp"
#include "hypermorse/flow.hpp"
#include "hypermorse/generate.hpp"
#include "hypermorse/io.hpp"

#include <json.hpp>

#include <cstdlib>
#include <set>
#include <sstream>

namespace hypermorse {

namespace {

using json = nlohmann::ordered_json;

std::string label(const Cell& c, const VertexTable& t) {
    std::string out;
    for (Vertex v : c.vertices()) {
        if (!out.empty()) out += ' ';
        out += t.name(v);
    }
    return out;
}

json cells_json(const std::vector<Cell>& cells, const VertexTable& t) {
    json arr = json::array();
    for (const auto& c : cells) arr.push_back(label(c, t));
    return arr;
}

json matrix_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

json homology_json(const HomologyResult& h, const std::string& method) {
    json doc;
    doc["ring"] = h.ring.name();
    doc["degrees"] = json::array();
    for (const auto& d : h.degrees) {
        json t = json::array();
        for (const auto& f : d.torsion) t.push_back(f.get_str());
        doc["degrees"].push_back({{"n", d.degree}, {"betti", d.betti}, {"torsion", t}});
    }
    if (!method.empty()) doc["method"] = method;
    return doc;
}

json bools(const std::vector<bool>& xs) {
    json arr = json::array();
    for (bool x : xs) arr.push_back(x);
    return arr;
}

std::string homology_text(const HomologyResult& h) {
    std::ostringstream out;
    for (const auto& d : h.degrees) {
        out << "H" << d.degree << ": " << d.betti;
        for (const auto& f : d.torsion) out << " + Z/" << f.get_str();
        out << "\n";
    }
    return out.str();
}

Ring ring_for(const RunConfig& cfg, const char* fallback) {
    return Ring::parse(cfg.ring.empty() ? fallback : cfg.ring);
}

// Upper bound on |ΔX| before building it; exact count afterwards.
void check_size(const Hypergraph& h, std::size_t cap) {
    std::size_t bound = 0;
    for (const auto& c : h.maximal_cells()) {
        if (c.size() >= 63 || (std::size_t{1} << c.size()) - 1 > cap)
            throw ValidationError("hyperedge {" + h.label(c) + "} spans more than " + std::to_string(cap) +
                                  " simplices (HYPERMORSE_MAX_CELLS)");
        bound += (std::size_t{1} << c.size()) - 1;
    }
    if (bound <= cap) return;
    if (associated_complex(h).cells().size() > cap)
        throw ValidationError("associated complex exceeds " + std::to_string(cap) + " cells (HYPERMORSE_MAX_CELLS)");
}

Hypergraph load_input(const RunConfig& cfg) {
    if (cfg.input.empty()) throw ParseError("no input hypergraph given");
    Hypergraph h = parse_hypergraph(read_file(cfg.input));
    check_size(h, cfg.max_cells);
    return h;
}

AmbientChoice load_ambient(const RunConfig& cfg, const Hypergraph& h) {
    if (cfg.ambient.empty() || cfg.ambient == "auto") return AmbientChoice::associated(h);
    if (cfg.ambient == "cone") {
        SimplicialComplex k = cone(associated_complex(h));
        if (k.cells().size() > cfg.max_cells)
            throw ValidationError("cone ambient exceeds " + std::to_string(cfg.max_cells) + " cells (HYPERMORSE_MAX_CELLS)");
        return AmbientChoice::make(h, std::move(k));
    }
    Hypergraph kh = parse_hypergraph(read_file(cfg.ambient));
    if (kh.size() > cfg.max_cells)
        throw ValidationError("ambient exceeds " + std::to_string(cfg.max_cells) + " cells (HYPERMORSE_MAX_CELLS)");
    if (!kh.is_simplicial_complex()) throw ValidationError("ambient file is not closed under nonempty subsets");
    return AmbientChoice::make(h, SimplicialComplex(std::move(kh)));
}

enum class Domain { hypergraph, ambient };

struct LoadedMorse {
    Domain domain;
    CellValues values;  // in the ambient's vertex table
    const Hypergraph* cells;
};

LoadedMorse load_morse(const RunConfig& cfg, const AmbientChoice& ambient) {
    if (cfg.morse.empty()) throw ValidationError("this command needs --morse <file>");
    CellValues values = parse_morse_values(read_file(cfg.morse), ambient.complex().table());
    std::vector<Cell> keys;
    for (const auto& [c, _] : values) keys.push_back(c);
    std::sort(keys.begin(), keys.end());
    if (keys == ambient.hypergraph().cells()) return {Domain::hypergraph, std::move(values), &ambient.hypergraph()};
    if (keys == ambient.complex().cells()) return {Domain::ambient, std::move(values), &ambient.complex().hypergraph()};

    // Report against H: the common case is a file meant for H.
    const Hypergraph& h = ambient.hypergraph();
    std::vector<std::string> diag;
    for (const auto& c : h.cells())
        if (!values.count(c)) diag.push_back("missing value for {" + h.label(c) + "}");
    for (const auto& c : keys)
        if (!h.contains(c)) diag.push_back("value for {" + h.label(c) + "} which is not a hyperedge");
    throw ValidationError("Morse file must assign a value to exactly the hyperedges of H or the cells of the ambient complex",
                          diag);
}

// f̄ on the ambient whose gradient extends grad g (g on H).
MorseFunction ambient_function(const MorseFunction& g, const AmbientChoice& ambient) {
    GradientField v = gradient_from_function(g);
    if (!v.proper() || !v.acyclic()) {
        auto cc = check_condition_c(g.domain());
        std::vector<std::string> w;
        for (const auto& t : cc.witnesses)
            w.push_back("({" + g.domain().label(t.beta) + "}, {" + g.domain().label(t.alpha) + "}, {" +
                        g.domain().label(t.gamma) + "})");
        if (!cc.holds) throw ConditionCError("gradient of g is not proper and acyclic; H violates condition (C)", w);
        throw InternalError("gradient of g is not proper and acyclic although condition (C) holds");
    }
    return function_from_gradient(ambient.complex(), extend_gradient(v, ambient.complex()));
}

MorseFunction ambient_function(const RunConfig& cfg, const AmbientChoice& ambient) {
    if (cfg.morse.empty()) return dimension_function(ambient.complex().hypergraph());
    LoadedMorse m = load_morse(cfg, ambient);
    MorseFunction f = validate_morse_function(*m.cells, std::move(m.values));
    return m.domain == Domain::ambient ? f : ambient_function(f, ambient);
}

json condition_c_json(const Hypergraph& h) {
    auto cc = check_condition_c(h);
    json w = json::array();
    for (const auto& t : cc.witnesses) w.push_back({h.label(t.beta), h.label(t.alpha), h.label(t.gamma)});
    return {{"holds", cc.holds}, {"witnesses", w}};
}

json gradient_json(const GradientField& v) {
    json pairs = json::array();
    for (const auto& p : v.pairs()) pairs.push_back({v.domain().label(p.alpha), v.domain().label(p.beta)});
    return {{"pairs", pairs}, {"proper", v.proper()}, {"acyclic", v.acyclic()}};
}

json reduced_json(const ReducedComplex& r, const FlowOperator& flow, int report_top) {
    json doc;
    json ranks = json::array();
    for (auto x : r.ranks()) ranks.push_back(x);
    doc["ranks"] = ranks;
    doc["closed"] = r.closed();
    if (r.closed()) {
        doc["homology"] = homology_json(r.homology(report_top), "");
    } else {
        doc["homology"] = nullptr;
        const auto crit = flow.critical(r.violation->degree);
        json chain = json::object();
        for (std::size_t i = 0; i < r.violation->chain.size(); ++i)
            if (r.violation->chain[i] != 0) chain[label(crit[i], flow.field.domain().table())] = to_string(r.violation->chain[i]);
        doc["violation"] = {{"degree", r.violation->degree}, {"chain", chain}};
    }
    return doc;
}

json morse_complex_json(const FlowOperator& flow, const MorseComplex& mc) {
    const VertexTable& t = flow.field.domain().table();
    json doc;
    doc["stabilization_exponent"] = flow.stabilization_exponent;
    json crit = json::array();
    for (std::size_t n = 0; n < mc.critical.size(); ++n)
        crit.push_back({{"n", n}, {"cells", cells_json(mc.critical[n], t)}});
    doc["critical"] = crit;
    json red = json::array();
    for (std::size_t n = 1; n < mc.reduced.size(); ++n)
        red.push_back({{"n", n},
                       {"rows", cells_json(mc.critical[n - 1], t)},
                       {"cols", cells_json(mc.critical[n], t)},
                       {"matrix", matrix_json(mc.reduced[n])}});
    doc["reduced_boundary"] = red;
    return doc;
}

struct Report {
    json doc;
    std::string text;
    int exit_code = 0;
    std::string diagnostics;
};

// ---------------------------------------------------------------------------

Report cmd_betti(const RunConfig& cfg) {
    Hypergraph h = load_input(cfg);
    AmbientChoice ambient = load_ambient(cfg, h);
    Ring ring = ring_for(cfg, "Z");
    Report rep;
    if (cfg.method == "direct-inf" || cfg.method == "direct-sup") {
        Method m = cfg.method == "direct-inf" ? Method::inf : Method::sup;
        HomologyResult res = embedded_homology(ambient, ring, m);
        rep.doc = homology_json(res, to_string(m));
        rep.text = homology_text(res);
        return rep;
    }
    if (cfg.method != "morse") throw ParseError("unknown method \"" + cfg.method + "\" (direct-inf, direct-sup, morse)");

    LoadedMorse m = load_morse(cfg, ambient);
    HomologyResult direct = embedded_homology(ambient, ring, Method::inf);
    HomologyResult res;
    json extra;
    if (m.domain == Domain::hypergraph) {
        MorseFunction g = validate_morse_function(*m.cells, std::move(m.values));
        MorsePipeline p = embedded_homology_via_morse(ambient.hypergraph(), g, ring, ambient);
        if (!same_homology(p.homology, direct))
            throw InternalError("Morse pipeline disagrees with direct embedded homology");
        res = p.homology;
        extra = {{"route", "hypergraph"},
                 {"critical", cells_json(p.critical_g, ambient.complex().table())},
                 {"stabilization_exponent", p.flow.stabilization_exponent}};
    } else {
        MorseFunction fbar = validate_morse_function(*m.cells, std::move(m.values));
        AmbientMorseReduction r = reduce_with_ambient_function(ambient, fbar, ring);
        if (!r.sup_homology)
            throw ValidationError("reduced boundary leaves R(M) ∩ Sup for this Morse function; use a direct method",
                                  {"degree " + std::to_string(r.sup.violation->degree)});
        if (!same_homology(*r.sup_homology, direct))
            throw ValidationError("critical-cell reduction for this Morse function does not reproduce the embedded "
                                  "homology (its gradient is not compatible with H); use a direct method",
                                  {"morse: " + describe(*r.sup_homology), "direct: " + describe(direct)});
        res = *r.sup_homology;
        json crit = json::array();
        for (const auto& cs : r.complex.critical)
            for (const auto& c : cs) crit.push_back(label(c, ambient.complex().table()));
        extra = {{"route", "ambient"}, {"critical", crit}, {"stabilization_exponent", r.flow.stabilization_exponent}};
    }
    rep.doc = homology_json(res, "morse");
    for (auto& [k, v] : extra.items()) rep.doc[k] = v;
    rep.text = homology_text(res);
    return rep;
}

Report cmd_validate(const RunConfig& cfg) {
    Hypergraph h = load_input(cfg);
    AmbientChoice ambient = load_ambient(cfg, h);
    const Hypergraph& hk = ambient.hypergraph();
    Report rep;
    rep.doc["hyperedges"] = hk.size();
    rep.doc["simplicial_complex"] = hk.is_simplicial_complex();
    rep.doc["condition_c"] = condition_c_json(hk);
    std::ostringstream text;
    text << hk.size() << " hyperedges, condition (C) " << (rep.doc["condition_c"]["holds"].get<bool>() ? "holds" : "fails")
         << "\n";
    if (!cfg.morse.empty()) {
        LoadedMorse m = load_morse(cfg, ambient);
        const Hypergraph& dom = *m.cells;
        MorseCheck chk = check_morse_function(dom, m.values);
        json cells = json::array();
        for (const auto& cc : chk.cells)
            cells.push_back({{"cell", dom.label(cc.cell)},
                             {"value", to_string(m.values.at(cc.cell))},
                             {"a", cc.condition_a()},
                             {"b", cc.condition_b()},
                             {"critical", cc.critical()}});
        json morse;
        morse["domain"] = m.domain == Domain::hypergraph ? "hypergraph" : "ambient";
        morse["valid"] = chk.valid;
        morse["diagnostics"] = chk.diagnostics;
        morse["both_a_and_b"] = cells_json(chk.both_a_and_b, dom.table());
        morse["critical"] = cells_json(critical_cells(chk), dom.table());
        morse["cells"] = cells;
        if (chk.function) morse["gradient"] = gradient_json(gradient_from_function(*chk.function));
        rep.doc["morse"] = morse;
        text << "Morse function " << (chk.valid ? "valid" : "invalid") << ", " << critical_cells(chk).size()
             << " critical cells\n";
        if (!chk.both_a_and_b.empty()) {
            text << "(A) and (B) both hold on:";
            for (const auto& c : chk.both_a_and_b) text << " {" << dom.label(c) << "}";
            text << "\n";
        }
        if (chk.function) {
            GradientField v = gradient_from_function(*chk.function);
            text << "gradient " << (v.proper() ? "proper" : "not proper") << ", "
                 << (v.acyclic() ? "acyclic" : "has a closed path") << "\n";
        }
        if (!chk.valid) {
            rep.exit_code = static_cast<int>(ExitCode::validation);
            for (const auto& d : chk.diagnostics) rep.diagnostics += d + "\n";
        }
    }
    rep.text = text.str();
    return rep;
}

Report cmd_reduce(const RunConfig& cfg) {
    Hypergraph h = load_input(cfg);
    AmbientChoice ambient = load_ambient(cfg, h);
    Ring ring = ring_for(cfg, "Z");
    const int top = reported_top(ambient.hypergraph());
    Report rep;
    HomologyResult direct = embedded_homology(ambient, ring, Method::inf);

    bool from_h = false;
    MorseFunction fbar;
    if (!cfg.morse.empty()) {
        LoadedMorse m = load_morse(cfg, ambient);
        MorseFunction f = validate_morse_function(*m.cells, std::move(m.values));
        if (m.domain == Domain::hypergraph) {
            from_h = true;
            MorsePipeline p = embedded_homology_via_morse(ambient.hypergraph(), f, ring, ambient);
            rep.doc["ring"] = ring.name();
            rep.doc["route"] = "hypergraph";
            json mc = morse_complex_json(p.flow, p.complex);
            for (auto& [k, v] : mc.items()) rep.doc[k] = v;
            rep.doc["critical_g"] = cells_json(p.critical_g, ambient.complex().table());
            rep.doc["critical_sets_match"] = p.critical_sets_match;
            rep.doc["sup"] = reduced_json(p.sup, p.flow, top);
            rep.doc["literal"] = reduced_json(p.literal, p.flow, top);
            rep.doc["literal_agrees"] = p.literal_agrees;
            rep.doc["homology"] = homology_json(p.homology, "morse");
            rep.doc["agrees_with_direct"] = same_homology(p.homology, direct);
            rep.text = "N = " + std::to_string(p.flow.stabilization_exponent) + "\n" + homology_text(p.homology);
        } else {
            fbar = f;
        }
    } else {
        fbar = dimension_function(ambient.complex().hypergraph());
    }
    if (!from_h) {
        AmbientMorseReduction r = reduce_with_ambient_function(ambient, fbar, ring);
        rep.doc["ring"] = ring.name();
        rep.doc["route"] = "ambient";
        json mc = morse_complex_json(r.flow, r.complex);
        for (auto& [k, v] : mc.items()) rep.doc[k] = v;
        rep.doc["inf"] = reduced_json(r.inf, r.flow, top);
        rep.doc["sup"] = reduced_json(r.sup, r.flow, top);
        rep.doc["homology"] = r.sup_homology ? homology_json(*r.sup_homology, "morse") : json(nullptr);
        rep.doc["agrees_with_direct"] = r.sup_homology && same_homology(*r.sup_homology, direct);
        auto lat = flow_lattice_report(ambient, r.flow);
        rep.doc["lattice"] = {{"inf_contained", bools(lat.inf_contained)},
                              {"inf_equal", bools(lat.inf_equal)},
                              {"sup_invariant_hypothesis", bools(lat.hypothesis)},
                              {"sup_equal", bools(lat.sup_equal)}};
        std::ostringstream text;
        text << "N = " << r.flow.stabilization_exponent << "\n";
        for (std::size_t n = 0; n < r.complex.critical.size(); ++n)
            text << "critical " << n << ": " << r.complex.critical[n].size() << "\n";
        if (r.sup_homology) text << homology_text(*r.sup_homology);
        else text << "reduced Sup complex is not closed\n";
        rep.text = text.str();
    }
    rep.doc["direct"] = homology_json(direct, "inf");
    return rep;
}

Report cmd_inequalities(const RunConfig& cfg) {
    Hypergraph h = load_input(cfg);
    AmbientChoice ambient = load_ambient(cfg, h);
    Ring ring = ring_for(cfg, "Q");
    if (!ring.is_field())
        throw ValidationError("Morse inequalities are stated over a field; use --ring Q or --ring Zp:<prime>");
    MorseFunction fbar = ambient_function(cfg, ambient);
    InequalityReport r = morse_inequalities_report(ambient, fbar, ring);
    auto longs = [](const std::vector<long>& xs) {
        json a = json::array();
        for (long x : xs) a.push_back(x);
        return a;
    };
    Report rep;
    rep.doc = {{"ring", ring.name()},
               {"b", longs(r.b)},
               {"r", longs(r.r)},
               {"R", longs(r.R)},
               {"weak", bools(r.weak)},
               {"weak_R", bools(r.weak_R)},
               {"strong_r", bools(r.strong_r)},
               {"strong_R", bools(r.strong_R)},
               {"euler", {{"b", r.euler_b}, {"r", r.euler_sum_r}, {"R", r.euler_sum_R}}},
               {"sup_invariant_hypothesis", bools(r.sup_invariant)},
               {"weak_ok", r.weak_ok()},
               {"strong_ok", r.strong_ok()},
               {"euler_ok", r.euler_ok()},
               {"all_ok", r.all_ok()}};
    std::ostringstream text;
    for (std::size_t n = 0; n < r.b.size(); ++n)
        text << "n=" << n << " b=" << r.b[n] << " r=" << r.r[n] << " R=" << r.R[n] << "\n";
    text << "weak " << (r.weak_ok() ? "ok" : "FAIL") << ", strong " << (r.strong_ok() ? "ok" : "FAIL") << ", euler "
         << (r.euler_ok() ? "ok" : "FAIL") << "\n";
    rep.text = text.str();
    return rep;
}

Report cmd_collapse(const RunConfig& cfg) {
    Hypergraph h = load_input(cfg);
    Ring ring = ring_for(cfg, "Z");
    std::vector<CollapseStep> steps =
        cfg.steps.empty() ? find_collapse_sequence(h, cfg.budget) : parse_collapse_steps(read_file(cfg.steps), h.table());
    CollapseInvariance inv = verify_collapse_invariance(h, steps, ring);
    json st = json::array();
    for (const auto& s : inv.steps) st.push_back({h.label(s.sigma), h.label(s.tau)});
    json counts = json::array();
    for (auto c : inv.cell_counts) counts.push_back(c);
    Report rep;
    rep.doc = {{"ring", ring.name()},
               {"steps", st},
               {"cell_counts", counts},
               {"dropped_vertices", inv.dropped_vertices},
               {"final", json::parse(format_hypergraph(inv.final, FileFormat::json))},
               {"embedded", {{"before", homology_json(inv.before, "")}, {"after", homology_json(inv.after, "")}}},
               {"upper", {{"before", homology_json(inv.before_upper, "")}, {"after", homology_json(inv.after_upper, "")}}},
               {"lower", {{"before", homology_json(inv.before_lower, "")}, {"after", homology_json(inv.after_lower, "")}}},
               {"preserved",
                {{"embedded", inv.embedded_preserved()},
                 {"upper", inv.upper_preserved()},
                 {"lower", inv.lower_preserved()},
                 {"cellwise", inv.cellwise}}}};
    std::ostringstream text;
    text << inv.steps.size() << " steps, " << inv.cell_counts.front() << " -> " << inv.cell_counts.back() << " cells\n"
         << "homology " << (inv.all_preserved() ? "preserved" : "NOT preserved") << "\n";
    rep.text = text.str();
    if (!inv.all_preserved()) throw InternalError("collapse changed homology", {rep.text});
    return rep;
}

Report cmd_levels(const RunConfig& cfg) {
    Hypergraph h = load_input(cfg);
    AmbientChoice ambient = load_ambient(cfg, h);
    LoadedMorse m = load_morse(cfg, ambient);
    MorseFunction f = validate_morse_function(*m.cells, std::move(m.values));
    const VertexTable& t = ambient.complex().table();
    Report rep;
    std::ostringstream text;
    if (!cfg.level_c.empty()) {
        MorseFunction on_h = m.domain == Domain::hypergraph ? f : restrict_function(f, ambient.hypergraph());
        Scalar c = parse_rational(cfg.level_c);
        LevelHypergraph lv = level_hypergraph(ambient.hypergraph(), on_h, c);
        rep.doc["c"] = to_string(c);
        rep.doc["cells"] = cells_json(lv.cells.cells(), t);
        rep.doc["associated"] = cells_json(lv.associated.cells(), t);
        rep.doc["lower"] = cells_json(lv.lower.cells(), t);
        text << "H[" << to_string(c) << "]: " << lv.cells.size() << " hyperedges\n";
    }
    if (!cfg.level_a.empty() || !cfg.level_b.empty()) {
        if (cfg.level_a.empty() || cfg.level_b.empty()) throw ValidationError("level collapse needs both -a and -b");
        if (m.domain != Domain::ambient)
            throw ValidationError("level collapse needs a Morse function on the ambient complex");
        Scalar a = parse_rational(cfg.level_a), b = parse_rational(cfg.level_b);
        if (!(a < b)) throw ValidationError("level collapse needs a < b");
        LevelCollapseReport r = level_collapse_check(ambient, f, a, b, cfg.budget);
        json cv = json::array();
        for (const auto& x : r.critical_values_in_interval) cv.push_back(to_string(x));
        json seq = json::array();
        for (const auto& s : r.sequence) seq.push_back({label(s.sigma, t), label(s.tau, t)});
        rep.doc["a"] = to_string(a);
        rep.doc["b"] = to_string(b);
        rep.doc["critical_values_in_interval"] = cv;
        rep.doc["diff_h"] = cells_json(r.diff_h, t);
        rep.doc["diff_upper"] = cells_json(r.diff_upper, t);
        rep.doc["diff_lower"] = cells_json(r.diff_lower, t);
        rep.doc["differences_equal"] = r.differences_equal;
        rep.doc["hypotheses_hold"] = r.hypotheses_hold;
        rep.doc["collapsed"] = r.collapsed;
        rep.doc["sequence"] = seq;
        rep.doc["upper_matches_sublevel"] = {r.upper_matches_sublevel_a, r.upper_matches_sublevel_b};
        rep.doc["lower_contained"] = {r.lower_contained_a, r.lower_contained_b};
        text << "hypotheses " << (r.hypotheses_hold ? "hold" : "fail") << ", "
             << (r.collapsed ? "collapse found (" + std::to_string(r.sequence.size()) + " steps)" : "no collapse") << "\n";
    }
    if (cfg.level_c.empty() && cfg.level_a.empty() && cfg.level_b.empty())
        throw ValidationError("levels needs -c <level> or -a <a> -b <b>");
    rep.text = text.str();
    return rep;
}

Report cmd_generate(const RunConfig& cfg) {
    if (cfg.collapsible && cfg.condition_c)
        throw ValidationError("--collapsible and --condition-c cannot be combined");
    Rng rng(cfg.seed);
    FileFormat fmt = cfg.json ? FileFormat::json : FileFormat::text;
    Report rep;
    Hypergraph h;
    if (cfg.collapsible) {
        CollapsibleInstance ci = random_collapsible(rng, cfg.vertices, cfg.edges, cfg.insertions);
        CollapseInvariance inv = verify_collapse_invariance(ci.h, ci.witness, Ring::integers());
        if (!inv.all_preserved()) throw InternalError("generated collapse sequence changed homology");
        h = ci.h;
        if (!cfg.witness.empty()) write_file(cfg.witness, format_collapse_steps(ci.witness, h.table()));
    } else {
        h = random_hypergraph(rng, cfg.vertices, cfg.edges, cfg.max_size);
        if (cfg.condition_c) {
            h = repair_condition_c(h);
            if (!check_condition_c(h).holds) throw InternalError("repaired hypergraph still violates condition (C)");
        }
    }
    check_size(h, cfg.max_cells);
    if (!cfg.morse.empty()) write_file(cfg.morse, format_morse_function(random_morse_on_hypergraph(rng, h)));
    rep.text = format_hypergraph(h, fmt);
    return rep;
}

}  // namespace

std::size_t max_cells_from_env() {
    const char* env = std::getenv("HYPERMORSE_MAX_CELLS");
    if (!env || !*env) return 4096;
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(env, &pos);
        if (pos != std::string(env).size() || v == 0) throw std::invalid_argument(env);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ParseError(std::string("HYPERMORSE_MAX_CELLS must be a positive integer, got \"") + env + "\"");
    }
}

CommandResult run_command(const RunConfig& cfg) {
    CommandResult res;
    try {
        Report rep;
        if (cfg.command == "betti") rep = cmd_betti(cfg);
        else if (cfg.command == "validate") rep = cmd_validate(cfg);
        else if (cfg.command == "reduce") rep = cmd_reduce(cfg);
        else if (cfg.command == "inequalities") rep = cmd_inequalities(cfg);
        else if (cfg.command == "collapse") rep = cmd_collapse(cfg);
        else if (cfg.command == "levels") rep = cmd_levels(cfg);
        else if (cfg.command == "generate") rep = cmd_generate(cfg);
        else throw ParseError("unknown command \"" + cfg.command + "\"");

        res.exit_code = rep.exit_code;
        res.diagnostics = rep.diagnostics;
        if (cfg.command == "generate") {
            // the instance itself is the output
            if (!cfg.out.empty()) write_file(cfg.out, rep.text);
            else res.output = rep.text;
        } else {
            std::string body = rep.doc.dump(2) + "\n";
            if (!cfg.out.empty()) write_file(cfg.out, body);
            res.output = cfg.json ? body : rep.text;
        }
    } catch (const Error& e) {
        res.exit_code = static_cast<int>(e.code());
        res.output.clear();
        res.diagnostics = std::string("error: ") + e.what() + "\n";
        for (const auto& d : e.diagnostics()) res.diagnostics += "  " + d + "\n";
    } catch (const std::exception& e) {
        res.exit_code = static_cast<int>(ExitCode::internal);
        res.diagnostics = std::string("internal error: ") + e.what() + "\n";
    }
    return res;
}

}  // namespace hypermorse
