#include "doctest.h"
#include "helpers.hpp"

#include "hypermorse/errors.hpp"
#include "hypermorse/generate.hpp"
#include "hypermorse/morse.hpp"

using namespace hypermorse;
using testutil::cell;

namespace {

MorseFunction load_function(const Hypergraph& h, const std::string& file) {
    return validate_morse_function(h, parse_morse_values(read_file(testutil::data(file)), h.table()));
}

}  // namespace

TEST_CASE("a cell can satisfy both pairing conditions") {
    auto h = testutil::load("flag.hg");
    auto chk = check_morse_function(h, parse_morse_values(read_file(testutil::data("flag_f.json")), h.table()));
    CHECK(chk.valid);
    CHECK(chk.both_a_and_b == std::vector<Cell>{cell(h, "v0 v1")});
    auto v = gradient_from_function(*chk.function);
    CHECK_FALSE(v.proper());
    CHECK(v.pairs().size() == 2);
    CHECK(critical_cells(chk).empty());
    // V(V({v0})) = -{v0,v1,v2}
    auto once = v.apply(cell(h, "v0"));
    REQUIRE(once.size() == 1);
    auto twice = v.apply(once[0].first);
    REQUIRE(twice.size() == 1);
    CHECK(twice[0].first == cell(h, "v0 v1 v2"));
    CHECK(once[0].second * twice[0].second == -1);
}

TEST_CASE("without faces in H every cell is critical") {
    auto h = testutil::load("no_faces.hg");
    auto f = load_function(h, "no_faces_f.json");
    CHECK(critical_cells(f).size() == h.size());
    CHECK(gradient_from_function(f).pairs().empty());
}

TEST_CASE("constant function on a triangle is not Morse") {
    auto h = testutil::load("triangle_full.hg");
    auto raw = parse_morse_values(read_file(testutil::data("triangle_zero.json")), h.table());
    auto chk = check_morse_function(h, raw);
    CHECK_FALSE(chk.valid);
    CHECK_FALSE(chk.diagnostics.empty());
    CHECK_THROWS_AS(validate_morse_function(h, raw), ValidationError);
}

TEST_CASE("values must be total and inside the domain") {
    Hypergraph h = build_hypergraph({"a", "b"}, {{"a"}, {"a", "b"}});
    CHECK_THROWS_AS(check_morse_function(h, {{Cell{0}, 0}}), ValidationError);
    CHECK_THROWS_AS(check_morse_function(h, {{Cell{0}, 0}, {Cell{0, 1}, 1}, {Cell{1}, 0}}), ValidationError);
}

TEST_CASE("dimension function has no pairs") {
    Hypergraph h = build_hypergraph({"a", "b", "c"}, {{"a", "b", "c"}});
    auto k = associated_complex(h);
    auto f = dimension_function(k.hypergraph());
    CHECK(critical_cells(f).size() == 7);
    CHECK(critical_values(f) == std::vector<Scalar>{0, 1, 2});
}

TEST_CASE("gradient fields: shape, properness and cycles") {
    Hypergraph h = build_hypergraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    auto k = associated_complex(h).hypergraph();
    CHECK_THROWS_AS(validate_gradient_field(k, {{Cell{0}, Cell{1, 2}}}), ValidationError);
    CHECK_THROWS_AS(validate_gradient_field(h, {{Cell{0}, Cell{0, 1}}}), ValidationError);
    // a -> ab -> b -> bc -> c -> ac -> a
    auto cyc = validate_gradient_field(k, {{Cell{0}, Cell{0, 1}}, {Cell{1}, Cell{1, 2}}, {Cell{2}, Cell{0, 2}}});
    CHECK_FALSE(cyc.acyclic());
    CHECK(has_closed_v_path(cyc));
    CHECK(hasse_has_cycle(cyc));
    auto ok = validate_gradient_field(k, {{Cell{0}, Cell{0, 1}}, {Cell{1}, Cell{1, 2}}});
    CHECK(ok.acyclic());
    CHECK(ok.proper());
    CHECK(ok.up(Cell{0}) == Cell{0, 1});
    CHECK(ok.down(Cell{1, 2}) == Cell{1});
    auto twice = validate_gradient_field(k, {{Cell{0}, Cell{0, 1}}, {Cell{0}, Cell{0, 2}}});
    CHECK_FALSE(twice.proper());
}

TEST_CASE("longest-path function realizes a gradient") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        Hypergraph h = random_hypergraph(rng, 5, 4, 4);
        auto k = associated_complex(h);
        auto v = random_gradient(rng, k);
        auto f = function_from_gradient(k, v);
        auto back = gradient_from_function(f);
        CHECK(back.pairs() == v.pairs());
        std::size_t paired = 2 * v.pairs().size();
        CHECK(critical_cells(f).size() + paired == k.cells().size());
    }
}

TEST_CASE("extending and restricting gradients") {
    Hypergraph h = build_hypergraph({"a", "b", "c"}, {{"a"}, {"a", "b"}, {"a", "b", "c"}, {"b", "c"}});
    auto v = validate_gradient_field(h, {{Cell{0}, Cell{0, 1}}});
    auto k = cone(associated_complex(h));
    auto ext = extend_gradient(v, k);
    CHECK(ext.domain() == k.hypergraph());
    CHECK(ext.pairs().size() == 1);
    CHECK(restrict_gradient(ext, h).pairs() == v.pairs());
    auto bad = validate_gradient_field(h, {{Cell{0}, Cell{0, 1}}, {Cell{1, 2}, Cell{0, 1, 2}}, {Cell{0, 1}, Cell{0, 1, 2}}});
    CHECK_THROWS_AS(extend_gradient(bad, k), ValidationError);
}

TEST_CASE("random Morse functions on hypergraphs keep pairs inside H") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed);
        Hypergraph h = repair_condition_c(random_hypergraph(rng, 4, 5, 3));
        auto g = random_morse_on_hypergraph(rng, h);
        CHECK(g.domain() == h);
        const auto v = gradient_from_function(g);
        for (const auto& p : v.pairs()) {
            CHECK(h.contains(p.alpha));
            CHECK(h.contains(p.beta));
        }
    }
}

TEST_CASE("gradient matrix sign") {
    Hypergraph h = build_hypergraph({"a", "b"}, {{"a", "b"}});
    auto k = associated_complex(h);
    auto v = validate_gradient_field(k.hypergraph(), {{Cell{1}, Cell{0, 1}}});
    CellIndex idx(k);
    auto m = gradient_matrix(v, idx, 0, Ring::integers());
    // ∂{a,b} = b - a, so V(b) = -<∂{a,b}, b>{a,b} = -{a,b}
    CHECK(m.column(*idx.position(Cell{1}))[0] == -1);
    CHECK(m.column(*idx.position(Cell{0}))[0] == 0);
}
