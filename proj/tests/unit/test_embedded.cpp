#include "doctest.h"
#include "helpers.hpp"

#include "hypermorse/embedded.hpp"
#include "hypermorse/errors.hpp"
#include "hypermorse/generate.hpp"

using namespace hypermorse;

namespace {

const std::vector<Ring> kFields = {Ring::rationals(), Ring::prime_field(2), Ring::prime_field(3)};

}  // namespace

TEST_CASE("worked example: one extra vertex hyperedge kills H1") {
    auto h = testutil::load("tetra_solid.hg");
    auto hp = testutil::load("tetra_shell.hg");
    for (Method m : {Method::inf, Method::sup}) {
        CHECK(embedded_homology(h, Ring::integers(), m).betti(1) == 0);
        auto r = embedded_homology(hp, Ring::integers(), m);
        CHECK(r.betti(1) == 3);
        CHECK(r.degrees[1].torsion.empty());
    }
}

TEST_CASE("worked example: embedded homology ignores a filled triangle") {
    auto h = testutil::load("triangles.hg");
    auto hp = testutil::load("triangles_filled.hg");
    for (const auto* x : {&h, &hp}) {
        auto r = embedded_homology(*x, Ring::integers());
        CHECK(r.betti(0) == 6);
        for (std::size_t n = 1; n < r.degrees.size(); ++n) CHECK(r.degrees[n].betti == 0);
    }
    CHECK(simplicial_homology(associated_complex(h), Ring::integers()).betti(1) == 1);
    CHECK(simplicial_homology(associated_complex(hp), Ring::integers()).betti(1) == 0);
}

TEST_CASE("worked example: hollow triangle without vertices") {
    auto h = parse_hypergraph(read_file(testutil::data("hollow_triangle.json")));
    auto r = embedded_homology(h, Ring::integers());
    CHECK(r.betti() == std::vector<std::size_t>{0, 1});
    CHECK(lower_complex(h).cells().empty());
    auto hp = testutil::load("hollow_triangle_vertices.hg");
    CHECK(testutil::betti(embedded_homology(hp, Ring::rationals())) == oracle::embedded_betti(testutil::family(hp), 0));
}

TEST_CASE("degree range is 0..max dim") {
    Hypergraph h = build_hypergraph({"a", "b", "c"}, {{"a", "b", "c"}});
    CHECK(processed_top(h) == 3);
    CHECK(reported_top(h) == 2);
    CHECK(embedded_homology(h, Ring::integers()).degrees.size() == 3);
}

TEST_CASE("torsion survives over Z: projective plane") {
    std::vector<std::string> L = default_labels(6);
    std::vector<std::vector<std::string>> tri;
    for (auto t : {"012", "015", "024", "034", "035", "123", "134", "145", "235", "245"}) {
        std::vector<std::string> e;
        for (const char* c = t; *c; ++c) e.push_back("v" + std::string(1, *c));
        tri.push_back(e);
    }
    Hypergraph h = build_hypergraph(L, tri);
    auto k = associated_complex(h);
    auto z = simplicial_homology(k, Ring::integers());
    CHECK(z.betti() == std::vector<std::size_t>{1, 0, 0});
    CHECK(z.degrees[1].torsion == std::vector<mpz_class>{2});
    CHECK(simplicial_homology(k, Ring::prime_field(2)).betti() == std::vector<std::size_t>{1, 1, 1});
    CHECK(simplicial_homology(k, Ring::prime_field(3)).betti() == std::vector<std::size_t>{1, 0, 0});
    CHECK(same_homology(embedded_homology(k.hypergraph(), Ring::integers()), z));
    // the triangles alone, without the edges and vertices
    auto emb = embedded_homology(h, Ring::prime_field(2));
    CHECK(testutil::betti(emb) == oracle::embedded_betti(testutil::family(h), 2));
}

TEST_CASE("embedded homology agrees with the rank oracle on random hypergraphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed);
        const std::size_t v = 2 + rng.below(4);
        Hypergraph h = random_hypergraph(rng, v, 1 + rng.below(std::min<std::size_t>(7, (1u << v) - 1)), 4);
        auto fam = testutil::family(h);
        for (const Ring& r : kFields) {
            const long p = r.kind() == Ring::Kind::prime_field ? static_cast<long>(r.characteristic()) : 0;
            auto want = oracle::embedded_betti(fam, p);
            CHECK(testutil::betti(embedded_homology(h, r, Method::inf)) == want);
            CHECK(testutil::betti(embedded_homology(h, r, Method::sup)) == want);
        }
        auto zi = embedded_homology(h, Ring::integers(), Method::inf);
        CHECK(same_homology(zi, embedded_homology(h, Ring::integers(), Method::sup)));
    }
}

TEST_CASE("the ambient complex does not matter") {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        Rng rng(seed);
        Hypergraph h = random_hypergraph(rng, 4, 1 + rng.below(6), 3);
        auto amb = AmbientChoice::associated(h);
        auto coned = AmbientChoice::make(h, cone(amb.complex()));
        for (Method m : {Method::inf, Method::sup})
            CHECK(same_homology(embedded_homology(amb, Ring::integers(), m), embedded_homology(coned, Ring::integers(), m)));
    }
}

TEST_CASE("ambient must contain every hyperedge") {
    Hypergraph h = build_hypergraph({"a", "b"}, {{"a", "b"}});
    Hypergraph pts = build_hypergraph({"a", "b"}, {{"a"}, {"b"}});
    CHECK_THROWS_AS(AmbientChoice::make(h, SimplicialComplex(pts)), ValidationError);
}

TEST_CASE("infimum and supremum chains") {
    // H = {{a}, {a,b}}: Inf_1 = 0 since ∂{a,b} = b - a leaves R(H); Sup_1 = R(H)_1
    Hypergraph h = build_hypergraph({"a", "b"}, {{"a"}, {"a", "b"}});
    auto amb = AmbientChoice::associated(h);
    auto inf = infimum_complex(amb, Ring::integers());
    auto sup = supremum_complex(amb, Ring::integers());
    CHECK(inf.spaces[1].rank() == 0);
    CHECK(inf.spaces[0].rank() == 1);
    CHECK(sup.spaces[1].rank() == 1);
    CHECK(sup.spaces[0].rank() == 2);  // {a} and ∂{a,b}
    CHECK(hyperedge_chains(amb, 0, Ring::integers()).rank() == 1);
}
