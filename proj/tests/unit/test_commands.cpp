#include "doctest.h"
#include "helpers.hpp"

#include "hypermorse/commands.hpp"

#include "json.hpp"

#include <cstdio>
#include <filesystem>

using namespace hypermorse;
using nlohmann::json;

namespace {

RunConfig cfg(const std::string& command, const std::string& input) {
    RunConfig c;
    c.command = command;
    c.input = input.empty() ? "" : testutil::data(input);
    c.json = true;
    return c;
}

json run_ok(const RunConfig& c) {
    auto r = run_command(c);
    INFO(r.diagnostics);
    REQUIRE(r.exit_code == 0);
    return json::parse(r.output);
}

}  // namespace

TEST_CASE("betti") {
    auto j = run_ok(cfg("betti", "tetra_shell.hg"));
    REQUIRE(j["degrees"].size() == 4);
    CHECK(j["degrees"][1]["betti"] == 3);
    auto c = cfg("betti", "four_vertex.hg");
    c.method = "morse";
    c.morse = testutil::data("four_vertex_fbar.json");
    auto m = run_ok(c);
    c.method = "direct-sup";
    c.morse.clear();
    auto s = run_ok(c);
    REQUIRE(m.contains("degrees"));
    CHECK(m["degrees"] == s["degrees"]);
    CHECK(m["stabilization_exponent"] == 1);
}

TEST_CASE("exit codes") {
    CHECK(run_command(cfg("betti", "empty_edge.json")).exit_code == 2);
    CHECK(run_command(cfg("betti", "no_edges.hg")).exit_code == 2);
    CHECK(run_command(cfg("betti", "missing.hg")).exit_code == 2);
    auto z = cfg("validate", "triangle_full.hg");
    z.morse = testutil::data("triangle_zero.json");
    CHECK(run_command(z).exit_code == 3);
    auto q = cfg("inequalities", "four_vertex.hg");
    q.ring = "Z";
    CHECK(run_command(q).exit_code == 3);
    auto bad_ring = cfg("betti", "four_vertex.hg");
    bad_ring.ring = "Zp:6";
    CHECK(run_command(bad_ring).exit_code == 3);
    // pipeline on a hypergraph violating (C)
    auto c = cfg("betti", "flag.hg");
    c.method = "morse";
    c.morse = testutil::data("flag_f.json");
    auto r = run_command(c);
    CHECK(r.exit_code != 0);
    CHECK_FALSE(r.diagnostics.empty());
}

TEST_CASE("size limit") {
    auto c = cfg("betti", "tetra_shell.hg");
    c.max_cells = 3;
    CHECK(run_command(c).exit_code == 3);
}

TEST_CASE("validate and reduce reports") {
    auto v = cfg("validate", "flag.hg");
    v.morse = testutil::data("flag_f.json");
    auto j = run_ok(v);
    CHECK(j["morse"]["valid"] == true);
    CHECK(j["morse"]["both_a_and_b"].size() == 1);
    auto r = cfg("reduce", "four_vertex.hg");
    r.morse = testutil::data("four_vertex_fbar.json");
    auto rj = run_ok(r);
    CHECK(rj["agrees_with_direct"] == true);
    CHECK(rj["stabilization_exponent"] == 1);
}

TEST_CASE("collapse, levels and generate") {
    auto c = run_ok(cfg("collapse", "triangle_full.hg"));
    CHECK(c["steps"].size() == 3);
    auto l = cfg("levels", "four_vertex.hg");
    l.morse = testutil::data("four_vertex_fbar.json");
    l.level_c = "1";
    run_ok(l);
    l.level_c.clear();
    l.level_a = "5/2";
    l.level_b = "3/2";
    CHECK(run_command(l).exit_code == 3);

    auto g = cfg("generate", "");
    g.seed = 3;
    auto a = run_command(g), b = run_command(g);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    auto dir = std::filesystem::temp_directory_path() / "hypermorse_unit";
    std::filesystem::create_directories(dir);
    g.collapsible = true;
    g.witness = (dir / "w.json").string();
    g.out = (dir / "h.json").string();
    REQUIRE(run_command(g).exit_code == 0);
    auto replay = cfg("collapse", "");
    replay.input = g.out;
    replay.steps = g.witness;
    auto rj = run_ok(replay);
    REQUIRE(rj.contains("preserved"));
    for (const auto& [k, v] : rj["preserved"].items()) CHECK(v == true);
    std::filesystem::remove_all(dir);
}

TEST_CASE("unknown command") {
    auto r = run_command(cfg("frobnicate", "four_vertex.hg"));
    CHECK(r.exit_code != 0);
}
