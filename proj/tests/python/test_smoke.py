import json
import os
from pathlib import Path

import pytest

import hypermorse as hm

DATA = Path(__file__).resolve().parent.parent / "data"


def test_hollow_tetrahedron_edges():
    edges = [["v0", "v1", "v2", "v3"], ["v0"]] + [
        [a, b] for i, a in enumerate(["v0", "v1", "v2", "v3"]) for b in ["v0", "v1", "v2", "v3"][i + 1:]
    ]
    r = hm.embedded_homology(edges)
    assert r["ring"] == "Z"
    assert r["betti"][:2] == [1, 3]
    assert hm.embedded_homology(edges, method="sup") == r


def test_torsion_is_reported():
    tris = ["012", "015", "024", "034", "035", "123", "134", "145", "235", "245"]
    edges = [[f"v{c}" for c in t] for t in tris]
    z = hm.simplicial_homology(edges)
    assert z["betti"] == [1, 0, 0]
    assert z["torsion"][1] == [2]
    assert hm.simplicial_homology(edges, ring="Zp:2")["betti"] == [1, 1, 1]


def test_condition_c():
    assert not hm.condition_c([["a"], ["a", "b"], ["a", "b", "c"]])
    assert hm.condition_c([["a", "b"], ["b", "c"]])


def test_errors_are_typed():
    with pytest.raises(hm.ParseError):
        hm.embedded_homology([[]])
    with pytest.raises(hm.ValidationError):
        hm.embedded_homology([["a"]], ring="Zp:4")
    with pytest.raises(hm.ParseError):
        hm.parse_hypergraph("# empty\n")


def test_parse_hypergraph():
    text = (DATA / "four_vertex.hg").read_text()
    assert ["v0", "v1", "v2"] in hm.parse_hypergraph(text)


def test_run_betti_json():
    code, report, _ = hm.run_json("betti", str(DATA / "four_vertex.hg"), method="morse", morse=str(DATA / "four_vertex_fbar.json"))
    assert code == 0
    assert report is not None
    direct = hm.run_json("betti", str(DATA / "four_vertex.hg"))[1]
    assert report["degrees"] == direct["degrees"]
    assert [d["betti"] for d in report["degrees"]] == [2, 1, 0]


def test_run_exit_codes():
    assert hm.run("betti", str(DATA / "empty_edge.json")).exit_code == 2
    assert hm.run("inequalities", str(DATA / "four_vertex.hg"), ring="Z").exit_code == 3
    res = hm.run("betti", str(DATA / "four_vertex.hg"), method="morse", morse=str(DATA / "four_vertex_g.json"))
    assert res.exit_code == 4
    assert "condition (C)" in res.diagnostics
    with pytest.raises(TypeError):
        hm.run("betti", str(DATA / "four_vertex.hg"), colour="red")


def test_generate_is_reproducible():
    a = hm.run("generate", seed=11, vertices=6, edges=7, json=True)
    b = hm.run("generate", seed=11, vertices=6, edges=7, json=True)
    assert a.exit_code == 0
    assert a.output == b.output
    assert json.loads(a.output)["edges"]
