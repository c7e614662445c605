import json

import pytest

import shadowchi as sc


def test_group_law():
    g3 = sc.MarkedGroupSpec.gamma(3)
    d3 = sc.MarkedGroupSpec.delta(3)
    assert sc.multiply(d3, sc.GroupElement(1, 2, 1), sc.GroupElement(2, 1, 0)).as_tuple() == (0, 0, 1)
    assert sc.multiply(g3, sc.GroupElement(1, 2, 1), sc.GroupElement(2, 1, 0)).as_tuple() == (2, 1, 1)
    assert sc.inverse(g3, sc.GroupElement(1, 2, 1)).as_tuple() == (1, 2, -1)
    assert len(sc.generators(d3)) == 12
    assert sc.swap_odd_levels(sc.GroupElement(1, 2, 3)).as_tuple() == (2, 1, 3)


def test_chi_and_coloring():
    h = sc.grid_graph(3)
    assert h.vertex_count == 9
    r = sc.chromatic_number(h)
    assert r["exact"] and r["chi"] == 3
    assert sc.is_proper(h, r["witness"], 3)
    assert sc.find_coloring(h, 2) is None
    assert sc.count_colorings(h, 4) == 1056


def test_verifiers():
    assert sc.verify_dichotomy(3)["passed"]
    un = sc.verify_invariance(3, False)
    tw = sc.verify_invariance(3, True)
    assert un["passed"] and tw["passed"] and un["total"] == tw["total"]
    assert sc.verify_rigidity(3)["total"] == 12


def test_quotients():
    assert sc.quotient_chi(sc.MarkedGroupSpec.delta(3), 3)["chi"] == 3
    assert sc.quotient_chi(sc.MarkedGroupSpec.gamma(3), 3)["chi"] == 5
    assert sc.verify_swap_isomorphism(3, 4)
    assert sc.verify_alternation_obstruction(3, 5)["passed"]
    with pytest.raises(ValueError):
        sc.verify_alternation_obstruction(3, 4)


def test_algorithms():
    r = sc.color_two_ended("delta", blocks=12, k=3, mode="cycle")
    assert r["colors_used"] <= 5
    assert sc.is_proper(r["graph"], r["colors"], 5)
    assert r["t_degrees"] == [2, 2, 2]
    colors, g = sc.color_tower(3, [(0, 0, 0), (10, 1, 0)], extent=11)
    assert sc.is_proper(g, colors, 4)
    assert len(set(colors)) == 4
    with pytest.raises(sc.InputError):
        sc.color_tower(3, [(0, 0, 0), (9, 1, 0)], extent=10)


def test_cli_entry():
    code, out, _ = sc.run_cli(["quotient-chi", "--group", "gamma", "--k", "3", "--M", "3"])
    assert code == 0 and out == "5\n"
    code, out, _ = sc.run_cli(["--json", "verify-rigidity", "--k", "3"])
    assert code == 0 and json.loads(out)["results"]["total"] == 12
    code, _, _ = sc.run_cli(["nonsense"])
    assert code == 2


def test_outputs_match_schemas(tmp_path):
    jsonschema = pytest.importorskip("jsonschema")
    from pathlib import Path

    schemas = Path(__file__).resolve().parents[2] / "schemas"

    def load(name):
        return json.loads((schemas / name).read_text())

    graph = tmp_path / "q.json"
    code, out, _ = sc.run_cli(["--json", "cayley", "--group", "gamma", "--k", "3", "--M", "3", "--out", str(graph)])
    assert code == 0
    jsonschema.validate(json.loads(out), load("run_report.schema.json"))
    jsonschema.validate(json.loads(graph.read_text()), load("graph.schema.json"))

    code, out, _ = sc.run_cli(["--json", "--seed", "5", "shift-color", "--random", "--k", "4"])
    assert code == 0
    jsonschema.validate(json.loads(out)["parameters"]["tower"], load("tower.schema.json"))

    inst = {"vertices": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]], "blocks": [[0], [1], [2], [3]], "mode": "cycle"}
    jsonschema.validate(inst, load("line_instance.schema.json"))
    path = tmp_path / "c4.json"
    path.write_text(json.dumps(inst))
    code, out, _ = sc.run_cli(["--json", "two-ended-color", "--instance", str(path)])
    jsonschema.validate(json.loads(out), load("run_report.schema.json"))
