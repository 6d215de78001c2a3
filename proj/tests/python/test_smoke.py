import json
from pathlib import Path

import pytest

import rcat

DATA = Path(__file__).resolve().parent.parent / "data"


def test_partial_maps_compose_pointwise():
    f = rcat.PartialFn.parse("2>3:0,-")
    g = rcat.PartialFn(3, 2, [1, None, 0])
    h = g @ f
    assert h.name == "2>2:1,-"
    assert h.table == [1, None]
    assert f.restriction().name == "2>2:0,-"
    assert not f.total()
    assert len(rcat.all_partial_fns(2, 2)) == 9


def test_par_axioms():
    rep = rcat.check_par_axioms(2)
    assert rep["status"] == "pass"
    assert not rep["sampled"]
    sampled = rcat.check_par_axioms(3, samples=500, seed=3)
    assert sampled["status"] == "pass"
    assert sampled["sampled"]


def test_decision_routes_points():
    f = rcat.PartialFn.parse("3>2:0,-,1")
    h = rcat.decide(f, 1, 1)
    # point 0 lands in the left summand, point 2 in the right
    assert h.name == "3>6:0,-,5"


def test_matrix_round_trip():
    swap = rcat.PartialFn.parse("2>2:1,0")
    entries = rcat.decompose(swap, [1, 1], [1, 1])
    assert [[e.name for e in row] for row in entries] == [["1>1:-", "1>1:0"], ["1>1:0", "1>1:-"]]
    assert rcat.recompose([1, 1], [1, 1], entries) == swap


def test_category_file():
    cat = rcat.Category.load(str(DATA / "par2.json"))
    assert cat.objects == ["0", "1", "2"]
    # Σ_{a,b<=2} (b+1)^a partial maps
    assert len(cat.morphisms) == sum((b + 1) ** a for a in range(3) for b in range(3))
    assert cat.check_axioms()["status"] == "pass"
    assert cat.check_extensive()["status"] == "pass"
    assert rcat.Category.parse(cat.dump()).dump() == cat.dump()


def test_malformed_category_raises():
    with pytest.raises(rcat.RcatError, match="morphisms"):
        rcat.Category.parse('{"objects": ["A"], "morphisms": 3}')


def test_cli_in_process():
    code, out, err = rcat.run(["check", str(DATA / "par2.json"), "--json"])
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    code, _, _ = rcat.run(["check", str(DATA / "missing.json")])
    assert code == 2
