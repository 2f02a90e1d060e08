"""Smoke tests for the python bindings."""

import pytest

bisyz = pytest.importorskip("bisyz")

EX2 = ["u^2*t*v", "u^2*t^2 + s*u*v^2", "s^2*t*v"]
EX3 = ["s^2*v^2", "u^2*t^2", "s^2*t^2"]
I3 = ["s^2*v^2", "s*u*t*v", "u^2*t^2"]


def test_parse_and_arith():
    assert bisyz.parse_poly("t v u^2") == "u^2*t*v"
    assert bisyz.bidegree("u^2*t*v") == (2, 2)
    assert bisyz.poly_arith("u^2*t^2", "s*u*v^2", "add") == "u^2*t^2 + s*u*v^2"
    assert bisyz.poly_arith("s", "s", "sub") == "0"
    with pytest.raises(bisyz.BisyzError):
        bisyz.bidegree("s + t")


def test_base_points():
    points, complete = bisyz.base_points(EX3)
    assert complete
    assert points == ["((0:1),(0:1))"]
    points2, complete2 = bisyz.base_points(EX2)
    assert complete2
    assert len(points2) == 3


def test_local_and_global_verdicts():
    report = bisyz.local_report(EX3, "0:1;0:1")
    assert report["multiplicity"] == 4
    assert report["tangent_dim"] == 2
    assert report["lci"] and not report["curvilinear"]
    assert bisyz.is_lci_global(EX3)
    assert not bisyz.is_lci_global(I3)
    assert bisyz.degree_of_Z(I3) == 6
    assert bisyz.conormal_hilbert_constant(I3) == 14


def test_saturation_and_syzygies():
    # The local ideal at the single base point is <s^2, t^2>, and that is
    # exactly what the saturation recovers globally.
    assert set(bisyz.saturate_ideal(EX3)) == {"s^2", "t^2"}
    rows = bisyz.syzygies(EX3)
    assert all(len(row) == 3 for row in rows)


def test_koszul_check():
    verdict = bisyz.koszul_check(EX2, ["s^2*t^2*v", "-s^2*t*v^2", "s*u*v^3"])
    assert verdict["verdict"]["is_koszul"]
    assert verdict["verdict"]["certificate"] == ["0", "t", "-v"]


def test_theorem_check():
    report = bisyz.theorem_check(I3)
    assert report["ksat_equals_V"] is False
    assert report["lci_global"] is False
    assert report["biconditional_holds"] is True
    assert "separating_element" in report
