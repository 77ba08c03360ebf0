from fractions import Fraction

import numpy as np
import pytest

from coverdom.bounds import (
    Bound,
    BoundViolation,
    check_sandwich,
    connect_lifted_trees,
    cover_bounds,
    harmonic,
    lift_dominating_set,
)
from coverdom.cover import CoveringProjection, VoltageAssignment, identity_projection, lift, random_voltages
from coverdom.domsolve import (
    SolverError,
    domination_number,
    is_connected_dominating,
    is_dominating,
    is_total_dominating,
)
from coverdom.graph import cycle, petersen
from coverdom.harness import fixture

from conftest import random_connected_graph


@pytest.mark.parametrize("d, h", [(1, Fraction(1)), (2, Fraction(3, 2)), (3, Fraction(11, 6)), (5, Fraction(137, 60))])
def test_harmonic(d, h):
    assert harmonic(d) == h


def test_harmonic_rejects_zero():
    with pytest.raises(ValueError):
        harmonic(0)


def test_regular_leading_coefficients():
    # 1/H(r) for r = 3, 4, 5
    assert [1 / harmonic(r) for r in (3, 4, 5)] == [Fraction(6, 11), Fraction(12, 25), Fraction(60, 137)]


def test_sqrt_bound_comparisons():
    b = Bound("geometric", Fraction(6), sqrt=True)
    assert b.at_most(3) and not b.at_most(2)
    assert b.at_least(2) and not b.at_least(3)
    assert b.ceil() == 3
    assert Bound("x", Fraction(7, 2)).ceil() == 4
    assert Bound("x", Fraction(9), sqrt=True).ceil() == 3


def _rows(bounds):
    return {b.name: b for b in bounds}


def test_cover_bounds_petersen_plain():
    lows, ups = cover_bounds(3, 2, "plain", regularity=3, max_degree=3)
    lo = _rows(lows)
    assert lo["fold"].value == 2 and lo["base"].value == 3
    assert lo["geometric"].sqrt and lo["geometric"].value == 6
    assert lo["harmonic"].value == Fraction(36, 11)
    assert lo["cubic"].value == Fraction(18, 5)
    assert "cycle" not in lo and "quartic-quintic" not in lo
    assert [(b.name, b.value) for b in ups] == [("lift", 6)]
    assert all(b.at_most(6) for b in lows)


def test_cover_bounds_torus():
    lows, ups = cover_bounds(3, 25, "plain", regularity=4, max_degree=4)
    lo = _rows(lows)
    assert lo["quartic-quintic"].value == Fraction(75, 2)
    assert _rows(ups)["lift"].value == 75
    assert all(b.at_most(45) for b in lows) and all(b.at_least(45) for b in ups)


def test_cover_bounds_identity_cover():
    for kind in ("plain", "total"):
        lows, ups = cover_bounds(4, 1, kind, regularity=3, max_degree=3)
        assert all(b.at_most(4) for b in lows)
        assert [b.value for b in ups] == [4]


def test_cover_bounds_rows_by_kind():
    assert "harmonic" not in _rows(cover_bounds(4, 2, "total", 3, 3)[0])
    assert _rows(cover_bounds(4, 2, "total", 3, 3)[0])["cubic"].value == Fraction(24, 5)
    lows, ups = cover_bounds(4, 2, "connected", 3, 3)
    assert set(_rows(lows)) == {"fold", "base", "geometric"}
    assert [(b.name, b.value) for b in ups] == [("connector", 10)]
    assert _rows(cover_bounds(3, 2, "plain", 2, 2)[0])["cycle"].value == 4


def test_lift_dominating_set_identity():
    g = petersen()
    s = domination_number(g).set
    assert lift_dominating_set(identity_projection(g), s) == sorted(s)


def test_lift_dominating_set_fig1():
    F, G, p = fixture("petersen-dodecahedron")
    s = domination_number(F).set
    lifted = lift_dominating_set(p, s)
    assert len(lifted) == 6 and is_dominating(G, lifted)
    st = domination_number(F, "total").set
    lt = lift_dominating_set(p, st, "total")
    assert len(lt) == 8 and is_total_dominating(G, lt)


def test_lift_dominating_set_c3_to_c6():
    G, p = lift(VoltageAssignment.from_list(cycle(3), 2, [(0, 1), (0, 1), (1, 0)]))
    lifted = lift_dominating_set(p, [0])
    assert lifted == [0, 1] and is_dominating(G, lifted)


def test_lift_dominating_set_rejects_non_dominating():
    _, _, p = fixture("petersen-dodecahedron")
    with pytest.raises(SolverError):
        lift_dominating_set(p, [0])
    with pytest.raises(ValueError):
        lift_dominating_set(p, [0, 1, 2], "connected")


def test_lifted_sets_dominate_random_covers(rng):
    for _ in range(100):
        F = random_connected_graph(rng, 2, 9)
        k = int(rng.integers(1, 4))
        G, p = lift(random_voltages(F, k, int(rng.integers(2**31))))
        for kind, ok in (("plain", is_dominating), ("total", is_total_dominating)):
            s = domination_number(F, kind).set
            lifted = lift_dominating_set(p, s, kind)
            assert len(lifted) == k * len(s) and ok(G, lifted)


def test_connector_identity():
    g = petersen()
    s = domination_number(g, "connected").set
    cert = connect_lifted_trees(identity_projection(g), s)
    assert cert.result == s and cert.paths == ()


@pytest.mark.parametrize("n", [3, 4, 5, 6])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_connector_cycle_cover_is_tight(n, k):
    base = cycle(n)
    perms = [tuple(range(k))] * (n - 1) + [tuple((i + 1) % k for i in range(k))]
    G, p = lift(VoltageAssignment.from_list(base, k, perms))
    assert G.is_connected()
    cert = connect_lifted_trees(p, range(n - 2))
    assert len(cert.result) == k * n - 2 == k * ((n - 2) + 2) - 2
    assert all(len(path) - 1 <= 3 for path in cert.paths)
    assert len(cert.components) == k


def test_connector_fig1():
    F, G, p = fixture("petersen-dodecahedron")
    cert = connect_lifted_trees(p, domination_number(F, "connected").set)
    assert len(cert.result) <= 2 * (4 + 2) - 2
    assert is_connected_dominating(G, cert.result)


def test_connector_preconditions():
    F, G, p = fixture("petersen-dodecahedron")
    with pytest.raises(SolverError):
        connect_lifted_trees(p, [0, 2])  # not connected
    _, q = lift(VoltageAssignment.identity(cycle(4), 2))
    with pytest.raises(SolverError, match="connected"):
        connect_lifted_trees(q, [0, 1])


def test_connector_random_covers(rng):
    for _ in range(150):
        F = random_connected_graph(rng, 2, 9)
        k = int(rng.integers(1, 4))
        G, p = lift(random_voltages(F, k, int(rng.integers(2**31))))
        if not G.is_connected():
            continue
        s = domination_number(F, "connected").set
        cert = connect_lifted_trees(p, s)
        assert all(len(path) - 1 <= 3 for path in cert.paths)
        assert len(cert.paths) == k - 1
        assert len(cert.result) <= k * (len(s) + 2) - 2
        assert is_connected_dominating(G, cert.result)


def test_sandwich_fig1():
    F, G, p = fixture("petersen-dodecahedron")
    reports = check_sandwich(F, G, p)
    assert [r.kind for r in reports] == ["plain", "total", "connected"]
    assert all(r.ok for r in reports)
    assert [(r.exact_F, r.exact_G) for r in reports] == [(3, 6), (4, 8), (4, 10)]
    assert reports[0].c_obs == 1
    assert reports[0].H_Delta == Fraction(11, 6)


def test_sandwich_identity():
    g = petersen()
    (r,) = check_sandwich(g, g, identity_projection(g), ["plain"])
    assert r.c_obs == 1 and r.ok


def test_sandwich_marks_budget_skip():
    F = cycle(5)
    G, p = lift(VoltageAssignment.from_list(F, 2, [(0, 1)] * 4 + [(1, 0)]))
    assert domination_number(F, "connected").nodes_explored <= 10
    (r,) = check_sandwich(F, G, p, ["connected"], budget=10)
    assert not r.exact_G_optimal and r.skipped == "skipped (budget)"
    assert r.ok and r.c_obs is None


def test_sandwich_skips_disconnected_total_graph():
    F = cycle(5)
    G, p = lift(VoltageAssignment.identity(F, 2))
    (r,) = check_sandwich(F, G, p, ["connected"])
    assert r.exact_G is None and "connected" in r.skipped and r.ok


def test_sandwich_rejects_bad_projection():
    bad = CoveringProjection(cycle(6), cycle(3), (0, 0, 1, 2, 1, 2))
    with pytest.raises(ValueError):
        check_sandwich(cycle(3), cycle(6), bad, ["plain"])


def test_sandwich_raises_on_violation(monkeypatch):
    import coverdom.bounds as B

    F, G, p = fixture("petersen-dodecahedron")
    real = B.cover_bounds
    monkeypatch.setattr(B, "cover_bounds", lambda *a: (real(*a)[0] + [Bound("bogus", Fraction(7))], real(*a)[1]))
    (r,) = check_sandwich(F, G, p, ["plain"])
    assert not r.ok and any("bogus" in v for v in r.violations)
    with pytest.raises(BoundViolation):
        check_sandwich(F, G, p, ["plain"], raise_on_violation=True)


def test_report_dict_is_json_ready():
    import json

    F, G, p = fixture("petersen-dodecahedron")
    d = check_sandwich(F, G, p, ["plain"])[0].to_dict()
    text = json.dumps(d)
    assert d["c_obs"] == "1" and d["c_obs_decimal"] == "1.000000"
    assert "sqrt(6)" in text
