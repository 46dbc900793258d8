"""Smoke tests for the python bindings."""

import math

import pytest

bisphere = pytest.importorskip("_bisphere")


def test_eta_from_xi():
    assert bisphere.eta_from_xi(1e-4) == pytest.approx(1e-2, rel=1e-15)
    v = bisphere.eta_from_xi(1e-2, "arccosh")
    assert v < 0.1
    assert math.cosh(v) == pytest.approx(1.005, rel=1e-14)
    with pytest.raises(ValueError):
        bisphere.eta_from_xi(-1.0)


def test_series_both_methods_agree_near_contact():
    ids = bisphere.series_ids()
    assert len(ids) == 24
    for key in ("T0k1", "U2k3"):
        d = bisphere.eval_series(key, 1e-2, "direct", 1e-12)
        a = bisphere.eval_series(key, 1e-2, "asymptotic")
        assert d.terms_used > 0
        assert d.tail_bound <= 1e-12 * abs(d.value)
        assert a.value == pytest.approx(d.value, rel=1e-3)


def test_series_term_moment_weight():
    t0 = bisphere.series_term("T0k1", 0.3, 5)
    t1 = bisphere.series_term("T1k1", 0.3, 5)
    assert t1 == pytest.approx(11 * t0, rel=1e-14)


def test_constants_subset():
    assert bisphere.eval_constant("K_11", 1e-9) == pytest.approx(-1 / 24, abs=1e-8)
    assert bisphere.eval_constant("C_121", 1e-9) == pytest.approx(3.09972, abs=5e-6)


def test_x_split_cancellation():
    closed = bisphere.eval_series("T0k1", 1e-3, "asymptotic").value
    for X in (0.02, 0.05, 0.1):
        total = bisphere.t0_inner(1e-3, X) + bisphere.t0_outer(1e-3, X)
        assert total == pytest.approx(closed, rel=1e-9)
    assert bisphere.u0_inner(1e-3, 0.05) != pytest.approx(bisphere.u0_inner(1e-3, 0.1), rel=1e-6)


def test_force_structure():
    r = bisphere.force_components(alpha=0.8, beta=1.5, theta=0.0, xi=1e-3)
    assert r["fx"] == 0.0
    r0 = bisphere.force_components(alpha=2.0, beta=0.0, theta=0.4, xi=1e-3)
    F = r0["coefficients"]
    assert r0["fz"] == pytest.approx(F[4] * 4 + F[5] * 2 + F[6], rel=1e-14)
    assert F[4] == pytest.approx(F[6], rel=1e-13)  # F5 == F7 for equal spheres


def test_error_sweep_rows():
    rows = bisphere.error_sweep(xi_min=1e-5, xi_max=1e-3, points=4)
    assert len(rows) == 24 * len({r["xi"] for r in rows})
    for row in rows:
        assert row["pct_error"] < 0.5  # below xi = 1e-3 everything is sub-0.5%
