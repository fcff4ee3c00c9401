"""Smoke tests for the python bindings."""

import math

import pytest

lifepde = pytest.importorskip("lifepde")


@pytest.fixture(scope="module")
def params():
    return lifepde.HazardParams(mu=0.04, sigma=0.10, lambda_bar=0.02, alpha=0.10)


@pytest.fixture(scope="module")
def grid():
    return lifepde.LogGrid(10.0, 0.1, 0.01, 10.0)


def test_parameter_validation():
    with pytest.raises(ValueError):
        lifepde.HazardParams(mu=0.04, sigma=0.10, lambda_bar=0.02, alpha=0.5)


def test_exact_step_frozen_value(params):
    drift = lifepde.shifted_drift(params)
    assert drift == pytest.approx(0.05, abs=1e-15)
    out = lifepde.exact_step(params, 0.04, 0.5, 1.0, drift)
    assert out == pytest.approx(0.04195385941598084, abs=1e-14)


def test_table_row(params, grid):
    table = lifepde.build_table(params, grid, [0.040], 1, lifepde.DiscountCurve())
    row = table.rows[0]
    # published reference: 0.3609 / 0.3696 / 0.4826 / 0.4909 (tabulated on-node,
    # so the interpolated values sit within a few 1e-3)
    assert row.net_premium == pytest.approx(0.3609, abs=5e-3)
    assert row.P == pytest.approx(0.3696, abs=5e-3)
    assert row.A_per_contract == pytest.approx(0.4826, abs=5e-3)
    assert row.B_per_contract == pytest.approx(0.4909, abs=5e-3)
    assert row.mortality_charge > 0
    assert row.finite_charge > 0


def test_sandwich(params, grid):
    chain = lifepde.solve_price_a_chain(params, grid, 3)
    p = lifepde.solve_bound_p(params, grid)
    b3 = lifepde.solve_bound_b(params, grid, 3, chain[1])
    pv = p.values()
    a3 = chain[2].values()
    bv = b3.values()
    assert (3.0 * pv <= a3 + 5e-3).all()
    assert (a3 <= bv + 5e-3).all()
    assert a3.shape == (grid.num_levels + 1, grid.num_y_nodes - 1)


def test_monte_carlo_determinism(params):
    cfg = lifepde.McConfig(paths=2000, steps_per_year=50, seed=11,
                           measure=lifepde.Measure.Shifted)
    est1 = lifepde.estimate_p(params, 0.04, 10.0, lifepde.DiscountCurve(), cfg)
    est2 = lifepde.estimate_p(params, 0.04, 10.0, lifepde.DiscountCurve(), cfg)
    assert est1.mean == est2.mean
    assert est1.std_error > 0


def test_deterministic_closed_form():
    p0 = lifepde.HazardParams(mu=0.0, sigma=0.0, lambda_bar=0.04, alpha=0.1)
    v = lifepde.closed_form_deterministic(p0, 0.04, 0.0, 10.0, lifepde.DiscountCurve())
    assert v == pytest.approx(1.0 - math.exp(-0.6), abs=1e-6)
