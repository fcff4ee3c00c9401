"""Term life insurance pricing under a stochastic hazard rate.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from ._core import (  # noqa: F401
    DiscountCurve,
    HazardParams,
    LogGrid,
    McConfig,
    McEstimate,
    Measure,
    PriceRow,
    PriceTable,
    Surface,
    SurfaceKind,
    build_table,
    closed_form_deterministic,
    deterministic_hazard,
    estimate_b,
    estimate_density_point,
    estimate_net,
    estimate_p,
    exact_step,
    integrate_price,
    shifted_drift,
    solve_bound_b,
    solve_bound_p,
    solve_density_f,
    solve_density_g,
    solve_net_premium,
    solve_price_a,
    solve_price_a_chain,
)

__all__ = [name for name in dir() if not name.startswith("_")]
