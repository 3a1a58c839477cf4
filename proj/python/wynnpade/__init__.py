"""N-point Pade approximation toolkit.

Wynn-identity epsilon tables with minimal-|eta| approximant selection,
proximity-ordered Aitken interpolation with optional Hermite data, divergent
series summation, and a predictor ODE stepper.
"""

from wynnpade._core import (
    ApproximantChoice,
    OdeDivergenceError,
    OdePoint,
    RationalEvaluation,
    RegressionSummary,
    SweepRecord,
    accelerate,
    aitken_sequence,
    error_sweep,
    evaluate,
    evaluate_sweep,
    loglog_regression,
    ode_solve,
    order_by_proximity,
    partial_sums,
    sum_series,
    table_csv,
    taylor_shift,
)

__version__ = "1.0.0"

__all__ = [
    "ApproximantChoice",
    "OdeDivergenceError",
    "OdePoint",
    "RationalEvaluation",
    "RegressionSummary",
    "SweepRecord",
    "accelerate",
    "aitken_sequence",
    "error_sweep",
    "evaluate",
    "evaluate_sweep",
    "loglog_regression",
    "ode_solve",
    "order_by_proximity",
    "partial_sums",
    "sum_series",
    "table_csv",
    "taylor_shift",
]
