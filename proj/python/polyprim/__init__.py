"""Exact decision engine for point-primitive generalised hexagons and
octagons whose point stabiliser comes from one of the twisted families
over fields of odd exponent.

Everything heavy lives in the compiled extension; this package just
re-exports it and adds a convenience wrapper returning parsed sweeps.
"""

import json as _json

from ._core import (
    distance_class_sizes,
    enumerate_cases,
    evaluate_case,
    index_crosscheck,
    order_admissible,
    point_count,
    refined_octagon_test,
    solve_orders,
    sweep_json,
    valuation_test,
    verify,
)

__all__ = [
    "distance_class_sizes",
    "enumerate_cases",
    "evaluate_case",
    "index_crosscheck",
    "order_admissible",
    "point_count",
    "refined_octagon_test",
    "solve_orders",
    "sweep",
    "sweep_json",
    "valuation_test",
    "verify",
]

__version__ = "1.0.0"


def sweep(families=("sz", "ree-small", "ree-large"), m_min=3, m_max=13,
          kinds=("hexagon", "octagon"), trial_limit=100000,
          rho_iterations=2000000):
    """Run a sweep and return the report as a parsed dict."""
    text = sweep_json(list(families), m_min, m_max, list(kinds),
                      trial_limit, rho_iterations)
    return _json.loads(text)
