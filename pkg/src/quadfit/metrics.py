"""Residual diagnostics and the coefficient of determination.

Sums of squares use math.fsum (exact compensated summation), and the total
sum of squares is computed on deviations from the first observation so that
constant data yields ss_tot == 0.0 exactly, not rounding dust.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import UndefinedRSquared
from .fitting import PolynomialModel, Series, eval_poly

# With constant data, residual mass up to this bound per observation still
# counts as a perfect fit (R^2 = 1); anything larger is undefined.
CONSTANT_DATA_RESIDUAL_TOLERANCE = 1e-12


@dataclass(frozen=True)
class FitReport:
    """Model plus its residual diagnostics on the data it was fitted to."""

    model: PolynomialModel
    ss_res: float
    ss_tot: float
    r_squared: float
    n: int


def residuals(model: PolynomialModel, series: Series) -> list[float]:
    """Observed minus predicted, per observation."""
    return [y - eval_poly(model, x) for x, y in zip(series.xs, series.ys)]


def total_sum_of_squares(ys) -> float:
    """Sum of squared deviations from the mean.

    Deviations are taken around ys[0] first (the sum is translation
    invariant), which makes the result exactly zero for constant input.
    """
    shifted = [y - ys[0] for y in ys]
    mean = math.fsum(shifted) / len(shifted)
    return math.fsum((d - mean) ** 2 for d in shifted)


def r_squared(series: Series, fitted) -> float:
    """1 - ss_res/ss_tot, the proportion of variance explained.

    When ss_tot is zero (all observations equal), the ratio is undefined;
    a fit that reproduces the constant within tolerance scores 1, anything
    else raises UndefinedRSquared.
    """
    if len(fitted) != len(series):
        raise ValueError(f"{len(fitted)} fitted values for {len(series)} observations")
    ss_res = math.fsum((y - f) ** 2 for y, f in zip(series.ys, fitted))
    ss_tot = total_sum_of_squares(series.ys)
    if ss_tot == 0.0:
        if ss_res <= CONSTANT_DATA_RESIDUAL_TOLERANCE * len(series):
            return 1.0
        raise UndefinedRSquared(
            f"constant data with nonzero residual mass ({ss_res:.3e})"
        )
    return 1.0 - ss_res / ss_tot


def fit_report(model: PolynomialModel, series: Series) -> FitReport:
    """Bundle ss_res, ss_tot and R^2 for a model on its data."""
    fitted = [eval_poly(model, x) for x in series.xs]
    ss_res = math.fsum((y - f) ** 2 for y, f in zip(series.ys, fitted))
    ss_tot = total_sum_of_squares(series.ys)
    return FitReport(
        model=model,
        ss_res=ss_res,
        ss_tot=ss_tot,
        r_squared=r_squared(series, fitted),
        n=len(series),
    )
