"""Least-squares polynomial fitting on a scaled domain.

The fit pipeline is: map the abscissae affinely onto [-1, 1], build the
Vandermonde design matrix there, solve the least-squares problem by
Householder QR (never by explicit normal equations, which square the
condition number), and convert the coefficients back to the original
x domain.  Coefficients are always stored in ascending powers, so
``coeffs[0]`` is the constant term.

All arithmetic is 64-bit binary floating point; no external math library
is used anywhere in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegenerateAbscissa,
    InsufficientData,
    InvalidDegree,
    InvalidSampleCount,
    RankDeficient,
    Underdetermined,
)

# A triangular-factor diagonal below this fraction of the largest diagonal
# marks the design matrix as rank deficient.
RANK_TOLERANCE = 1e-10

DEFAULT_DEGREE = 2


@dataclass(frozen=True)
class Series:
    """Paired observation vectors: abscissa (e.g. month index) and value.

    Both vectors are stored as tuples of floats.  Construction fails with
    ValueError unless the vectors have equal nonzero length and every
    element is finite.
    """

    xs: tuple[float, ...]
    ys: tuple[float, ...]

    def __post_init__(self):
        xs = tuple(float(x) for x in self.xs)
        ys = tuple(float(y) for y in self.ys)
        if len(xs) != len(ys):
            raise ValueError(f"xs and ys differ in length ({len(xs)} vs {len(ys)})")
        if not xs:
            raise ValueError("series must contain at least one observation")
        if not all(math.isfinite(v) for v in xs + ys):
            raise ValueError("series values must be finite")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    def __len__(self) -> int:
        return len(self.xs)


@dataclass(frozen=True)
class PolynomialModel:
    """Polynomial in ascending-power coefficient order.

    For a quadratic, ``coeffs == (c, b, a)`` with y = a*x^2 + b*x + c.
    """

    coeffs: tuple[float, ...]

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        if not all(math.isfinite(c) for c in coeffs):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class DomainWindow:
    """Abscissa bounds of the data a model was fitted on."""

    x_min: float
    x_max: float

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise ValueError(f"empty domain window [{self.x_min}, {self.x_max}]")


def eval_poly(model: PolynomialModel, x: float) -> float:
    """Evaluate the polynomial at x by Horner's scheme."""
    result = 0.0
    for c in reversed(model.coeffs):
        result = result * x + c
    return result


def build_design_matrix(xs, degree: int) -> list[list[float]]:
    """Vandermonde matrix: row i, column k holds xs[i]**k for k = 0..degree.

    The power is accumulated multiplicatively, so the k = 0 column is all
    ones even at x = 0.
    """
    if degree < 0:
        raise InvalidDegree(f"degree must be nonnegative, got {degree}")
    rows = []
    for x in xs:
        row = [1.0]
        for _ in range(degree):
            row.append(row[-1] * x)
        rows.append(row)
    return rows


def solve_least_squares(design: list[list[float]], ys) -> list[float]:
    """Minimize ||design @ c - ys||_2 via Householder QR.

    The design matrix must have at least as many rows as columns and full
    column rank (checked against RANK_TOLERANCE on the triangular factor's
    diagonal).

    Raises:
        Underdetermined: fewer rows than columns.
        RankDeficient: a diagonal of R falls below tolerance.
    """
    m = len(design)
    if m == 0:
        raise Underdetermined("empty design matrix")
    n = len(design[0])
    if m != len(ys):
        raise ValueError(f"design has {m} rows but ys has {len(ys)} entries")
    if m < n:
        raise Underdetermined(f"{m} rows cannot determine {n} coefficients")

    r = [list(map(float, row)) for row in design]
    rhs = [float(y) for y in ys]

    for j in range(n):
        # Householder reflector annihilating r[j+1:][j].
        norm = math.sqrt(math.fsum(r[i][j] * r[i][j] for i in range(j, m)))
        if norm == 0.0:
            continue  # column already zero; caught by the rank check below
        sign = 1.0 if r[j][j] >= 0.0 else -1.0
        v = [r[i][j] for i in range(j, m)]
        v[0] += sign * norm
        vtv = math.fsum(w * w for w in v)
        for col in range(j, n):
            s = 2.0 * math.fsum(v[i] * r[j + i][col] for i in range(len(v))) / vtv
            for i in range(len(v)):
                r[j + i][col] -= s * v[i]
        s = 2.0 * math.fsum(v[i] * rhs[j + i] for i in range(len(v))) / vtv
        for i in range(len(v)):
            rhs[j + i] -= s * v[i]

    diag_max = max(abs(r[k][k]) for k in range(n))
    if diag_max == 0.0 or min(abs(r[k][k]) for k in range(n)) < RANK_TOLERANCE * diag_max:
        raise RankDeficient("design matrix is rank deficient within tolerance")

    coeffs = [0.0] * n
    for k in range(n - 1, -1, -1):
        acc = rhs[k] - math.fsum(r[k][i] * coeffs[i] for i in range(k + 1, n))
        coeffs[k] = acc / r[k][k]
    return coeffs


def _validation_error(series: Series, degree: int):
    """Error instance for unfittable inputs, or None when they are fine."""
    if degree < 0:
        return InvalidDegree(f"degree must be nonnegative, got {degree}")
    if len(series) < degree + 1:
        return InsufficientData(
            f"degree {degree} needs {degree + 1} observations, got {len(series)}"
        )
    distinct = len(set(series.xs))
    if distinct < degree + 1:
        return DegenerateAbscissa(
            f"degree {degree} needs {degree + 1} distinct x values, got {distinct}"
        )
    if min(series.xs) == max(series.xs):
        return DegenerateAbscissa("all x values are equal; data window is undefined")
    return None


def fit_polynomial(series: Series, degree: int = DEFAULT_DEGREE) -> tuple[PolynomialModel, DomainWindow]:
    """Least-squares polynomial fit with domain scaling for conditioning.

    The abscissae are mapped affinely into [-1, 1] over the data window,
    the scaled problem is solved by QR, and the coefficients are converted
    back to the original domain, so the returned model is expressed in
    plain powers of x.

    Raises:
        InvalidDegree, InsufficientData, DegenerateAbscissa: unfittable input.
        RankDeficient: scaled design loses rank (pathological spacing).
    """
    err = _validation_error(series, degree)
    if err is not None:
        raise err

    window = DomainWindow(min(series.xs), max(series.xs))
    span = window.x_max - window.x_min
    ts = [(2.0 * x - window.x_min - window.x_max) / span for x in series.xs]
    design = build_design_matrix(ts, degree)
    scaled = solve_least_squares(design, series.ys)
    return PolynomialModel(tuple(convert_domain(scaled, window))), window


def convert_domain(scaled_coeffs, window: DomainWindow) -> list[float]:
    """Re-express coefficients fitted in the scaled domain in plain x.

    Given p(t) with t = (2x - x_min - x_max)/(x_max - x_min), returns q
    such that q(x) = p(t(x)) identically, by Horner-style composition with
    the affine map.
    """
    span = window.x_max - window.x_min
    alpha = -(window.x_min + window.x_max) / span
    beta = 2.0 / span

    coeffs = [float(c) for c in scaled_coeffs]
    out = [coeffs[-1]]
    for c in reversed(coeffs[:-1]):
        nxt = [0.0] * (len(out) + 1)
        for k, q in enumerate(out):
            nxt[k] += q * alpha
            nxt[k + 1] += q * beta
        nxt[0] += c
        out = nxt
    return out


def sample_curve(model: PolynomialModel, x_min: float, x_max: float, n: int = 200) -> list[tuple[float, float]]:
    """n points on the fitted curve, x equally spaced over [x_min, x_max].

    Both endpoints are hit exactly.
    """
    if n < 2:
        raise InvalidSampleCount(f"need at least 2 samples, got {n}")
    if not x_min < x_max:
        raise ValueError(f"empty sampling interval [{x_min}, {x_max}]")
    step = (x_max - x_min) / (n - 1)
    points = []
    for i in range(n):
        x = x_max if i == n - 1 else x_min + i * step
        points.append((x, eval_poly(model, x)))
    return points
