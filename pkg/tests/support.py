"""Shared generators for randomized tests.

The fitting tolerances assume well-conditioned problems, so abscissae are
generated with two safeguards.  Gap ratios are bounded (every gap between
0.5 and 1.5 units before rescaling): clusters of nearly coincident x values
would blow up the Vandermonde condition number.  And the data window is
never tiny relative to its distance from the origin (half-width at least a
third of |center|): standard-form coefficients of a polynomial on, say,
[59, 61] are ~10^7 with massive cancellation on evaluation, which makes
1e-8 residual checks meaningless no matter how the fit is computed.
"""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

X_BOUND = 20.0
Y_BOUND = 100.0


@st.composite
def spaced_abscissae(draw, n: int, bound: float = X_BOUND):
    """n strictly increasing xs in [-bound, bound], well-conditioned."""
    gaps = draw(st.lists(st.floats(0.5, 1.5), min_size=n - 1, max_size=n - 1))
    center = draw(st.floats(-0.7 * bound, 0.7 * bound))
    half = draw(st.floats(max(1.0, abs(center) / 3.0), bound - abs(center)))
    span = sum(gaps)
    cumulative = [0.0] + list(itertools.accumulate(gaps))
    return [center - half + (c / span) * 2.0 * half for c in cumulative]


@st.composite
def fit_instances(draw, max_n: int = 50, max_degree: int = 4):
    """(xs, ys, degree) triples satisfying the fit preconditions."""
    n = draw(st.integers(4, max_n))
    degree = draw(st.integers(1, min(max_degree, n - 1)))
    xs = draw(spaced_abscissae(n))
    ys = draw(st.lists(st.floats(-Y_BOUND, Y_BOUND),
                       min_size=n, max_size=n))
    return xs, ys, degree


def random_fit_instance(rng, max_n: int = 50, max_degree: int = 4):
    """Same distribution as fit_instances, from a seeded random.Random."""
    n = rng.randint(4, max_n)
    degree = rng.randint(1, min(max_degree, n - 1))
    gaps = [rng.uniform(0.5, 1.5) for _ in range(n - 1)]
    center = rng.uniform(-0.7 * X_BOUND, 0.7 * X_BOUND)
    half = rng.uniform(max(1.0, abs(center) / 3.0), X_BOUND - abs(center))
    span = sum(gaps)
    xs, acc = [center - half], 0.0
    for g in gaps:
        acc += g
        xs.append(center - half + (acc / span) * 2.0 * half)
    ys = [rng.uniform(-Y_BOUND, Y_BOUND) for _ in range(n)]
    return xs, ys, degree
