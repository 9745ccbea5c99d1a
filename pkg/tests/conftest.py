from pathlib import Path

import pytest

from quadfit import Series

REPO_ROOT = Path(__file__).resolve().parent.parent

# Small fixed dataset whose exact fit is frozen below from the rational
# normal-equations oracle (see oracle.py): coefficients (3/4, -19/20, 5/4),
# ss_res = 1/20, ss_tot = 587/4, R^2 = 2934/2935.
DERIVED_XS = (1.0, 2.0, 3.0, 4.0)
DERIVED_YS = (1.0, 4.0, 9.0, 17.0)
DERIVED_COEFFS = (0.75, -0.95, 1.25)
DERIVED_SS_RES = 0.05
DERIVED_SS_TOT = 146.75
DERIVED_R_SQUARED = 0.9996592844974447


@pytest.fixture
def derived_series() -> Series:
    return Series(DERIVED_XS, DERIVED_YS)


@pytest.fixture
def sample_csv_path() -> Path:
    return REPO_ROOT / "data" / "pm25_monthly.csv"


@pytest.fixture
def golden_dir() -> Path:
    return Path(__file__).resolve().parent / "golden"
