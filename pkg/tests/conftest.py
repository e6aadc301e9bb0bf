import mpmath as mp
import pytest

from casimir_medium import QuadratureSpec


@pytest.fixture(scope="session")
def default_spec() -> QuadratureSpec:
    return QuadratureSpec()


@pytest.fixture(scope="session")
def loose_spec() -> QuadratureSpec:
    # enough for 1e-6 comparisons without burning time in nested quadrature
    return QuadratureSpec(rel_tol=1e-8, abs_tol=1e-11)


def mp_inner_mode_integral(a: float, h: float) -> float:
    """Reference for the closed-form mode integral, computed with mpmath.

    The working precision must grow with x = 2 a h: the Li_1 term is
    -log(1 - e^{-x}) and the complement sits within e^{-x} of 1, so a
    fixed precision silently zeroes it for large x.
    """
    if a == 0.0:
        with mp.workdps(40):
            return float(2 * mp.zeta(3) / (2 * mp.mpf(h)) ** 3)
    x = 2.0 * a * h
    with mp.workdps(max(40, int(0.4343 * x) + 25)):
        xm = 2 * mp.mpf(a) * mp.mpf(h)
        y = mp.e ** (-xm)
        val = (
            xm * xm * mp.polylog(1, y)
            + 2 * xm * mp.polylog(2, y)
            + 2 * mp.polylog(3, y)
        ) / (2 * mp.mpf(h)) ** 3
        return float(val)
