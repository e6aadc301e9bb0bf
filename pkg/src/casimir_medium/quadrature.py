"""Numerical quadrature and the special functions used by the force integrals.

The closed-form route for the force needs polylogarithms Li_1, Li_2, Li_3 on
[0, 1] and the Bose-type mode integral

    I(a, H) = integral_a^inf  u^2 / (exp(2 u H) - 1) du,

which reduces to polylogarithms of exp(-2 a H).  Everything else is adaptive
Gauss-Kronrod integration (QUADPACK via scipy) wrapped so that semi-infinite
domains are mapped by an explicit, configurable transform and results carry
their own convergence metadata.

The 2D integrator is a deliberately plain nested 1D scheme.  It is the
independence oracle for the closed-form route and the workhorse for force
variants that have no closed inner integral.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence

from scipy.integrate import quad as _quad

from .errors import DomainError, IntegrationFailureError

__all__ = [
    "Transform",
    "QuadratureSpec",
    "IntegralResult",
    "polylog",
    "inner_mode_integral",
    "integrate_1d",
    "integrate_2d_oracle",
    "ZETA_3",
]

# zeta(3) and friends, to full double precision
ZETA_3 = 1.2020569031595942854
_PI2_6 = math.pi * math.pi / 6.0

# direct power series is used below this argument; closer to 1 we switch to
# the standard reflection / log-series forms to keep 15-digit accuracy
_SERIES_THRESHOLD = 0.75


class Transform(enum.Enum):
    """Change of variable mapping [a, inf) onto the open unit interval."""

    EXPONENTIAL = "exponential"  # x = a - s*ln(1 - t), suits exponential tails
    RATIONAL = "rational"        # x = a + s*t/(1 - t), suits algebraic tails


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerance and budget settings shared by all adaptive integrals."""

    rel_tol: float = 1e-9
    abs_tol: float = 1e-12
    max_subdivisions: int = 2000
    semi_infinite_transform: Transform = Transform.EXPONENTIAL

    def __post_init__(self):
        if not (self.rel_tol > 0 and math.isfinite(self.rel_tol)):
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol!r}")
        if not (self.abs_tol > 0 and math.isfinite(self.abs_tol)):
            raise DomainError(f"abs_tol must be positive, got {self.abs_tol!r}")
        if self.max_subdivisions < 1:
            raise DomainError(
                f"max_subdivisions must be >= 1, got {self.max_subdivisions!r}"
            )


@dataclass(frozen=True)
class IntegralResult:
    """Value of an adaptive integral plus its convergence metadata.

    ``converged`` implies ``error_estimate <= max(abs_tol, rel_tol*|value|)``
    for the spec the integral was run with.  An unconverged result still
    carries the best estimate found within the subdivision budget.
    """

    value: float
    error_estimate: float
    evaluations: int
    converged: bool


def _series(s: int, y: float) -> float:
    # direct sum_{n>=1} y^n / n^s; tail bound y^(M+1)/(M+1)^s/(1-y)
    total = 0.0
    power = 1.0
    for n in range(1, 400):
        power *= y
        term = power / n**s
        total += term
        if term < 1e-17 * (1.0 + abs(total)):
            break
    return total


def _li2(y: float) -> float:
    if y <= _SERIES_THRESHOLD:
        return _series(2, y)
    if y == 1.0:
        return _PI2_6
    # Euler reflection: Li2(y) + Li2(1-y) = pi^2/6 - ln(y) ln(1-y)
    return _PI2_6 - math.log(y) * math.log1p(-y) - _series(2, 1.0 - y)


# Li3(e^-x) = zeta(3) - zeta(2) x + x^2 (3/2 - ln x)/2 + sum over even powers
# with zeta(negative odd) coefficients; valid for 0 < x < ln 2, truncated
# where the next term is below 1e-17 for x <= -ln(0.75)
_LI3_EVEN = (
    (4, -1.0 / 288.0),
    (6, 1.0 / 86400.0),
    (8, -1.0 / 10160640.0),
    (10, 1.0 / 870912000.0),
    (12, -1.0 / 63228211200.0),
)


def _li3(y: float) -> float:
    if y <= _SERIES_THRESHOLD:
        return _series(3, y)
    if y == 1.0:
        return ZETA_3
    x = -math.log(y)
    value = ZETA_3 - _PI2_6 * x + 0.5 * x * x * (1.5 - math.log(x)) + x**3 / 12.0
    for p, c in _LI3_EVEN:
        value += c * x**p
    return value


def polylog(s: int, y: float) -> float:
    """Polylogarithm Li_s(y) for s in {1, 2, 3} and y in [0, 1].

    Uses the defining power series away from y = 1 and the standard
    reflection (s = 2) or log-series (s = 3) forms near y = 1 so the result
    stays accurate to ~1e-15.  Li_1(1) diverges and raises.

    Parameters
    ----------
    s : int
        Order of the polylogarithm, one of 1, 2, 3.
    y : float
        Argument, 0 <= y <= 1.
    """
    if s not in (1, 2, 3):
        raise DomainError(f"polylog order must be 1, 2 or 3, got {s!r}")
    if not (0.0 <= y <= 1.0):
        raise DomainError(f"polylog argument must lie in [0, 1], got {y!r}")
    if s == 1:
        if y == 1.0:
            raise DomainError("Li_1(1) diverges")
        return -math.log1p(-y)
    if s == 2:
        return _li2(y)
    return _li3(y)


def inner_mode_integral(a: float, h: float) -> float:
    """Bose-weighted mode integral integral_a^inf u^2/(exp(2uH) - 1) du.

    Closed form: with x = 2 a H and y = exp(-x),

        I(a, H) = [x^2 Li_1(y) + 2 x Li_2(y) + 2 Li_3(y)] / (2H)^3,

    which at a = 0 reduces to 2 zeta(3)/(2H)^3.

    Parameters
    ----------
    a : float
        Lower limit (the in-plane mass gap of the mode), a >= 0.
    h : float
        Mirror separation H > 0.
    """
    if not (h > 0.0 and math.isfinite(h)):
        raise DomainError(f"separation must be positive, got {h!r}")
    if not (a >= 0.0 and math.isfinite(a)):
        raise DomainError(f"lower limit must be >= 0, got {a!r}")
    cube = 8.0 * h * h * h  # (2H)^3
    x = 2.0 * a * h
    if x == 0.0:
        return 2.0 * ZETA_3 / cube
    y = math.exp(-x)
    if y == 0.0:
        return 0.0
    # -ln(1 - e^-x): for y >= 1/2 go through expm1 so the small exponent
    # keeps full precision; for y < 1/2 the complement 1 - y sits next to
    # 1.0 and expm1 would shave ~8 digits off, so use log1p in y instead.
    if y >= 0.5:
        li1 = -math.log(-math.expm1(-x))
    else:
        li1 = -math.log1p(-y)
    return (x * x * li1 + 2.0 * x * _li2(y) + 2.0 * _li3(y)) / cube


def _map_point(x: float, a: float, scale: float, transform: Transform) -> float:
    # inverse of the semi-infinite change of variable, for breakpoint hints
    u = (x - a) / scale
    if transform is Transform.EXPONENTIAL:
        return -math.expm1(-u)
    return u / (1.0 + u)


def integrate_1d(
    f: Callable[[float], float],
    domain: tuple[float, float],
    spec: QuadratureSpec | None = None,
    *,
    transform: Transform | None = None,
    scale: float = 1.0,
    points: Sequence[float] | None = None,
) -> IntegralResult:
    """Adaptive Gauss-Kronrod integration of ``f`` over ``domain``.

    Finite domains go straight to the adaptive rule.  Semi-infinite domains
    (upper bound ``inf``) are first mapped onto (0, 1) by the transform named
    in ``spec`` (or the ``transform`` override), with an optional length
    ``scale`` matching the integrand's decay.  The underlying rule only ever
    evaluates interior nodes, so integrable endpoint singularities are fine.

    Parameters
    ----------
    f : callable
        Scalar integrand.
    domain : tuple
        (a, b); b may be ``math.inf``.
    spec : QuadratureSpec, optional
        Tolerances and subdivision budget; defaults are tight.
    transform : Transform, optional
        Override for the semi-infinite change of variable.
    scale : float
        Characteristic length of the transform, > 0.
    points : sequence of float, optional
        Interior locations (in the original variable) where the integrand has
        known structure; the subdivision starts there.

    Returns
    -------
    IntegralResult
        Unconverged results are returned, not raised; a non-finite value
        raises IntegrationFailureError.
    """
    spec = spec or QuadratureSpec()
    a, b = domain
    if not math.isfinite(a):
        raise DomainError("lower integration limit must be finite")
    if not (scale > 0.0 and math.isfinite(scale)):
        raise DomainError(f"transform scale must be positive, got {scale!r}")

    if math.isinf(b):
        tr = transform or spec.semi_infinite_transform
        if tr is Transform.EXPONENTIAL:
            def g(t: float) -> float:
                w = 1.0 - t
                return f(a - scale * math.log(w)) * scale / w
        else:
            def g(t: float) -> float:
                w = 1.0 - t
                return f(a + scale * t / w) * scale / (w * w)
        lo, hi = 0.0, 1.0
        if points is not None:
            mapped = [_map_point(p, a, scale, tr) for p in points if p > a]
            pts = sorted(t for t in mapped if 0.0 < t < 1.0)
        else:
            pts = None
        func = g
    else:
        if b <= a:
            raise DomainError(f"empty or reversed domain ({a!r}, {b!r})")
        lo, hi = a, b
        pts = sorted(p for p in points if lo < p < hi) if points else None
        func = f

    out = _quad(
        func,
        lo,
        hi,
        epsabs=spec.abs_tol,
        epsrel=spec.rel_tol,
        limit=spec.max_subdivisions,
        points=pts if pts else None,
        full_output=1,
    )
    value, abserr, info = out[0], out[1], out[2]
    exhausted = len(out) > 3
    if not math.isfinite(value):
        raise IntegrationFailureError(
            f"integral over {domain} returned a non-finite value", abserr
        )
    converged = (not exhausted) and abserr <= max(
        spec.abs_tol, spec.rel_tol * abs(value)
    )
    return IntegralResult(
        value=value,
        error_estimate=float(abserr),
        evaluations=int(info["neval"]),
        converged=converged,
    )


def integrate_2d_oracle(
    f: Callable[[float, float], float],
    spec: QuadratureSpec | None = None,
    *,
    outer_scale: float = 1.0,
    inner_scale: float = 1.0,
) -> IntegralResult:
    """Brute-force nested integration of ``f(p0, q)`` over [0, inf)^2.

    The outer adaptive pass runs over ``p0``; each outer evaluation performs
    a full inner adaptive integral over ``q`` at a ten-times tighter
    tolerance.  The integrand receives the measure as-is (include any q
    factor in ``f`` itself).  Slow by design: this routine exists to check
    closed-form reductions, not to be fast.

    Returns
    -------
    IntegralResult
        ``evaluations`` counts every inner integrand call plus the outer
        nodes; ``converged`` requires the outer pass and every inner pass to
        meet their tolerances.
    """
    spec = spec or QuadratureSpec()
    inner_spec = replace(spec, rel_tol=spec.rel_tol * 0.1, abs_tol=spec.abs_tol * 0.1)

    state = {"inner_evals": 0, "inner_err": 0.0, "inner_ok": True}

    def outer_integrand(p0: float) -> float:
        res = integrate_1d(
            lambda q: f(p0, q), (0.0, math.inf), inner_spec, scale=inner_scale
        )
        state["inner_evals"] += res.evaluations
        state["inner_err"] = max(state["inner_err"], res.error_estimate)
        state["inner_ok"] = state["inner_ok"] and res.converged
        return res.value

    outer = integrate_1d(
        outer_integrand, (0.0, math.inf), spec, scale=outer_scale
    )
    return IntegralResult(
        value=outer.value,
        error_estimate=outer.error_estimate + state["inner_err"],
        evaluations=outer.evaluations + state["inner_evals"],
        converged=outer.converged and state["inner_ok"],
    )
