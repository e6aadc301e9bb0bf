"""Susceptibility models and the media built from them.

The medium is a continuum of harmonic oscillators linearly coupled to the
field.  Only the coupling ratio g(w') (oscillator coupling density over mass
density) is physical, so every model is parametrized directly by the response
it produces:

* on the imaginary frequency axis (Wick rotated), chi_bar(xi) =
  integral g(w') / (w'^2 + xi^2) dw', real and positive;
* on the real axis, the absorptive part Im chi(w) = (pi/2) g(w) / w.

These two are linked by the Kramers-Kronig transform

    chi_bar(xi) = (2/pi) integral_0^inf w Im chi(w) / (w^2 + xi^2) dw,

implemented here as an independent cross-check of every closed form.

All quantities are in natural units (hbar = c = 1); frequencies carry an
arbitrary common unit and susceptibilities are dimensionless.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DomainError,
    IntegrationFailureError,
    MediumFileError,
    MediumInstabilityError,
    PoleError,
    UnsupportedDistributionError,
)
from .quadrature import QuadratureSpec, Transform, integrate_1d

__all__ = [
    "SusceptibilityModel",
    "Constant",
    "Lorentz",
    "Drude",
    "SharpResonance",
    "TabulatedCoupling",
    "Medium",
    "FieldKind",
    "VACUUM",
    "chi_bar",
    "im_chi_real_axis",
    "kk_imaginary_axis",
    "refractive_index",
    "medium_from_dict",
    "load_medium",
]


class FieldKind(enum.Enum):
    """Field content of the calculation.

    SCALAR ignores the magnetic model entirely; EM uses both electric and
    magnetic susceptibilities and doubles the mode count (two transverse
    polarizations contribute equally).
    """

    SCALAR = "scalar"
    EM = "em"


def _check_xi(xi: float) -> None:
    if not (xi >= 0.0 and math.isfinite(xi)):
        raise DomainError(f"imaginary-axis frequency must be >= 0, got {xi!r}")


def _check_omega(omega: float) -> None:
    if not (omega > 0.0 and math.isfinite(omega)):
        raise DomainError(f"real-axis frequency must be > 0, got {omega!r}")


class SusceptibilityModel:
    """Base class for the oscillator-continuum response models.

    Concrete models implement the Wick-rotated response ``chi_bar``, the
    real-axis absorptive part ``im_chi`` and the full complex retarded
    response ``chi_real_axis``.  Instances are immutable and safe to share
    across threads.
    """

    def chi_bar(self, xi: float) -> float:
        """Susceptibility on the imaginary frequency axis, real and >= 0."""
        raise NotImplementedError

    def im_chi(self, omega: float) -> float:
        """Absorptive part of the response at real frequency omega > 0."""
        raise NotImplementedError

    def chi_real_axis(self, omega: float) -> complex:
        """Full complex retarded response at real frequency."""
        raise NotImplementedError

    @property
    def has_absorption(self) -> bool:
        """True when im_chi is a genuine function (not zero or a delta)."""
        return False

    def frequency_scale(self) -> float:
        """Characteristic frequency of the model, used to scale quadrature."""
        return 1.0

    def _dispersion_breakpoints(self) -> tuple[float, ...]:
        # frequencies where real-axis integrands have structure
        return ()

    def _im_chi_zero_limit(self) -> float:
        # limit of im_chi as omega -> 0+, needed only for static evaluations
        return 0.0


@dataclass(frozen=True)
class Constant(SusceptibilityModel):
    """Frequency-independent, lossless susceptibility chi0 >= 0."""

    chi0: float

    def __post_init__(self):
        if not (self.chi0 >= 0.0 and math.isfinite(self.chi0)):
            raise DomainError(f"chi0 must be >= 0, got {self.chi0!r}")

    def chi_bar(self, xi: float) -> float:
        _check_xi(xi)
        return self.chi0

    def im_chi(self, omega: float) -> float:
        _check_omega(omega)
        return 0.0

    def chi_real_axis(self, omega: float) -> complex:
        return complex(self.chi0)


@dataclass(frozen=True)
class Lorentz(SusceptibilityModel):
    """Damped resonance: chi(w) = omega_p^2 / (omega_0^2 - w^2 - i gamma w).

    On the imaginary axis chi_bar(xi) = omega_p^2/(omega_0^2 + xi^2 + gamma xi).
    gamma = 0 degenerates to a lossless sharp resonance.
    """

    omega_p: float
    omega_0: float
    gamma: float = 0.0

    def __post_init__(self):
        if not (self.omega_p > 0.0 and math.isfinite(self.omega_p)):
            raise DomainError(f"omega_p must be > 0, got {self.omega_p!r}")
        if not (self.omega_0 > 0.0 and math.isfinite(self.omega_0)):
            raise DomainError(f"omega_0 must be > 0, got {self.omega_0!r}")
        if not (self.gamma >= 0.0 and math.isfinite(self.gamma)):
            raise DomainError(f"gamma must be >= 0, got {self.gamma!r}")

    def chi_bar(self, xi: float) -> float:
        _check_xi(xi)
        wp2 = self.omega_p * self.omega_p
        return wp2 / (self.omega_0 * self.omega_0 + xi * xi + self.gamma * xi)

    def im_chi(self, omega: float) -> float:
        _check_omega(omega)
        if self.gamma == 0.0:
            if omega == self.omega_0:
                raise UnsupportedDistributionError(
                    "lossless resonance has a delta-function absorption line; "
                    "Im chi is not a number exactly on resonance"
                )
            return 0.0
        wp2 = self.omega_p * self.omega_p
        d = self.omega_0 * self.omega_0 - omega * omega
        return wp2 * self.gamma * omega / (d * d + self.gamma**2 * omega * omega)

    def chi_real_axis(self, omega: float) -> complex:
        wp2 = self.omega_p * self.omega_p
        den = complex(
            self.omega_0 * self.omega_0 - omega * omega, -self.gamma * omega
        )
        if den == 0:
            raise PoleError(f"undamped resonance pole at omega = {omega!r}")
        return wp2 / den

    @property
    def has_absorption(self) -> bool:
        return self.gamma > 0.0

    def frequency_scale(self) -> float:
        return max(self.omega_p, self.omega_0, self.gamma)

    def _dispersion_breakpoints(self) -> tuple[float, ...]:
        w0, g = self.omega_0, self.gamma
        return tuple(w for w in (w0 - g, w0, w0 + g) if w > 0.0)


@dataclass(frozen=True)
class Drude(SusceptibilityModel):
    """Free-carrier response: chi(w) = -omega_p^2 / (w^2 + i gamma w).

    chi_bar(xi) = omega_p^2/(xi^2 + gamma xi) diverges at xi = 0, so nothing
    may evaluate this model exactly at zero imaginary frequency; the adaptive
    integrators only touch interior nodes and stay clear of it.
    """

    omega_p: float
    gamma: float

    def __post_init__(self):
        if not (self.omega_p > 0.0 and math.isfinite(self.omega_p)):
            raise DomainError(f"omega_p must be > 0, got {self.omega_p!r}")
        if not (self.gamma > 0.0 and math.isfinite(self.gamma)):
            raise DomainError(f"gamma must be > 0, got {self.gamma!r}")

    def chi_bar(self, xi: float) -> float:
        _check_xi(xi)
        if xi == 0.0:
            raise DomainError(
                "free-carrier response diverges at zero imaginary frequency"
            )
        return self.omega_p * self.omega_p / (xi * xi + self.gamma * xi)

    def im_chi(self, omega: float) -> float:
        _check_omega(omega)
        wp2 = self.omega_p * self.omega_p
        return wp2 * self.gamma / (omega * (omega * omega + self.gamma**2))

    def chi_real_axis(self, omega: float) -> complex:
        if omega == 0.0:
            raise DomainError("free-carrier response diverges at zero frequency")
        wp2 = self.omega_p * self.omega_p
        return -wp2 / complex(omega * omega, self.gamma * omega)

    @property
    def has_absorption(self) -> bool:
        return True

    def frequency_scale(self) -> float:
        return max(self.omega_p, self.gamma)

    def _dispersion_breakpoints(self) -> tuple[float, ...]:
        return (self.gamma,)

    def _im_chi_zero_limit(self) -> float:
        raise DomainError("free-carrier absorption diverges as omega -> 0")


@dataclass(frozen=True)
class SharpResonance(SusceptibilityModel):
    """Single undamped oscillator line at omega_0 with weight omega_p^2.

    The coupling density is a delta function, so chi_bar is a plain pole-free
    closed form while the real-axis absorption is distributional: off
    resonance it is zero, exactly on resonance it has no pointwise value.
    """

    omega_p: float
    omega_0: float

    def __post_init__(self):
        if not (self.omega_p > 0.0 and math.isfinite(self.omega_p)):
            raise DomainError(f"omega_p must be > 0, got {self.omega_p!r}")
        if not (self.omega_0 > 0.0 and math.isfinite(self.omega_0)):
            raise DomainError(f"omega_0 must be > 0, got {self.omega_0!r}")

    def chi_bar(self, xi: float) -> float:
        _check_xi(xi)
        return self.omega_p**2 / (self.omega_0**2 + xi * xi)

    def im_chi(self, omega: float) -> float:
        _check_omega(omega)
        if omega == self.omega_0:
            raise UnsupportedDistributionError(
                "absorption of a sharp line is a delta function; it has no "
                "pointwise value on resonance"
            )
        return 0.0

    def chi_real_axis(self, omega: float) -> complex:
        d = self.omega_0**2 - omega * omega
        if abs(d) <= 1e-12 * self.omega_0**2:
            raise PoleError(f"sharp resonance pole at omega = {omega!r}")
        return complex(self.omega_p**2 / d)

    def frequency_scale(self) -> float:
        return max(self.omega_p, self.omega_0)

    def _dispersion_breakpoints(self) -> tuple[float, ...]:
        return (self.omega_0,)


@dataclass(frozen=True, eq=False)
class TabulatedCoupling(SusceptibilityModel):
    """Coupling density g(w') sampled on an ascending positive grid.

    Between nodes g is linear; outside the grid it is zero.  chi_bar is the
    exact integral of that piecewise-linear interpolant against
    1/(w'^2 + xi^2) (per-segment log/arctan closed form), so it carries no
    quadrature error of its own.
    """

    omega_grid: tuple[float, ...]
    g_values: tuple[float, ...]
    _slopes: np.ndarray = field(init=False, repr=False, compare=False)
    _offsets: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        w = np.asarray(self.omega_grid, dtype=float)
        g = np.asarray(self.g_values, dtype=float)
        if w.ndim != 1 or w.size < 2:
            raise DomainError("omega_grid needs at least two ascending nodes")
        if g.shape != w.shape:
            raise DomainError(
                f"g_values length {g.size} does not match omega_grid length {w.size}"
            )
        if not np.all(np.isfinite(w)) or not np.all(np.isfinite(g)):
            raise DomainError("grid and coupling values must be finite")
        if w[0] <= 0.0 or np.any(np.diff(w) <= 0.0):
            raise DomainError("omega_grid must be strictly ascending and > 0")
        if np.any(g < 0.0):
            raise DomainError("coupling density must be >= 0 everywhere")
        object.__setattr__(self, "omega_grid", tuple(float(x) for x in w))
        object.__setattr__(self, "g_values", tuple(float(x) for x in g))
        slopes = np.diff(g) / np.diff(w)
        object.__setattr__(self, "_slopes", slopes)
        object.__setattr__(self, "_offsets", g[:-1] - slopes * w[:-1])

    def _g(self, omega: float) -> float:
        w = self.omega_grid
        if omega <= w[0] or omega >= w[-1]:
            # zero extrapolation, closed at the exact endpoints
            if omega == w[0]:
                return self.g_values[0]
            if omega == w[-1]:
                return self.g_values[-1]
            return 0.0
        return float(np.interp(omega, w, self.g_values))

    def chi_bar(self, xi: float) -> float:
        _check_xi(xi)
        w = np.asarray(self.omega_grid)
        u1, u2 = w[:-1], w[1:]
        m, b = self._slopes, self._offsets
        xi2 = xi * xi
        log_part = 0.5 * m * np.log((u2 * u2 + xi2) / (u1 * u1 + xi2))
        if xi == 0.0:
            atan_part = b * (1.0 / u1 - 1.0 / u2)
        else:
            # atan(u2/xi) - atan(u1/xi) rewritten to stay stable for small xi
            atan_part = b * np.arctan(xi * (u2 - u1) / (xi2 + u1 * u2)) / xi
        return float(np.sum(log_part + atan_part))

    def im_chi(self, omega: float) -> float:
        _check_omega(omega)
        return 0.5 * math.pi * self._g(omega) / omega

    def chi_real_axis(
        self, omega: float, spec: QuadratureSpec | None = None
    ) -> complex:
        if omega == 0.0:
            return complex(self.chi_bar(0.0))
        spec = spec or QuadratureSpec(rel_tol=1e-8, abs_tol=1e-10)
        a = abs(omega)
        w0, w1 = self.omega_grid[0], self.omega_grid[-1]
        if w0 < a < w1:
            # principal value via singularity subtraction on
            # g(u)/(u^2 - a^2) = [g(u)/(u+a)] / (u - a)
            def h(u: float) -> float:
                return self._g(u) / (u + a)

            ha = h(a)

            def reg(u: float) -> float:
                if u == a:
                    return 0.0
                return (h(u) - ha) / (u - a)

            pts = sorted(set(self.omega_grid[1:-1]) | {a})
            res = integrate_1d(reg, (w0, w1), spec, points=pts)
            real = res.value + ha * math.log((w1 - a) / (a - w0))
        else:
            def plain(u: float) -> float:
                return self._g(u) / (u * u - a * a)

            res = integrate_1d(plain, (w0, w1), spec,
                               points=self.omega_grid[1:-1])
            real = res.value
        if not res.converged:
            raise IntegrationFailureError(
                "principal-value dispersion integral did not converge",
                res.error_estimate,
            )
        imag = 0.5 * math.pi * self._g(a) / a * math.copysign(1.0, omega)
        return complex(real, imag)

    @property
    def has_absorption(self) -> bool:
        return any(v > 0.0 for v in self.g_values)

    def frequency_scale(self) -> float:
        return self.omega_grid[-1]

    def _dispersion_breakpoints(self) -> tuple[float, ...]:
        # every node is a kink of the interpolant
        return self.omega_grid


@dataclass(frozen=True)
class Medium(object):
    """Electric plus magnetic response enclosed between the mirrors."""

    electric: SusceptibilityModel
    magnetic: SusceptibilityModel = Constant(0.0)

    def chi_e_bar(self, xi: float) -> float:
        return self.electric.chi_bar(xi)

    def chi_m_bar(self, xi: float) -> float:
        return self.magnetic.chi_bar(xi)

    def epsilon_bar(self, xi: float) -> float:
        """Permittivity 1 + chi_e on the imaginary axis."""
        return 1.0 + self.chi_e_bar(xi)

    def mu_bar(self, xi: float) -> float:
        """Permeability 1/(1 - chi_m) on the imaginary axis.

        Raises MediumInstabilityError once chi_m reaches 1.
        """
        chi_m = self.chi_m_bar(xi)
        if chi_m >= 1.0:
            raise MediumInstabilityError(xi, chi_m)
        return 1.0 / (1.0 - chi_m)

    def refractive_index(self, kind: FieldKind, xi: float) -> float:
        """Euclidean refractive index n(xi) for the given field content.

        Scalar: n = sqrt(1 + chi_e).  EM: n = sqrt(mu_bar * epsilon_bar) =
        sqrt((1 + chi_e)/(1 - chi_m)).
        """
        if kind is FieldKind.SCALAR:
            return math.sqrt(1.0 + self.chi_e_bar(xi))
        return math.sqrt(self.epsilon_bar(xi) * self.mu_bar(xi))


VACUUM = Medium(Constant(0.0), Constant(0.0))


def chi_bar(model: SusceptibilityModel, xi: float) -> float:
    """Wick-rotated susceptibility of ``model`` at imaginary frequency xi."""
    return model.chi_bar(xi)


def im_chi_real_axis(model: SusceptibilityModel, omega: float) -> float:
    """Absorptive part of the response at real frequency omega > 0."""
    return model.im_chi(omega)


def kk_imaginary_axis(
    model: SusceptibilityModel, xi: float, spec: QuadratureSpec | None = None
) -> float:
    """Imaginary-axis susceptibility from the absorptive real-axis data.

    Evaluates (2/pi) integral_0^inf w Im chi(w) / (w^2 + xi^2) dw by adaptive
    quadrature.  For every closed-form chi_bar this must agree with it; the
    two routes share no code, which is the point.

    Only models with genuine absorption qualify (delta lines and lossless
    constants have no integrable Im chi).
    """
    _check_xi(xi)
    if not model.has_absorption:
        raise DomainError(
            "dispersion transform needs a model with nonzero absorption"
        )
    spec = spec or QuadratureSpec()
    xi2 = xi * xi
    two_over_pi = 2.0 / math.pi

    def integrand(w: float) -> float:
        return two_over_pi * w * model.im_chi(w) / (w * w + xi2)

    pts = sorted(set(model._dispersion_breakpoints()) | ({xi} if xi > 0 else set()))
    res = integrate_1d(
        integrand,
        (0.0, math.inf),
        spec,
        transform=Transform.RATIONAL,
        scale=model.frequency_scale(),
        points=pts,
    )
    if not res.converged:
        raise IntegrationFailureError(
            f"dispersion integral at xi = {xi:g} did not converge",
            res.error_estimate,
        )
    return res.value


def refractive_index(medium: Medium, kind: FieldKind, xi: float) -> float:
    """Module-level alias for Medium.refractive_index."""
    return medium.refractive_index(kind, xi)


_MODEL_FIELDS = {
    "constant": ("chi0",),
    "lorentz": ("omega_p", "omega_0", "gamma"),
    "drude": ("omega_p", "gamma"),
    "sharp_resonance": ("omega_p", "omega_0"),
    "tabulated": ("omega_grid", "g_values"),
}

_MODEL_OPTIONAL = {"lorentz": {"gamma": 0.0}}


def _model_from_dict(cfg: object, path: str) -> SusceptibilityModel:
    if not isinstance(cfg, dict):
        raise MediumFileError(f"{path}: expected an object, got {type(cfg).__name__}")
    if "type" not in cfg:
        raise MediumFileError(f"{path}.type: missing (one of {sorted(_MODEL_FIELDS)})")
    kind = cfg["type"]
    if kind not in _MODEL_FIELDS:
        raise MediumFileError(
            f"{path}.type: unknown model {kind!r} (one of {sorted(_MODEL_FIELDS)})"
        )
    wanted = _MODEL_FIELDS[kind]
    optional = _MODEL_OPTIONAL.get(kind, {})
    extra = set(cfg) - set(wanted) - {"type"}
    if extra:
        raise MediumFileError(
            f"{path}.{sorted(extra)[0]}: unexpected field for model {kind!r}"
        )
    kwargs = {}
    for name in wanted:
        if name not in cfg:
            if name in optional:
                kwargs[name] = optional[name]
                continue
            raise MediumFileError(f"{path}.{name}: missing required field")
        value = cfg[name]
        if kind == "tabulated" and name in ("omega_grid", "g_values"):
            if not isinstance(value, list) or not all(
                isinstance(x, (int, float)) and not isinstance(x, bool) for x in value
            ):
                raise MediumFileError(f"{path}.{name}: must be a list of numbers")
            kwargs[name] = tuple(float(x) for x in value)
        else:
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise MediumFileError(f"{path}.{name}: must be a number")
            kwargs[name] = float(value)
    cls = {
        "constant": Constant,
        "lorentz": Lorentz,
        "drude": Drude,
        "sharp_resonance": SharpResonance,
        "tabulated": TabulatedCoupling,
    }[kind]
    try:
        return cls(**kwargs)
    except DomainError as err:
        raise MediumFileError(f"{path}: {err}") from err


def medium_from_dict(cfg: object) -> Medium:
    """Build a Medium from a plain dict (the JSON file schema).

    Schema: {"electric": {"type": ..., ...}, "magnetic": {...}} where
    "magnetic" is optional and defaults to no magnetic response.  Errors name
    the offending field.
    """
    if not isinstance(cfg, dict):
        raise MediumFileError(
            f"medium: expected an object, got {type(cfg).__name__}"
        )
    unknown = set(cfg) - {"electric", "magnetic"}
    if unknown:
        raise MediumFileError(f"medium.{sorted(unknown)[0]}: unexpected field")
    if "electric" not in cfg:
        raise MediumFileError("medium.electric: missing required field")
    electric = _model_from_dict(cfg["electric"], "medium.electric")
    if "magnetic" in cfg:
        magnetic = _model_from_dict(cfg["magnetic"], "medium.magnetic")
    else:
        magnetic = Constant(0.0)
    return Medium(electric=electric, magnetic=magnetic)


def load_medium(path: str) -> Medium:
    """Load a medium description from a JSON file.

    Syntax errors report line and column; schema errors report the field.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        raise MediumFileError(f"{path}: {err.strerror or err}") from err
    try:
        cfg = json.loads(text)
    except json.JSONDecodeError as err:
        raise MediumFileError(
            f"{path}:{err.lineno}:{err.colno}: {err.msg}"
        ) from err
    return medium_from_dict(cfg)
