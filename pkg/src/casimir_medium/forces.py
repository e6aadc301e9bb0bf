"""Casimir force per unit area between ideal parallel mirrors.

All routes start from the per-mode determinant of the two-plate correlation
matrix: each mode (Euclidean frequency p0, in-plane momentum q) contributes
ln(1 - exp(-2 E H)) with E = sqrt(n(p0)^2 p0^2 + q^2), and the force is the
H-derivative of the mode-summed effective action.  Carrying out the
derivative and the in-plane integral gives the closed-form route

    F(H) = -(m / 2 pi^2) integral_0^inf dp0  I(n(p0) p0, H),

with I the Bose-type mode integral from ``quadrature`` and m the number of
contributing polarizations (1 scalar, 2 EM).  Signs follow the attractive
convention: forces are negative.

The module also provides the slow independent routes used to check the fast
one (a brute-force 2D integral, and a finite-difference derivative of the
effective action) plus the force with boundary conditions imposed on the
polarization field instead of the field itself.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import DomainError, InvalidRegimeError
from .medium import Constant, FieldKind, Medium, TabulatedCoupling, VACUUM
from .quadrature import (
    QuadratureSpec,
    inner_mode_integral,
    integrate_1d,
    integrate_2d_oracle,
)

__all__ = [
    "BoundaryCondition",
    "ForceQuery",
    "ForceResult",
    "ModeLogDet",
    "vacuum_force_analytic",
    "force_field_bc",
    "force_polarization_bc",
    "mode_logdet",
    "force_via_action_fd",
    "nondispersive_scaling_check",
    "matter_only_force",
]

_PI2 = math.pi * math.pi


class BoundaryCondition(enum.Enum):
    """What vanishes on the mirrors.

    FIELD: the field itself (imposing conditions on field and matter jointly
    gives the identical determinant, so it is covered by this case too).
    POLARIZATION: only the polarization field, scalar calculations only.
    """

    FIELD = "field"
    POLARIZATION = "polarization"


@dataclass(frozen=True)
class ForceQuery:
    """Inputs of one force evaluation."""

    medium: Medium = VACUUM
    kind: FieldKind = FieldKind.SCALAR
    bc: BoundaryCondition = BoundaryCondition.FIELD
    separation: float = 1.0
    spec: QuadratureSpec = field(default_factory=QuadratureSpec)
    em_polarization_multiplicity: int | None = None

    def __post_init__(self):
        if not (self.separation > 0.0 and math.isfinite(self.separation)):
            raise DomainError(
                f"separation must be > 0, got {self.separation!r}"
            )
        m = self.em_polarization_multiplicity
        if m is not None:
            if self.kind is FieldKind.SCALAR and m != 1:
                raise DomainError(
                    "a scalar field has exactly one polarization"
                )
            if m < 1:
                raise DomainError(f"multiplicity must be >= 1, got {m!r}")

    @property
    def multiplicity(self) -> int:
        if self.em_polarization_multiplicity is not None:
            return self.em_polarization_multiplicity
        return 2 if self.kind is FieldKind.EM else 1


@dataclass(frozen=True)
class ForceResult:
    """Force per unit area plus the quadrature metadata behind it.

    ``vacuum_ratio`` is the force divided by the ideal-mirror vacuum force of
    the same field content at the same separation; media always suppress, so
    it lies in (0, 1] for passive media.
    """

    separation: float
    force_per_area: float
    error_estimate: float
    evaluations: int
    vacuum_ratio: float
    converged: bool


@dataclass(frozen=True)
class ModeLogDet:
    """H-dependent part of one mode's two-plate log determinant."""

    energy: float
    separation: float
    value: float


def vacuum_force_analytic(kind: FieldKind, separation: float) -> float:
    """Ideal-mirror vacuum force: -pi^2/(480 H^4) scalar, doubled for EM."""
    if not (separation > 0.0 and math.isfinite(separation)):
        raise DomainError(f"separation must be > 0, got {separation!r}")
    h4 = separation**4
    base = -_PI2 / (480.0 * h4)
    return 2.0 * base if kind is FieldKind.EM else base


def _gap_frequency(medium: Medium, kind: FieldKind, p0: float) -> float:
    # n(p0) * p0, the in-plane mass gap of the mode
    return medium.refractive_index(kind, p0) * p0


def force_field_bc(query: ForceQuery) -> ForceResult:
    """Force with the field pinned on both mirrors (closed-form route).

    Integrates the polylogarithm closed form of the in-plane mode integral
    over the Euclidean frequency.  Non-convergence of the frequency integral
    is flagged on the result, not raised.
    """
    if query.bc is not BoundaryCondition.FIELD:
        raise DomainError("this route computes the field boundary condition")
    medium, kind, h = query.medium, query.kind, query.separation

    def integrand(p0: float) -> float:
        return inner_mode_integral(_gap_frequency(medium, kind, p0), h)

    res = integrate_1d(
        integrand, (0.0, math.inf), query.spec, scale=1.0 / (2.0 * h)
    )
    prefactor = query.multiplicity / (2.0 * _PI2)
    force = -prefactor * res.value
    return ForceResult(
        separation=h,
        force_per_area=force,
        error_estimate=prefactor * res.error_estimate,
        evaluations=res.evaluations,
        vacuum_ratio=force / vacuum_force_analytic(kind, h),
        converged=res.converged,
    )


def _is_zero_model(model) -> bool:
    if isinstance(model, Constant):
        return model.chi0 == 0.0
    if isinstance(model, TabulatedCoupling):
        return not model.has_absorption
    return False


def force_polarization_bc(query: ForceQuery) -> ForceResult:
    """Force with only the polarization field pinned on the mirrors.

    Scalar field only.  Per mode the determinant entry picks up the local
    polarization noise, giving the integrand

        chi_bar^2(p0) E exp(-2EH) / (alpha - exp(-2EH)),
        alpha = E Im chi(p0) + chi_bar^2(p0),

    integrated over (1/2 pi^2) q dq dp0.  The absorptive part is evaluated at
    real frequency equal to the Euclidean one; that identification is kept in
    one place (``_polarization_noise``) so it can be swapped out.  Where the
    denominator loses positivity the medium is outside this boundary
    condition's regime of validity and InvalidRegimeError is raised (modes
    with zero coupling contribute nothing and are exempt).  A vanishing
    electric response gives exactly zero force.
    """
    if query.bc is not BoundaryCondition.POLARIZATION:
        raise DomainError("this route computes the polarization boundary condition")
    if query.kind is not FieldKind.SCALAR:
        raise DomainError(
            "polarization boundary conditions are implemented for the scalar field"
        )
    medium, h = query.medium, query.separation
    if _is_zero_model(medium.electric):
        return ForceResult(
            separation=h,
            force_per_area=0.0,
            error_estimate=0.0,
            evaluations=0,
            vacuum_ratio=0.0,
            converged=True,
        )

    electric = medium.electric

    def integrand(p0: float, q: float) -> float:
        chi = electric.chi_bar(p0)
        chi2 = chi * chi
        if chi2 == 0.0:
            return 0.0
        energy = math.sqrt((1.0 + chi) * p0 * p0 + q * q)
        decay = math.exp(-2.0 * energy * h)
        alpha = energy * _polarization_noise(electric, p0) + chi2
        den = alpha - decay
        if den <= 0.0:
            raise InvalidRegimeError(p0, q, den)
        return q * chi2 * energy * decay / den

    scale = 1.0 / (2.0 * h)
    res = integrate_2d_oracle(
        integrand, query.spec, outer_scale=scale, inner_scale=scale
    )
    force = -res.value / (2.0 * _PI2)
    return ForceResult(
        separation=h,
        force_per_area=force,
        error_estimate=res.error_estimate / (2.0 * _PI2),
        evaluations=res.evaluations,
        vacuum_ratio=force / vacuum_force_analytic(FieldKind.SCALAR, h),
        converged=res.converged,
    )


def _polarization_noise(model, p0: float) -> float:
    """Absorptive strength entering the polarization-pinned determinant.

    The Euclidean-frequency susceptibility is strictly real, so the noise
    term is read off the real axis at omega = p0.  Models whose absorption
    vanishes (lossless) contribute zero here.
    """
    return model.im_chi(p0)


def mode_logdet(energy: float, separation: float, bc: str = "dirichlet") -> ModeLogDet:
    """H-dependent part of one mode's log determinant: ln(1 - exp(-2EH)).

    The Neumann variant differs only by an H-independent normalization
    (regularized as a ratio of determinants), so both names return the same
    value; the argument exists to make call sites explicit.
    """
    if bc not in ("dirichlet", "neumann"):
        raise DomainError(f"boundary condition must be dirichlet or neumann, got {bc!r}")
    if not (energy > 0.0 and math.isfinite(energy)):
        raise DomainError(f"mode energy must be > 0, got {energy!r}")
    if not (separation > 0.0 and math.isfinite(separation)):
        raise DomainError(
            f"separation must be > 0, got {separation!r} "
            "(the determinant diverges at contact)"
        )
    value = math.log1p(-math.exp(-2.0 * energy * separation))
    return ModeLogDet(energy=energy, separation=separation, value=value)


def force_via_action_fd(query: ForceQuery, delta: float) -> float:
    """Force as a central finite difference of the effective action.

    The effective action per unit area is -(m / 4 pi^2) times the (p0, q)
    integral of q ln(1 - exp(-2EH)); its H-derivative is the force.  The
    central difference is applied per mode and integrated by the brute-force
    2D scheme (differencing commutes with the integral, and differencing
    first avoids cancellation between two large action values).  The
    truncation error is O(delta^2) by construction, which is exactly what
    this route exists to demonstrate against the closed-form one.
    """
    if query.bc is not BoundaryCondition.FIELD:
        raise DomainError("the action route computes the field boundary condition")
    if not (0.0 < delta < query.separation):
        raise DomainError(
            f"step must satisfy 0 < delta < separation, got {delta!r}"
        )
    medium, kind, h = query.medium, query.kind, query.separation

    def integrand(p0: float, q: float) -> float:
        energy = math.hypot(_gap_frequency(medium, kind, p0), q)
        upper = math.log1p(-math.exp(-2.0 * energy * (h + delta)))
        lower = math.log1p(-math.exp(-2.0 * energy * (h - delta)))
        return q * (upper - lower) / (2.0 * delta)

    scale = 1.0 / (2.0 * h)
    res = integrate_2d_oracle(
        integrand, query.spec, outer_scale=scale, inner_scale=scale
    )
    return -query.multiplicity / (4.0 * _PI2) * res.value


def nondispersive_scaling_check(
    chi0: float,
    kind: FieldKind = FieldKind.SCALAR,
    separation: float = 1.0,
    spec: QuadratureSpec | None = None,
) -> float:
    """Ratio of the constant-medium force to the vacuum force.

    For a frequency-independent susceptibility the spectrum is the vacuum one
    stretched by n = sqrt(1 + chi0), so the ratio must be exactly 1/n at
    every separation.  Returns the computed ratio; the caller compares.
    """
    query = ForceQuery(
        medium=Medium(electric=Constant(chi0)),
        kind=kind,
        separation=separation,
        spec=spec or QuadratureSpec(),
    )
    return force_field_bc(query).vacuum_ratio


def matter_only_force(separation: float) -> float:
    """Force when boundary conditions act on the matter fields alone: zero.

    The reservoir propagator carries no momentum dependence, so its
    cross-plate entry vanishes at any finite separation and the two-plate
    determinant is independent of H.  The vanishing is exact, not a limit.
    """
    if not (separation > 0.0 and math.isfinite(separation)):
        raise DomainError(f"separation must be > 0, got {separation!r}")
    return 0.0
