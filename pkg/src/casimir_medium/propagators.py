"""Momentum-space propagators of the field-matter system.

Free field, matter reservoir, the dressed field propagator on both frequency
axes, the mixed field-matter correlators, the geometric (self-energy
resummation) series whose closed form the dressed propagator must reproduce,
and the plate-to-plate gap kernel that feeds the force determinants.

Conventions: momenta are magnitudes (k >= 0), the retarded prescription is a
small imaginary shift eta in the denominator, and the Euclidean axis uses
xi >= 0 with strictly real, positive propagators.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import (
    DegenerateModeError,
    DomainError,
    MediumInstabilityError,
    PoleError,
)
from .medium import FieldKind, Medium

__all__ = [
    "Axis",
    "MomentumFrequencyPoint",
    "PropagatorValue",
    "CrossCorrelators",
    "DysonPartialSum",
    "GapKernel",
    "DEFAULT_ETA",
    "g0",
    "g_omega",
    "g_phiphi",
    "cross_correlators",
    "dyson_partial_sum",
    "gap_kernel",
    "reservoir_gap",
]

DEFAULT_ETA = 1e-8

_KINDS = ("G0", "Gomega", "Gphiphi", "GphiP", "GphiM", "GPP", "GMM")


class Axis(enum.Enum):
    """Frequency axis a momentum-space point lives on."""

    REAL = "real"
    EUCLIDEAN = "euclidean"


@dataclass(frozen=True)
class MomentumFrequencyPoint:
    """A (momentum magnitude, frequency) pair tagged with its axis.

    ``frequency`` is the real frequency omega on the real axis and the
    Euclidean frequency xi >= 0 on the imaginary axis.
    """

    k: float
    frequency: float
    axis: Axis

    def __post_init__(self):
        if not (self.k >= 0.0 and math.isfinite(self.k)):
            raise DomainError(f"momentum magnitude must be >= 0, got {self.k!r}")
        if not math.isfinite(self.frequency):
            raise DomainError(f"frequency must be finite, got {self.frequency!r}")
        if self.axis is Axis.EUCLIDEAN and self.frequency < 0.0:
            raise DomainError("Euclidean frequency must be >= 0")

    @classmethod
    def real_axis(cls, k: float, omega: float) -> "MomentumFrequencyPoint":
        return cls(k=k, frequency=omega, axis=Axis.REAL)

    @classmethod
    def euclidean(cls, k: float, xi: float) -> "MomentumFrequencyPoint":
        return cls(k=k, frequency=xi, axis=Axis.EUCLIDEAN)


@dataclass(frozen=True)
class PropagatorValue:
    """A single propagator evaluation with its identifying tags."""

    kind: str
    axis: Axis
    value: complex


@dataclass(frozen=True)
class CrossCorrelators:
    """Mixed and matter-matter correlators at one real-axis point.

    The polarization and magnetization autocorrelators each carry a local
    noise term equal to the absorptive part of their susceptibility on top of
    the part transmitted through the dressed field propagator.
    """

    g_phi_p: complex
    g_phi_m: complex
    g_pp: complex
    g_mm: complex


@dataclass(frozen=True)
class DysonPartialSum:
    """Truncated geometric resummation of the field self-energy.

    ``converged`` is False when |ratio| >= 1, in which case ``value`` is the
    (finite) partial sum but no closed form exists to converge to.
    """

    value: complex
    ratio: complex
    order: int
    converged: bool


@dataclass(frozen=True)
class GapKernel:
    """Cross-plate entry of the dressed propagator at separation H.

    ``energy`` is E = sqrt(n(p0)^2 p0^2 + q^2) for in-plane momentum q and
    Euclidean frequency p0; ``value`` is exp(-E H)/(2 E).  ``prefactor`` is
    the H-independent permeability factor of the EM field (1 for scalar); it
    multiplies the kernel at every separation equally, so it cancels in any
    force and is exposed separately rather than folded into ``value``.
    """

    energy: float
    separation: float
    value: float
    prefactor: float


def _sign(x: float) -> float:
    if x > 0.0:
        return 1.0
    if x < 0.0:
        return -1.0
    return 0.0


def g0(k: float, omega: float, eta: float = DEFAULT_ETA) -> complex:
    """Free-field propagator 1/(k^2 - omega^2) with retarded shift eta.

    The shift enters as 1/(k^2 - omega^2 - i eta sgn(omega)), which is
    negligible away from the light cone and regulates the pole on it.  With
    eta = 0 an on-cone evaluation raises PoleError.
    """
    if not (k >= 0.0 and math.isfinite(k)):
        raise DomainError(f"momentum magnitude must be >= 0, got {k!r}")
    if not (eta >= 0.0 and math.isfinite(eta)):
        raise DomainError(f"eta must be >= 0, got {eta!r}")
    scale = max(k * k, omega * omega)
    if scale <= 1e-24:
        raise DomainError("free propagator undefined at k = omega = 0")
    d = k * k - omega * omega
    if eta == 0.0:
        if abs(d) <= 1e-12 * scale:
            raise PoleError(
                f"on the light cone (k={k:g}, omega={omega:g}) with eta = 0"
            )
        return complex(1.0 / d)
    return 1.0 / complex(d, -eta * _sign(omega))


def g_omega(omega_res: float, omega_prime: float, eta: float = DEFAULT_ETA) -> complex:
    """Reservoir-oscillator propagator 1/(omega_res^2 - w'^2 - i eta).

    Normalized per unit mass density.  Carries no momentum dependence at all:
    the reservoir is local, which is what kills the matter-only Casimir
    force (see ``reservoir_gap``).
    """
    if not (omega_res > 0.0 and math.isfinite(omega_res)):
        raise DomainError(f"reservoir frequency must be > 0, got {omega_res!r}")
    if not (eta >= 0.0 and math.isfinite(eta)):
        raise DomainError(f"eta must be >= 0, got {eta!r}")
    d = omega_res * omega_res - omega_prime * omega_prime
    if eta == 0.0:
        if abs(d) <= 1e-12 * omega_res * omega_res:
            raise PoleError(f"reservoir pole at omega' = {omega_prime!r}")
        return complex(1.0 / d)
    return 1.0 / complex(d, -eta)


def reservoir_gap(omega_res: float, separation: float) -> float:
    """Cross-plate entry of the reservoir propagator: exactly zero.

    The reservoir propagator is momentum independent, so its position-space
    kernel is a contact term; at any finite separation H > 0 the cross-plate
    matrix entry vanishes identically and the resulting determinant carries
    no H dependence.
    """
    if not (omega_res > 0.0 and math.isfinite(omega_res)):
        raise DomainError(f"reservoir frequency must be > 0, got {omega_res!r}")
    if not (separation > 0.0 and math.isfinite(separation)):
        raise DomainError(
            f"separation must be > 0, got {separation!r} (contact term at 0)"
        )
    return 0.0


def _euclidean_denominator(
    medium: Medium, kind: FieldKind, k: float, xi: float
) -> float:
    chi_e = medium.chi_e_bar(xi)
    if kind is FieldKind.EM:
        chi_m = medium.chi_m_bar(xi)
        if chi_m >= 1.0:
            raise MediumInstabilityError(xi, chi_m)
    else:
        chi_m = 0.0
    return k * k * (1.0 - chi_m) + xi * xi * (1.0 + chi_e)


def g_phiphi(
    medium: Medium,
    kind: FieldKind,
    point: MomentumFrequencyPoint,
    eta: float = DEFAULT_ETA,
) -> PropagatorValue:
    """Dressed field propagator at one momentum-frequency point.

    Euclidean axis: 1/(k^2 (1 - chi_m) + xi^2 (1 + chi_e)), real and
    positive.  Real axis: 1/(k^2 (1 - chi_m) - omega^2 (1 + chi_e)) with the
    same retarded shift as ``g0`` so the geometric resummation identity holds
    exactly at finite eta.  Scalar calculations take chi_m = 0.
    """
    k = point.k
    if point.axis is Axis.EUCLIDEAN:
        xi = point.frequency
        den = _euclidean_denominator(medium, kind, k, xi)
        if den <= 0.0:
            raise DegenerateModeError(
                f"zero mode at (k={k:g}, xi={xi:g}); propagator undefined"
            )
        return PropagatorValue("Gphiphi", point.axis, complex(1.0 / den))

    omega = point.frequency
    chi_e = medium.electric.chi_real_axis(omega)
    if kind is FieldKind.EM:
        chi_m = medium.magnetic.chi_real_axis(omega)
    else:
        chi_m = 0.0 + 0.0j
    den = k * k * (1.0 - chi_m) - omega * omega * (1.0 + chi_e)
    den -= complex(0.0, eta * _sign(omega))
    if den == 0:
        raise PoleError(
            f"dressed propagator pole at (k={k:g}, omega={omega:g}) with eta = 0"
        )
    return PropagatorValue("Gphiphi", point.axis, 1.0 / den)


def cross_correlators(
    medium: Medium,
    point: MomentumFrequencyPoint,
    eta: float = DEFAULT_ETA,
) -> CrossCorrelators:
    """Field-polarization, field-magnetization and matter autocorrelators.

    At real-axis point (k, omega), with G the dressed field propagator:

        G_phiP = i omega chi_e G
        G_phiM = i k omega chi_m G
        G_PP   = Im chi_e + omega^2 chi_e^2 G
        G_MM   = Im chi_m + k^2 chi_m^2 G

    The additive noise terms are the absorptive parts of the respective
    susceptibilities (zero for lossless models).
    """
    if point.axis is not Axis.REAL:
        raise DomainError("cross correlators are defined on the real axis")
    k, omega = point.k, point.frequency
    if omega == 0.0:
        chi_e = medium.electric.chi_real_axis(0.0)
        chi_m = medium.magnetic.chi_real_axis(0.0)
        noise_e = medium.electric._im_chi_zero_limit()
        noise_m = medium.magnetic._im_chi_zero_limit()
    else:
        chi_e = medium.electric.chi_real_axis(omega)
        chi_m = medium.magnetic.chi_real_axis(omega)
        aw = abs(omega)
        noise_e = medium.electric.im_chi(aw)
        noise_m = medium.magnetic.im_chi(aw)
    g = g_phiphi(medium, FieldKind.EM, point, eta).value
    return CrossCorrelators(
        g_phi_p=1j * omega * chi_e * g,
        g_phi_m=1j * k * omega * chi_m * g,
        g_pp=noise_e + omega * omega * chi_e * chi_e * g,
        g_mm=noise_m + k * k * chi_m * chi_m * g,
    )


def dyson_partial_sum(
    medium: Medium,
    point: MomentumFrequencyPoint,
    order: int,
    eta: float = DEFAULT_ETA,
) -> DysonPartialSum:
    """Self-energy resummation of the dressed propagator, truncated.

    The dressing of the free propagator by the electric response is the
    geometric series G0 sum_n r^n with ratio r = omega^2 chi_e(omega) G0.
    For |r| < 1 the truncation error obeys the exact tail bound

        |S_N - G| <= |G0| |r|^(N+1) / (1 - |r|),

    and S_N converges to the closed-form dressed propagator.  For |r| >= 1
    the partial sum is still returned but flagged unconverged.
    """
    if point.axis is not Axis.REAL:
        raise DomainError("the resummation is defined on the real axis")
    if order < 0:
        raise DomainError(f"order must be >= 0, got {order!r}")
    k, omega = point.k, point.frequency
    base = g0(k, omega, eta)
    if omega == 0.0:
        # static limit: the omega^2 vertex factor kills the dressing
        return DysonPartialSum(value=base, ratio=0j, order=order, converged=True)
    chi_e = medium.electric.chi_real_axis(omega)
    r = omega * omega * chi_e * base
    # compensated summation keeps the tail-bound comparison honest at 1e-10
    term = base
    res, ims = [term.real], [term.imag]
    for _ in range(order):
        term = term * r
        res.append(term.real)
        ims.append(term.imag)
    total = complex(math.fsum(res), math.fsum(ims))
    return DysonPartialSum(
        value=total, ratio=r, order=order, converged=abs(r) < 1.0
    )


def gap_kernel(
    medium: Medium,
    kind: FieldKind,
    p0: float,
    q: float,
    separation: float,
) -> GapKernel:
    """Cross-plate dressed propagator entry at Euclidean frequency p0.

    E = sqrt(n(p0)^2 p0^2 + q^2) with n the Euclidean refractive index for
    the field content; the kernel is exp(-E H)/(2 E).  The EM field carries
    an additional H-independent permeability prefactor, reported separately
    because it divides out of every force expression.
    """
    if not (p0 >= 0.0 and math.isfinite(p0)):
        raise DomainError(f"Euclidean frequency must be >= 0, got {p0!r}")
    if not (q >= 0.0 and math.isfinite(q)):
        raise DomainError(f"in-plane momentum must be >= 0, got {q!r}")
    if not (separation >= 0.0 and math.isfinite(separation)):
        raise DomainError(f"separation must be >= 0, got {separation!r}")
    if p0 == 0.0 and q == 0.0:
        raise DegenerateModeError("zero-energy mode has no gap kernel")
    n = medium.refractive_index(kind, p0)
    energy = math.hypot(n * p0, q)
    if energy < 1e-300:
        # 1/(2E) would overflow; treat the mode as degenerate rather than
        # hand back an infinity
        raise DegenerateModeError("zero-energy mode has no gap kernel")
    prefactor = medium.mu_bar(p0) if kind is FieldKind.EM else 1.0
    value = math.exp(-energy * separation) / (2.0 * energy)
    return GapKernel(
        energy=energy, separation=separation, value=value, prefactor=prefactor
    )
