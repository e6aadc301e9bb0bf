"""Force routes: direct mode sums, the action route and the null results."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casimir_medium import (
    BoundaryCondition,
    Constant,
    DomainError,
    Drude,
    FieldKind,
    ForceQuery,
    InvalidRegimeError,
    Lorentz,
    Medium,
    QuadratureSpec,
    VACUUM,
    force_field_bc,
    force_polarization_bc,
    force_via_action_fd,
    matter_only_force,
    mode_logdet,
    nondispersive_scaling_check,
    vacuum_force_analytic,
)

LOR_01 = Medium(electric=Lorentz(omega_p=1.0, omega_0=1.0, gamma=0.1))
LOR_05 = Medium(electric=Lorentz(omega_p=1.0, omega_0=1.0, gamma=0.5))
DRUDE = Medium(electric=Drude(omega_p=1.0, gamma=0.5))

# locks computed with an mpmath Gauss-Legendre evaluation of the mode sum
# (closed-form inner integral, 15 significant digits, tail cut at p0 = 30
# where the integrand is below 1e-26)
LOCK_LOR_01_H1 = -0.01792260883964282
LOCK_LOR_05_H1 = -0.01825438710097188
LOCK_DRUDE_H1 = -0.01639467546391367

# case-ii value recorded from the nested-quadrature oracle at rel_tol 1e-8
LOCK_LOR_05_POLARIZATION_H1 = -0.006944964504583686


class TestVacuumLimits:
    def test_analytic_values(self):
        assert vacuum_force_analytic(FieldKind.SCALAR, 1.0) == pytest.approx(
            -math.pi**2 / 480.0, rel=1e-15
        )
        assert vacuum_force_analytic(FieldKind.EM, 1.0) == pytest.approx(
            -math.pi**2 / 240.0, rel=1e-15
        )
        # 1/H^4 scaling
        assert vacuum_force_analytic(FieldKind.SCALAR, 2.0) == pytest.approx(
            -math.pi**2 / 480.0 / 16.0, rel=1e-15
        )

    @pytest.mark.parametrize("h", [0.5, 1.0, 2.0, 5.0])
    def test_computed_scalar_matches_analytic(self, h):
        res = force_field_bc(ForceQuery(separation=h))
        assert res.converged
        assert res.force_per_area == pytest.approx(
            vacuum_force_analytic(FieldKind.SCALAR, h), rel=1e-10
        )
        assert res.vacuum_ratio == pytest.approx(1.0, rel=1e-10)

    def test_em_is_twice_scalar(self):
        scalar = force_field_bc(ForceQuery(separation=1.0))
        em = force_field_bc(ForceQuery(kind=FieldKind.EM, separation=1.0))
        assert em.force_per_area == pytest.approx(
            2.0 * scalar.force_per_area, rel=1e-14
        )

    def test_em_matches_analytic(self):
        res = force_field_bc(ForceQuery(kind=FieldKind.EM, separation=1.0))
        assert res.force_per_area == pytest.approx(
            -math.pi**2 / 240.0, rel=1e-10
        )

    def test_single_polarization_em(self):
        res = force_field_bc(
            ForceQuery(
                kind=FieldKind.EM, separation=1.0, em_polarization_multiplicity=1
            )
        )
        assert res.force_per_area == pytest.approx(
            -math.pi**2 / 480.0, rel=1e-10
        )


class TestNondispersiveScaling:
    @pytest.mark.parametrize("chi0", [0.25, 1.25, 3.0, 15.0])
    @pytest.mark.parametrize("h", [0.5, 2.0])
    def test_inverse_index_law(self, chi0, h):
        ratio = nondispersive_scaling_check(chi0, FieldKind.SCALAR, h)
        assert ratio == pytest.approx((1.0 + chi0) ** -0.5, rel=1e-9)

    def test_constant_three_halves_the_force(self):
        res = force_field_bc(
            ForceQuery(medium=Medium(electric=Constant(3.0)), separation=1.0)
        )
        assert res.force_per_area == pytest.approx(
            -math.pi**2 / 960.0, rel=1e-10
        )


class TestDispersiveForces:
    def test_lorentz_locked_value(self):
        res = force_field_bc(ForceQuery(medium=LOR_01, separation=1.0))
        assert res.converged
        assert res.force_per_area == pytest.approx(LOCK_LOR_01_H1, rel=1e-8)

    def test_broad_lorentz_locked_value(self):
        res = force_field_bc(ForceQuery(medium=LOR_05, separation=1.0))
        assert res.force_per_area == pytest.approx(LOCK_LOR_05_H1, rel=1e-8)

    def test_drude_locked_value(self):
        res = force_field_bc(ForceQuery(medium=DRUDE, separation=1.0))
        assert res.force_per_area == pytest.approx(LOCK_DRUDE_H1, rel=1e-8)

    def test_medium_suppresses_but_keeps_attraction(self):
        for medium in (LOR_01, LOR_05, DRUDE):
            res = force_field_bc(ForceQuery(medium=medium, separation=1.0))
            assert res.force_per_area < 0.0
            assert 0.0 < res.vacuum_ratio < 1.0

    @given(
        st.floats(min_value=0.2, max_value=2.0),
        st.floats(min_value=0.3, max_value=3.0),
        st.floats(min_value=0.0, max_value=1.0),
        st.floats(min_value=0.3, max_value=3.0),
    )
    @settings(max_examples=25, deadline=None)
    def test_suppression_property(self, omega_p, omega_0, gamma, h):
        medium = Medium(electric=Lorentz(omega_p=omega_p, omega_0=omega_0,
                                         gamma=gamma))
        res = force_field_bc(ForceQuery(medium=medium, separation=h))
        assert res.force_per_area < 0.0
        assert res.vacuum_ratio <= 1.0 + 1e-12


class TestPolarizationBoundaryCondition:
    def test_no_coupling_means_no_force(self):
        res = force_polarization_bc(
            ForceQuery(
                medium=Medium(electric=Constant(0.0)),
                bc=BoundaryCondition.POLARIZATION,
                separation=1.0,
            )
        )
        assert res.force_per_area == 0.0
        assert res.converged

    def test_unit_constant_reduces_to_field_bc(self, loose_spec):
        # at chi0 = 1 the noise weight alpha collapses to 1 and the
        # integrand is the field-condition one; the two routes must agree
        medium = Medium(electric=Constant(1.0))
        pol = force_polarization_bc(
            ForceQuery(
                medium=medium,
                bc=BoundaryCondition.POLARIZATION,
                separation=1.0,
                spec=loose_spec,
            )
        )
        direct = force_field_bc(ForceQuery(medium=medium, separation=1.0))
        assert pol.force_per_area == pytest.approx(
            direct.force_per_area, rel=1e-7
        )
        assert pol.force_per_area == pytest.approx(
            -math.pi**2 / 480.0 / math.sqrt(2.0), rel=1e-7
        )

    def test_lorentz_locked_value(self, loose_spec):
        res = force_polarization_bc(
            ForceQuery(
                medium=LOR_05,
                bc=BoundaryCondition.POLARIZATION,
                separation=1.0,
                spec=loose_spec,
            )
        )
        assert res.converged
        assert res.force_per_area == pytest.approx(
            LOCK_LOR_05_POLARIZATION_H1, rel=1e-6
        )

    def test_weaker_than_field_bc(self, loose_spec):
        pol = force_polarization_bc(
            ForceQuery(
                medium=LOR_05,
                bc=BoundaryCondition.POLARIZATION,
                separation=1.0,
                spec=loose_spec,
            )
        )
        direct = force_field_bc(ForceQuery(medium=LOR_05, separation=1.0))
        assert pol.force_per_area < 0.0
        assert abs(pol.force_per_area) < abs(direct.force_per_area)

    def test_weak_lossless_coupling_invalid(self):
        # alpha = chi0^2 < e^{-2EH} for soft modes: the determinant loses
        # positivity and the route must refuse rather than integrate junk
        with pytest.raises(InvalidRegimeError):
            force_polarization_bc(
                ForceQuery(
                    medium=Medium(electric=Constant(0.1)),
                    bc=BoundaryCondition.POLARIZATION,
                    separation=1.0,
                )
            )

    def test_requires_polarization_bc_and_scalar(self):
        with pytest.raises(DomainError):
            force_polarization_bc(ForceQuery(separation=1.0))
        with pytest.raises(DomainError):
            force_polarization_bc(
                ForceQuery(
                    kind=FieldKind.EM,
                    bc=BoundaryCondition.POLARIZATION,
                    separation=1.0,
                )
            )


class TestModeLogdet:
    def test_unit_mode(self):
        entry = mode_logdet(1.0, 1.0)
        assert entry.value == pytest.approx(
            math.log(-math.expm1(-2.0)), rel=1e-15
        )
        assert entry.value == pytest.approx(-0.14541345786885906, rel=1e-14)

    def test_far_plates_vanishes(self):
        assert abs(mode_logdet(1.0, 100.0).value) < 1e-15

    def test_boundary_flavors_identical(self):
        d = mode_logdet(1.3, 0.7, bc="dirichlet")
        n = mode_logdet(1.3, 0.7, bc="neumann")
        assert d.value == n.value

    def test_unknown_flavor_rejected(self):
        with pytest.raises(DomainError):
            mode_logdet(1.0, 1.0, bc="robin")

    def test_validation(self):
        with pytest.raises(DomainError):
            mode_logdet(0.0, 1.0)
        with pytest.raises(DomainError):
            mode_logdet(1.0, 0.0)

    @given(
        st.floats(min_value=1e-3, max_value=20.0),
        st.floats(min_value=1e-2, max_value=50.0),
    )
    @settings(max_examples=200, deadline=None)
    def test_never_positive(self, energy, separation):
        # underflows to -0.0 once 2EH passes ~745, which is the right limit
        value = mode_logdet(energy, separation).value
        assert value <= 0.0
        if 2.0 * energy * separation < 700.0:
            assert value < 0.0


class TestActionRoute:
    def test_second_order_convergence(self):
        query = ForceQuery(separation=1.0)
        direct = force_field_bc(query).force_per_area
        err_coarse = abs(force_via_action_fd(query, 1e-2) - direct)
        err_fine = abs(force_via_action_fd(query, 1e-3) - direct)
        ratio = err_coarse / err_fine
        assert 80.0 <= ratio <= 120.0
        assert err_fine / abs(direct) <= 1e-5

    def test_tracks_dispersive_force(self):
        query = ForceQuery(medium=LOR_01, separation=1.0)
        direct = force_field_bc(query).force_per_area
        fd = force_via_action_fd(query, 1e-3)
        assert fd == pytest.approx(direct, rel=1e-5)

    def test_quadratic_error_scaling_at_short_separation(self):
        # the truncation constant grows as 1/H^2; what must survive at any
        # separation is the delta^2 scaling itself
        query = ForceQuery(medium=LOR_05, separation=0.5)
        direct = force_field_bc(query).force_per_area
        err_coarse = abs(force_via_action_fd(query, 1e-2) - direct)
        err_fine = abs(force_via_action_fd(query, 1e-3) - direct)
        assert 80.0 <= err_coarse / err_fine <= 120.0

    def test_step_validation(self):
        query = ForceQuery(separation=1.0)
        with pytest.raises(DomainError):
            force_via_action_fd(query, 0.0)
        with pytest.raises(DomainError):
            force_via_action_fd(query, 1.0)
        with pytest.raises(DomainError):
            force_via_action_fd(query, -1e-3)


class TestMatterOnly:
    def test_exactly_zero(self):
        for h in (1e-3, 1.0, 42.0):
            assert matter_only_force(h) == 0.0

    def test_validation(self):
        with pytest.raises(DomainError):
            matter_only_force(0.0)
        with pytest.raises(DomainError):
            matter_only_force(-1.0)


class TestForceQueryValidation:
    def test_separation_must_be_positive(self):
        with pytest.raises(DomainError):
            ForceQuery(separation=0.0)
        with pytest.raises(DomainError):
            ForceQuery(separation=-2.0)

    def test_scalar_multiplicity_fixed(self):
        with pytest.raises(DomainError):
            ForceQuery(separation=1.0, em_polarization_multiplicity=2)
        query = ForceQuery(separation=1.0, em_polarization_multiplicity=1)
        assert query.multiplicity == 1

    def test_em_default_multiplicity(self):
        assert ForceQuery(kind=FieldKind.EM, separation=1.0).multiplicity == 2
        assert ForceQuery(separation=1.0).multiplicity == 1
