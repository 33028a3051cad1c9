import numpy as np
import pytest

import lie_numeric
from config import Settings
from errors import ChartDomainError, InvalidInputError, ResolutionError
from lie_groups import (
    MATRIX_HOMOMORPHISMS,
    AdditiveGroup,
    Chart,
    CircleGroup,
    SU2Group,
    get_matrix_homomorphism,
    su2_algebra,
)
from lie_numeric import (
    F_omega_beta,
    LieAlgebraCocycle,
    SimplexMap,
    SmoothGeneralizedCocycle,
    _mixed_difference,
    beta_diagonal_check,
    bump_sphere,
    chart_independence_check,
    chart_product_check,
    chart_simplices,
    coboundary_from_b,
    coboundary_identity_residual,
    cocycle_defect,
    covering_group_check,
    derive_bracket,
    derive_LF,
    derive_LF_table,
    exp_naturality_check,
    gamma_boundary_check,
    group_bracket,
    integrate_form,
    lie3_pipeline_heisenberg,
    period_sphere,
    richardson_check,
    winding_cocycle,
    winding_grid_check,
)
from quadrature import rule_for

SETTINGS = Settings()
B = np.array([[1.0, 0.5, -0.25]])


def cubic_chart(c=0.3):
    return Chart(forward=lambda g: np.array([g[0] + c * g[1] ** 3, g[1]]),
                 inverse=lambda x: np.array([x[0] - c * x[1] ** 3, x[1]]),
                 name='cubic')


def su2_points(rng, count, radius=0.4):
    su2 = SU2Group()
    return [su2.point(su2.random_coordinates(rng, radius)) for _ in range(count)]


class TestCocycles:
    def test_symplectic_form(self):
        omega = LieAlgebraCocycle.symplectic()
        assert omega([1.0, 0.0], [0.0, 1.0]).tolist() == [1.0]
        assert omega.skew_defect() == 0.0

    def test_coboundaries_are_cocycles(self):
        omega = LieAlgebraCocycle.from_coboundary(B, su2_algebra())
        assert omega.cocycle_defect(su2_algebra()) < 1e-12
        assert omega.m == 1 and omega.n == 3

    def test_rejects_mismatched_coboundary(self):
        with pytest.raises(InvalidInputError):
            LieAlgebraCocycle.from_coboundary([[1.0, 0.0]], su2_algebra())


class TestPlaneIntegration:
    def test_chart_simplices(self):
        r2 = AdditiveGroup(2)
        g, h = np.array([0.3, 0.2]), np.array([-0.1, 0.4])
        simplices = chart_simplices(r2, [g, h])
        assert np.allclose(simplices.alpha[0](1.0), g)
        assert np.allclose(simplices.alpha[1](0.0), 0.0)
        beta = simplices.beta[(0, 1)]
        assert np.allclose(beta(1.0, 0.0), g)
        assert np.allclose(beta(0.0, 1.0), g + h)
        assert simplices.gamma is None
        assert len(chart_simplices(r2, [g], cubic_chart()).gamma) == 1

    def test_coboundary_potential(self):
        r2 = AdditiveGroup(2)
        assert coboundary_from_b(r2, [[1.0, 2.0]], np.array([0.3, 0.2]))[0] == pytest.approx(0.7)
        assert coboundary_from_b(r2, [[1.0, 2.0]], r2.unit()).tolist() == [0.0]

    @pytest.mark.parametrize('order', [2, 5, 10])
    def test_symplectic_value(self, order):
        r2 = AdditiveGroup(2)
        value = F_omega_beta(r2, LieAlgebraCocycle.symplectic(), [1.0, 0.0], [0.0, 1.0], quad_order=order)
        assert value[0] == pytest.approx(0.5, abs=1e-10)

    def test_unit_argument_gives_exact_zero(self):
        r2 = AdditiveGroup(2)
        F = SmoothGeneralizedCocycle.from_settings(r2, LieAlgebraCocycle.symplectic(), SETTINGS)
        assert F([0.3, 0.1], r2.unit()).tolist() == [0.0]
        assert F.normalization_defect([0.3, 0.1]) == 0.0

    def test_degenerate_simplex(self):
        r2 = AdditiveGroup(2)
        g = np.array([0.3, 0.2])
        assert abs(F_omega_beta(r2, LieAlgebraCocycle.symplectic(), g, g)[0]) < 1e-12

    def test_group_cocycle_identity(self, rng):
        r2 = AdditiveGroup(2)
        omega = LieAlgebraCocycle.symplectic()
        for _ in range(100):
            g, h, k = (r2.random_coordinates(rng, 0.5) for _ in range(3))
            assert np.max(np.abs(cocycle_defect(r2, omega, g, h, k, SETTINGS))) <= 1e-10

    def test_derived_cocycle(self):
        F = SmoothGeneralizedCocycle.from_settings(AdditiveGroup(2), LieAlgebraCocycle.symplectic(), SETTINGS)
        assert derive_LF(F, [1.0, 0.0], [0.0, 1.0], 1e-3)[0] == pytest.approx(1.0, abs=1e-4)
        assert derive_LF(F, [1.0, 0.0], [1.0, 0.0], 1e-3).tolist() == [0.0]
        table = derive_LF_table(F, 1e-3)
        assert np.allclose(table.structure, LieAlgebraCocycle.symplectic().structure, atol=1e-4)

    def test_path_form_shape_is_checked(self):
        r2 = AdditiveGroup(2)
        path = SimplexMap(lambda t: np.array([t, 0.0]), arity=1)
        with pytest.raises(InvalidInputError):
            integrate_form(r2, [[1.0, 2.0, 3.0]], path)
        assert integrate_form(r2, [[2.0, 0.0]], path)[0] == pytest.approx(2.0)

    def test_explicit_settings_reach_sphere_quadrature(self, monkeypatch):
        r3 = AdditiveGroup(3)
        omega = LieAlgebraCocycle(np.array([[[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 0.0]]]))
        sigma = bump_sphere(r3, np.random.default_rng(7))
        steps = []
        tangents = lie_numeric._tangents

        def recording(group, simplex, params, step):
            steps.append(step)
            return tangents(group, simplex, params, step)

        def environment():
            raise AssertionError("settings were read from the environment")

        monkeypatch.setattr(lie_numeric, '_tangents', recording)
        monkeypatch.setattr(lie_numeric, 'get_settings', environment)
        settings = Settings(quad_order=12, tangent_step=1e-4)
        assert abs(period_sphere(r3, omega, sigma, settings=settings)[0]) <= 1e-6
        assert set(steps) == {1e-4}
        assert len(steps) == len(rule_for('square', 12).points)


class TestFiniteDifferences:
    def test_second_order_convergence(self):
        # product with a t³s term: the mixed difference is off by exactly step²
        def objects_mult(a, b):
            return np.array([a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1] + a[0] ** 3 * b[1]])

        errors = []
        for step in (1e-2, 5e-3):
            bracket = derive_bracket(objects_mult, 3, step)
            errors.append(abs(bracket.structure[2, 0, 1] - 1.0))
        assert errors[0] / errors[1] == pytest.approx(4.0, rel=1e-2)

    def test_cancellation_warning(self):
        with pytest.warns(RuntimeWarning):
            _mixed_difference(lambda t, s: np.array([1.0 + t * s]), 1e-7)

    def test_additive_group_has_zero_bracket(self):
        assert np.allclose(group_bracket(AdditiveGroup(3), 1e-3).structure, 0.0)


class TestSU2:
    def test_coboundary_identity(self, rng):
        su2 = SU2Group()
        for g, h in zip(su2_points(rng, 3), su2_points(rng, 3)):
            residual = coboundary_identity_residual(su2, B, g, h, SETTINGS)
            assert np.max(np.abs(residual)) <= 1e-5

    def test_group_cocycle_identity(self, rng):
        su2 = SU2Group()
        omega = LieAlgebraCocycle.from_coboundary(B, su2_algebra())
        g, h, k = su2_points(rng, 3)
        assert np.max(np.abs(cocycle_defect(su2, omega, g, h, k, SETTINGS))) <= 1e-6

    def test_points_outside_the_half_ball_are_refused(self):
        su2 = SU2Group()
        g = su2.point([2.0, 0.0, 0.0])
        with pytest.raises(ChartDomainError):
            F_omega_beta(su2, LieAlgebraCocycle.from_coboundary(B, su2_algebra()), g, g)

    @pytest.mark.slow
    def test_sphere_periods_vanish(self, rng):
        su2 = SU2Group()
        omega = LieAlgebraCocycle.from_coboundary(B, su2_algebra())
        for _ in range(10):
            assert abs(period_sphere(su2, omega, bump_sphere(su2, rng))[0]) <= 1e-4

    def test_sphere_periods_vanish_on_r3(self, rng):
        r3 = AdditiveGroup(3)
        raw = rng.normal(size=(1, 3, 3))
        omega = LieAlgebraCocycle(raw - raw.transpose(0, 2, 1))
        for _ in range(3):
            assert abs(period_sphere(r3, omega, bump_sphere(r3, rng))[0]) <= 1e-6

    def test_sphere_boundary_is_checked(self):
        su2 = SU2Group()
        omega = LieAlgebraCocycle.from_coboundary(B, su2_algebra())
        open_map = SimplexMap(lambda u, v: su2.point([0.1 * u, 0.0, 0.0]), arity=2)
        with pytest.raises(InvalidInputError):
            period_sphere(su2, omega, open_map)
        constant = SimplexMap(lambda u, v: su2.unit(), arity=2)
        assert period_sphere(su2, omega, constant)[0] == 0.0

    def test_chart_product(self):
        report = chart_product_check(SU2Group(), settings=SETTINGS)
        assert report.ok, report.failed_checks()

    def test_derived_bracket(self):
        assert np.allclose(group_bracket(SU2Group(), 1e-3).structure, su2_algebra().structure, atol=1e-4)

    def test_diagonal_of_beta(self):
        su2 = SU2Group()
        report = beta_diagonal_check(su2, su2.point([0.3, -0.2, 0.1]))
        assert report.ok
        info = {f.check: f.value for f in report.informational}
        assert info['beta.diagonal_t_plus_2s']['holds']
        assert not info['beta.diagonal_t_plus_s']['holds']

    def test_quadrature_convergence(self):
        su2 = SU2Group()
        omega = LieAlgebraCocycle.from_coboundary(B, su2_algebra())
        g, h = su2.point([0.2, -0.1, 0.15]), su2.point([-0.1, 0.25, 0.05])
        assert richardson_check(su2, omega, g, h, SETTINGS).ok


class TestSecondChart:
    def test_gamma_edges(self):
        report = gamma_boundary_check(AdditiveGroup(2), np.array([0.3, 0.4]), cubic_chart())
        assert report.ok, report.failed_checks()

    def test_chart_change_is_a_coboundary(self):
        report = chart_independence_check(AdditiveGroup(2), LieAlgebraCocycle.symplectic(), cubic_chart(),
                                          np.array([0.3, 0.2]), np.array([-0.1, 0.4]), SETTINGS)
        assert report.ok, report.to_dict()


class TestCircle:
    def test_winding_examples(self):
        circle = CircleGroup()
        assert winding_cocycle(1j, 1j) == 0
        assert winding_cocycle(circle.element(1.5 * np.pi), circle.element(np.pi)) == 1
        assert winding_cocycle(circle.element(2.0), 1.0) == 0

    def test_coarse_paths_are_refused(self):
        with pytest.raises(ResolutionError):
            winding_cocycle(np.exp(3.5j), 1.0, resolution=2)
        with pytest.raises(InvalidInputError):
            winding_cocycle(1j, 1j, resolution=0)

    def test_roots_of_unity(self):
        assert winding_grid_check(32).ok

    @pytest.mark.slow
    def test_universal_covering(self):
        report = covering_group_check(samples=1000, seed=0)
        assert report.ok, report.failed_checks()


class TestPipelines:
    def test_heisenberg(self):
        report = lie3_pipeline_heisenberg(SETTINGS)
        assert report.ok, report.failed_checks()
        assert report.provenance['central_coordinate'] == pytest.approx(1.0, abs=1e-6)

    def test_scaled_heisenberg(self):
        report = lie3_pipeline_heisenberg(SETTINGS, scale=2.0)
        assert report.ok
        assert report.provenance['central_coordinate'] == pytest.approx(2.0, abs=1e-6)

    @pytest.mark.parametrize('name', MATRIX_HOMOMORPHISMS)
    def test_exp_naturality(self, name):
        assert exp_naturality_check(get_matrix_homomorphism(name)).ok
