import dataclasses
import itertools

import numpy as np
import pytest

from algebra_core import (
    AbelianHom,
    FgAbelianGroup,
    abelian_invariant_factors,
    cyclic_group,
    direct_product,
    symmetric_group,
)
from conftest import make_cocycle
from errors import NotComposableError, RefusedConstruction
from group_cohomology import Cochain, d_gp, twisted_product
from two_groups import (
    AXIOM_TABLES,
    TABLES,
    CocycleMorphism,
    CrossedModule,
    cocycle_from_ordinary,
    discrete_2group,
    extension_from_cocycle,
    hidden_action_check,
    isomorphism_classes,
    morphism_from_pair,
    skeletal_2group_from_3cocycle,
    skeleton_and_band,
    strict_2group_from_crossed_module,
    two_morphism_check,
    verify_2group,
    verify_cocycle_morphism,
    verify_crossed_module,
    verify_extension_seq,
    verify_generalized_cocycle,
)

Z2 = FgAbelianGroup.cyclic(2)
Z3 = FgAbelianGroup.cyclic(3)
Z4 = FgAbelianGroup.cyclic(4)

# tables whose entries index objects; the rest index morphisms
OBJECT_VALUED = {'source', 'target', 'inverse_objects', 'tensor_objects'}


def abc(group):
    return Cochain.from_function(3, group, Z2, lambda a, b, c: [a * b * c])


def carry_theta():
    """A 3-cocycle on ℤ/3 with values in ℤ/3"""
    return Cochain.from_function(3, cyclic_group(3), Z3, lambda a, b, c: [a * ((b + c) // 3)])


class TestCrossedModules:
    def test_conjugation_crossed_module(self):
        assert verify_crossed_module(CrossedModule.identity(symmetric_group(3))).ok

    def test_abelian_crossed_module(self, tau_z2_z4):
        assert verify_crossed_module(CrossedModule.from_abelian_hom(tau_z2_z4)).ok

    def test_peiffer_failure(self):
        cm = CrossedModule.with_trivial_action(symmetric_group(3), cyclic_group(1), [0] * 6)
        report = verify_crossed_module(cm)
        assert report.failed_checks() == ['crossed_module.peiffer']
        with pytest.raises(RefusedConstruction) as excinfo:
            strict_2group_from_crossed_module(cm)
        assert excinfo.value.axiom == 'crossed_module.peiffer'


class TestStrictTwoGroups:
    def test_discrete_two_group(self):
        tg = discrete_2group(symmetric_group(3))
        assert tg.morphism_count == tg.object_count == 6
        assert verify_2group(tg).ok

    def test_doubling_crossed_module(self, tau_z2_z4):
        tg = strict_2group_from_crossed_module(CrossedModule.from_abelian_hom(tau_z2_z4))
        assert (tg.object_count, tg.morphism_count) == (4, 8)
        assert verify_2group(tg).ok
        assert int(isomorphism_classes(tg).max()) + 1 == 2

    def test_identity_crossed_module_has_one_class(self, z2):
        tg = strict_2group_from_crossed_module(CrossedModule.identity(z2))
        assert verify_2group(tg).ok
        assert set(isomorphism_classes(tg).tolist()) == {0}
        assert len(tg.hom(0, 0)) == 1

    def test_non_composable_pair(self, tau_z2_z4):
        tg = strict_2group_from_crossed_module(CrossedModule.from_abelian_hom(tau_z2_z4))
        m1 = tg.identity[0]
        m2 = tg.identity[1]
        with pytest.raises(NotComposableError):
            tg.comp(m2, m1)
        with pytest.raises(KeyError):
            tg.comp(m2, m1)

    def test_nonabelian_strict_two_group(self):
        tg = strict_2group_from_crossed_module(CrossedModule.identity(symmetric_group(3)))
        assert verify_2group(tg).ok
        assert hidden_action_check(tg).ok


class TestSkeletalTwoGroups:
    def test_trivial_associator(self, z2):
        tg = skeletal_2group_from_3cocycle(z2, Z2, Cochain.zero(3, z2, Z2))
        assert verify_2group(tg).ok

    def test_abc_associator(self, z2):
        report = verify_2group(skeletal_2group_from_3cocycle(z2, Z2, abc(z2)))
        assert report.ok
        inverse_triple = next(f for f in report.informational if f.check == 'associator.inverse_triple')
        assert inverse_triple.value == {'holds': False}

    def test_broken_cocycle_fails_the_pentagon(self):
        g = cyclic_group(3)
        theta = carry_theta()
        assert d_gp(theta).is_zero()
        broken = theta + Cochain.from_values(3, g, Z3, {(1, 1, 1): [1]})
        assert d_gp(broken).value(1, 1, 1, 1).tolist() == [2]

        report = verify_2group(skeletal_2group_from_3cocycle(g, Z3, broken, check_cocycle=False))
        assert report.failed_checks() == ['associator.pentagon']
        finding = report.violations[0]
        assert len(finding.witness) == 4

        with pytest.raises(RefusedConstruction) as excinfo:
            skeletal_2group_from_3cocycle(g, Z3, broken)
        assert excinfo.value.axiom == 'cocycle.theta_closed'

    @pytest.mark.parametrize('order', [2, 3])
    def test_pentagon_holds_exactly_for_cocycles(self, order):
        g = cyclic_group(order)
        slots = (order - 1) ** 3
        for bits in itertools.product([0, 1], repeat=slots):
            theta = Cochain(3, g, Z2, np.array(bits).reshape(slots, 1))
            closed = d_gp(theta).is_zero()
            report = verify_2group(skeletal_2group_from_3cocycle(g, Z2, theta, check_cocycle=False))
            assert ('associator.pentagon' in report.failed_checks()) == (not closed)
            if not closed:
                with pytest.raises(RefusedConstruction):
                    skeletal_2group_from_3cocycle(g, Z2, theta)


class TestMutations:
    def test_every_mutation_is_caught(self, mutation_fixture, rng):
        tg = mutation_fixture
        assert verify_2group(tg).ok
        O, M = tg.object_count, tg.morphism_count
        for _ in range(100):
            name = TABLES[int(rng.integers(len(TABLES)))]
            if name == 'compose':
                compose = dict(tg.compose)
                keys = sorted(compose)
                key = keys[int(rng.integers(len(keys)))]
                compose[key] = (compose[key] + 1 + int(rng.integers(M - 1))) % M
                mutated = dataclasses.replace(tg, compose=compose)
            else:
                bound = O if name in OBJECT_VALUED else M
                table = np.array(tg.table(name))
                flat = table.reshape(-1)
                pos = int(rng.integers(flat.size))
                flat[pos] = (flat[pos] + 1 + int(rng.integers(bound - 1))) % bound
                mutated = dataclasses.replace(tg, **{name: table})
            report = verify_2group(mutated)
            assert not report.ok, name
            assert any(name in AXIOM_TABLES[f.check] for f in report.violations), name


class TestExtensions:
    @pytest.mark.parametrize('f_value', [0, 1, 2, 3])
    @pytest.mark.parametrize('theta_value', [0, 1])
    def test_round_trip(self, z2, tau_z2_z4, f_value, theta_value):
        gc = make_cocycle(z2, tau_z2_z4, {(1, 1): [f_value]}, {(1, 1, 1): [theta_value]})
        if theta_value:
            assert not verify_generalized_cocycle(gc).ok
            with pytest.raises(RefusedConstruction) as excinfo:
                extension_from_cocycle(gc)
            assert excinfo.value.axiom == 'cocycle.F_boundary'
            return
        assert verify_generalized_cocycle(gc).ok
        seq = extension_from_cocycle(gc)
        assert (seq.total.object_count, seq.total.morphism_count) == (8, 16)
        report = verify_extension_seq(seq)
        assert report.ok, report.failed_checks()
        assert hidden_action_check(seq.total).ok

    def test_associator_outside_the_boundary_is_refused(self, z2):
        gc = make_cocycle(z2, AbelianHom.identity(Z2), theta_values={(1, 1, 1): [1]})
        report = verify_generalized_cocycle(gc)
        assert report.failed_checks() == ['cocycle.F_boundary']
        with pytest.raises(RefusedConstruction) as excinfo:
            extension_from_cocycle(gc)
        assert excinfo.value.axiom == 'cocycle.F_boundary'

    def test_inverse_asymmetry_is_refused(self):
        g = cyclic_group(3)
        tau = AbelianHom.identity(Z2)
        F = Cochain.from_values(2, g, Z2, {(1, 2): [1]})
        gc = make_cocycle(g, tau, {(1, 2): [1]}, {args: d_gp(F).value(*args) for args in d_gp(F).support()})
        assert verify_generalized_cocycle(gc).ok
        with pytest.raises(RefusedConstruction) as excinfo:
            extension_from_cocycle(gc)
        assert excinfo.value.axiom == 'cocycle.inverse_symmetry'
        assert excinfo.value.witness == (1,)


class TestOrdinaryCocycles:
    def test_integral_lift_of_z2_class(self, z2):
        f = Cochain.from_values(2, z2, Z2, {(1, 1): [1]})
        quotient = AbelianHom(FgAbelianGroup.integers(), Z2, [[1]])
        gc = cocycle_from_ordinary(f, quotient, lambda v: [int(v[0])])
        assert verify_generalized_cocycle(gc).ok
        assert gc.F.value(1, 1).tolist() == [1]
        assert gc.theta.is_zero()

    def test_lift_with_nonzero_associator(self):
        klein = direct_product(cyclic_group(2), cyclic_group(2))
        f = Cochain.from_function(2, klein, Z2, lambda x, y: [(x // 2) * (y % 2)])
        assert d_gp(f).is_zero()
        quotient = AbelianHom(FgAbelianGroup.integers(), Z2, [[1]])
        gc = cocycle_from_ordinary(f, quotient, lambda v: [int(v[0])])
        assert verify_generalized_cocycle(gc).ok
        # F♯ is 0/1-valued in ℤ, so its boundary is 2 at ((1,0),(1,0),(0,1))
        assert d_gp(gc.F).value(2, 2, 1).tolist() == [2]
        assert not gc.theta.is_zero()


class TestExtensionMorphisms:
    def shifted_pair(self, z2, tau, phi_value):
        source = make_cocycle(z2, tau, {(1, 1): [2]})
        target = make_cocycle(z2, tau)
        phi = Cochain.from_values(1, z2, Z4, {(1,): [phi_value]})
        return CocycleMorphism(source, target, phi, Cochain.zero(2, z2, Z2))

    def test_identity_morphism(self, z2, tau_z2_z4):
        gc = make_cocycle(z2, tau_z2_z4, {(1, 1): [1]})
        m = CocycleMorphism(gc, gc, Cochain.zero(1, z2, Z4), Cochain.zero(2, z2, Z2))
        functor, report = morphism_from_pair(m)
        assert report.ok, report.failed_checks()
        assert np.array_equal(functor.objects, np.arange(8))

    def test_coboundary_shift(self, z2, tau_z2_z4):
        m = self.shifted_pair(z2, tau_z2_z4, 1)
        assert verify_cocycle_morphism(m).ok
        functor, report = morphism_from_pair(m)
        assert report.ok, report.failed_checks()
        bijective = next(f for f in report.informational if f.check == 'functor.bijective_objects')
        assert bijective.value == {'holds': True}

    def test_wrong_shift_is_not_a_morphism(self, z2, tau_z2_z4):
        m = self.shifted_pair(z2, tau_z2_z4, 0)
        assert verify_cocycle_morphism(m).failed_checks() == ['morphism.F_identity']
        with pytest.raises(RefusedConstruction):
            morphism_from_pair(m)

    def test_two_morphism(self, z2, tau_z2_z4):
        m = self.shifted_pair(z2, tau_z2_z4, 1)
        m_prime = self.shifted_pair(z2, tau_z2_z4, 3)
        gamma = Cochain.from_values(1, z2, Z2, {(1,): [1]})
        assert two_morphism_check(m, m_prime, gamma).ok
        report = two_morphism_check(m, m_prime, Cochain.zero(1, z2, Z2))
        assert 'two_morphism.components' in report.failed_checks()


class TestSkeletonAndBand:
    def test_split_extension(self, z2, tau_z2_z4):
        sb = skeleton_and_band(extension_from_cocycle(make_cocycle(z2, tau_z2_z4)))
        assert sb.report.ok, sb.report.failed_checks()
        assert sb.skel_z.invariant_factors == [2]
        assert abelian_invariant_factors(sb.band) == [2, 2]

    def test_band_is_the_twisted_product(self, z2):
        z4 = FgAbelianGroup.cyclic(4)
        tau = AbelianHom(FgAbelianGroup.trivial(), z4, np.zeros((1, 0), dtype=np.int64))
        gc = make_cocycle(z2, tau, {(1, 1): [2]})
        sb = skeleton_and_band(extension_from_cocycle(gc))
        assert sb.report.ok, sb.report.failed_checks()
        assert abelian_invariant_factors(sb.band) == [2, 4]
        assert abelian_invariant_factors(sb.band) == abelian_invariant_factors(twisted_product(z4, z2, gc.F))

    def test_acyclic_crossed_module(self, z2):
        sb = skeleton_and_band(extension_from_cocycle(make_cocycle(z2, AbelianHom.identity(Z2))))
        assert sb.report.ok
        assert sb.band.order == 2
        assert sb.skel_z.order == 1
