import pytest

from algebra_core import (
    AbelianHom,
    FgAbelianGroup,
    GAction,
    abelian_invariant_factors,
    cyclic_group,
    permuted,
    symmetric_group,
    verify_finite_group,
)
from config import Settings
from errors import InvalidInputError, RefusedConstruction, SizeGuardError
from group_cohomology import (
    Cochain,
    cohomology_group,
    cone_h2,
    d_gp,
    is_coboundary,
    les_exactness_check,
    twisted_associativity_base_triples,
    twisted_product,
    twisted_product_isomorphism,
)

Z2 = FgAbelianGroup.cyclic(2)
Z4 = FgAbelianGroup.cyclic(4)
ZZ = FgAbelianGroup.integers()


def abc(group):
    return Cochain.from_function(3, group, Z2, lambda a, b, c: [a * b * c])


def carry(n):
    """The extension class of ℤ/n² over ℤ/n: f(a, b) = 1 when a + b overflows"""
    group = cyclic_group(n)
    return Cochain.from_function(2, group, FgAbelianGroup.cyclic(n), lambda a, b: [int(a + b >= n)])


class TestCochains:
    def test_normalized_storage(self, z2):
        c = Cochain.from_values(2, z2, Z4, {(1, 1): [3]})
        assert c.value(1, 1).tolist() == [3]
        assert c.value(0, 1).tolist() == [0]
        assert c.support() == [(1, 1)]

    def test_nonzero_unit_argument_rejected(self, z2):
        with pytest.raises(InvalidInputError):
            Cochain.from_values(2, z2, Z4, {(0, 1): [1]})

    def test_values_are_reduced(self, z2):
        c = Cochain.from_values(2, z2, Z4, {(1, 1): [5]})
        assert c.value(1, 1).tolist() == [1]

    def test_mismatched_cochains_cannot_be_added(self, z2):
        with pytest.raises(InvalidInputError):
            Cochain.zero(2, z2, Z4) + Cochain.zero(2, z2, Z2)


class TestDifferential:
    def test_homomorphism_is_a_cocycle(self, z2):
        f = Cochain.from_values(1, z2, Z2, {(1,): [1]})
        assert d_gp(f).is_zero()

    @pytest.mark.parametrize('degree', [0, 1, 2, 3])
    def test_zero_maps_to_zero(self, z2, degree):
        assert d_gp(Cochain.zero(degree, z2, Z4)).is_zero()

    def test_abc_is_a_cocycle(self, z2):
        assert d_gp(abc(z2)).is_zero()

    def test_degree_zero(self):
        z3 = FgAbelianGroup.cyclic(3)
        sign = GAction(cyclic_group(2), z3, (AbelianHom.identity(z3), AbelianHom(z3, z3, [[2]])))
        c = Cochain.from_values(0, cyclic_group(2), z3, {(): [1]}, action=sign)
        # (d c)(1) = 1.c − c = −2 = 1 mod 3
        assert d_gp(c).value(1).tolist() == [1]

    def test_square_is_zero(self, rng):
        groups = [cyclic_group(n) for n in range(1, 7)] + [symmetric_group(3)]
        modules = (Z2, Z4, ZZ, FgAbelianGroup(rank=1, torsion=(2, 4)))
        for _ in range(100):
            group = groups[rng.integers(len(groups))]
            coefficients = modules[rng.integers(len(modules))]
            degree = int(rng.integers(1, 4))
            c = Cochain.random(degree, group, coefficients, rng)
            assert d_gp(d_gp(c)).is_zero(), (group.name, str(coefficients), degree)

    def test_square_is_zero_with_action(self, rng):
        z3 = FgAbelianGroup.cyclic(3)
        g = cyclic_group(2)
        sign = GAction(g, z3, (AbelianHom.identity(z3), AbelianHom(z3, z3, [[2]])))
        for degree in (1, 2, 3):
            c = Cochain.random(degree, g, z3, rng, action=sign)
            assert d_gp(d_gp(c)).is_zero()


class TestCohomology:
    def test_h2_z2_z2(self, z2):
        result = cohomology_group(z2, Z2, n=2)
        assert result.group_iso_class == [2]
        for rep in result.representative_cocycles:
            assert d_gp(rep).is_zero()

    @pytest.mark.parametrize('n', [2, 3, 4])
    def test_integral_cohomology_of_cyclic_groups(self, n):
        g = cyclic_group(n)
        assert cohomology_group(g, ZZ, n=1).group_iso_class == []
        assert cohomology_group(g, ZZ, n=2).group_iso_class == [n]

    def test_h0_is_invariants(self, z2):
        assert cohomology_group(z2, ZZ, n=0).group_iso_class == [0]

    def test_h3_z2_z2_generated_by_abc(self, z2):
        result = cohomology_group(z2, Z2, n=3)
        assert result.group_iso_class == [2]
        assert result.class_of(abc(z2)) != (0,)
        assert is_coboundary(abc(z2)) is None

    def test_independent_of_element_order(self):
        g = permuted(cyclic_group(4), [0, 3, 1, 2])
        assert cohomology_group(g, ZZ, n=2).group_iso_class == [4]

    def test_degree_guard(self, z2):
        with pytest.raises(InvalidInputError):
            cohomology_group(z2, Z2, n=5)

    def test_matrix_size_guard(self):
        with pytest.raises(SizeGuardError):
            cohomology_group(cyclic_group(6), Z4, n=3, settings=Settings(max_matrix_cells=100))


class TestCoboundaries:
    def test_zero_has_zero_witness(self, z2):
        witness = is_coboundary(Cochain.zero(2, z2, Z4))
        assert witness is not None
        assert d_gp(witness).is_zero()

    def test_constructed_coboundary(self, rng):
        g = cyclic_group(4)
        b = Cochain.random(1, g, Z4, rng)
        witness = is_coboundary(d_gp(b))
        assert witness is not None
        assert d_gp(witness).equals(d_gp(b))

    def test_non_cocycle_rejected(self):
        g = cyclic_group(3)
        f = Cochain.from_values(2, g, Z2, {(1, 1): [1]})
        with pytest.raises(InvalidInputError):
            is_coboundary(f)


class TestTwistedProducts:
    def test_zero_cocycle_gives_direct_product(self, z2):
        group = twisted_product(Z2, z2, Cochain.zero(2, z2, Z2))
        assert abelian_invariant_factors(group) == [2, 2]

    def test_nontrivial_cocycle_gives_z4(self, z2):
        f = Cochain.from_values(2, z2, Z2, {(1, 1): [1]})
        group = twisted_product(Z2, z2, f)
        assert verify_finite_group(group).ok
        # (0, 1) sits at index 0·2 + 1
        assert group.element_order(1) == 4
        assert abelian_invariant_factors(group) == [4]

    def test_carry_cocycle_gives_cyclic_group(self):
        group = twisted_product(FgAbelianGroup.cyclic(3), cyclic_group(3), carry(3))
        assert abelian_invariant_factors(group) == [9]

    def test_non_cocycle_is_refused(self):
        g = cyclic_group(3)
        f = Cochain.from_values(2, g, Z2, {(1, 1): [1]})
        with pytest.raises(RefusedConstruction) as excinfo:
            twisted_product(Z2, g, f)
        assert excinfo.value.axiom == 'group.associativity'
        assert excinfo.value.witness == d_gp(f).support()[0]

    def test_associativity_fails_exactly_where_the_cocycle_condition_does(self):
        g = cyclic_group(3)
        f = Cochain.from_values(2, g, Z2, {(1, 1): [1], (2, 1): [1]})
        defect = d_gp(f).support()
        assert defect
        assert twisted_associativity_base_triples(Z2, g, f) == defect
        report = verify_finite_group(twisted_product(Z2, g, f, check=False))
        assert 'group.associativity' in report.failed_checks()

    def test_coboundary_shift_is_an_isomorphism(self, rng):
        g = cyclic_group(4)
        f = carry(4)
        for _ in range(3):
            b = Cochain.random(1, g, Z4, rng)
            assert twisted_product_isomorphism(Z4, g, f, b).ok


class TestCone:
    def test_identity_crossed_module_is_acyclic(self, z2):
        classes = cone_h2(z2, AbelianHom.identity(Z2))
        assert classes.count == 1

    def test_zero_target_recovers_h3(self, z2):
        tau = AbelianHom.zero(Z2, FgAbelianGroup.trivial())
        classes = cone_h2(z2, tau)
        assert classes.count == len(cohomology_group(z2, Z2, n=3).group.elements())
        assert classes.count == 2

    def test_trivial_group_has_one_class(self, tau_z2_z4):
        assert cone_h2(cyclic_group(1), tau_z2_z4).count == 1

    def test_stored_pairs_are_generalized_cocycles(self, z2, tau_z2_z4):
        classes = cone_h2(z2, tau_z2_z4)
        for F, theta in classes.representatives:
            assert d_gp(theta).is_zero()
            assert d_gp(F).equals(theta.map_coefficients(tau_z2_z4))
            assert classes.class_of(F, theta) == classes.representatives.index((F, theta))

    def test_enumeration_guard(self, tau_z2_z4):
        with pytest.raises(SizeGuardError):
            cone_h2(cyclic_group(3), tau_z2_z4, Settings(enumeration_guard=10))

    @pytest.mark.parametrize('tau', [
        AbelianHom(Z2, Z4, [[2]]),
        AbelianHom.identity(Z2),
        AbelianHom.zero(Z2, FgAbelianGroup.trivial()),
    ])
    def test_long_exact_sequence(self, z2, tau):
        report = les_exactness_check(z2, tau)
        assert report.ok, report.failed_checks()
        counts = next(f for f in report.informational if f.check == 'les.class_counts').value
        assert counts['H2(G,cone)'] == cone_h2(z2, tau).count

    def test_long_exact_sequence_trivial_group(self, tau_z2_z4):
        assert les_exactness_check(cyclic_group(1), tau_z2_z4).ok
