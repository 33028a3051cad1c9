import os
import sys

import numpy as np
import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(ROOT, 'src'))
sys.path.insert(0, ROOT)

from algebra_core import AbelianHom, FgAbelianGroup, cyclic_group  # noqa: E402
from group_cohomology import Cochain  # noqa: E402
from two_groups import GeneralizedCocycle, extension_from_cocycle  # noqa: E402

TEMPLATES = os.path.join(ROOT, 'templates')


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def z2():
    return cyclic_group(2)


@pytest.fixture
def tau_z2_z4():
    """ℤ/2 → ℤ/4, 1 ↦ 2"""
    return AbelianHom(FgAbelianGroup.cyclic(2), FgAbelianGroup.cyclic(4), [[2]])


def make_cocycle(group, tau, F_values=None, theta_values=None):
    F = Cochain.from_values(2, group, tau.target, F_values or {})
    theta = Cochain.from_values(3, group, tau.source, theta_values or {})
    return GeneralizedCocycle(base=group, tau=tau, F=F, theta=theta)


@pytest.fixture
def mutation_fixture(z2, tau_z2_z4):
    """Total 2-group of the extension with F(1,1) = 1: 8 objects, 16 morphisms, Hom sets of size ≤ 1"""
    return extension_from_cocycle(make_cocycle(z2, tau_z2_z4, {(1, 1): [1]})).total


@pytest.fixture
def templates_dir():
    return TEMPLATES
