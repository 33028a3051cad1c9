import json
import os

import numpy as np
import pytest

from algebra_core import FgAbelianGroup
from errors import InvalidInputError
from group_cohomology import Cochain
from serialization import (
    cochain_from_json,
    cochain_to_json,
    generalized_cocycle_from_json,
    generalized_cocycle_to_json,
    group_from_json,
    hom_from_json,
    load_json,
    load_object,
    omega_from_json,
    parse_tuple_key,
    save_json,
    two_group_from_json,
    two_group_to_json,
)
from two_groups import verify_2group, verify_generalized_cocycle


@pytest.mark.parametrize('key, expected', [
    ('(1,2,1)', (1, 2, 1)),
    ('1, 2', (1, 2)),
    ('(3,)', (3,)),
    ('()', ()),
])
def test_tuple_keys(key, expected):
    assert parse_tuple_key(key) == expected


def test_bad_tuple_key():
    with pytest.raises(InvalidInputError):
        parse_tuple_key('(a,b)')


def test_malformed_json_reports_position(tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{"group": {"type": "cyclic",\n "n": }}', encoding='utf-8')
    with pytest.raises(InvalidInputError) as excinfo:
        load_json(str(path))
    assert 'line 2' in str(excinfo.value)


def test_missing_file_and_non_object(tmp_path):
    with pytest.raises(InvalidInputError):
        load_json(str(tmp_path / 'absent.json'))
    path = tmp_path / 'list.json'
    path.write_text('[1, 2]', encoding='utf-8')
    with pytest.raises(InvalidInputError):
        load_object(str(path))


def test_groups():
    assert group_from_json({'type': 'cyclic', 'n': 3}).order == 3
    assert group_from_json({'type': 'symmetric', 'n': 3}).order == 6
    table = [[0, 1], [1, 0]]
    assert group_from_json({'type': 'finite', 'order': 2, 'table': table}).table.tolist() == table
    with pytest.raises(InvalidInputError):
        group_from_json({'type': 'finite', 'order': 3, 'table': table})
    with pytest.raises(InvalidInputError):
        group_from_json({'type': 'dihedral', 'n': 4})


@pytest.mark.parametrize('loader, payload', [
    (group_from_json, {'type': 'cyclic', 'n': 'abc'}),
    (group_from_json, {'type': 'finite', 'table': [[0, 1], [1]]}),
    (two_group_from_json, {'source': [0], 'target': [0], 'identity': [0], 'compose': [[0, 0]]}),
    (omega_from_json, {'structure': [[0.0, 'x']]}),
])
def test_wrong_value_types_are_invalid_input(loader, payload):
    with pytest.raises(InvalidInputError):
        loader(payload)


def test_wrong_value_types_in_cochains(z2):
    z4 = FgAbelianGroup.cyclic(4)
    with pytest.raises(InvalidInputError):
        cochain_from_json({'degree': 2, 'values': {'(1,1)': [[1], 2]}}, z2, z4)
    with pytest.raises(InvalidInputError):
        cochain_from_json({'degree': 'two'}, z2, z4)


def test_homomorphisms_are_checked():
    z2 = {'torsion': [2]}
    z4 = {'torsion': [4]}
    assert hom_from_json({'source': z2, 'target': z4, 'matrix': [[2]]}).matrix.tolist() == [[2]]
    with pytest.raises(InvalidInputError):
        hom_from_json({'source': z2, 'target': z4, 'matrix': [[1]]})
    with pytest.raises(InvalidInputError):
        hom_from_json({'source': z2, 'target': z4, 'matrix': [[2, 0]]})


def test_cochain_values(z2):
    z4 = FgAbelianGroup.cyclic(4)
    c = cochain_from_json({'degree': 2, 'values': {'(1,1)': [3]}}, z2, z4)
    assert c.value(1, 1).tolist() == [3]
    assert cochain_to_json(c) == {'degree': 2, 'values': {'(1,1)': [3]}}
    with pytest.raises(InvalidInputError):
        cochain_from_json({'degree': 2, 'values': {'(0,1)': [1]}}, z2, z4)
    with pytest.raises(InvalidInputError):
        cochain_from_json({'degree': 2, 'values': {'(1,1)': [1, 0]}}, z2, z4)


def test_two_group_round_trip(mutation_fixture, tmp_path):
    path = str(tmp_path / 'total.json')
    save_json(two_group_to_json(mutation_fixture), path)
    restored = two_group_from_json(load_object(path))
    assert restored.compose == mutation_fixture.compose
    assert np.array_equal(restored.associator, mutation_fixture.associator)
    assert verify_2group(restored).ok


def test_generalized_cocycle_files(templates_dir):
    gc = generalized_cocycle_from_json(load_object(os.path.join(templates_dir, 'cocycle_z2_z4.json')))
    assert verify_generalized_cocycle(gc).ok
    assert gc.F.value(1, 1).tolist() == [1]
    data = generalized_cocycle_to_json(gc)
    assert json.loads(json.dumps(data))['F'] == {'degree': 2, 'values': {'(1,1)': [1]}}

    band = generalized_cocycle_from_json(load_object(os.path.join(templates_dir, 'cocycle_band_z4.json')))
    assert band.a.order == 1
    assert isinstance(band.theta, Cochain)


def test_omega_files(templates_dir):
    omega = omega_from_json(load_json(os.path.join(templates_dir, 'omega_su2_coboundary.json')))
    assert omega.skew_defect() == 0.0
    assert omega.structure[0, 1, 2] == 1.0
    assert omega_from_json([[[0.0, 1.0], [-1.0, 0.0]]]).n == 2
    with pytest.raises(InvalidInputError):
        omega_from_json({'name': 'missing structure'})
