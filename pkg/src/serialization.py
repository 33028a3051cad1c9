"""
JSON payloads for groups, homomorphisms, cochains, crossed modules, 2-groups and Lie cocycles
"""
import functools
import json
import re
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from algebra_core import AbelianHom, FgAbelianGroup, FiniteGroup, GAction, cyclic_group, symmetric_group
from errors import CentralExtensionError, InvalidInputError
from group_cohomology import Cochain
from lie_numeric import LieAlgebraCocycle
from two_groups import TABLES, CrossedModule, GeneralizedCocycle, TwoGroup

_TUPLE_KEY = re.compile(r'^\(?\s*(-?\d+(\s*,\s*-?\d+)*)?\s*,?\s*\)?$')


def load_json(path: str) -> Dict[str, Any]:
    """Read a UTF-8 JSON file; syntax errors are reported with their line and column"""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError:
        raise InvalidInputError(f"Input file not found: {path}")
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"Malformed JSON in {path} at line {e.lineno}, column {e.colno}: {e.msg}")


def load_object(path: str) -> Dict[str, Any]:
    data = load_json(path)
    if not isinstance(data, dict):
        raise InvalidInputError(f"{path} must contain a JSON object, got {type(data).__name__}")
    return data


def save_json(data: Dict[str, Any], path: str):
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(data, f, indent=2, sort_keys=True, ensure_ascii=False)


def _require(data: Dict[str, Any], key: str, what: str):
    if not isinstance(data, dict) or key not in data:
        raise InvalidInputError(f"{what} is missing the '{key}' field")
    return data[key]


def _loader(func):
    """Values of the wrong type or shape become InvalidInputError"""
    what = func.__name__.replace('_from_json', '').replace('_', ' ')

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except CentralExtensionError:
            raise
        except (ValueError, TypeError, AttributeError, IndexError) as e:
            raise InvalidInputError(f"Invalid {what}: {e}") from e

    return wrapper


@_loader
def int_field(data: Dict[str, Any], key: str, default: int) -> int:
    return int(data.get(key, default))


# ---------------------------------------------------------------------------
# Groups and homomorphisms
# ---------------------------------------------------------------------------

@_loader
def group_from_json(data: Dict[str, Any]) -> FiniteGroup:
    """{"type":"finite","order":n,"table":[[...]]}, {"type":"cyclic","n":k} or {"type":"symmetric","n":k}"""
    kind = _require(data, 'type', 'Group')
    if kind == 'cyclic':
        return cyclic_group(int(_require(data, 'n', 'Cyclic group')))
    if kind == 'symmetric':
        return symmetric_group(int(_require(data, 'n', 'Symmetric group')))
    if kind == 'finite':
        table = np.asarray(_require(data, 'table', 'Finite group'), dtype=np.int64)
        order = data.get('order')
        if order is not None and table.shape[:1] != (int(order),):
            raise InvalidInputError(f"Declared order {order} does not match a table with {table.shape[0]} rows")
        return FiniteGroup(table, name=data.get('name', ''))
    raise InvalidInputError(f"Unknown group type: {kind}")


def group_to_json(group: FiniteGroup) -> Dict[str, Any]:
    return {'type': 'finite', 'order': group.order, 'table': group.table.tolist(), 'name': group.name}


@_loader
def abelian_from_json(data: Dict[str, Any]) -> FgAbelianGroup:
    """{"rank":r,"torsion":[d1,...]}"""
    if not isinstance(data, dict):
        raise InvalidInputError("An abelian group is given as {\"rank\": r, \"torsion\": [...]}")
    return FgAbelianGroup(rank=int(data.get('rank', 0)), torsion=tuple(int(d) for d in data.get('torsion', [])))


def abelian_to_json(group: FgAbelianGroup) -> Dict[str, Any]:
    return {'rank': group.rank, 'torsion': list(group.torsion)}


@_loader
def hom_from_json(data: Dict[str, Any], source: Optional[FgAbelianGroup] = None,
                  target: Optional[FgAbelianGroup] = None) -> AbelianHom:
    """{"matrix":[[...]]} with optional embedded "source" and "target" groups"""
    if 'source' in data:
        source = abelian_from_json(data['source'])
    if 'target' in data:
        target = abelian_from_json(data['target'])
    if source is None or target is None:
        raise InvalidInputError("A homomorphism needs its source and target groups")
    matrix = np.asarray(_require(data, 'matrix', 'Homomorphism'), dtype=np.int64)
    if matrix.size != target.ngens * source.ngens:
        raise InvalidInputError(f"Homomorphism {source} -> {target} needs a {target.ngens}×{source.ngens} matrix, "
                                f"got shape {matrix.shape}")
    hom = AbelianHom(source, target, matrix)
    bad = hom.well_definedness_failures()
    if bad:
        raise InvalidInputError(f"Matrix does not define a homomorphism: torsion generator {bad[0]} "
                                f"is not killed by its order")
    return hom


def hom_to_json(hom: AbelianHom) -> Dict[str, Any]:
    return {'source': abelian_to_json(hom.source), 'target': abelian_to_json(hom.target),
            'matrix': hom.matrix.tolist()}


@_loader
def action_from_json(data: Sequence, group: FiniteGroup, module: FgAbelianGroup) -> GAction:
    """One automorphism matrix per group element, in element order"""
    if len(data) != group.order:
        raise InvalidInputError(f"An action needs {group.order} matrices, got {len(data)}")
    return GAction(group, module, tuple(AbelianHom(module, module, np.asarray(m, dtype=np.int64)) for m in data))


# ---------------------------------------------------------------------------
# Cochains
# ---------------------------------------------------------------------------

@_loader
def parse_tuple_key(key: str) -> Tuple[int, ...]:
    """'(1,2,1)' or '1,2,1' → (1, 2, 1); '()' → ()"""
    if not _TUPLE_KEY.match(key.strip()):
        raise InvalidInputError(f"Invalid cochain argument key: {key!r}")
    inner = key.strip().strip('()').strip()
    return tuple(int(part) for part in inner.split(',') if part.strip()) if inner else ()


@_loader
def cochain_from_json(data: Dict[str, Any], group: FiniteGroup, coefficients: FgAbelianGroup,
                      action: Optional[GAction] = None) -> Cochain:
    """{"degree":n,"values":{"(i,j,...)":[coords]}}; omitted tuples are 0"""
    degree = int(_require(data, 'degree', 'Cochain'))
    values = data.get('values', {})
    if not isinstance(values, dict):
        raise InvalidInputError("Cochain values must be an object keyed by argument tuples")
    mapping = {}
    for key, value in values.items():
        coords = np.atleast_1d(np.asarray(value, dtype=np.int64))
        if coords.shape != (coefficients.ngens,):
            raise InvalidInputError(f"Value at {key} must have {coefficients.ngens} coordinates for {coefficients}")
        mapping[parse_tuple_key(key)] = coords
    return Cochain.from_values(degree, group, coefficients, mapping, action)


def cochain_to_json(c: Cochain) -> Dict[str, Any]:
    values = {'(' + ','.join(str(a) for a in args) + ')': c.value(*args).tolist() for args in c.support()}
    return {'degree': c.degree, 'values': values}


# ---------------------------------------------------------------------------
# Crossed modules, 2-groups and generalized cocycles
# ---------------------------------------------------------------------------

@_loader
def crossed_module_from_json(data: Dict[str, Any]) -> CrossedModule:
    """{"h":group, "g":group, "tau":[...], "action":[[...]]}; a missing action is trivial"""
    h_group = group_from_json(_require(data, 'h', 'Crossed module'))
    g_group = group_from_json(_require(data, 'g', 'Crossed module'))
    tau = _require(data, 'tau', 'Crossed module')
    if len(tau) != h_group.order:
        raise InvalidInputError(f"τ needs one image per element of H ({h_group.order}), got {len(tau)}")
    if 'action' not in data:
        return CrossedModule.with_trivial_action(h_group, g_group, tau)
    action = np.asarray(data['action'], dtype=np.int64)
    if action.shape != (g_group.order, h_group.order):
        raise InvalidInputError(f"The action table must have shape ({g_group.order}, {h_group.order}), "
                                f"got {action.shape}")
    return CrossedModule(h_group, g_group, tau, action)


def two_group_to_json(tg: TwoGroup) -> Dict[str, Any]:
    """All structure tables; composition as sorted [m2, m1, m2∘m1] triples"""
    data = {name: tg.table(name).tolist() for name in TABLES if name != 'compose'}
    data['compose'] = [[m2, m1, r] for (m2, m1), r in sorted(tg.compose.items())]
    data['name'] = tg.name
    return data


@_loader
def two_group_from_json(data: Dict[str, Any]) -> TwoGroup:
    tables = {}
    for name in TABLES:
        value = _require(data, name, '2-group')
        if name == 'compose':
            entries = np.asarray(value, dtype=np.int64).reshape(-1, 3)
            tables[name] = {(int(m2), int(m1)): int(r) for m2, m1, r in entries}
        else:
            tables[name] = np.asarray(value, dtype=np.int64)
    return TwoGroup(name=data.get('name', ''), **tables)


@_loader
def generalized_cocycle_from_json(data: Dict[str, Any]) -> GeneralizedCocycle:
    """{"group":..., "tau":{"source","target","matrix"}, "F":cochain, "theta":cochain}"""
    group = group_from_json(_require(data, 'group', 'Generalized cocycle'))
    tau = hom_from_json(_require(data, 'tau', 'Generalized cocycle'))
    F = cochain_from_json(_require(data, 'F', 'Generalized cocycle'), group, tau.target)
    theta = cochain_from_json(_require(data, 'theta', 'Generalized cocycle'), group, tau.source)
    return GeneralizedCocycle(base=group, tau=tau, F=F, theta=theta)


def generalized_cocycle_to_json(gc: GeneralizedCocycle) -> Dict[str, Any]:
    return {'group': group_to_json(gc.base), 'tau': hom_to_json(gc.tau),
            'F': cochain_to_json(gc.F), 'theta': cochain_to_json(gc.theta)}


# ---------------------------------------------------------------------------
# Lie algebra cocycles and sample points
# ---------------------------------------------------------------------------

@_loader
def omega_from_json(data: Any) -> LieAlgebraCocycle:
    """An m×n×n structure-constant array, bare or under "structure" """
    if isinstance(data, dict):
        return LieAlgebraCocycle(np.asarray(_require(data, 'structure', 'Cocycle'), dtype=float),
                                 name=data.get('name', ''))
    return LieAlgebraCocycle(np.asarray(data, dtype=float))


@_loader
def points_from_json(data: Dict[str, Any], keys: Sequence[str] = ('g', 'h')) -> Tuple[np.ndarray, ...]:
    """Chart coordinates stored under the given keys"""
    return tuple(np.asarray(_require(data, key, 'Point file'), dtype=float) for key in keys)
