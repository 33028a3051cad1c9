"""
Crossed modules, finite 2-groups with exhaustive axiom checks, generalized
cocycles and the central-extension 2-groups built from them.

A TwoGroup stores every structure map as an index table. Objects and
morphisms are dense indices; the unit object and the identity on it are 0.
"""
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from algebra_core import (
    AbelianHom,
    FgAbelianGroup,
    FiniteGroup,
    cyclic_group,
    abelian_invariant_factors,
    hom_decompose,
    verify_finite_group,
)
from errors import InvalidInputError, NotComposableError, RefusedConstruction
from group_cohomology import Cochain, d_gp, full_table
from reports import FAIL, INFO, PASS, Finding, Report

TABLES = (
    'source', 'target', 'identity', 'compose', 'tensor_objects', 'tensor_morphisms',
    'inverse_objects', 'inverse_morphisms', 'associator',
)

# tables read by each check of verify_2group
AXIOM_TABLES: Dict[str, Tuple[str, ...]] = {
    'shape.ranges': TABLES,
    'category.identity': ('identity', 'source', 'target'),
    'category.composition_domain': ('compose', 'source', 'target'),
    'category.composition_source_target': ('compose', 'source', 'target'),
    'category.unit_law': ('compose', 'identity', 'source', 'target'),
    'category.associativity': ('compose', 'source', 'target'),
    'category.invertibility': ('compose', 'identity', 'source', 'target'),
    'tensor.source_target': ('tensor_morphisms', 'tensor_objects', 'source', 'target'),
    'tensor.identity': ('tensor_morphisms', 'tensor_objects', 'identity'),
    'tensor.interchange': ('tensor_morphisms', 'compose', 'source', 'target'),
    'inversion.functor': ('inverse_morphisms', 'inverse_objects', 'source', 'target', 'identity', 'compose'),
    'unit.strict': ('tensor_objects', 'tensor_morphisms', 'identity'),
    'inverse.strict': ('tensor_objects', 'inverse_objects', 'tensor_morphisms', 'inverse_morphisms', 'identity'),
    'associator.source_target': ('associator', 'source', 'target', 'tensor_objects'),
    'associator.naturality': ('associator', 'tensor_morphisms', 'compose', 'source', 'target'),
    'associator.pentagon': ('associator', 'tensor_objects', 'tensor_morphisms', 'compose', 'identity',
                            'source', 'target'),
    'associator.unit': ('associator', 'identity', 'source'),
    'associator.unit_iso': ('associator', 'identity', 'source', 'target'),
    'associator.inverse_triple': ('associator', 'identity', 'source', 'inverse_objects'),
}


# ---------------------------------------------------------------------------
# Crossed modules
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CrossedModule:
    """τ: H → G with a G-action on H; action[g][h] = g.h"""
    h_group: FiniteGroup
    g_group: FiniteGroup
    tau: np.ndarray
    action: np.ndarray

    def __post_init__(self):
        tau = np.array(self.tau, dtype=np.int64).reshape(self.h_group.order)
        action = np.array(self.action, dtype=np.int64).reshape(self.g_group.order, self.h_group.order)
        if tau.min() < 0 or tau.max() >= self.g_group.order:
            raise InvalidInputError("τ must map H indices to G indices")
        if action.min() < 0 or action.max() >= self.h_group.order:
            raise InvalidInputError("The action table must take values in H")
        for arr in (tau, action):
            arr.setflags(write=False)
        object.__setattr__(self, 'tau', tau)
        object.__setattr__(self, 'action', action)

    @classmethod
    def with_trivial_action(cls, h_group: FiniteGroup, g_group: FiniteGroup, tau: Sequence[int]) -> 'CrossedModule':
        action = np.tile(np.arange(h_group.order), (g_group.order, 1))
        return cls(h_group, g_group, tau, action)

    @classmethod
    def identity(cls, group: FiniteGroup) -> 'CrossedModule':
        """id: G → G with G acting on itself by conjugation"""
        g = np.arange(group.order)
        conj = group.table[group.table[g[:, None], g[None, :]], group.inverse[g][:, None]]
        return cls(group, group, g, conj)

    @classmethod
    def from_abelian_hom(cls, hom: AbelianHom) -> 'CrossedModule':
        """Abelian crossed module τ: A → Z with trivial action"""
        a_group = hom.source.as_finite_group()
        z_group = hom.target.as_finite_group()
        tau = [hom.target.index_of(hom.apply(hom.source.element_at(i))) for i in range(a_group.order)]
        return cls.with_trivial_action(a_group, z_group, tau)


def _record(findings: List[Finding], check: str, witnesses: Sequence[Tuple[int, ...]], detail: str = ''):
    if len(witnesses):
        witness = tuple(int(v) for v in witnesses[0])
        findings.append(Finding(check, status=FAIL, witness=witness, value=int(len(witnesses)), detail=detail))


def verify_crossed_module(cm: CrossedModule) -> Report:
    """Homomorphism, action, equivariance and Peiffer conditions at all pairs"""
    findings: List[Finding] = []
    H, G = cm.h_group, cm.g_group
    h = np.arange(H.order)
    g = np.arange(G.order)
    tau, act = cm.tau, cm.action

    _record(findings, 'crossed_module.tau_homomorphism',
            np.argwhere(tau[H.table] != G.table[tau[:, None], tau[None, :]]))

    _record(findings, 'crossed_module.action_automorphism',
            np.argwhere(act[:, H.table] != H.table[act[:, :, None], act[:, None, :]]))
    bad_compat = np.argwhere(act[G.table] != act[g[:, None, None], act[None, :, :]])
    if np.any(act[0] != h):
        _record(findings, 'crossed_module.action_unit', [(0, int(np.flatnonzero(act[0] != h)[0]))])
    _record(findings, 'crossed_module.action_compatibility', bad_compat)

    # τ(g.h) = g τ(h) g⁻¹
    lhs = tau[act]
    rhs = G.table[G.table[g[:, None], tau[None, :]], G.inverse[g][:, None]]
    _record(findings, 'crossed_module.equivariance', np.argwhere(lhs != rhs))

    # τ(h).h' = h h' h⁻¹
    lhs = act[tau[:, None], h[None, :]]
    rhs = H.table[H.table[h[:, None], h[None, :]], H.inverse[h][:, None]]
    _record(findings, 'crossed_module.peiffer', np.argwhere(lhs != rhs))

    return Report.from_findings(findings, {'H_order': H.order, 'G_order': G.order})


# ---------------------------------------------------------------------------
# 2-groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TwoGroup:
    """A finite 2-group; compose[(m2, m1)] = m2∘m1 for t(m1) = s(m2)"""
    source: np.ndarray
    target: np.ndarray
    identity: np.ndarray
    compose: Dict[Tuple[int, int], int]
    tensor_objects: np.ndarray
    tensor_morphisms: np.ndarray
    inverse_objects: np.ndarray
    inverse_morphisms: np.ndarray
    associator: np.ndarray
    name: str = ''

    def __post_init__(self):
        for name in TABLES:
            if name == 'compose':
                continue
            arr = np.array(getattr(self, name), dtype=np.int64)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        object.__setattr__(self, 'compose', {(int(a), int(b)): int(c) for (a, b), c in dict(self.compose).items()})

    @property
    def object_count(self) -> int:
        return int(self.identity.shape[0])

    @property
    def morphism_count(self) -> int:
        return int(self.source.shape[0])

    def comp(self, m2: int, m1: int) -> int:
        """m2 ∘ m1"""
        try:
            return self.compose[(int(m2), int(m1))]
        except KeyError:
            raise NotComposableError(f"Morphisms {m2} and {m1} are not composable")

    def hom(self, x: int, y: int) -> List[int]:
        return [int(m) for m in np.flatnonzero((self.source == x) & (self.target == y))]

    def is_identity(self, m: int) -> bool:
        return int(self.identity[self.source[m]]) == int(m)

    def table(self, name: str):
        return getattr(self, name)


def _shape_failures(tg: TwoGroup) -> List[str]:
    O = tg.identity.shape[0] if tg.identity.ndim == 1 else 0
    M = tg.source.shape[0] if tg.source.ndim == 1 else 0
    if O == 0 or M == 0:
        return ['identity' if O == 0 else 'source']
    expected = {
        'source': ((M,), O), 'target': ((M,), O), 'identity': ((O,), M),
        'tensor_objects': ((O, O), O), 'tensor_morphisms': ((M, M), M),
        'inverse_objects': ((O,), O), 'inverse_morphisms': ((M,), M), 'associator': ((O, O, O), M),
    }
    failures = []
    for name, (shape, bound) in expected.items():
        arr = getattr(tg, name)
        if arr.shape != shape or (arr.size and (arr.min() < 0 or arr.max() >= bound)):
            failures.append(name)
    for (m2, m1), r in tg.compose.items():
        if not (0 <= m2 < M and 0 <= m1 < M and 0 <= r < M):
            failures.append('compose')
            break
    return failures


def _dense_compose(tg: TwoGroup) -> np.ndarray:
    M = tg.morphism_count
    dense = np.full((M, M), -1, dtype=np.int64)
    for (m2, m1), r in tg.compose.items():
        dense[m2, m1] = r
    return dense


def _composer(dense: np.ndarray) -> Callable[[np.ndarray, np.ndarray], np.ndarray]:
    """Vectorized m2∘m1 returning -1 where the pair is not composable"""
    def compose(m2, m1):
        m2 = np.asarray(m2)
        m1 = np.asarray(m1)
        valid = (m2 >= 0) & (m1 >= 0)
        result = dense[np.where(valid, m2, 0), np.where(valid, m1, 0)]
        return np.where(valid, result, -1)
    return compose


def verify_2group(tg: TwoGroup) -> Report:
    """Check every 2-group axiom exhaustively; one finding per violated axiom with its least witness"""
    findings: List[Finding] = []
    provenance = {'objects': int(tg.identity.shape[0]), 'morphisms': int(tg.source.shape[0])}
    shape = _shape_failures(tg)
    if shape:
        findings.append(Finding('shape.ranges', witness=None, value=len(shape), detail=', '.join(shape)))
        return Report.from_findings(findings, provenance)

    O, M = tg.object_count, tg.morphism_count
    s, t, ident = tg.source, tg.target, tg.identity
    T0, T1 = tg.tensor_objects, tg.tensor_morphisms
    inv0, inv1, alpha = tg.inverse_objects, tg.inverse_morphisms, tg.associator
    C = _dense_compose(tg)
    comp = _composer(C)
    objs = np.arange(O)
    mors = np.arange(M)

    # category
    _record(findings, 'category.identity', np.argwhere((s[ident] != objs) | (t[ident] != objs)))
    expected = {(int(m2), int(m1)) for m1 in range(M) for m2 in np.flatnonzero(s == t[m1])}
    actual = set(tg.compose)
    _record(findings, 'category.composition_domain', sorted(expected ^ actual))
    keys = sorted(actual & expected)
    key_arr = np.array(keys, dtype=np.int64).reshape(len(keys), 2)
    if len(keys):
        results = C[key_arr[:, 0], key_arr[:, 1]]
        bad = (s[results] != s[key_arr[:, 1]]) | (t[results] != t[key_arr[:, 0]])
        _record(findings, 'category.composition_source_target', key_arr[bad])

    left_unit = comp(ident[t], mors)
    right_unit = comp(mors, ident[s])
    _record(findings, 'category.unit_law', np.argwhere((left_unit != mors) | (right_unit != mors)))

    assoc_failures = []
    for m2, m1 in keys:
        for m3 in np.flatnonzero(s == t[m2]):
            lhs = comp(comp(m3, m2), m1)
            rhs = comp(m3, comp(m2, m1))
            if lhs < 0 or lhs != rhs:
                assoc_failures.append((int(m3), m2, m1))
    _record(findings, 'category.associativity', sorted(assoc_failures))

    no_inverse = []
    for m in range(M):
        candidates = np.flatnonzero((s == t[m]) & (t == s[m]))
        ok = (comp(candidates, m) == ident[s[m]]) & (comp(m, candidates) == ident[t[m]])
        if not np.any(ok):
            no_inverse.append((m,))
    _record(findings, 'category.invertibility', no_inverse)

    # tensor product
    bad = (s[T1] != T0[s[:, None], s[None, :]]) | (t[T1] != T0[t[:, None], t[None, :]])
    _record(findings, 'tensor.source_target', np.argwhere(bad))
    _record(findings, 'tensor.identity', np.argwhere(T1[ident[:, None], ident[None, :]] != ident[T0]))
    if len(keys):
        m2, m1 = key_arr[:, 0], key_arr[:, 1]
        composed = C[m2, m1]
        lhs = T1[composed[:, None], composed[None, :]]
        rhs = comp(T1[m2[:, None], m2[None, :]], T1[m1[:, None], m1[None, :]])
        bad_pairs = np.argwhere((rhs < 0) | (lhs != rhs))
        witnesses = [tuple(key_arr[i]) + tuple(key_arr[j]) for i, j in bad_pairs]
        _record(findings, 'tensor.interchange', witnesses)

    # inversion
    inversion_failures = [(int(m),) for m in np.flatnonzero((s[inv1] != inv0[s]) | (t[inv1] != inv0[t]))]
    inversion_failures += [(int(x), -1) for x in np.flatnonzero(inv1[ident] != ident[inv0])]
    if len(keys):
        bad = comp(inv1[key_arr[:, 0]], inv1[key_arr[:, 1]]) != inv1[C[key_arr[:, 0], key_arr[:, 1]]]
        inversion_failures += [tuple(int(v) for v in key) for key in key_arr[bad]]
    _record(findings, 'inversion.functor', sorted(inversion_failures))

    # strict unit and inverse laws
    unit_failures = [(int(x),) for x in np.flatnonzero((T0[:, 0] != objs) | (T0[0, :] != objs))]
    unit_failures += [(int(m), -1) for m in np.flatnonzero((T1[:, ident[0]] != mors) | (T1[ident[0], :] != mors))]
    if ident[0] != 0:
        unit_failures.append((0, 0))
    _record(findings, 'unit.strict', sorted(unit_failures))

    inverse_failures = [(int(x),) for x in np.flatnonzero((T0[objs, inv0] != 0) | (T0[inv0, objs] != 0))]
    inverse_failures += [(int(m), -1) for m in
                         np.flatnonzero((T1[mors, inv1] != ident[0]) | (T1[inv1, mors] != ident[0]))]
    _record(findings, 'inverse.strict', sorted(inverse_failures))

    # associator
    left_nested = T0[T0[:, :, None], objs[None, None, :]]
    right_nested = T0[objs[:, None, None], T0[None, :, :]]
    _record(findings, 'associator.source_target',
            np.argwhere((s[alpha] != left_nested) | (t[alpha] != right_nested)))

    naturality_failures = []
    g_idx, h_idx = np.meshgrid(mors, mors, indexing='ij')
    for f in range(M):
        lhs = comp(alpha[t[f], t[g_idx], t[h_idx]], T1[T1[f, g_idx], h_idx])
        rhs = comp(T1[f, T1[g_idx, h_idx]], alpha[s[f], s[g_idx], s[h_idx]])
        for g_m, h_m in np.argwhere((lhs < 0) | (lhs != rhs)):
            naturality_failures.append((f, int(g_m), int(h_m)))
    _record(findings, 'associator.naturality', naturality_failures)

    x, y, z, w = np.meshgrid(objs, objs, objs, objs, indexing='ij')
    lhs = comp(alpha[x, y, T0[z, w]], alpha[T0[x, y], z, w])
    rhs = comp(comp(T1[ident[x], alpha[y, z, w]], alpha[x, T0[y, z], w]), T1[alpha[x, y, z], ident[w]])
    _record(findings, 'associator.pentagon', np.argwhere((lhs < 0) | (lhs != rhs)))

    is_id = ident[s[alpha]] == alpha
    has_unit = (objs[:, None, None] == 0) | (objs[None, :, None] == 0) | (objs[None, None, :] == 0)
    _record(findings, 'associator.unit', np.argwhere(has_unit & ~is_id))

    # informational: unit-like arguments and the α_{g,ḡ,g} condition
    unit_like = np.zeros(O, dtype=bool)
    unit_like[t[s == 0]] = True
    unit_like[0] = True
    iso_args = unit_like[:, None, None] | unit_like[None, :, None] | unit_like[None, None, :]
    iso_bad = np.argwhere(iso_args & ~is_id)
    findings.append(Finding('associator.unit_iso', status=INFO,
                            witness=tuple(int(v) for v in iso_bad[0]) if len(iso_bad) else None,
                            value={'holds': not len(iso_bad)}))
    triple_bad = np.flatnonzero(~is_id[objs, inv0, objs])
    findings.append(Finding('associator.inverse_triple', status=INFO,
                            witness=(int(triple_bad[0]),) if len(triple_bad) else None,
                            value={'holds': not len(triple_bad)}))

    return Report.from_findings(findings, provenance)


def strict_2group_from_crossed_module(cm: CrossedModule) -> TwoGroup:
    """Objects G, morphisms H ⋊ G at index h·|G| + g, identically trivial associator"""
    report = verify_crossed_module(cm)
    if not report.ok:
        first = report.violations[0]
        raise RefusedConstruction(f"Invalid crossed module: {first.check} fails at {first.witness}",
                                  axiom=first.check, witness=first.witness)
    H, G = cm.h_group, cm.g_group
    nG, nH = G.order, H.order
    h_of = np.repeat(np.arange(nH), nG)
    g_of = np.tile(np.arange(nG), nH)
    source = g_of
    target = G.table[cm.tau[h_of], g_of]
    identity = np.arange(nG)

    compose = {}
    for m1 in range(nH * nG):
        for h2 in range(nH):
            m2 = h2 * nG + int(target[m1])
            compose[(m2, m1)] = int(H.table[h2, h_of[m1]]) * nG + int(g_of[m1])

    # (h,g)⊗(h',g') = (h·(g.h'), gg')
    h1, g1 = h_of[:, None], g_of[:, None]
    h2, g2 = h_of[None, :], g_of[None, :]
    tensor_morphisms = H.table[h1, cm.action[g1, h2]] * nG + G.table[g1, g2]
    inverse_g = G.inverse[g_of]
    inverse_morphisms = cm.action[inverse_g, H.inverse[h_of]] * nG + inverse_g
    objs = np.arange(nG)
    associator = G.table[G.table[objs[:, None, None], objs[None, :, None]], objs[None, None, :]]

    return TwoGroup(source=source, target=target, identity=identity, compose=compose,
                    tensor_objects=G.table, tensor_morphisms=tensor_morphisms,
                    inverse_objects=G.inverse, inverse_morphisms=inverse_morphisms,
                    associator=associator, name=f"strict({H} -> {G})")


def discrete_2group(group: FiniteGroup) -> TwoGroup:
    """ul(G): only identity morphisms"""
    trivial = cyclic_group(1)
    return strict_2group_from_crossed_module(CrossedModule.with_trivial_action(trivial, group, [0]))


def skeletal_2group_from_3cocycle(g: FiniteGroup, a: FgAbelianGroup, theta: Cochain,
                                  check_cocycle: bool = True) -> TwoGroup:
    """Objects G, morphisms A × G at index a_idx·|G| + x, associator (Θ(x,y,z), xyz)"""
    if theta.degree != 3 or theta.coefficients != a or theta.action is not None:
        raise InvalidInputError("Θ must be an A-valued 3-cochain with trivial action")
    if not a.is_finite:
        raise InvalidInputError(f"Coefficient group {a} must be finite")
    if check_cocycle:
        defect = d_gp(theta).support()
        if defect:
            raise RefusedConstruction(f"Θ is not a 3-cocycle: d_gp Θ{defect[0]} != 0",
                                      axiom='cocycle.theta_closed', witness=defect[0])
    A = a.as_finite_group()
    nG, nA = g.order, A.order
    a_of = np.repeat(np.arange(nA), nG)
    x_of = np.tile(np.arange(nG), nA)
    compose = {}
    for m1 in range(nA * nG):
        for a2 in range(nA):
            compose[(a2 * nG + int(x_of[m1]), m1)] = int(A.table[a2, a_of[m1]]) * nG + int(x_of[m1])
    tensor_morphisms = A.table[a_of[:, None], a_of[None, :]] * nG + g.table[x_of[:, None], x_of[None, :]]
    inverse_morphisms = A.inverse[a_of] * nG + g.inverse[x_of]

    theta_idx = np.zeros((nG, nG, nG), dtype=np.int64)
    for args in theta.support():
        theta_idx[args] = a.index_of(theta.value(*args))
    objs = np.arange(nG)
    product = g.table[g.table[objs[:, None, None], objs[None, :, None]], objs[None, None, :]]
    associator = theta_idx * nG + product

    return TwoGroup(source=x_of, target=x_of, identity=objs, compose=compose,
                    tensor_objects=g.table, tensor_morphisms=tensor_morphisms,
                    inverse_objects=g.inverse, inverse_morphisms=inverse_morphisms,
                    associator=associator, name=f"skeletal({g}, {a})")


def hidden_action_check(tg: TwoGroup) -> Report:
    """The action a⊗f of the unit component on morphisms is free; s⁻¹(𝟙)-orbits biject with objects"""
    findings: List[Finding] = []
    s, t, T1 = tg.source, tg.target, tg.tensor_morphisms
    unit_like = np.zeros(tg.object_count, dtype=bool)
    unit_like[t[s == 0]] = True
    unit_like[0] = True
    unit_component = np.flatnonzero(unit_like[s] & unit_like[t])
    from_unit = np.flatnonzero(s == 0)
    mors = np.arange(tg.morphism_count)

    acted = T1[unit_component[:, None], mors[None, :]]
    not_free = [(int(f),) for f in mors if len(set(acted[:, f].tolist())) != len(unit_component)]
    _record(findings, 'hidden_action.free', not_free)

    a = unit_component[:, None, None]
    b = unit_component[None, :, None]
    f = mors[None, None, :]
    bad = np.argwhere(T1[a, T1[b, f]] != T1[T1[a, b], f])
    _record(findings, 'hidden_action.action', [(int(unit_component[i]), int(unit_component[j]), int(k))
                                                for i, j, k in bad])

    orbits = {}
    for fm in mors:
        orbit = frozenset(T1[from_unit, fm].tolist())
        orbits.setdefault(orbit, set()).update(s[list(orbit)].tolist())
    orbit_sources = [sorted(v) for v in orbits.values()]
    bijective = (len(orbits) == tg.object_count and all(len(v) == 1 for v in orbit_sources)
                 and sorted(v[0] for v in orbit_sources) == list(range(tg.object_count)))
    counts = {
        'morphisms': tg.morphism_count, 'objects': tg.object_count,
        'from_unit': int(len(from_unit)), 'unit_component': int(len(unit_component)), 'orbits': len(orbits),
    }
    findings.append(Finding('hidden_action.orbits', status=PASS if bijective else FAIL, value=counts))
    counting = tg.morphism_count == len(from_unit) * tg.object_count
    findings.append(Finding('hidden_action.counting', status=PASS if counting else FAIL, value=counts))
    return Report.from_findings(findings, counts)


# ---------------------------------------------------------------------------
# Generalized cocycles and their morphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GeneralizedCocycle:
    """(F, Θ) with F ∈ C²(G, Z), Θ ∈ C³(G, A) for an abelian crossed module τ: A → Z (trivial action)"""
    base: FiniteGroup
    tau: AbelianHom
    F: Cochain
    theta: Cochain

    def __post_init__(self):
        if self.F.degree != 2 or self.F.coefficients != self.tau.target:
            raise InvalidInputError("F must be a Z-valued 2-cochain")
        if self.theta.degree != 3 or self.theta.coefficients != self.tau.source:
            raise InvalidInputError("Θ must be an A-valued 3-cochain")
        for c in (self.F, self.theta):
            if c.action is not None:
                raise InvalidInputError("Generalized cocycles use trivial actions")
            if not np.array_equal(c.group.table, self.base.table):
                raise InvalidInputError("Cochains must live on the base group")

    @property
    def a(self) -> FgAbelianGroup:
        return self.tau.source

    @property
    def z(self) -> FgAbelianGroup:
        return self.tau.target

    @property
    def crossed_module(self) -> CrossedModule:
        return CrossedModule.from_abelian_hom(self.tau)


def verify_generalized_cocycle(gc: GeneralizedCocycle) -> Report:
    findings: List[Finding] = []
    _record(findings, 'cocycle.theta_closed', d_gp(gc.theta).support(), detail='d_gp Θ != 0')
    mismatch = (d_gp(gc.F) - gc.theta.map_coefficients(gc.tau)).support()
    _record(findings, 'cocycle.F_boundary', mismatch, detail='d_gp F != τ∘Θ')
    return Report.from_findings(findings, {'A': str(gc.a), 'Z': str(gc.z), 'group_order': gc.base.order})


@dataclass(frozen=True, eq=False)
class CocycleMorphism:
    """(φ, ψ): (F, Θ) → (F', Θ') with F = F' + d_gp φ + τ∘ψ and Θ = Θ' + d_gp ψ"""
    source: GeneralizedCocycle
    target: GeneralizedCocycle
    phi: Cochain
    psi: Cochain

    def __post_init__(self):
        if self.source.tau.source != self.target.tau.source or self.source.tau.target != self.target.tau.target \
                or not np.array_equal(self.source.tau.matrix, self.target.tau.matrix):
            raise InvalidInputError("Source and target cocycles use different crossed modules")
        if self.phi.degree != 1 or self.phi.coefficients != self.source.z:
            raise InvalidInputError("φ must be a Z-valued 1-cochain")
        if self.psi.degree != 2 or self.psi.coefficients != self.source.a:
            raise InvalidInputError("ψ must be an A-valued 2-cochain")


def verify_cocycle_morphism(m: CocycleMorphism) -> Report:
    findings: List[Finding] = []
    tau = m.source.tau
    expected_F = m.target.F + d_gp(m.phi) + m.psi.map_coefficients(tau)
    _record(findings, 'morphism.F_identity', (m.source.F - expected_F).support(),
            detail="F != F' + d_gp φ + τ∘ψ")
    expected_theta = m.target.theta + d_gp(m.psi)
    _record(findings, 'morphism.theta_identity', (m.source.theta - expected_theta).support(),
            detail="Θ != Θ' + d_gp ψ")
    return Report.from_findings(findings)


def cocycle_from_ordinary(f: Cochain, quotient: AbelianHom,
                          lift: Callable[[np.ndarray], Sequence[int]]) -> GeneralizedCocycle:
    """(F♯, d_gp F♯) for F♯ = s∘f, valued in the crossed module Γ ↪ Z with Γ = ker(Z → Z/Γ)"""
    if f.degree != 2 or f.coefficients != quotient.target:
        raise InvalidInputError("f must be a 2-cochain valued in the quotient group")
    if not d_gp(f).is_zero():
        raise InvalidInputError(f"f is not a 2-cocycle: d_gp f{d_gp(f).support()[0]} != 0")
    z = quotient.source
    decomposition = hom_decompose(quotient)
    if decomposition.cokernel.ngens:
        raise InvalidInputError("The quotient map Z → Z/Γ must be surjective")
    if np.any(z.reduce(np.asarray(lift(quotient.target.zero()), dtype=np.int64))):
        raise InvalidInputError("The lift must send 0 to 0")

    def lifted(*args):
        value = z.reduce(np.asarray(lift(f.value(*args)), dtype=np.int64))
        if np.any(quotient.apply(value) != f.value(*args)):
            raise InvalidInputError(f"The lift is not a section of the quotient at {tuple(args)}")
        return value

    F_sharp = Cochain.from_function(2, f.group, z, lifted)
    gamma = decomposition.kernel
    inclusion_matrix = np.array(decomposition.kernel_generators, dtype=np.int64).reshape(gamma.ngens, z.ngens).T
    inclusion = AbelianHom(gamma, z, inclusion_matrix)

    boundary = d_gp(F_sharp)
    kernel_quotient = decomposition.kernel_quotient
    theta = Cochain.from_function(
        3, f.group, gamma,
        lambda *args: kernel_quotient.coordinates(boundary.value(*args).tolist()),
    )
    return GeneralizedCocycle(base=f.group, tau=inclusion, F=F_sharp, theta=theta)


# ---------------------------------------------------------------------------
# Central extensions Ĝ_(F,Θ)
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CentralExtensionSeq:
    """𝒵 → Ĝ → ul(G) given by index maps on objects and morphisms"""
    z_part: TwoGroup
    total: TwoGroup
    base: FiniteGroup
    iota_objects: np.ndarray
    iota_morphisms: np.ndarray
    q_objects: np.ndarray
    q_morphisms: np.ndarray
    cocycle: Optional[GeneralizedCocycle] = None


@dataclass(frozen=True)
class _ExtensionIndexing:
    """Index arithmetic shared by the extension and its morphisms"""
    nA: int
    nZ: int
    nG: int

    def obj(self, x, g):
        return x * self.nG + g

    def mor(self, a, x, g):
        return (a * self.nZ + x) * self.nG + g

    def split_obj(self, o):
        return divmod(o, self.nG)

    def split_mor(self, m):
        ax, g = divmod(m, self.nG)
        a, x = divmod(ax, self.nZ)
        return a, x, g


def _index_tables(gc: GeneralizedCocycle):
    """Addition tables and index-valued F, Θ, τ for finite A, Z"""
    z_group = gc.z.as_finite_group()
    a_group = gc.a.as_finite_group()
    tau_idx = np.array([gc.z.index_of(gc.tau.apply(gc.a.element_at(i))) for i in range(a_group.order)],
                       dtype=np.int64)
    F_full = full_table(gc.F)
    nG = gc.base.order
    F_idx = np.array([[gc.z.index_of(F_full[g, h]) for h in range(nG)] for g in range(nG)], dtype=np.int64)
    theta_idx = np.zeros((nG, nG, nG), dtype=np.int64)
    for args in gc.theta.support():
        theta_idx[args] = gc.a.index_of(gc.theta.value(*args))
    return z_group, a_group, tau_idx, F_idx, theta_idx


def extension_from_cocycle(gc: GeneralizedCocycle) -> CentralExtensionSeq:
    """Build Ĝ_(F,Θ): objects Z × G, morphisms A × Z × G, with ι and q"""
    report = verify_generalized_cocycle(gc)
    if not report.ok:
        first = report.violations[0]
        raise RefusedConstruction(f"Not a generalized cocycle: {first.check} fails at {first.witness}",
                                  axiom=first.check, witness=first.witness)
    if not (gc.a.is_finite and gc.z.is_finite):
        raise InvalidInputError("Extensions are built for finite A and Z")
    G = gc.base
    for g in range(G.order):
        gi = G.inv(g)
        if not np.array_equal(gc.F.value(g, gi), gc.F.value(gi, g)):
            raise RefusedConstruction(f"F(g, g⁻¹) != F(g⁻¹, g) at g = {g}; strict inverses do not exist",
                                      axiom='cocycle.inverse_symmetry', witness=(g,))

    Zg, Ag, tau_idx, F_idx, theta_idx = _index_tables(gc)
    nA, nZ, nG = Ag.order, Zg.order, G.order
    ix = _ExtensionIndexing(nA, nZ, nG)
    zadd, aadd = Zg.table, Ag.table

    o_x, o_g = np.divmod(np.arange(nZ * nG), nG)
    m_a, m_x, m_g = ix.split_mor(np.arange(nA * nZ * nG))

    source = ix.obj(m_x, m_g)
    target = ix.obj(zadd[tau_idx[m_a], m_x], m_g)
    identity = ix.mor(0, o_x, o_g)

    compose = {}
    for m1 in range(nA * nZ * nG):
        a1, x1, g1 = ix.split_mor(m1)
        x_mid = int(zadd[tau_idx[a1], x1])
        for a2 in range(nA):
            compose[(ix.mor(a2, x_mid, g1), m1)] = ix.mor(int(aadd[a2, a1]), x1, g1)

    tensor_objects = ix.obj(zadd[zadd[o_x[:, None], o_x[None, :]], F_idx[o_g[:, None], o_g[None, :]]],
                            G.table[o_g[:, None], o_g[None, :]])
    tensor_morphisms = ix.mor(
        aadd[m_a[:, None], m_a[None, :]],
        zadd[zadd[m_x[:, None], m_x[None, :]], F_idx[m_g[:, None], m_g[None, :]]],
        G.table[m_g[:, None], m_g[None, :]],
    )
    inv_g = G.inverse
    inverse_objects = ix.obj(Zg.inverse[zadd[o_x, F_idx[o_g, inv_g[o_g]]]], inv_g[o_g])
    inverse_morphisms = ix.mor(Ag.inverse[m_a], Zg.inverse[zadd[m_x, F_idx[m_g, inv_g[m_g]]]], inv_g[m_g])

    # α = (Θ(g,h,k), x+y+z+F(g,h)+F(gh,k), ghk)
    X, Y, W = np.meshgrid(o_x, o_x, o_x, indexing='ij')
    Ga, Gb, Gc = np.meshgrid(o_g, o_g, o_g, indexing='ij')
    gh = G.table[Ga, Gb]
    z_part_sum = zadd[zadd[zadd[X, Y], W], zadd[F_idx[Ga, Gb], F_idx[gh, Gc]]]
    associator = ix.mor(theta_idx[Ga, Gb, Gc], z_part_sum, G.table[gh, Gc])

    total = TwoGroup(source=source, target=target, identity=identity, compose=compose,
                     tensor_objects=tensor_objects, tensor_morphisms=tensor_morphisms,
                     inverse_objects=inverse_objects, inverse_morphisms=inverse_morphisms,
                     associator=associator, name=f"extension({gc.z} x {G})")
    z_part = strict_2group_from_crossed_module(gc.crossed_module)

    z_mor = np.arange(nA * nZ)
    return CentralExtensionSeq(
        z_part=z_part, total=total, base=G,
        iota_objects=ix.obj(np.arange(nZ), 0),
        iota_morphisms=ix.mor(z_mor // nZ, z_mor % nZ, 0),
        q_objects=o_g, q_morphisms=m_g, cocycle=gc,
    )


def verify_extension_seq(seq: CentralExtensionSeq) -> Report:
    """2-group axioms of the total, functoriality of ι and q, exactness on morphisms and centrality"""
    report = Report.from_findings([])
    report.extend(verify_2group(seq.total), prefix='total.')
    findings: List[Finding] = []
    Z, T = seq.z_part, seq.total
    i0, i1, q0, q1 = seq.iota_objects, seq.iota_morphisms, seq.q_objects, seq.q_morphisms
    G = seq.base

    iota_bad = [(int(m),) for m in np.flatnonzero((T.source[i1] != i0[Z.source]) | (T.target[i1] != i0[Z.target]))]
    iota_bad += [(int(a), int(b)) for a, b in
                 np.argwhere(T.tensor_morphisms[i1[:, None], i1[None, :]] != i1[Z.tensor_morphisms])]
    iota_bad += [(int(m2), int(m1), -1) for (m2, m1), r in Z.compose.items()
                 if T.compose.get((int(i1[m2]), int(i1[m1]))) != int(i1[r])]
    iota_bad += [(int(x), -1, -1, -1) for x in np.flatnonzero(T.identity[i0] != i1[Z.identity])]
    _record(findings, 'extension.iota_functor', sorted(iota_bad))

    if len(set(i1.tolist())) != len(i1) or len(set(i0.tolist())) != len(i0):
        findings.append(Finding('extension.iota_injective'))

    q_bad = [(int(m),) for m in np.flatnonzero((q0[T.source] != q1) | (q0[T.target] != q1))]
    q_bad += [(int(a), int(b)) for a, b in
              np.argwhere(q1[T.tensor_morphisms] != G.table[q1[:, None], q1[None, :]])]
    q_bad += [(int(m2), int(m1), -1) for (m2, m1), r in T.compose.items() if q1[r] != q1[m1] or q1[m2] != q1[m1]]
    q_bad += [(int(x), int(y), -1, -1) for x, y in
              np.argwhere(q0[T.tensor_objects] != G.table[q0[:, None], q0[None, :]])]
    _record(findings, 'extension.q_functor', sorted(q_bad))

    kernel = set(np.flatnonzero(q1 == 0).tolist())
    image = set(i1.tolist())
    if kernel != image:
        witness = sorted(kernel ^ image)[0]
        findings.append(Finding('extension.exactness', witness=(witness,),
                                value={'kernel': len(kernel), 'image': len(image)}))
    if set(q1.tolist()) != set(range(G.order)):
        findings.append(Finding('extension.q_surjective', value=sorted(set(q1.tolist()))))

    Ti = T.tensor_morphisms
    central = np.argwhere(Ti[i1[:, None], np.arange(T.morphism_count)[None, :]]
                          != Ti[np.arange(T.morphism_count)[None, :], i1[:, None]])
    _record(findings, 'extension.centrality', [(int(i1[a]), int(m)) for a, m in central])

    return report.extend(Report.from_findings(findings))


# ---------------------------------------------------------------------------
# Morphisms and 2-morphisms of extensions
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class MonoidalFunctor:
    """(ℱ₀, ℱ₁, ℱ₂) between two finite 2-groups, as index tables"""
    source: TwoGroup
    target: TwoGroup
    objects: np.ndarray
    morphisms: np.ndarray
    tensorator: np.ndarray


def verify_monoidal_functor(functor: MonoidalFunctor) -> Report:
    findings: List[Finding] = []
    S, T = functor.source, functor.target
    F0, F1, F2 = functor.objects, functor.morphisms, functor.tensorator
    comp = _composer(_dense_compose(T))
    objs = np.arange(S.object_count)
    mors = np.arange(S.morphism_count)

    _record(findings, 'functor.source_target',
            np.argwhere((T.source[F1] != F0[S.source]) | (T.target[F1] != F0[S.target])))
    _record(findings, 'functor.identity', np.argwhere(F1[S.identity] != T.identity[F0]))
    comp_bad = [(m2, m1) for (m2, m1), r in sorted(S.compose.items()) if comp(F1[m2], F1[m1]) != F1[r]]
    _record(findings, 'functor.composition', comp_bad)
    if F0[0] != 0:
        findings.append(Finding('functor.unit_object', witness=(0,), value=int(F0[0])))

    # ℱ₂(x,y): ℱx ⊗ ℱy → ℱ(x⊗y)
    bad = ((T.source[F2] != T.tensor_objects[F0[:, None], F0[None, :]])
           | (T.target[F2] != F0[S.tensor_objects]))
    _record(findings, 'functor.tensorator_source_target', np.argwhere(bad))

    f, g = np.meshgrid(mors, mors, indexing='ij')
    lhs = comp(F2[S.target[f], S.target[g]], T.tensor_morphisms[F1[f], F1[g]])
    rhs = comp(F1[S.tensor_morphisms[f, g]], F2[S.source[f], S.source[g]])
    _record(findings, 'functor.tensorator_naturality', np.argwhere((lhs < 0) | (lhs != rhs)))

    unit_bad = np.flatnonzero((F2[objs, 0] != T.identity[F0[objs]]) | (F2[0, objs] != T.identity[F0[objs]]))
    _record(findings, 'functor.tensorator_unit', [(int(x),) for x in unit_bad])

    x, y, z = np.meshgrid(objs, objs, objs, indexing='ij')
    T0s, T0t = S.tensor_objects, T.tensor_objects
    lhs = comp(comp(F2[x, T0s[y, z]], T.tensor_morphisms[T.identity[F0[x]], F2[y, z]]),
               T.associator[F0[x], F0[y], F0[z]])
    rhs = comp(comp(F1[S.associator[x, y, z]], F2[T0s[x, y], z]),
               T.tensor_morphisms[F2[x, y], T.identity[F0[z]]])
    _record(findings, 'functor.coherence', np.argwhere((lhs < 0) | (lhs != rhs)))

    inverse_pair = np.flatnonzero(F2[objs, S.inverse_objects] != T.identity[0])
    findings.append(Finding('functor.inverse_pair', status=INFO,
                            witness=(int(inverse_pair[0]),) if len(inverse_pair) else None,
                            value={'holds': not len(inverse_pair)}))
    findings.append(Finding('functor.bijective_objects', status=INFO,
                            value={'holds': len(set(F0.tolist())) == T.object_count == S.object_count}))
    return Report.from_findings(findings)


def _require(report: Report, what: str):
    if not report.ok:
        first = report.violations[0]
        raise RefusedConstruction(f"{what}: {first.check} fails at {first.witness}",
                                  axiom=first.check, witness=first.witness)


def morphism_from_pair(m: CocycleMorphism) -> Tuple[MonoidalFunctor, Report]:
    """ℱ_(φ,ψ): Ĝ_(F,Θ) → Ĝ_(F',Θ') with its coherence and compatibility with ι and q"""
    _require(verify_cocycle_morphism(m), "Not a morphism of generalized cocycles")
    source_seq = extension_from_cocycle(m.source)
    target_seq = extension_from_cocycle(m.target)
    gc = m.source
    Zg, Ag, tau_idx, _, _ = _index_tables(gc)
    _, _, _, F_target, _ = _index_tables(m.target)
    nA, nZ, nG = Ag.order, Zg.order, gc.base.order
    ix = _ExtensionIndexing(nA, nZ, nG)
    zadd = Zg.table
    G = gc.base

    phi_idx = np.array([gc.z.index_of(m.phi.value(g)) for g in range(nG)], dtype=np.int64)
    psi_idx = np.zeros((nG, nG), dtype=np.int64)
    for args in m.psi.support():
        psi_idx[args] = gc.a.index_of(m.psi.value(*args))

    o_x, o_g = np.divmod(np.arange(nZ * nG), nG)
    m_a, m_x, m_g = ix.split_mor(np.arange(nA * nZ * nG))
    objects = ix.obj(zadd[o_x, phi_idx[o_g]], o_g)
    morphisms = ix.mor(m_a, zadd[m_x, phi_idx[m_g]], m_g)

    # ℱ₂((x,g),(y,h)) = (ψ(g,h), x+φ(g)+y+φ(h)+F'(g,h), gh)
    shifted = zadd[o_x, phi_idx[o_g]]
    gx, gy = o_g[:, None], o_g[None, :]
    tensorator = ix.mor(psi_idx[gx, gy],
                        zadd[zadd[shifted[:, None], shifted[None, :]], F_target[gx, gy]],
                        G.table[gx, gy])
    functor = MonoidalFunctor(source_seq.total, target_seq.total, objects, morphisms, tensorator)

    report = verify_monoidal_functor(functor)
    findings = []
    if np.any(objects[source_seq.iota_objects] != target_seq.iota_objects) \
            or np.any(morphisms[source_seq.iota_morphisms] != target_seq.iota_morphisms):
        findings.append(Finding('functor.commutes_with_iota'))
    if np.any(target_seq.q_objects[objects] != source_seq.q_objects) \
            or np.any(target_seq.q_morphisms[morphisms] != source_seq.q_morphisms):
        findings.append(Finding('functor.commutes_with_q'))
    report.extend(Report.from_findings(findings))
    return functor, report


def two_morphism_check(m: CocycleMorphism, m_prime: CocycleMorphism, gamma: Cochain) -> Report:
    """θ(x,g) = (γ(g), x+φ(g), g) as a monoidal natural transformation ℱ_(φ,ψ) ⇒ ℱ_(φ',ψ')"""
    if m.source is not m_prime.source and not (
            m.source.F.equals(m_prime.source.F) and m.source.theta.equals(m_prime.source.theta)):
        raise InvalidInputError("Both morphisms must start at the same cocycle")
    if gamma.degree != 1 or gamma.coefficients != m.source.a:
        raise InvalidInputError("γ must be an A-valued 1-cochain")
    functor, _ = morphism_from_pair(m)
    functor_prime, _ = morphism_from_pair(m_prime)
    S, T = functor.source, functor.target
    gc = m.source
    Zg, Ag, _, _, _ = _index_tables(gc)
    ix = _ExtensionIndexing(Ag.order, Zg.order, gc.base.order)
    comp = _composer(_dense_compose(T))

    gamma_idx = np.array([gc.a.index_of(gamma.value(g)) for g in range(gc.base.order)], dtype=np.int64)
    o_g = np.arange(S.object_count) % gc.base.order
    shifted_x, _ = np.divmod(functor.objects, gc.base.order)
    components = ix.mor(gamma_idx[o_g], shifted_x, o_g)

    findings: List[Finding] = []
    bad = (T.source[components] != functor.objects) | (T.target[components] != functor_prime.objects)
    _record(findings, 'two_morphism.components', [(int(x),) for x in np.flatnonzero(bad)],
            detail="requires φ' = φ + τ∘γ")

    mors = np.arange(S.morphism_count)
    lhs = comp(functor_prime.morphisms[mors], components[S.source[mors]])
    rhs = comp(components[S.target[mors]], functor.morphisms[mors])
    _record(findings, 'two_morphism.naturality', [(int(f),) for f in np.flatnonzero((lhs < 0) | (lhs != rhs))])

    x, y = np.meshgrid(np.arange(S.object_count), np.arange(S.object_count), indexing='ij')
    lhs = comp(functor_prime.tensorator[x, y], T.tensor_morphisms[components[x], components[y]])
    rhs = comp(components[S.tensor_objects[x, y]], functor.tensorator[x, y])
    _record(findings, 'two_morphism.monoidal', np.argwhere((lhs < 0) | (lhs != rhs)),
            detail="requires ψ = ψ' + d_gp γ")
    return Report.from_findings(findings)


# ---------------------------------------------------------------------------
# Skeleton and band
# ---------------------------------------------------------------------------

def isomorphism_classes(tg: TwoGroup) -> np.ndarray:
    """Class label of every object; labels ordered by least member, unit class first"""
    parent = list(range(tg.object_count))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for a, b in zip(tg.source.tolist(), tg.target.tolist()):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    roots = [find(u) for u in range(tg.object_count)]
    order = sorted(set(roots))
    label = {r: k for k, r in enumerate(order)}
    return np.array([label[r] for r in roots], dtype=np.int64)


def _class_group(tg: TwoGroup, labels: np.ndarray, name: str) -> Tuple[FiniteGroup, List[Finding]]:
    """Multiplication induced on isomorphism classes via least-index representatives"""
    count = int(labels.max()) + 1
    reps = np.array([int(np.flatnonzero(labels == k)[0]) for k in range(count)])
    table = labels[tg.tensor_objects[reps[:, None], reps[None, :]]]
    induced = labels[tg.tensor_objects]
    expected = table[labels[:, None], labels[None, :]]
    findings = []
    _record(findings, f'{name}.well_defined', np.argwhere(induced != expected))
    return FiniteGroup(table, name=name), findings


@dataclass(frozen=True, eq=False)
class SkeletonBand:
    """Z/τ(A), the band of the total 2-group and the maps between them"""
    skel_z: FgAbelianGroup
    skeleton_group: FiniteGroup
    band: FiniteGroup
    object_to_band: np.ndarray
    skeleton_to_band: np.ndarray
    band_to_base: np.ndarray
    report: Report


def skeleton_and_band(seq: CentralExtensionSeq) -> SkeletonBand:
    findings: List[Finding] = []
    z_labels = isomorphism_classes(seq.z_part)
    skeleton_group, f1 = _class_group(seq.z_part, z_labels, 'skeleton')
    labels = isomorphism_classes(seq.total)
    band, f2 = _class_group(seq.total, labels, 'band')
    findings += f1 + f2

    if seq.cocycle is not None:
        skel_z = hom_decompose(seq.cocycle.tau).cokernel
    else:
        skel_z = FgAbelianGroup.from_invariant_factors(abelian_invariant_factors(skeleton_group))
    if skel_z.order != skeleton_group.order:
        findings.append(Finding('skeleton.order', value={'cokernel': skel_z.order, 'classes': skeleton_group.order}))

    # Z/τ(A) → band, band → G
    skeleton_to_band = np.zeros(skeleton_group.order, dtype=np.int64)
    for x in range(seq.z_part.object_count):
        skeleton_to_band[z_labels[x]] = labels[seq.iota_objects[x]]
    band_to_base = np.full(band.order, -1, dtype=np.int64)
    for o in range(seq.total.object_count):
        k, g = labels[o], seq.q_objects[o]
        if band_to_base[k] >= 0 and band_to_base[k] != g:
            findings.append(Finding('band.projection_well_defined', witness=(int(o),)))
            break
        band_to_base[k] = g

    findings += _central_extension_findings(skeleton_group, band, seq.base, skeleton_to_band, band_to_base)
    for check, group in (('skeleton.group', skeleton_group), ('band.group', band)):
        if not verify_finite_group(group).ok:
            findings.append(Finding(check, detail='induced multiplication is not a group'))
    report = Report.from_findings(findings, {'skeleton_order': skeleton_group.order, 'band_order': band.order})
    return SkeletonBand(skel_z=skel_z, skeleton_group=skeleton_group, band=band, object_to_band=labels,
                        skeleton_to_band=skeleton_to_band, band_to_base=band_to_base, report=report)


def _central_extension_findings(kernel: FiniteGroup, middle: FiniteGroup, base: FiniteGroup,
                                inclusion: np.ndarray, projection: np.ndarray) -> List[Finding]:
    findings: List[Finding] = []
    b = np.arange(middle.order)
    if np.any(inclusion[kernel.table] != middle.table[inclusion[:, None], inclusion[None, :]]):
        findings.append(Finding('band_sequence.inclusion_homomorphism'))
    if np.any(projection[middle.table] != base.table[projection[:, None], projection[None, :]]):
        findings.append(Finding('band_sequence.projection_homomorphism'))
    if len(set(inclusion.tolist())) != kernel.order:
        findings.append(Finding('band_sequence.injective'))
    if set(projection.tolist()) != set(range(base.order)):
        findings.append(Finding('band_sequence.surjective'))
    if set(np.flatnonzero(projection == 0).tolist()) != set(inclusion.tolist()):
        findings.append(Finding('band_sequence.exact'))
    commute = middle.table[inclusion[:, None], b[None, :]] != middle.table[b[None, :], inclusion[:, None]]
    _record(findings, 'band_sequence.central', [(int(inclusion[i]), int(j)) for i, j in np.argwhere(commute)])
    return findings
