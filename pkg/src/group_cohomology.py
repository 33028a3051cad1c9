"""
Normalized cochains on finite groups, the group differential d_gp, cohomology
via the normalized bar complex, twisted products and the brute-force
computation of H²(G, cone τ) for an abelian crossed module τ: A → Z.
"""
import itertools
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from algebra_core import (
    AbelianHom,
    FgAbelianGroup,
    FiniteGroup,
    GAction,
    LatticeQuotient,
    associativity_failures,
    kernel_basis,
    lattice_quotient,
    solve_integer_system,
)
from config import Settings, get_settings
from errors import InvalidInputError, RefusedConstruction, SizeGuardError
from reports import FAIL, INFO, PASS, Finding, Report

MAX_DEGREE = 4


def normalized_tuples(group: FiniteGroup, degree: int) -> List[Tuple[int, ...]]:
    """Argument tuples with no unit entry, in the storage order of Cochain.values"""
    return list(itertools.product(range(1, group.order), repeat=degree))


def tuple_index(group: FiniteGroup, args: Sequence[int]) -> int:
    base = group.order - 1
    index = 0
    for a in args:
        index = index * base + (a - 1)
    return index


@dataclass(frozen=True, eq=False)
class Cochain:
    """A normalized n-cochain G^n → A, stored on tuples without unit entries"""
    degree: int
    group: FiniteGroup
    coefficients: FgAbelianGroup
    values: np.ndarray
    action: Optional[GAction] = None

    def __post_init__(self):
        if self.degree < 0:
            raise InvalidInputError(f"Cochain degree must be nonnegative, got {self.degree}")
        rows = (self.group.order - 1) ** self.degree
        values = np.array(self.values, dtype=np.int64).reshape(rows, self.coefficients.ngens)
        values = self.coefficients.reduce(values)
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)
        if self.action is not None:
            if self.action.group is not self.group and not np.array_equal(self.action.group.table, self.group.table):
                raise InvalidInputError("Action is defined on a different group")
            if self.action.module != self.coefficients:
                raise InvalidInputError("Action is defined on a different module")
            if self.action.is_trivial:
                object.__setattr__(self, 'action', None)

    @classmethod
    def zero(cls, degree: int, group: FiniteGroup, coefficients: FgAbelianGroup,
             action: Optional[GAction] = None) -> 'Cochain':
        rows = (group.order - 1) ** degree
        return cls(degree, group, coefficients, np.zeros((rows, coefficients.ngens), dtype=np.int64), action)

    @classmethod
    def from_function(cls, degree: int, group: FiniteGroup, coefficients: FgAbelianGroup,
                      fn: Callable[..., Sequence[int]], action: Optional[GAction] = None) -> 'Cochain':
        """Tabulate fn on normalized tuples; values at unit arguments are ignored"""
        rows = [np.asarray(fn(*args), dtype=np.int64).reshape(coefficients.ngens)
                for args in normalized_tuples(group, degree)]
        values = np.array(rows, dtype=np.int64).reshape(len(rows), coefficients.ngens)
        return cls(degree, group, coefficients, values, action)

    @classmethod
    def from_values(cls, degree: int, group: FiniteGroup, coefficients: FgAbelianGroup,
                    mapping: Dict[Tuple[int, ...], Sequence[int]], action: Optional[GAction] = None) -> 'Cochain':
        """Build from a sparse {tuple: value} mapping; omitted tuples are 0"""
        values = np.zeros(((group.order - 1) ** degree, coefficients.ngens), dtype=np.int64)
        for args, value in mapping.items():
            args = tuple(int(a) for a in args)
            if len(args) != degree or any(a < 0 or a >= group.order for a in args):
                raise InvalidInputError(f"Invalid argument tuple {args} for a degree-{degree} cochain on {group}")
            if 0 in args:
                if np.any(coefficients.reduce(value)):
                    raise InvalidInputError(f"Cochain must vanish at {args}: normalized cochains are 0 on unit arguments")
                continue
            values[tuple_index(group, args)] = np.asarray(value, dtype=np.int64).reshape(coefficients.ngens)
        return cls(degree, group, coefficients, values, action)

    @classmethod
    def random(cls, degree: int, group: FiniteGroup, coefficients: FgAbelianGroup,
               rng: np.random.Generator, action: Optional[GAction] = None, bound: int = 5) -> 'Cochain':
        rows = (group.order - 1) ** degree
        values = np.zeros((rows, coefficients.ngens), dtype=np.int64)
        for j, modulus in enumerate(coefficients.moduli):
            if modulus:
                values[:, j] = rng.integers(0, modulus, size=rows)
            else:
                values[:, j] = rng.integers(-bound, bound + 1, size=rows)
        return cls(degree, group, coefficients, values, action)

    def value(self, *args: int) -> np.ndarray:
        if len(args) != self.degree:
            raise InvalidInputError(f"Degree-{self.degree} cochain evaluated on {len(args)} arguments")
        if 0 in args:
            return self.coefficients.zero()
        return self.values[tuple_index(self.group, args)].copy()

    __call__ = value

    def act(self, g: int, vec) -> np.ndarray:
        if self.action is None:
            return np.asarray(vec, dtype=np.int64)
        return self.action.apply(g, vec)

    def support(self) -> List[Tuple[int, ...]]:
        """Sorted argument tuples with a nonzero value"""
        tuples = normalized_tuples(self.group, self.degree)
        return [tuples[i] for i in np.flatnonzero(np.any(self.values != 0, axis=1))]

    def is_zero(self) -> bool:
        return not np.any(self.values)

    def key(self) -> Tuple[int, ...]:
        return tuple(int(v) for v in self.values.ravel())

    def _check_compatible(self, other: 'Cochain'):
        if (self.degree != other.degree or self.coefficients != other.coefficients
                or not np.array_equal(self.group.table, other.group.table)):
            raise InvalidInputError("Cochains live on different groups, coefficients or degrees")

    def __add__(self, other: 'Cochain') -> 'Cochain':
        self._check_compatible(other)
        return Cochain(self.degree, self.group, self.coefficients, self.values + other.values, self.action)

    def __sub__(self, other: 'Cochain') -> 'Cochain':
        self._check_compatible(other)
        return Cochain(self.degree, self.group, self.coefficients, self.values - other.values, self.action)

    def __neg__(self) -> 'Cochain':
        return Cochain(self.degree, self.group, self.coefficients, -self.values, self.action)

    def scale(self, k: int) -> 'Cochain':
        return Cochain(self.degree, self.group, self.coefficients, k * self.values, self.action)

    def equals(self, other: 'Cochain') -> bool:
        self._check_compatible(other)
        return bool(np.array_equal(self.values, other.values))

    def map_coefficients(self, hom: AbelianHom) -> 'Cochain':
        """Post-compose with a homomorphism (trivial actions only)"""
        if self.action is not None:
            raise InvalidInputError("Coefficient change is only supported for trivial actions")
        if hom.source != self.coefficients:
            raise InvalidInputError(f"Homomorphism source {hom.source} does not match coefficients {self.coefficients}")
        return Cochain(self.degree, self.group, hom.target, hom.apply(self.values))


def d_gp(c: Cochain) -> Cochain:
    """The group differential: g₀.f(g₁..gₙ) + Σ (−1)^i f(.., g_{i−1}g_i, ..) + (−1)^{n+1} f(g₀..g_{n−1})"""
    n = c.degree
    g = c.group
    out = np.zeros(((g.order - 1) ** (n + 1), c.coefficients.ngens), dtype=np.int64)
    for row, args in enumerate(normalized_tuples(g, n + 1)):
        total = c.act(args[0], c.value(*args[1:]))
        for i in range(1, n + 1):
            merged = args[:i - 1] + (g.mul(args[i - 1], args[i]),) + args[i + 1:]
            total = total + (-1) ** i * c.value(*merged)
        total = total + (-1) ** (n + 1) * c.value(*args[:n])
        out[row] = total
    return Cochain(n + 1, g, c.coefficients, out, c.action)


def differential_matrix(group: FiniteGroup, coefficients: FgAbelianGroup, degree: int,
                        action: Optional[GAction] = None) -> np.ndarray:
    """Integer matrix of d_gp: C^n → C^{n+1} on flattened value tables"""
    m = coefficients.ngens
    source = normalized_tuples(group, degree)
    target = normalized_tuples(group, degree + 1)
    index = {t: k for k, t in enumerate(source)}
    eye = np.eye(m, dtype=np.int64)
    matrix = np.zeros((len(target) * m, len(source) * m), dtype=np.int64)

    for row, args in enumerate(target):
        rows = slice(row * m, (row + 1) * m)

        def add(t, block):
            if 0 in t:
                return
            col = index[t]
            matrix[rows, col * m:(col + 1) * m] += block

        add(args[1:], eye if action is None else action.matrix(args[0]))
        for i in range(1, degree + 1):
            add(args[:i - 1] + (group.mul(args[i - 1], args[i]),) + args[i + 1:], (-1) ** i * eye)
        add(args[:degree], (-1) ** (degree + 1) * eye)
    return matrix


def _relation_columns(coefficients: FgAbelianGroup, slots: int) -> List[List[int]]:
    m = coefficients.ngens
    columns = []
    for s in range(slots):
        for j, d in enumerate(coefficients.torsion):
            col = [0] * (m * slots)
            col[s * m + coefficients.rank + j] = d
            columns.append(col)
    return columns


def _matrix_columns(matrix: np.ndarray) -> List[List[int]]:
    return [[int(v) for v in matrix[:, j]] for j in range(matrix.shape[1])]


def _guard_cells(rows: int, cols: int, settings: Settings):
    if rows * cols > settings.max_matrix_cells:
        raise SizeGuardError(f"Bar-complex matrix of {rows}x{cols} exceeds the limit of "
                             f"{settings.max_matrix_cells} cells")


@dataclass(frozen=True)
class CohomologyResult:
    """H^n(G, A) as an invariant-factor group with representative cocycles"""
    degree: int
    group: FgAbelianGroup
    representative_cocycles: Tuple[Cochain, ...]
    quotient: LatticeQuotient = field(repr=False)

    @property
    def group_iso_class(self) -> List[int]:
        return self.group.invariant_factors

    def class_of(self, cocycle: Cochain) -> Tuple[int, ...]:
        """Coordinates of [cocycle] with respect to the representatives"""
        if cocycle.degree != self.degree:
            raise InvalidInputError(f"Expected a degree-{self.degree} cocycle")
        return self.quotient.coordinates(cocycle.values.ravel().tolist())


def cohomology_group(g: FiniteGroup, a: FgAbelianGroup, action: Optional[GAction] = None,
                     n: int = 2, settings: Optional[Settings] = None) -> CohomologyResult:
    """H^n(G, A) = Z^n / B^n on normalized cochains, computed with Smith normal forms"""
    settings = settings or get_settings()
    if n < 0 or n > MAX_DEGREE:
        raise InvalidInputError(f"Cohomology degree must lie in [0, {MAX_DEGREE}], got {n}")
    m = a.ngens
    slots_n = (g.order - 1) ** n
    slots_next = (g.order - 1) ** (n + 1)
    dim_n = m * slots_n
    _guard_cells(m * slots_next, dim_n + len(a.torsion) * slots_next, settings)

    d_n = differential_matrix(g, a, n, action)
    stacked = _matrix_columns(d_n) + _relation_columns(a, slots_next)
    stacked_rows = [[col[i] for col in stacked] for i in range(m * slots_next)]
    cocycles = [vec[:dim_n] for vec in kernel_basis(stacked_rows, len(stacked))]

    boundaries = _relation_columns(a, slots_n)
    if n > 0:
        boundaries = _matrix_columns(differential_matrix(g, a, n - 1, action)) + boundaries

    quotient = lattice_quotient(cocycles, boundaries, dim_n)
    representatives = tuple(
        Cochain(n, g, a, np.array(gen, dtype=np.int64).reshape(slots_n, m), action)
        for gen in quotient.generators
    )
    return CohomologyResult(degree=n, group=quotient.group,
                            representative_cocycles=representatives, quotient=quotient)


def is_coboundary(c: Cochain, settings: Optional[Settings] = None) -> Optional[Cochain]:
    """A cochain b with d_gp b = c, or None when the integer system has no solution"""
    settings = settings or get_settings()
    if c.degree == 0:
        raise InvalidInputError("Degree-0 cochains have no coboundary equation")
    if not d_gp(c).is_zero():
        raise InvalidInputError("is_coboundary expects a cocycle")
    a = c.coefficients
    slots_prev = (c.group.order - 1) ** (c.degree - 1)
    slots_n = (c.group.order - 1) ** c.degree
    dim_prev = a.ngens * slots_prev
    _guard_cells(a.ngens * slots_n, dim_prev + len(a.torsion) * slots_n, settings)

    columns = _matrix_columns(differential_matrix(c.group, a, c.degree - 1, c.action))
    columns += _relation_columns(a, slots_n)
    system = np.array([[col[i] for col in columns] for i in range(a.ngens * slots_n)],
                      dtype=object).reshape(a.ngens * slots_n, len(columns))
    solution = solve_integer_system(system, c.values.ravel().tolist())
    if solution is None:
        return None
    values = np.array([int(v) for v in solution[:dim_prev]], dtype=np.int64).reshape(slots_prev, a.ngens)
    return Cochain(c.degree - 1, c.group, a, values, c.action)


# ---------------------------------------------------------------------------
# Twisted products Z ×_f G
# ---------------------------------------------------------------------------

def full_table(f: Cochain) -> np.ndarray:
    """f on all of G×G (unit arguments included), shape (|G|, |G|, m)"""
    n = f.group.order
    full = np.zeros((n, n, f.coefficients.ngens), dtype=np.int64)
    for args in normalized_tuples(f.group, 2):
        full[args] = f.value(*args)
    return full


def twisted_product_table(z: FgAbelianGroup, g: FiniteGroup, f: Cochain) -> np.ndarray:
    """Multiplication (a,x)·(b,y) = (a+b+f(x,y), xy) on indices a_idx·|G| + x"""
    if f.degree != 2 or f.coefficients != z:
        raise InvalidInputError("twisted_product needs a Z-valued 2-cochain")
    if f.action is not None:
        raise InvalidInputError("twisted_product is defined for trivial actions only")
    if not z.is_finite:
        raise InvalidInputError(f"Coefficient group {z} must be finite")
    elements = np.array(z.elements(), dtype=np.int64).reshape(z.order, z.ngens)
    twist = full_table(f)
    sums = (elements[:, None, None, None, :] + elements[None, None, :, None, :]
            + twist[None, :, None, :, :])
    index = np.zeros(sums.shape[:-1], dtype=np.int64)
    for j, d in enumerate(z.torsion):
        index = index * d + sums[..., j] % d
    base = g.table[None, :, None, :]
    table = index * g.order + base
    size = z.order * g.order
    return table.reshape(size, size)


def twisted_product(z: FgAbelianGroup, g: FiniteGroup, f: Cochain, check: bool = True) -> FiniteGroup:
    """The group Z ×_f G; refuses 2-cochains that are not cocycles unless check=False"""
    table = twisted_product_table(z, g, f)
    if check:
        defect = d_gp(f).support()
        if defect:
            raise RefusedConstruction(f"f is not a 2-cocycle: d_gp f{defect[0]} != 0",
                                      axiom='group.associativity', witness=defect[0])
    return FiniteGroup(table, name=f"{z} x_f {g}")


def twisted_associativity_base_triples(z: FgAbelianGroup, g: FiniteGroup, f: Cochain) -> List[Tuple[int, int, int]]:
    """Base triples (x, y, w) at which the twisted multiplication fails associativity"""
    failures = associativity_failures(twisted_product_table(z, g, f))
    return sorted({tuple(int(v) % g.order for v in triple) for triple in failures})


def twisted_product_isomorphism(z: FgAbelianGroup, g: FiniteGroup, f: Cochain, b: Cochain) -> Report:
    """Check that (a,x) ↦ (a + b(x), x) maps Z ×_{f + d_gp b} G isomorphically onto Z ×_f G"""
    shifted = f + d_gp(b)
    source = twisted_product(z, g, shifted)
    target = twisted_product(z, g, f)
    mapping = np.empty(source.order, dtype=np.int64)
    for k in range(source.order):
        a_idx, x = divmod(k, g.order)
        image = z.add(z.element_at(a_idx), b.value(x))
        mapping[k] = z.index_of(image) * g.order + x

    findings = []
    if len(set(mapping.tolist())) != source.order:
        findings.append(Finding('isomorphism.bijective'))
    lhs = mapping[source.table]
    rhs = target.table[mapping[:, None], mapping[None, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        findings.append(Finding('isomorphism.homomorphism', witness=tuple(int(v) for v in bad[0]),
                                value=int(len(bad))))
    return Report.from_findings(findings, {'order': source.order})


# ---------------------------------------------------------------------------
# H²(G, cone τ) by enumeration
# ---------------------------------------------------------------------------

def _enumerate_cochains(group: FiniteGroup, coefficients: FgAbelianGroup, degree: int) -> np.ndarray:
    """Every normalized cochain as a flattened value vector, shape (count, slots·m)"""
    slots = (group.order - 1) ** degree
    elements = np.array(coefficients.elements(), dtype=np.int64).reshape(coefficients.order, coefficients.ngens)
    count = coefficients.order ** slots
    choices = np.array(list(itertools.product(range(coefficients.order), repeat=slots)),
                       dtype=np.int64).reshape(count, slots)
    return elements[choices].reshape(count, slots * coefficients.ngens)


def _check_enumerable(coefficients: FgAbelianGroup, group: FiniteGroup, degree: int, settings: Settings) -> int:
    if not coefficients.is_finite:
        raise InvalidInputError(f"Enumeration needs finite coefficients, got {coefficients}")
    count = coefficients.order ** ((group.order - 1) ** degree)
    if count > settings.enumeration_guard:
        raise SizeGuardError(f"{count} candidate {degree}-cochains valued in {coefficients} exceed the "
                             f"enumeration guard of {settings.enumeration_guard}")
    return count


def _reducer(coefficients: FgAbelianGroup, group: FiniteGroup, degree: int) -> Callable[[np.ndarray], np.ndarray]:
    moduli = np.tile(np.array(coefficients.moduli, dtype=np.int64), (group.order - 1) ** degree)

    def reduce(vectors: np.ndarray) -> np.ndarray:
        return vectors % moduli if moduli.size else vectors

    return reduce


def _unique_rows(rows: np.ndarray) -> np.ndarray:
    if rows.shape[1] == 0:
        return rows[:1]
    return np.unique(rows, axis=0)


def _key(vec: np.ndarray) -> Tuple[int, ...]:
    return tuple(int(v) for v in vec)


@dataclass(frozen=True)
class ConeClassSet:
    """Generalized cocycles (F, Θ) for τ: A → Z modulo morphisms (φ, ψ)"""
    group: FiniteGroup
    tau: AbelianHom
    representatives: Tuple[Tuple[Cochain, Cochain], ...]
    class_index: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int] = field(repr=False)
    pair_count: int = 0

    @property
    def count(self) -> int:
        return len(self.representatives)

    def class_of(self, F: Cochain, theta: Cochain) -> int:
        key = (F.key(), theta.key())
        if key not in self.class_index:
            raise InvalidInputError("Pair is not a generalized cocycle for this crossed module")
        return self.class_index[key]


@dataclass
class _ConeEnumeration:
    """Shared enumeration data for cone_h2 and les_exactness_check"""
    group: FiniteGroup
    tau: AbelianHom
    F_all: np.ndarray
    dF_all: np.ndarray
    theta_all: np.ndarray
    theta_cocycle: np.ndarray
    reduce_z2: Callable
    reduce_z3: Callable
    reduce_a2: Callable
    reduce_a3: Callable
    d1_z: np.ndarray
    d2_a: np.ndarray


def _enumerate_cone(g: FiniteGroup, tau: AbelianHom, settings: Settings) -> _ConeEnumeration:
    a, z = tau.source, tau.target
    _check_enumerable(z, g, 2, settings)
    _check_enumerable(a, g, 3, settings)
    if not tau.is_well_defined():
        raise InvalidInputError("τ is not a well-defined homomorphism")

    reduce_z2, reduce_z3 = _reducer(z, g, 2), _reducer(z, g, 3)
    reduce_a2, reduce_a3 = _reducer(a, g, 2), _reducer(a, g, 3)

    F_all = _enumerate_cochains(g, z, 2)
    dF_all = reduce_z3(F_all @ differential_matrix(g, z, 2).T)
    theta_all = _enumerate_cochains(g, a, 3)
    d_theta = _reducer(a, g, 4)(theta_all @ differential_matrix(g, a, 3).T)
    theta_cocycle = ~np.any(d_theta, axis=1)

    return _ConeEnumeration(
        group=g, tau=tau, F_all=F_all, dF_all=dF_all, theta_all=theta_all, theta_cocycle=theta_cocycle,
        reduce_z2=reduce_z2, reduce_z3=reduce_z3, reduce_a2=reduce_a2, reduce_a3=reduce_a3,
        d1_z=differential_matrix(g, z, 1), d2_a=differential_matrix(g, a, 2),
    )


def _apply_tau(tau: AbelianHom, vectors: np.ndarray) -> np.ndarray:
    """Apply τ slot-wise to flattened A-valued cochains"""
    m_a = tau.source.ngens
    shaped = vectors.reshape(vectors.shape[:-1] + (-1, m_a))
    image = tau.apply(shaped)
    return image.reshape(vectors.shape[:-1] + (-1,))


def cone_h2(g: FiniteGroup, tau: AbelianHom, settings: Optional[Settings] = None) -> ConeClassSet:
    """Enumerate pairs with d_gp F = τ∘Θ, d_gp Θ = 0 and group them into morphism classes"""
    settings = settings or get_settings()
    data = _enumerate_cone(g, tau, settings)
    return _cone_classes(data)


def _cone_classes(data: _ConeEnumeration) -> ConeClassSet:
    g, tau = data.group, data.tau
    a, z = tau.source, tau.target

    by_boundary: Dict[Tuple[int, ...], List[int]] = defaultdict(list)
    for idx, boundary in enumerate(data.dF_all):
        by_boundary[_key(boundary)].append(idx)

    pairs = set()
    for t_idx in np.flatnonzero(data.theta_cocycle):
        theta = data.theta_all[t_idx]
        target = _key(data.reduce_z3(_apply_tau(tau, theta)))
        for f_idx in by_boundary.get(target, []):
            pairs.add((_key(data.F_all[f_idx]), _key(theta)))

    # generator moves: (F, Θ) → (F + dφ, Θ) and (F + τψ, Θ + dψ) for basis cochains φ, ψ
    moves = []
    for col in range(data.d1_z.shape[1]):
        moves.append((data.d1_z[:, col], np.zeros(data.theta_all.shape[1], dtype=np.int64)))
    for col in range(data.d2_a.shape[1]):
        psi = np.zeros(data.d2_a.shape[1], dtype=np.int64)
        psi[col] = 1
        moves.append((_apply_tau(tau, psi), data.d2_a[:, col]))

    class_index: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int] = {}
    representatives = []
    slots2, slots3 = (g.order - 1) ** 2, (g.order - 1) ** 3
    for start in sorted(pairs):
        if start in class_index:
            continue
        label = len(representatives)
        class_index[start] = label
        queue = deque([start])
        while queue:
            f_key, t_key = queue.popleft()
            f_vec, t_vec = np.array(f_key, dtype=np.int64), np.array(t_key, dtype=np.int64)
            for df, dt in moves:
                nxt = (_key(data.reduce_z2(f_vec + df)), _key(data.reduce_a3(t_vec + dt)))
                if nxt not in class_index:
                    class_index[nxt] = label
                    queue.append(nxt)
        F = Cochain(2, g, z, np.array(start[0], dtype=np.int64).reshape(slots2, z.ngens))
        theta = Cochain(3, g, a, np.array(start[1], dtype=np.int64).reshape(slots3, a.ngens))
        representatives.append((F, theta))

    return ConeClassSet(group=g, tau=tau, representatives=tuple(representatives),
                        class_index=class_index, pair_count=len(pairs))


def _canonical(vec: np.ndarray, boundaries: np.ndarray, reduce: Callable) -> Tuple[int, ...]:
    """Least representative of vec + B for a finite set of boundaries B"""
    if len(boundaries) == 0:
        return _key(reduce(vec))
    shifted = reduce(vec[None, :] + boundaries)
    return min(_key(row) for row in shifted)


def _exactness_finding(spot: str, image: set, kernel: set) -> Finding:
    exact = image == kernel
    witness = None
    if not exact:
        witness = sorted(image.symmetric_difference(kernel))[0]
    return Finding(f'les.exact_at_{spot}', status=PASS if exact else FAIL, witness=witness,
                   value={'image_size': len(image), 'kernel_size': len(kernel)})


def les_exactness_check(g: FiniteGroup, tau: AbelianHom, settings: Optional[Settings] = None) -> Report:
    """Brute-force exactness of H²(G,A) → H²(G,Z) → H²(G,cone τ) → H³(G,A) → H³(G,Z)"""
    settings = settings or get_settings()
    a, z = tau.source, tau.target
    data = _enumerate_cone(g, tau, settings)
    _check_enumerable(z, g, 1, settings)
    _check_enumerable(a, g, 2, settings)
    cone = _cone_classes(data)

    z_boundaries2 = _unique_rows(data.reduce_z2(_enumerate_cochains(g, z, 1) @ data.d1_z.T))
    z_boundaries3 = _unique_rows(data.dF_all)
    a_cochains2 = _enumerate_cochains(g, a, 2)
    a_boundaries3 = _unique_rows(data.reduce_a3(a_cochains2 @ data.d2_a.T))
    zero_theta = np.zeros(data.theta_all.shape[1], dtype=np.int64)

    # H²(G,Z) → H²(cone): [f] ↦ [(f, 0)]
    z_cocycles = data.F_all[~np.any(data.dF_all, axis=1)]
    h2_z_classes = {}
    for f in z_cocycles:
        h2_z_classes.setdefault(_canonical(f, z_boundaries2, data.reduce_z2), f)
    into_cone = {cls: cone.class_index[(_key(f), _key(zero_theta))] for cls, f in h2_z_classes.items()}
    zero_cone_class = cone.class_index[(_key(np.zeros(data.F_all.shape[1], dtype=np.int64)), _key(zero_theta))]

    # H²(cone) → H³(G,A): [(F, Θ)] ↦ [Θ]
    zero_a3 = _canonical(zero_theta, a_boundaries3, data.reduce_a3)
    cone_to_h3 = {}
    for label, (_, theta) in enumerate(cone.representatives):
        cone_to_h3[label] = _canonical(theta.values.ravel(), a_boundaries3, data.reduce_a3)

    # H²(G,A) → H²(G,Z) via τ
    d2_a3 = data.reduce_a3(a_cochains2 @ data.d2_a.T)
    a_cocycles2 = a_cochains2[~np.any(d2_a3, axis=1)]
    tau_image2 = {_canonical(data.reduce_z2(_apply_tau(tau, psi)), z_boundaries2, data.reduce_z2)
                  for psi in a_cocycles2}

    # H³(G,A) → H³(G,Z) via τ
    h3_a_classes = {}
    for theta in data.theta_all[data.theta_cocycle]:
        h3_a_classes.setdefault(_canonical(theta, a_boundaries3, data.reduce_a3), theta)
    zero_z3 = _canonical(np.zeros(data.dF_all.shape[1], dtype=np.int64), z_boundaries3, data.reduce_z3)
    h3_kernel = {cls for cls, theta in h3_a_classes.items()
                 if _canonical(data.reduce_z3(_apply_tau(tau, theta)), z_boundaries3, data.reduce_z3) == zero_z3}

    findings = [
        _exactness_finding('H2(G,Z)', tau_image2, {cls for cls, label in into_cone.items() if label == zero_cone_class}),
        _exactness_finding('H2(G,cone)', set(into_cone.values()),
                           {label for label, cls in cone_to_h3.items() if cls == zero_a3}),
        _exactness_finding('H3(G,A)', set(cone_to_h3.values()), h3_kernel),
        Finding('les.class_counts', status=INFO, value={
            'H2(G,Z)': len(h2_z_classes), 'H2(G,cone)': cone.count, 'H3(G,A)': len(h3_a_classes),
        }),
    ]
    return Report.from_findings(findings, {'group_order': g.order, 'A': str(a), 'Z': str(z)})
