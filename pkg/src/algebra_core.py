"""
Finite groups, finitely generated abelian groups and exact integer linear algebra.

Elements of finite groups are dense indices into a multiplication table with
the unit at index 0. Abelian groups use a fixed invariant-factor presentation
with free coordinates first, then torsion coordinates reduced mod d_j.
"""
import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import factorint

from errors import InvalidInputError
from reports import Finding, Report

IntMatrix = List[List[int]]
IntVector = List[int]


# ---------------------------------------------------------------------------
# Finite groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its Cayley table on element indices"""
    table: np.ndarray
    name: str = ''
    inverse: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        table = np.array(self.table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InvalidInputError(f"Group table must be a non-empty square array, got shape {table.shape}")
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise InvalidInputError(f"Group table entries must lie in [0, {n})")
        table.setflags(write=False)
        object.__setattr__(self, 'table', table)

        inverse = np.full(n, -1, dtype=np.int64)
        for i in range(n):
            hits = np.flatnonzero(table[i] == 0)
            if hits.size:
                inverse[i] = hits[0]
        inverse.setflags(write=False)
        object.__setattr__(self, 'inverse', inverse)

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @property
    def unit_index(self) -> int:
        return 0

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def inv(self, i: int) -> int:
        return int(self.inverse[i])

    def power(self, i: int, k: int) -> int:
        result = 0
        base = i if k >= 0 else self.inv(i)
        for _ in range(abs(k)):
            result = self.mul(result, base)
        return result

    def element_order(self, i: int) -> int:
        current, k = i, 1
        while current != 0:
            current = self.mul(current, i)
            k += 1
            if k > self.order:
                raise InvalidInputError(f"Element {i} has no finite order; table is not a group")
        return k

    def order_profile(self) -> Tuple[Tuple[int, int], ...]:
        """Sorted (element order, count) pairs"""
        counts = Counter(self.element_order(i) for i in range(self.order))
        return tuple(sorted(counts.items()))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def center(self) -> List[int]:
        return [i for i in range(self.order) if np.array_equal(self.table[i, :], self.table[:, i])]

    def __str__(self):
        return self.name or f"FiniteGroup(order={self.order})"


def group_from_table(table, name: str = '') -> FiniteGroup:
    return FiniteGroup(np.asarray(table), name=name)


def cyclic_group(n: int) -> FiniteGroup:
    """ℤ/n with table[i][j] = (i + j) mod n"""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidInputError(f"Cyclic group order must be a positive integer, got {n}")
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, name=f"Z/{n}")


def symmetric_group(n: int) -> FiniteGroup:
    """S_n on permutations in lexicographic order; (p·q)(x) = p(q(x))"""
    if n < 1:
        raise InvalidInputError(f"Symmetric group degree must be positive, got {n}")
    perms = list(itertools.permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    return FiniteGroup(np.array(table), name=f"S{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """G × H with (a, b) stored at index a·|H| + b"""
    a = np.arange(g.order)
    b = np.arange(h.order)
    first = g.table[a[:, None, None, None], a[None, None, :, None]]
    second = h.table[b[None, :, None, None], b[None, None, None, :]]
    table = (first * h.order + second).reshape(g.order * h.order, g.order * h.order)
    return FiniteGroup(table, name=f"{g} x {h}")


def permuted(g: FiniteGroup, perm: Sequence[int]) -> FiniteGroup:
    """Relabel element i as perm[i]; perm must fix the unit"""
    perm = np.asarray(perm, dtype=np.int64)
    if sorted(perm.tolist()) != list(range(g.order)) or perm[0] != 0:
        raise InvalidInputError("Relabelling must be a permutation fixing index 0")
    table = np.empty_like(g.table)
    table[np.ix_(perm, perm)] = perm[g.table]
    return FiniteGroup(table, name=g.name)


def associativity_failures(table: np.ndarray) -> np.ndarray:
    """Sorted triples (i, j, k) with (ij)k != i(jk)"""
    table = np.asarray(table)
    n = table.shape[0]
    lhs = table[table]
    rhs = table[np.arange(n)[:, None, None], table[None, :, :]]
    return np.argwhere(lhs != rhs)


def verify_finite_group(g: FiniteGroup) -> Report:
    """Check unit law, associativity and inverses; one finding per violated axiom"""
    findings = []
    table = g.table
    n = g.order

    bad_unit = [(0, j) for j in range(n) if table[0, j] != j]
    bad_unit += [(i, 0) for i in range(n) if table[i, 0] != i]
    if bad_unit:
        findings.append(Finding('group.unit_law', witness=sorted(bad_unit)[0], value=len(bad_unit)))

    failures = associativity_failures(table)
    if len(failures):
        findings.append(Finding('group.associativity', witness=tuple(int(v) for v in failures[0]),
                                value=int(len(failures))))

    bad_inverse = [i for i in range(n)
                   if g.inverse[i] < 0 or table[g.inverse[i], i] != 0]
    if bad_inverse:
        findings.append(Finding('group.inverse', witness=(bad_inverse[0],), value=len(bad_inverse)))

    return Report.from_findings(findings, {'order': n})


def abelian_invariant_factors(g: FiniteGroup) -> List[int]:
    """Invariant factors d_1 | d_2 | ... of an abelian group from its p-power torsion counts"""
    if not g.is_abelian():
        raise InvalidInputError(f"{g} is not abelian")
    orders = [g.element_order(i) for i in range(g.order)]
    exponents_by_prime: Dict[int, List[int]] = {}
    for p, e in factorint(g.order).items():
        counts = [sum(1 for o in orders if (p ** k) % o == 0) for k in range(e + 1)]
        # parts_at_least[k] = number of cyclic p-factors of exponent >= k
        parts_at_least = []
        for k in range(1, e + 1):
            ratio, r = counts[k] // counts[k - 1], 0
            while ratio > 1:
                ratio //= p
                r += 1
            parts_at_least.append(r)
        parts_at_least.append(0)
        exponents = []
        for k in range(1, e + 1):
            exponents += [k] * (parts_at_least[k - 1] - parts_at_least[k])
        exponents_by_prime[p] = sorted(exponents, reverse=True)

    length = max((len(v) for v in exponents_by_prime.values()), default=0)
    factors = []
    for idx in range(length):
        d = 1
        for p, exps in exponents_by_prime.items():
            if idx < len(exps):
                d *= p ** exps[idx]
        factors.append(d)
    return sorted(factors)


def isomorphism_invariants(g: FiniteGroup) -> Dict[str, object]:
    """Order, commutativity, element-order statistics and (if abelian) invariant factors"""
    invariants = {
        'order': g.order,
        'abelian': g.is_abelian(),
        'order_profile': g.order_profile(),
        'center_order': len(g.center()),
    }
    if invariants['abelian']:
        invariants['invariant_factors'] = abelian_invariant_factors(g)
    return invariants


# ---------------------------------------------------------------------------
# Finitely generated abelian groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FgAbelianGroup:
    """ℤ^rank ⊕ ℤ/d_1 ⊕ ... ⊕ ℤ/d_k with d_i | d_{i+1}"""
    rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        torsion = tuple(int(d) for d in self.torsion)
        if self.rank < 0:
            raise InvalidInputError(f"Rank must be nonnegative, got {self.rank}")
        for d in torsion:
            if d < 2:
                raise InvalidInputError(f"Torsion factors must be >= 2, got {torsion}")
        for d, e in zip(torsion, torsion[1:]):
            if e % d:
                raise InvalidInputError(f"Torsion factors must form a divisibility chain, got {torsion}")
        object.__setattr__(self, 'rank', int(self.rank))
        object.__setattr__(self, 'torsion', torsion)

    @classmethod
    def from_invariant_factors(cls, factors: Sequence[int]) -> 'FgAbelianGroup':
        """Build from SNF-style factors: 0 is a free summand, 1 is dropped"""
        rank = sum(1 for d in factors if d == 0)
        torsion = sorted(int(abs(d)) for d in factors if abs(d) > 1)
        return cls(rank=rank, torsion=tuple(torsion))

    @classmethod
    def cyclic(cls, n: int) -> 'FgAbelianGroup':
        if n == 0:
            return cls(rank=1)
        return cls.from_invariant_factors([n])

    @classmethod
    def integers(cls, rank: int = 1) -> 'FgAbelianGroup':
        return cls(rank=rank)

    @classmethod
    def trivial(cls) -> 'FgAbelianGroup':
        return cls()

    @property
    def ngens(self) -> int:
        return self.rank + len(self.torsion)

    @property
    def moduli(self) -> Tuple[int, ...]:
        """Per-coordinate modulus, 0 for free coordinates"""
        return (0,) * self.rank + self.torsion

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise InvalidInputError(f"{self} is infinite")
        return int(np.prod(self.torsion, dtype=object)) if self.torsion else 1

    @property
    def invariant_factors(self) -> List[int]:
        return list(self.torsion) + [0] * self.rank

    def relation_matrix(self) -> IntMatrix:
        """ngens × len(torsion) matrix whose columns are d_j·e_j"""
        rows = [[0] * len(self.torsion) for _ in range(self.ngens)]
        for j, d in enumerate(self.torsion):
            rows[self.rank + j][j] = d
        return rows

    def reduce(self, vec) -> np.ndarray:
        """Reduce torsion coordinates into [0, d_j); works on (..., ngens) arrays"""
        arr = np.array(vec, dtype=np.int64)
        if arr.shape[-1:] != (self.ngens,):
            raise InvalidInputError(f"Expected vectors of length {self.ngens} for {self}, got shape {arr.shape}")
        for j, d in enumerate(self.torsion):
            arr[..., self.rank + j] %= d
        return arr

    def zero(self) -> np.ndarray:
        return np.zeros(self.ngens, dtype=np.int64)

    def add(self, x, y) -> np.ndarray:
        return self.reduce(np.asarray(x) + np.asarray(y))

    def neg(self, x) -> np.ndarray:
        return self.reduce(-np.asarray(x))

    def elements(self) -> List[Tuple[int, ...]]:
        """All elements in mixed-radix order (zero first)"""
        if not self.is_finite:
            raise InvalidInputError(f"Cannot enumerate infinite group {self}")
        return list(itertools.product(*(range(d) for d in self.torsion)))

    def index_of(self, vec) -> int:
        if not self.is_finite:
            raise InvalidInputError(f"Cannot index infinite group {self}")
        index = 0
        for value, d in zip(self.reduce(vec).tolist(), self.torsion):
            index = index * d + value
        return index

    def element_at(self, index: int) -> np.ndarray:
        coords = []
        for d in reversed(self.torsion):
            coords.append(index % d)
            index //= d
        return np.array(list(reversed(coords)), dtype=np.int64)

    def as_finite_group(self) -> FiniteGroup:
        elements = np.array(self.elements(), dtype=np.int64).reshape(self.order, self.ngens)
        sums = elements[:, None, :] + elements[None, :, :]
        table = np.zeros((self.order, self.order), dtype=np.int64)
        stride = 1
        for j in reversed(range(len(self.torsion))):
            table += (sums[:, :, j] % self.torsion[j]) * stride
            stride *= self.torsion[j]
        return FiniteGroup(table, name=str(self))

    def __str__(self):
        parts = (['Z'] if self.rank == 1 else [f'Z^{self.rank}'] if self.rank else [])
        parts += [f'Z/{d}' for d in self.torsion]
        return ' x '.join(parts) if parts else '0'


@dataclass(frozen=True, eq=False)
class AbelianHom:
    """Homomorphism given by the images of the source generators (matrix columns)"""
    source: FgAbelianGroup
    target: FgAbelianGroup
    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=np.int64).reshape(self.target.ngens, self.source.ngens)
        matrix.setflags(write=False)
        object.__setattr__(self, 'matrix', matrix)

    @classmethod
    def identity(cls, group: FgAbelianGroup) -> 'AbelianHom':
        return cls(group, group, np.eye(group.ngens, dtype=np.int64))

    @classmethod
    def zero(cls, source: FgAbelianGroup, target: FgAbelianGroup) -> 'AbelianHom':
        return cls(source, target, np.zeros((target.ngens, source.ngens), dtype=np.int64))

    def apply(self, x) -> np.ndarray:
        """Image of one vector or of a stack of vectors (..., source.ngens)"""
        arr = np.asarray(x, dtype=np.int64)
        return self.target.reduce(arr @ self.matrix.T)

    def compose(self, other: 'AbelianHom') -> 'AbelianHom':
        """self ∘ other"""
        if other.target != self.source:
            raise InvalidInputError(f"Cannot compose {other.target} -> ... with source {self.source}")
        return AbelianHom(other.source, self.target, self.matrix @ other.matrix)

    def well_definedness_failures(self) -> List[int]:
        """Torsion generators j of the source with matrix·(d_j e_j) != 0 in the target"""
        failures = []
        for j, d in enumerate(self.source.torsion):
            column = self.matrix[:, self.source.rank + j] * d
            if np.any(self.target.reduce(column)):
                failures.append(j)
        return failures

    def is_well_defined(self) -> bool:
        return not self.well_definedness_failures()


@dataclass(frozen=True, eq=False)
class GAction:
    """Action of a finite group on an abelian group by automorphisms"""
    group: FiniteGroup
    module: FgAbelianGroup
    act: Tuple[AbelianHom, ...]

    def __post_init__(self):
        if len(self.act) != self.group.order:
            raise InvalidInputError("An action needs one automorphism per group element")
        object.__setattr__(self, 'act', tuple(self.act))

    @classmethod
    def trivial(cls, group: FiniteGroup, module: FgAbelianGroup) -> 'GAction':
        identity = AbelianHom.identity(module)
        return cls(group, module, tuple(identity for _ in range(group.order)))

    @property
    def is_trivial(self) -> bool:
        eye = np.eye(self.module.ngens, dtype=np.int64)
        return all(np.array_equal(a.matrix, eye) for a in self.act)

    def matrix(self, i: int) -> np.ndarray:
        return self.act[i].matrix

    def apply(self, i: int, vec) -> np.ndarray:
        return self.act[i].apply(vec)


def verify_action(action: GAction) -> Report:
    findings = []
    module = action.module
    basis = np.eye(module.ngens, dtype=np.int64)
    if np.any(module.reduce(action.apply(0, basis) - basis)):
        findings.append(Finding('action.unit', witness=(0,)))
    n = action.group.order
    for i in range(n):
        if not action.act[i].is_well_defined():
            findings.append(Finding('action.well_defined', witness=(i,)))
            break
    for i, j in itertools.product(range(n), repeat=2):
        lhs = action.apply(i, action.apply(j, basis))
        rhs = action.apply(action.group.mul(i, j), basis)
        if np.any(module.reduce(lhs - rhs)):
            findings.append(Finding('action.compatibility', witness=(i, j)))
            break
    return Report.from_findings(findings)


# ---------------------------------------------------------------------------
# Smith normal form and lattice quotients
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithForm:
    """U·A·V = D with U, V unimodular; u_inv is U⁻¹"""
    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    u_inv: IntMatrix
    rank: int

    @property
    def diagonal(self) -> List[int]:
        return [self.d[i][i] for i in range(min(len(self.d), len(self.v)))]


def _identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _smith(a: IntMatrix, ncols: int) -> SmithForm:
    m, n = len(a), ncols
    A = [[int(x) for x in row] for row in a]
    U, U_inv, V = _identity(m), _identity(m), _identity(n)

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]
            for row in U_inv:
                row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i != j:
            for M in (A, V):
                for row in M:
                    row[i], row[j] = row[j], row[i]

    def add_row(target, source, q):
        # row_target += q·row_source
        if q:
            A[target] = [x + q * y for x, y in zip(A[target], A[source])]
            U[target] = [x + q * y for x, y in zip(U[target], U[source])]
            for row in U_inv:
                row[source] -= q * row[target]

    def add_col(target, source, q):
        if q:
            for M in (A, V):
                for row in M:
                    row[target] += q * row[source]

    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                add_col(j, t, -(A[t][j] // p))

            leftovers = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
            leftovers += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
            if leftovers:
                _, i, j = min(leftovers)
                swap_rows(t, i)
                swap_cols(t, j)
                continue

            offender = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if offender is None:
                break
            add_row(t, offender[0], 1)

        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
            for row in U_inv:
                row[t] = -row[t]
        t += 1

    return SmithForm(u=U, d=A, v=V, u_inv=U_inv, rank=t)


def smith_normal_form(m) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (U, D, V) with U·m·V = D; arrays hold exact Python integers"""
    arr = np.asarray(m, dtype=object)
    if arr.ndim != 2:
        raise InvalidInputError(f"Expected a 2-D integer matrix, got shape {arr.shape}")
    rows, cols = arr.shape
    form = _smith([[int(x) for x in row] for row in arr.tolist()], cols)

    def as_array(mat, r, c):
        return np.array(mat, dtype=object).reshape(r, c)

    return as_array(form.u, rows, rows), as_array(form.d, rows, cols), as_array(form.v, cols, cols)


def _matvec(a: IntMatrix, x: Sequence[int]) -> IntVector:
    return [sum(r * v for r, v in zip(row, x)) for row in a]


def _columns_to_rows(columns: Sequence[Sequence[int]], dim: int) -> IntMatrix:
    return [[int(col[i]) for col in columns] for i in range(dim)]


def kernel_basis(a: IntMatrix, ncols: int) -> List[IntVector]:
    """ℤ-basis of {x : a·x = 0}"""
    form = _smith(a, ncols)
    return [[form.v[i][j] for i in range(ncols)] for j in range(form.rank, ncols)]


def solve_integer_system(a, b) -> Optional[np.ndarray]:
    """An integer solution of a·x = b, or None if none exists"""
    arr = np.asarray(a, dtype=object)
    rows, cols = arr.shape
    form = _smith([[int(x) for x in row] for row in arr.tolist()], cols)
    ub = _matvec(form.u, [int(v) for v in b])
    y = [0] * cols
    for i, value in enumerate(ub):
        if i < form.rank:
            d = form.d[i][i]
            if value % d:
                return None
            y[i] = value // d
        elif value:
            return None
    return np.array(_matvec(form.v, y), dtype=object)


@dataclass(frozen=True)
class LatticeQuotient:
    """L1/L2 for lattices L2 ⊆ L1 ⊆ ℤ^dim, with coordinates in invariant-factor form"""
    dim: int
    group: FgAbelianGroup
    generators: Tuple[Tuple[int, ...], ...]
    _outer: SmithForm = field(repr=False)
    _inner: SmithForm = field(repr=False)
    _order: Tuple[int, ...] = field(repr=False)

    def _outer_coordinates(self, vec: Sequence[int]) -> Optional[IntVector]:
        y = _matvec(self._outer.u, [int(v) for v in vec])
        coords = []
        for i, value in enumerate(y):
            if i < self._outer.rank:
                d = self._outer.d[i][i]
                if value % d:
                    return None
                coords.append(value // d)
            elif value:
                return None
        return coords

    def contains(self, vec: Sequence[int]) -> bool:
        return self._outer_coordinates(vec) is not None

    def coordinates(self, vec: Sequence[int]) -> Tuple[int, ...]:
        """Coordinates of the class of vec in self.group"""
        outer = self._outer_coordinates(vec)
        if outer is None:
            raise InvalidInputError("Vector does not lie in the numerator lattice")
        z = _matvec(self._inner.u, outer) if outer else []
        return tuple(int(v) for v in self.group.reduce([z[i] for i in self._order]).tolist())

    def is_zero(self, vec: Sequence[int]) -> bool:
        return not any(self.coordinates(vec))


def lattice_quotient(numerator: Sequence[Sequence[int]], denominator: Sequence[Sequence[int]],
                     dim: int) -> LatticeQuotient:
    """Quotient of the lattice spanned by `numerator` columns by the one spanned by `denominator`"""
    outer = _smith(_columns_to_rows(numerator, dim), len(numerator))
    r = outer.rank
    basis = [[outer.d[i][i] * outer.u_inv[k][i] for k in range(dim)] for i in range(r)]

    relation_columns = []
    for vec in denominator:
        y = _matvec(outer.u, [int(v) for v in vec])
        coords = []
        for i, value in enumerate(y):
            if i < r:
                d = outer.d[i][i]
                if value % d:
                    raise InvalidInputError("Denominator lattice is not contained in the numerator lattice")
                coords.append(value // d)
            elif value:
                raise InvalidInputError("Denominator lattice is not contained in the numerator lattice")
        relation_columns.append(coords)

    inner = _smith(_columns_to_rows(relation_columns, r), len(relation_columns))
    diagonal = [inner.d[i][i] for i in range(inner.rank)]
    free = list(range(inner.rank, r))
    torsion = [i for i in range(inner.rank) if diagonal[i] > 1]
    order = tuple(free + torsion)

    generators = []
    for i in order:
        column = [inner.u_inv[k][i] for k in range(r)]
        generators.append(tuple(sum(column[k] * basis[k][a] for k in range(r)) for a in range(dim)))

    group = FgAbelianGroup(rank=len(free), torsion=tuple(diagonal[i] for i in torsion))
    return LatticeQuotient(dim=dim, group=group, generators=tuple(generators),
                           _outer=outer, _inner=inner, _order=order)


@dataclass(frozen=True)
class HomDecomposition:
    """Kernel, image and cokernel of an AbelianHom with explicit generator witnesses"""
    kernel: FgAbelianGroup
    image: FgAbelianGroup
    cokernel: FgAbelianGroup
    kernel_generators: Tuple[Tuple[int, ...], ...]
    image_generators: Tuple[Tuple[int, ...], ...]
    image_lifts: Tuple[Tuple[int, ...], ...]
    cokernel_generators: Tuple[Tuple[int, ...], ...]
    cokernel_quotient: LatticeQuotient = field(repr=False)
    kernel_quotient: LatticeQuotient = field(repr=False)


def hom_decompose(h: AbelianHom) -> HomDecomposition:
    """Invariant-factor presentations of ker h, im h and coker h via SNF"""
    failures = h.well_definedness_failures()
    if failures:
        raise InvalidInputError(f"Homomorphism is not well defined on torsion generator {failures[0]}")
    ms, mt = h.source.ngens, h.target.ngens
    image_cols = [[int(h.matrix[i, j]) for i in range(mt)] for j in range(ms)]
    target_rel = [[row[j] for row in h.target.relation_matrix()] for j in range(len(h.target.torsion))]
    source_rel = [[row[j] for row in h.source.relation_matrix()] for j in range(len(h.source.torsion))]
    stacked = image_cols + target_rel

    image = lattice_quotient(stacked, target_rel, mt)
    stacked_rows = _columns_to_rows(stacked, mt)
    lifts = []
    for gen in image.generators:
        solution = solve_integer_system(np.array(stacked_rows, dtype=object).reshape(mt, len(stacked)), gen)
        lifts.append(tuple(int(v) for v in solution[:ms]))

    cokernel = lattice_quotient(_identity(mt), stacked, mt)

    null = kernel_basis(stacked_rows, len(stacked))
    kernel_gens = [vec[:ms] for vec in null]
    kernel = lattice_quotient(kernel_gens, source_rel, ms)

    return HomDecomposition(
        kernel=kernel.group, image=image.group, cokernel=cokernel.group,
        kernel_generators=kernel.generators, image_generators=image.generators,
        image_lifts=tuple(lifts), cokernel_generators=cokernel.generators,
        cokernel_quotient=cokernel, kernel_quotient=kernel,
    )
