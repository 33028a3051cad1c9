"""
Charted Lie groups - swappable builtins behind one interface

Every group carries a chart φ: U → 𝔤 ≅ ℝ^n with φ(e) = 0 and dφ(e) = id.
Points are only handed out inside the chart ball; anything else raises
ChartDomainError with the parameters that produced it.
"""
import copy
import os
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence

import numpy as np
from scipy.linalg import expm, logm

from errors import ChartDomainError, InvalidInputError

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class LieAlgebra:
    """Real Lie algebra by structure constants: [x, y]_l = Σ c[l, i, j] x_i y_j"""
    structure: np.ndarray
    name: str = ''

    def __post_init__(self):
        c = np.array(self.structure, dtype=float)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
            raise InvalidInputError(f"Structure constants must have shape (n, n, n), got {c.shape}")
        c.setflags(write=False)
        object.__setattr__(self, 'structure', c)

    @property
    def dim(self) -> int:
        return int(self.structure.shape[0])

    def bracket(self, x, y) -> np.ndarray:
        return np.einsum('lij,i,j->l', self.structure, np.asarray(x, dtype=float), np.asarray(y, dtype=float))

    def skew_defect(self) -> float:
        return float(np.max(np.abs(self.structure + self.structure.transpose(0, 2, 1)), initial=0.0))

    def jacobi_defect(self, samples: int = 20, rng: Optional[np.random.Generator] = None) -> float:
        """Max |[x,[y,z]] + [y,[z,x]] + [z,[x,y]]| over random triples"""
        rng = rng or np.random.default_rng(0)
        worst = 0.0
        for _ in range(samples):
            x, y, z = rng.normal(size=(3, self.dim))
            total = (self.bracket(x, self.bracket(y, z)) + self.bracket(y, self.bracket(z, x))
                     + self.bracket(z, self.bracket(x, y)))
            worst = max(worst, float(np.max(np.abs(total), initial=0.0)))
        return worst


def abelian_algebra(n: int) -> LieAlgebra:
    return LieAlgebra(np.zeros((n, n, n)), name=f'R^{n}')


def heisenberg_algebra(scale: float = 1.0) -> LieAlgebra:
    """Basis (p, q, c) with [p, q] = scale·c"""
    c = np.zeros((3, 3, 3))
    c[2, 0, 1] = scale
    c[2, 1, 0] = -scale
    return LieAlgebra(c, name='heisenberg')


def su2_algebra() -> LieAlgebra:
    """Basis −iσ_k/2, so the bracket is the cross product"""
    c = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        c[k, i, j] = 1.0
        c[k, j, i] = -1.0
    return LieAlgebra(c, name='su(2)')


@dataclass(frozen=True)
class Chart:
    """φ and φ⁻¹; the domain U is the open ball of the given radius in chart coordinates"""
    forward: Callable[[object], np.ndarray]
    inverse: Callable[[np.ndarray], object]
    radius: float = np.inf
    name: str = 'log'


class ChartedLieGroup(ABC):
    """Abstract base class for Lie groups with an identity-centred chart"""

    name = 'lie-group'
    dim = 0

    def __init__(self, chart: Optional[Chart] = None):
        self.chart = chart or self.default_chart()

    @abstractmethod
    def unit(self):
        """The unit element e"""
        pass

    @abstractmethod
    def mult(self, g, h):
        pass

    @abstractmethod
    def inv(self, g):
        pass

    @abstractmethod
    def default_chart(self) -> Chart:
        pass

    @abstractmethod
    def algebra(self) -> LieAlgebra:
        """Structure constants of 𝔤 in chart coordinates"""
        pass

    def bracket(self, x, y) -> np.ndarray:
        return self.algebra().bracket(x, y)

    def with_chart(self, chart: Chart) -> 'ChartedLieGroup':
        other = copy.copy(self)
        other.chart = chart
        return other

    def coordinates(self, g, parameters: Sequence[float] = ()) -> np.ndarray:
        """φ(g), refusing points outside the chart domain"""
        x = np.atleast_1d(np.asarray(self.chart.forward(g), dtype=float))
        if not np.all(np.isfinite(x)) or np.linalg.norm(x) >= self.chart.radius:
            raise ChartDomainError(
                f"Point leaves the domain of chart '{self.chart.name}' on {self.name}", parameters)
        return x

    def point(self, x, parameters: Sequence[float] = ()):
        """φ⁻¹(x), refusing chart coordinates outside the domain"""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        if x.shape != (self.dim,):
            raise InvalidInputError(f"{self.name} expects chart coordinates of length {self.dim}, got {x.shape}")
        if not np.all(np.isfinite(x)) or np.linalg.norm(x) >= self.chart.radius:
            raise ChartDomainError(
                f"Chart coordinates leave the domain of chart '{self.chart.name}' on {self.name}", parameters)
        return self.chart.inverse(x)

    def chart_product(self, x, y, parameters: Sequence[float] = ()) -> np.ndarray:
        """x * y := φ(φ⁻¹(x)·φ⁻¹(y))"""
        return self.coordinates(self.mult(self.point(x, parameters), self.point(y, parameters)), parameters)

    def to_identity(self, p, v, step: float = 1e-6) -> np.ndarray:
        """dλ_{p⁻¹}(p)·v in 𝔤, for an ambient tangent vector v at p"""
        p_inv = self.inv(p)
        plus = self.coordinates(self.mult(p_inv, p + step * v))
        minus = self.coordinates(self.mult(p_inv, p - step * v))
        return (plus - minus) / (2.0 * step)

    def distance(self, g, h) -> float:
        return float(np.max(np.abs(np.asarray(g) - np.asarray(h)), initial=0.0))

    def is_unit(self, g, tolerance: float = 1e-14) -> bool:
        return self.distance(g, self.unit()) <= tolerance

    def random_coordinates(self, rng: np.random.Generator, radius: float) -> np.ndarray:
        """Uniformly random chart coordinates in the ball of the given radius"""
        direction = rng.normal(size=self.dim)
        direction /= np.linalg.norm(direction)
        return direction * radius * rng.uniform() ** (1.0 / self.dim)

    def __repr__(self):
        return f"{type(self).__name__}(chart={self.chart.name!r})"


class AdditiveGroup(ChartedLieGroup):
    """(ℝ^n, +) with the identity chart"""

    def __init__(self, n: int = 2, chart: Optional[Chart] = None):
        if n < 1:
            raise InvalidInputError(f"Dimension must be positive, got {n}")
        self.dim = n
        self.name = f'R^{n}'
        super().__init__(chart)

    def unit(self):
        return np.zeros(self.dim)

    def mult(self, g, h):
        return np.asarray(g, dtype=float) + np.asarray(h, dtype=float)

    def inv(self, g):
        return -np.asarray(g, dtype=float)

    def default_chart(self) -> Chart:
        return Chart(forward=lambda g: np.array(g, dtype=float), inverse=lambda x: np.array(x, dtype=float),
                     name='identity')

    def algebra(self) -> LieAlgebra:
        return abelian_algebra(self.dim)

    def to_identity(self, p, v, step: float = 1e-6) -> np.ndarray:
        return np.asarray(v, dtype=float)


class HeisenbergGroup(ChartedLieGroup):
    """(a,b,c)·(a',b',c') = (a+a', b+b', c+c'+ab') with the exponential chart (a, b, c − ab/2)"""

    name = 'heisenberg'
    dim = 3

    def unit(self):
        return np.zeros(3)

    def mult(self, g, h):
        a, b, c = g
        a2, b2, c2 = h
        return np.array([a + a2, b + b2, c + c2 + a * b2])

    def inv(self, g):
        a, b, c = g
        return np.array([-a, -b, -c + a * b])

    def default_chart(self) -> Chart:
        return Chart(forward=lambda g: np.array([g[0], g[1], g[2] - 0.5 * g[0] * g[1]]),
                     inverse=lambda x: np.array([x[0], x[1], x[2] + 0.5 * x[0] * x[1]]),
                     name='exp')

    def algebra(self) -> LieAlgebra:
        return heisenberg_algebra()

    def to_identity(self, p, v, step: float = 1e-6) -> np.ndarray:
        return np.array([v[0], v[1], v[2] - p[0] * v[1]])


class MatrixLieGroup(ChartedLieGroup):
    """Matrix group with a real basis of 𝔤 and the principal logarithm as chart"""

    basis: np.ndarray = np.zeros((0, 1, 1))
    log_radius = np.pi

    def unit(self):
        return np.eye(self.basis.shape[1], dtype=complex)

    def mult(self, g, h):
        return np.asarray(g) @ np.asarray(h)

    def inv(self, g):
        return np.linalg.inv(g)

    def hat(self, x) -> np.ndarray:
        return np.tensordot(np.asarray(x, dtype=float), self.basis, axes=1)

    def vee(self, X) -> np.ndarray:
        """Least-squares coordinates of X in the basis"""
        A = np.concatenate([self.basis.real.reshape(self.dim, -1), self.basis.imag.reshape(self.dim, -1)], axis=1).T
        b = np.concatenate([np.real(X).ravel(), np.imag(X).ravel()])
        return np.linalg.lstsq(A, b, rcond=None)[0]

    def exp(self, x) -> np.ndarray:
        return expm(self.hat(x))

    def log(self, g) -> np.ndarray:
        return self.vee(logm(np.asarray(g, dtype=complex)))

    def default_chart(self) -> Chart:
        return Chart(forward=self.log, inverse=self.exp, radius=self.log_radius, name='log')

    def algebra(self) -> LieAlgebra:
        c = np.zeros((self.dim, self.dim, self.dim))
        for i in range(self.dim):
            for j in range(self.dim):
                commutator = self.basis[i] @ self.basis[j] - self.basis[j] @ self.basis[i]
                c[:, i, j] = self.vee(commutator)
        return LieAlgebra(c, name=self.name)

    def to_identity(self, p, v, step: float = 1e-6) -> np.ndarray:
        return self.vee(self.inv(p) @ v)


_PAULI = np.array([
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
], dtype=complex)


class SU2Group(MatrixLieGroup):
    """SU(2) with basis −iσ_k/2 and closed-form exp/log"""

    name = 'su2'
    dim = 3
    basis = -0.5j * _PAULI
    log_radius = np.pi

    def inv(self, g):
        return np.conj(np.asarray(g)).T

    def exp(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        half = 0.5 * np.linalg.norm(x)
        # sin(half)/|x| = 0.5·sinc
        return np.cos(half) * np.eye(2) - 1j * 0.5 * np.sinc(half / np.pi) * np.tensordot(x, _PAULI, axes=1)

    def log(self, g) -> np.ndarray:
        g = np.asarray(g)
        a = g[0, 0].real
        b = np.array([-g[1, 0].imag, g[1, 0].real, -g[0, 0].imag])
        theta = np.arctan2(np.linalg.norm(b), a)
        return 2.0 * b / np.sinc(theta / np.pi)

    def vee(self, X) -> np.ndarray:
        X = np.asarray(X)
        return np.array([-2.0 * X[1, 0].imag, 2.0 * X[1, 0].real, -2.0 * X[0, 0].imag])

    def algebra(self) -> LieAlgebra:
        return su2_algebra()


class U2Group(MatrixLieGroup):
    """U(2) with basis (−iσ_1/2, −iσ_2/2, −iσ_3/2, i·1); exp/log from scipy"""

    name = 'u2'
    dim = 4
    basis = np.concatenate([-0.5j * _PAULI, [1j * np.eye(2)]])
    log_radius = 2.5

    def inv(self, g):
        return np.conj(np.asarray(g)).T


class U1Group(MatrixLieGroup):
    """U(1) as 1×1 unitary matrices with basis i"""

    name = 'u1'
    dim = 1
    basis = np.array([[[1j]]])
    log_radius = np.pi

    def inv(self, g):
        return np.conj(np.asarray(g))

    def exp(self, x) -> np.ndarray:
        return np.array([[np.exp(1j * float(np.asarray(x).ravel()[0]))]])

    def log(self, g) -> np.ndarray:
        return np.array([np.angle(np.asarray(g).ravel()[0])])


class CircleGroup(ChartedLieGroup):
    """Unit complex numbers with the angle chart on (−π, π)"""

    name = 'circle'
    dim = 1

    def unit(self):
        return complex(1.0)

    def mult(self, g, h):
        return complex(g) * complex(h)

    def inv(self, g):
        return 1.0 / complex(g)

    def default_chart(self) -> Chart:
        return Chart(forward=lambda g: np.array([np.angle(complex(g))]),
                     inverse=lambda x: complex(np.exp(1j * float(x[0]))),
                     radius=np.pi, name='angle')

    def algebra(self) -> LieAlgebra:
        return abelian_algebra(1)

    def to_identity(self, p, v, step: float = 1e-6) -> np.ndarray:
        return np.array([(complex(v) / complex(p)).imag])

    def element(self, angle: float) -> complex:
        return complex(np.exp(1j * angle))

    @staticmethod
    def angle(g) -> float:
        """θ(g) ∈ [0, 2π)"""
        theta = float(np.angle(complex(g))) % TWO_PI
        if theta >= TWO_PI - 1e-12:
            theta = 0.0
        return theta


@dataclass(frozen=True)
class MatrixHomomorphism:
    """α: G → G' with its differential dα(e) in chart coordinates"""
    name: str
    source: MatrixLieGroup
    target: MatrixLieGroup
    apply: Callable[[np.ndarray], np.ndarray]
    differential: Callable[[np.ndarray], np.ndarray]


def get_matrix_homomorphism(name: str) -> MatrixHomomorphism:
    """Factory function for the builtin matrix homomorphisms"""
    if name == 'identity-su2':
        su2 = SU2Group()
        return MatrixHomomorphism(name, su2, su2, lambda g: np.asarray(g), lambda x: np.asarray(x, dtype=float))
    elif name == 'inclusion-su2-u2':
        return MatrixHomomorphism(name, SU2Group(), U2Group(), lambda g: np.asarray(g),
                                  lambda x: np.append(np.asarray(x, dtype=float), 0.0))
    elif name == 'det-u2':
        # tr(hat(x)) = 2i·x_4
        return MatrixHomomorphism(name, U2Group(), U1Group(), lambda g: np.array([[np.linalg.det(g)]]),
                                  lambda x: np.array([2.0 * float(np.asarray(x)[3])]))
    else:
        raise InvalidInputError(f"Unsupported matrix homomorphism: {name}")


MATRIX_HOMOMORPHISMS = ('identity-su2', 'inclusion-su2-u2', 'det-u2')

LIE_GROUPS: Dict[str, Callable[[], ChartedLieGroup]] = {
    'r1': lambda: AdditiveGroup(1),
    'r2': lambda: AdditiveGroup(2),
    'r3': lambda: AdditiveGroup(3),
    'heisenberg': HeisenbergGroup,
    'su2': SU2Group,
    'u2': U2Group,
    'u1': U1Group,
    'circle': CircleGroup,
}


def get_lie_group(name: Optional[str] = None) -> ChartedLieGroup:
    """Factory function to get a builtin charted Lie group (CEXT_LIE_GROUP when no name is given)"""
    group_name = (name or os.getenv('CEXT_LIE_GROUP', 'su2')).lower()
    if group_name in LIE_GROUPS:
        return LIE_GROUPS[group_name]()
    raise InvalidInputError(f"Unsupported Lie group: {group_name}")
