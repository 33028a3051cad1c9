"""
Integration of Lie algebra cocycles on charted Lie groups

Paths and simplices come from a chart: α_g(t) = φ⁻¹(t·g̃) and
β_{g,h}(t,s) = φ⁻¹(t(g̃ * s·h̃) + s(g̃ * (1−t)·h̃)). The left-invariant form ω^l
is pulled back along them and integrated with Gauss rules; tangents are
central differences, trivialized at the identity by the group.
"""
import warnings
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import Settings, get_settings
from errors import ChartDomainError, InvalidInputError, ResolutionError
from lie_groups import (
    TWO_PI,
    AdditiveGroup,
    Chart,
    ChartedLieGroup,
    CircleGroup,
    LieAlgebra,
    MatrixHomomorphism,
    abelian_algebra,
    heisenberg_algebra,
)
from quadrature import rule_for
from reports import FAIL, INFO, PASS, Finding, Report

GAMMA_THRESHOLD = 1e-8


@dataclass(frozen=True)
class LieAlgebraCocycle:
    """Skew bilinear ω: ℝ^n × ℝ^n → 𝔷 = ℝ^m with ω(x, y)_k = Σ structure[k, i, j] x_i y_j"""
    structure: np.ndarray
    name: str = ''

    def __post_init__(self):
        s = np.array(self.structure, dtype=float)
        if s.ndim != 3 or s.shape[1] != s.shape[2]:
            raise InvalidInputError(f"A cocycle needs an m×n×n structure array, got shape {s.shape}")
        s.setflags(write=False)
        object.__setattr__(self, 'structure', s)

    @property
    def n(self) -> int:
        return int(self.structure.shape[1])

    @property
    def m(self) -> int:
        return int(self.structure.shape[0])

    def __call__(self, x, y) -> np.ndarray:
        return np.einsum('kij,i,j->k', self.structure, np.asarray(x, dtype=float), np.asarray(y, dtype=float))

    def scaled(self, c: float) -> 'LieAlgebraCocycle':
        return LieAlgebraCocycle(c * self.structure, name=self.name)

    def skew_defect(self) -> float:
        return float(np.max(np.abs(self.structure + self.structure.transpose(0, 2, 1)), initial=0.0))

    def cocycle_defect(self, algebra: LieAlgebra, samples: int = 20,
                       rng: Optional[np.random.Generator] = None) -> float:
        """Max |ω([x,y],z) + ω([y,z],x) + ω([z,x],y)| over random triples"""
        if algebra.dim != self.n:
            raise InvalidInputError("Cocycle and Lie algebra dimensions differ")
        rng = rng or np.random.default_rng(0)
        worst = 0.0
        for _ in range(samples):
            x, y, z = rng.normal(size=(3, self.n))
            total = (self(algebra.bracket(x, y), z) + self(algebra.bracket(y, z), x)
                     + self(algebra.bracket(z, x), y))
            worst = max(worst, float(np.max(np.abs(total), initial=0.0)))
        return worst

    @classmethod
    def symplectic(cls, scale: float = 1.0) -> 'LieAlgebraCocycle':
        """ω(x, y) = scale·(x₁y₂ − x₂y₁) on ℝ²"""
        return cls(scale * np.array([[[0.0, 1.0], [-1.0, 0.0]]]), name='symplectic')

    @classmethod
    def from_coboundary(cls, b, algebra: LieAlgebra) -> 'LieAlgebraCocycle':
        """ω = b∘[·,·] for a linear map b: 𝔤 → 𝔷 given as an m×n matrix"""
        b = np.atleast_2d(np.asarray(b, dtype=float))
        if b.shape[1] != algebra.dim:
            raise InvalidInputError(f"b must have {algebra.dim} columns, got shape {b.shape}")
        return cls(np.einsum('kl,lij->kij', b, algebra.structure), name='coboundary')


@dataclass(frozen=True)
class SimplexMap:
    """A map Δ^(1), Δ^(2) or [0,1]² → G"""
    fn: Callable[..., object]
    arity: int
    tag: str = 'user'
    domain: str = ''

    def __post_init__(self):
        if self.arity not in (1, 2):
            raise InvalidInputError(f"Simplices have arity 1 or 2, got {self.arity}")
        if not self.domain:
            object.__setattr__(self, 'domain', 'interval' if self.arity == 1 else 'triangle')

    def __call__(self, *params):
        return self.fn(*params)


@dataclass
class ChartSimplices:
    alpha: List[SimplexMap]
    beta: Dict[Tuple[int, int], SimplexMap]
    gamma: Optional[List[SimplexMap]] = None


def _inner_coordinates(group: ChartedLieGroup, g, label: str) -> np.ndarray:
    """φ(g), required to lie in the half-radius ball so chart products stay in the domain"""
    x = group.coordinates(g)
    if np.linalg.norm(x) >= 0.5 * group.chart.radius:
        raise ChartDomainError(f"{label} lies outside the ball of radius {0.5 * group.chart.radius} "
                               f"in chart '{group.chart.name}'")
    return x


def alpha_simplex(group: ChartedLieGroup, g) -> SimplexMap:
    gt = _inner_coordinates(group, g, 'g')
    return SimplexMap(lambda t: group.point(t * gt, (t,)), arity=1, tag='alpha')


def beta_simplex(group: ChartedLieGroup, g, h) -> SimplexMap:
    gt = _inner_coordinates(group, g, 'g')
    ht = _inner_coordinates(group, h, 'h')

    def beta(t, s):
        params = (t, s)
        first = group.chart_product(gt, s * ht, params)
        second = group.chart_product(gt, (1.0 - t) * ht, params)
        return group.point(t * first + s * second, params)

    return SimplexMap(beta, arity=2, tag='beta')


def gamma_simplex(group: ChartedLieGroup, g, chart: Chart) -> SimplexMap:
    """2-simplex between α_g (chart φ, edge u = 0) and α'_g (chart ψ, edge v = 0); the third edge is constant at g"""
    other = group.with_chart(chart)
    gt = _inner_coordinates(group, g, 'g')
    gb = _inner_coordinates(other, g, 'g')

    def gamma(u, v):
        w = u + v
        if abs(w) < GAMMA_THRESHOLD:
            return group.unit()
        params = (u, v)
        inner = group.coordinates(other.point(w * gb, params), params)
        return group.point(u * (1.0 - v) / w * inner + v * (1.0 + u) * gt, params)

    return SimplexMap(gamma, arity=2, tag='gamma')


def chart_simplices(group: ChartedLieGroup, elements: Sequence, second_chart: Optional[Chart] = None) -> ChartSimplices:
    """α for every element, β for every ordered pair and, given a second chart, γ"""
    alpha = [alpha_simplex(group, g) for g in elements]
    beta = {(i, j): beta_simplex(group, g, h)
            for i, g in enumerate(elements) for j, h in enumerate(elements)}
    gamma = [gamma_simplex(group, g, second_chart) for g in elements] if second_chart is not None else None
    return ChartSimplices(alpha=alpha, beta=beta, gamma=gamma)


def _tangents(group: ChartedLieGroup, simplex: SimplexMap, params: Tuple[float, ...], step: float) -> List[np.ndarray]:
    """Left-trivialized partial derivatives of the simplex at params"""
    p = simplex(*params)
    tangents = []
    for i in range(len(params)):
        plus = list(params)
        minus = list(params)
        plus[i] += step
        minus[i] -= step
        v = (np.asarray(simplex(*plus)) - np.asarray(simplex(*minus))) / (2.0 * step)
        tangents.append(np.asarray(group.to_identity(p, v), dtype=float))
    return tangents


def integrate_form(group: ChartedLieGroup, form, simplex: SimplexMap,
                   quad_order: Optional[int] = None, tangent_step: Optional[float] = None,
                   settings: Optional[Settings] = None) -> np.ndarray:
    """∫_σ ω^l for a LieAlgebraCocycle on 2-simplices, or ∫_σ b^l for a matrix b on paths"""
    settings = settings or get_settings()
    order = quad_order or settings.quad_order
    step = tangent_step or settings.tangent_step
    rule = rule_for(simplex.domain, order)

    if simplex.arity == 2:
        if not isinstance(form, LieAlgebraCocycle) or form.n != group.dim:
            raise InvalidInputError(f"2-simplices integrate a cocycle on a {group.dim}-dimensional algebra")

        def integrand(u, v):
            du, dv = _tangents(group, simplex, (u, v), step)
            return form(du, dv)
    else:
        b = np.atleast_2d(np.asarray(form, dtype=float))
        if b.shape[1] != group.dim:
            raise InvalidInputError(f"Paths integrate a linear map with {group.dim} columns, got shape {b.shape}")

        def integrand(t):
            (dt,) = _tangents(group, simplex, (t,), step)
            return b @ dt

    return rule.integrate(integrand)


def F_omega_beta(group: ChartedLieGroup, omega: LieAlgebraCocycle, g, h,
                 quad_order: Optional[int] = None, tangent_step: Optional[float] = None) -> np.ndarray:
    """F_{ω,β}(g, h) = ∫_{β_{g,h}} ω^l; exactly 0 when g or h is the unit"""
    if omega.n != group.dim:
        raise InvalidInputError(f"ω is defined on ℝ^{omega.n} but {group.name} has dimension {group.dim}")
    if group.is_unit(g) or group.is_unit(h):
        return np.zeros(omega.m)
    return integrate_form(group, omega, beta_simplex(group, g, h), quad_order, tangent_step)


@dataclass
class SmoothGeneralizedCocycle:
    """F_{ω,β} on a charted group, with its quadrature parameters"""
    group: ChartedLieGroup
    omega: LieAlgebraCocycle
    quad_order: int = 10
    tangent_step: float = 1e-5

    @classmethod
    def from_settings(cls, group: ChartedLieGroup, omega: LieAlgebraCocycle,
                      settings: Optional[Settings] = None) -> 'SmoothGeneralizedCocycle':
        settings = settings or get_settings()
        return cls(group, omega, settings.quad_order, settings.tangent_step)

    def __call__(self, g, h) -> np.ndarray:
        return F_omega_beta(self.group, self.omega, g, h, self.quad_order, self.tangent_step)

    def normalization_defect(self, g) -> float:
        return float(max(np.max(np.abs(self(self.group.unit(), g))), np.max(np.abs(self(g, self.group.unit())))))


def cocycle_defect(group: ChartedLieGroup, omega: LieAlgebraCocycle, g, h, k,
                   settings: Optional[Settings] = None) -> np.ndarray:
    """d_gp F(g,h,k) = F(h,k) − F(gh,k) + F(g,hk) − F(g,h)"""
    F = SmoothGeneralizedCocycle.from_settings(group, omega, settings)
    gh = group.mult(g, h)
    hk = group.mult(h, k)
    return F(h, k) - F(gh, k) + F(g, hk) - F(g, h)


def _mixed_difference(f: Callable[[float, float], np.ndarray], step: float) -> np.ndarray:
    """∂²f/∂t∂s at 0 by central differences"""
    corners = [np.asarray(f(a, b), dtype=float) for a, b in
               ((step, step), (step, -step), (-step, step), (-step, -step))]
    numerator = corners[0] - corners[1] - corners[2] + corners[3]
    scale = max(float(np.max(np.abs(c), initial=0.0)) for c in corners)
    size = float(np.max(np.abs(numerator), initial=0.0))
    if 0.0 < size < 1e3 * np.finfo(float).eps * scale:
        warnings.warn(f"fd_step {step:g} is too small: the mixed difference is dominated by cancellation",
                      RuntimeWarning)
    return numerator / (4.0 * step * step)


def derive_LF(F: SmoothGeneralizedCocycle, x, y, fd_step: Optional[float] = None) -> np.ndarray:
    """L(F)(x, y): antisymmetrized mixed derivative of F(φ⁻¹(tx), φ⁻¹(sy)) at 0"""
    step = fd_step or get_settings().fd_step
    group = F.group
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)

    def f(t, s):
        return F(group.point(t * x), group.point(s * y)) - F(group.point(t * y), group.point(s * x))

    return _mixed_difference(f, step)


def derive_LF_table(F: SmoothGeneralizedCocycle, fd_step: Optional[float] = None) -> LieAlgebraCocycle:
    """L(F) on the standard basis; skew by construction"""
    n = F.group.dim
    table = np.zeros((F.omega.m, n, n))
    basis = np.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            table[:, i, j] = derive_LF(F, basis[i], basis[j], fd_step)
            table[:, j, i] = -table[:, i, j]
    return LieAlgebraCocycle(table, name='L(F)')


def coboundary_from_b(group: ChartedLieGroup, b, g, quad_order: Optional[int] = None,
                      tangent_step: Optional[float] = None) -> np.ndarray:
    """φ_b(g) = ∫_{α_g} b^l"""
    b = np.atleast_2d(np.asarray(b, dtype=float))
    if group.is_unit(g):
        return np.zeros(b.shape[0])
    return integrate_form(group, b, alpha_simplex(group, g), quad_order, tangent_step)


def coboundary_identity_residual(group: ChartedLieGroup, b, g, h, settings: Optional[Settings] = None) -> np.ndarray:
    """F_{ω,β}(g,h) + d_gp φ_b(g,h) for ω = b∘[·,·]; vanishes by Stokes"""
    settings = settings or get_settings()
    omega = LieAlgebraCocycle.from_coboundary(b, group.algebra())
    F = SmoothGeneralizedCocycle.from_settings(group, omega, settings)

    def phi(x):
        return coboundary_from_b(group, b, x, settings.quad_order, settings.tangent_step)

    return F(g, h) + phi(h) - phi(group.mult(g, h)) + phi(g)


def chart_independence_check(group: ChartedLieGroup, omega: LieAlgebraCocycle, second_chart: Chart, g, h,
                             settings: Optional[Settings] = None) -> Report:
    """F_{ω,β} − F_{ω,β'} against −d_gp φ_γ with φ_γ(x) = ∫_{γ_x} ω^l"""
    settings = settings or get_settings()
    other = group.with_chart(second_chart)
    F = SmoothGeneralizedCocycle.from_settings(group, omega, settings)
    F_other = SmoothGeneralizedCocycle.from_settings(other, omega, settings)

    def phi(x):
        if group.is_unit(x):
            return np.zeros(omega.m)
        return integrate_form(group, omega, gamma_simplex(group, x, second_chart),
                              settings.quad_order, settings.tangent_step, settings)

    difference = F(g, h) - F_other(g, h)
    boundary = phi(h) - phi(group.mult(g, h)) + phi(g)
    residual = float(np.max(np.abs(difference + boundary)))
    tolerance = 1e-5
    findings = [
        Finding('chart_independence.coboundary', status=PASS if residual <= tolerance else FAIL,
                value={'difference': difference, 'coboundary': boundary, 'residual': residual},
                tolerance=tolerance),
    ]
    return Report.from_findings(findings, numeric_provenance(settings, tolerance_estimate=residual))


# ---------------------------------------------------------------------------
# Circle: winding cocycle and universal covering
# ---------------------------------------------------------------------------

def winding_cocycle(g, h, resolution: int = 64) -> int:
    """Winding number of α_g + g.α_h − α_{gh} for α_g(t) = exp(i·t·θ(g)), θ ∈ [0, 2π)"""
    if resolution < 1:
        raise InvalidInputError(f"Path resolution must be positive, got {resolution}")
    theta_g = CircleGroup.angle(g)
    theta_h = CircleGroup.angle(h)
    theta_gh = CircleGroup.angle(complex(g) * complex(h))
    ts = np.linspace(0.0, 1.0, resolution + 1)
    loop = np.concatenate([
        np.exp(1j * ts * theta_g),
        np.exp(1j * (theta_g + ts[1:] * theta_h)),
        np.exp(1j * ts[::-1] * theta_gh),
    ])
    increments = np.angle(loop[1:] / loop[:-1])
    if np.max(np.abs(increments)) > np.pi / 2:
        raise ResolutionError(f"Path resolution {resolution} is too coarse: angle steps exceed π/2")
    total = float(np.sum(increments)) / TWO_PI
    winding = int(round(total))
    if abs(total - winding) > 0.25:
        raise ResolutionError(f"Accumulated angle {total:.3f}·2π is not close to an integer")
    return winding


def winding_grid_check(n: int = 32, resolution: int = 64) -> Report:
    """Θ_α on the n-th roots of unity: closed form and d_gp Θ_α = 0 by index arithmetic"""
    roots = np.exp(2j * np.pi * np.arange(n) / n)
    table = np.array([[winding_cocycle(roots[j], roots[k], resolution) for k in range(n)] for j in range(n)])
    idx = np.arange(n)
    expected = (idx[:, None] + idx[None, :] >= n).astype(int)
    findings = []
    bad = np.argwhere(table != expected)
    if len(bad):
        findings.append(Finding('winding.closed_form', witness=tuple(int(v) for v in bad[0]), value=int(len(bad))))
    j, k, m = np.meshgrid(idx, idx, idx, indexing='ij')
    defect = table[k, m] - table[(j + k) % n, m] + table[j, (k + m) % n] - table[j, k]
    bad = np.argwhere(defect != 0)
    if len(bad):
        findings.append(Finding('winding.cocycle', witness=tuple(int(v) for v in bad[0]), value=int(len(bad))))
    return Report.from_findings(findings, {'n': n, 'resolution': resolution, 'triples': n ** 3})


def covering_group_check(samples: int = 1000, seed: int = 0, tolerance: float = 1e-9,
                         resolution: int = 64) -> Report:
    """ℤ ×_Θ S¹ → (ℝ, +), (a, g) ↦ 2πa + θ(g), checked on random pairs and triples"""
    rng = np.random.default_rng(seed)

    def phi(a, g):
        return TWO_PI * a + CircleGroup.angle(g)

    def product(x, y):
        (a, g), (b, h) = x, y
        return a + b + winding_cocycle(g, h, resolution), complex(g) * complex(h)

    def random_element():
        return int(rng.integers(-3, 4)), complex(np.exp(1j * rng.uniform(0.0, TWO_PI)))

    worst = 0.0
    associativity_failures = 0
    for _ in range(samples):
        x, y, z = random_element(), random_element(), random_element()
        worst = max(worst, abs(phi(*product(x, y)) - phi(*x) - phi(*y)))
        left = product(product(x, y), z)
        right = product(x, product(y, z))
        if left[0] != right[0] or abs(left[1] - right[1]) > tolerance:
            associativity_failures += 1

    findings = [
        Finding('covering.homomorphism', status=PASS if worst < tolerance else FAIL, value=worst,
                tolerance=tolerance),
        Finding('covering.associativity', status=FAIL if associativity_failures else PASS,
                value=associativity_failures),
        Finding('covering.identity', status=PASS if phi(0, 1.0) == 0.0 else FAIL, value=phi(0, 1.0)),
    ]
    return Report.from_findings(findings, {'samples': samples, 'seed': seed, 'tolerance_estimate': worst})


# ---------------------------------------------------------------------------
# Spheres
# ---------------------------------------------------------------------------

def bump_sphere(group: ChartedLieGroup, rng: np.random.Generator, amplitude: float = 1.0) -> SimplexMap:
    """σ(u, v) = φ⁻¹(sin πu · sin πv · (a + u·b + v·c)), constant at e on the boundary of [0,1]²"""
    radius = group.chart.radius
    limit = amplitude if np.isinf(radius) else min(amplitude, 0.45 * radius)
    a, b, c = rng.normal(size=(3, group.dim))
    norm = np.linalg.norm(a) + np.linalg.norm(b) + np.linalg.norm(c)
    a, b, c = (limit / norm) * a, (limit / norm) * b, (limit / norm) * c

    def sigma(u, v):
        return group.point(np.sin(np.pi * u) * np.sin(np.pi * v) * (a + u * b + v * c), (u, v))

    return SimplexMap(sigma, arity=2, tag='user', domain='square')


def period_sphere(group: ChartedLieGroup, omega: LieAlgebraCocycle, sigma: SimplexMap,
                  quad_order: Optional[int] = None, boundary_tolerance: float = 1e-9,
                  boundary_samples: int = 17, settings: Optional[Settings] = None) -> np.ndarray:
    """∫_σ ω^l over a map [0,1]² → G that is constant at e on the boundary"""
    if sigma.arity != 2:
        raise InvalidInputError("A sphere is a map of the unit square")
    unit = group.unit()
    for r in np.linspace(0.0, 1.0, boundary_samples):
        for params in ((r, 0.0), (r, 1.0), (0.0, r), (1.0, r)):
            gap = group.distance(sigma(*params), unit)
            if gap > boundary_tolerance:
                raise InvalidInputError(f"σ is not constant at e on the boundary: distance {gap:.3g} at {params}")
    square = SimplexMap(sigma.fn, arity=2, tag=sigma.tag, domain='square')
    settings = settings or get_settings()
    return integrate_form(group, omega, square, quad_order or settings.quad_order, settings.tangent_step, settings)


# ---------------------------------------------------------------------------
# Derived brackets and the Lie III pipeline
# ---------------------------------------------------------------------------

def derive_bracket(objects_mult: Callable[[np.ndarray, np.ndarray], np.ndarray], dim: int,
                   fd_step: Optional[float] = None) -> LieAlgebra:
    """[x, y] = b(x, y) − b(y, x) for the second Taylor monomial b of a local product in chart coordinates"""
    step = fd_step or get_settings().fd_step
    basis = np.eye(dim)
    table = np.zeros((dim, dim, dim))
    for i in range(dim):
        for j in range(i + 1, dim):
            def f(t, s, i=i, j=j):
                return (np.asarray(objects_mult(t * basis[i], s * basis[j]), dtype=float)
                        - np.asarray(objects_mult(t * basis[j], s * basis[i]), dtype=float))
            table[:, i, j] = _mixed_difference(f, step)
            table[:, j, i] = -table[:, i, j]
    return LieAlgebra(table, name='derived')


def group_bracket(group: ChartedLieGroup, fd_step: Optional[float] = None) -> LieAlgebra:
    return derive_bracket(lambda x, y: group.chart_product(x, y), group.dim, fd_step)


def lie3_pipeline_heisenberg(settings: Optional[Settings] = None, scale: float = 1.0) -> Report:
    """Integrate the symplectic cocycle of 𝔤_ad = ℝ², build the objects 𝔷 × G_ad and recover the Heisenberg bracket"""
    settings = settings or get_settings()
    target = heisenberg_algebra(scale)
    omega = LieAlgebraCocycle.symplectic(scale)
    g_ad = AdditiveGroup(2)
    F = SmoothGeneralizedCocycle.from_settings(g_ad, omega, settings)

    def objects_mult(a, b):
        # coordinates (z, x₁, x₂)
        return np.concatenate([a[:1] + b[:1] + F(a[1:], b[1:]), a[1:] + b[1:]])

    order = [1, 2, 0]

    def derived(step):
        table = derive_bracket(objects_mult, 3, step).structure
        return table[np.ix_(order, order, order)]

    step = settings.fd_step
    table = derived(step)
    table_half = derived(step / 2.0)
    deviation = float(np.max(np.abs(table - target.structure)))
    deviation_half = float(np.max(np.abs(table_half - target.structure)))
    lf = derive_LF(F, [1.0, 0.0], [0.0, 1.0], step)
    lf_error = float(abs(lf[0] - scale))
    tolerance = 1e-4
    jacobi = LieAlgebra(table).jacobi_defect(rng=np.random.default_rng(settings.seed))

    findings = [
        Finding('pipeline.omega_cocycle', status=PASS if omega.skew_defect() == 0.0 else FAIL,
                value=omega.cocycle_defect(abelian_algebra(2))),
        Finding('pipeline.derived_lf', status=PASS if lf_error <= tolerance else FAIL, value=lf_error,
                tolerance=tolerance),
        Finding('pipeline.bracket_deviation', status=PASS if deviation <= tolerance else FAIL, value=deviation,
                tolerance=tolerance),
        Finding('pipeline.jacobi', status=PASS if jacobi <= tolerance else FAIL, value=jacobi, tolerance=tolerance),
        Finding('pipeline.halved_step', status=INFO,
                value={'deviation': deviation_half,
                       'ratio': deviation / deviation_half if deviation_half > 0 else None}),
    ]
    provenance = numeric_provenance(settings, tolerance_estimate=max(deviation, deviation_half),
                                    scale=scale, central_coordinate=float(table[2, 0, 1]))
    return Report.from_findings(findings, provenance)


# ---------------------------------------------------------------------------
# Sampled checks on charts, simplices and homomorphisms
# ---------------------------------------------------------------------------

def exp_naturality_check(hom: MatrixHomomorphism, samples: int = 20, seed: int = 0,
                         tolerance: float = 1e-10, settings: Optional[Settings] = None) -> Report:
    """α(exp_G(x)) = exp_G'(dα(e)·x) on random x"""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        x = hom.source.random_coordinates(rng, 0.5 * hom.source.log_radius)
        lhs = hom.apply(hom.source.exp(x))
        rhs = hom.target.exp(hom.differential(x))
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    findings = [Finding('exp.naturality', status=PASS if worst <= tolerance else FAIL, value=worst,
                        tolerance=tolerance)]
    return Report.from_findings(findings, numeric_provenance(settings or get_settings(), homomorphism=hom.name,
                                                             samples=samples, tolerance_estimate=worst))


def _sample_status(value: float, tolerance: float) -> str:
    return PASS if value <= tolerance else FAIL


def chart_product_check(group: ChartedLieGroup, samples: int = 10, seed: int = 0,
                        settings: Optional[Settings] = None) -> Report:
    """Chart round trip, group laws, tx * sx = (t+s)x and the second-order term of the chart product"""
    settings = settings or get_settings()
    rng = np.random.default_rng(seed)
    radius = 0.25 * group.chart.radius if np.isfinite(group.chart.radius) else 1.0
    round_trip = group_laws = one_parameter = 0.0
    for _ in range(samples):
        x = group.random_coordinates(rng, radius)
        g = group.point(x)
        round_trip = max(round_trip, float(np.max(np.abs(group.coordinates(g) - x))))
        group_laws = max(group_laws, group.distance(group.mult(g, group.unit()), g),
                         group.distance(group.mult(group.unit(), g), g),
                         group.distance(group.mult(g, group.inv(g)), group.unit()))
        t, s = rng.uniform(0.0, 1.0, size=2)
        one_parameter = max(one_parameter, float(np.max(np.abs(group.chart_product(t * x, s * x) - (t + s) * x))))

    derived = group_bracket(group, settings.fd_step)
    bracket_error = float(np.max(np.abs(derived.structure - group.algebra().structure)))

    x_diag = group.random_coordinates(rng, radius)

    def diagonal(t, s):
        return group.chart_product(t * x_diag, s * x_diag)

    quadratic = float(np.max(np.abs(_mixed_difference(diagonal, settings.fd_step))))
    strict, loose = 1e-10, 1e-4
    findings = [
        Finding('chart.round_trip', status=_sample_status(round_trip, strict), value=round_trip, tolerance=strict),
        Finding('group.laws', status=_sample_status(group_laws, strict), value=group_laws, tolerance=strict),
        Finding('chart.one_parameter', status=_sample_status(one_parameter, strict), value=one_parameter,
                tolerance=strict),
        Finding('chart.bracket', status=_sample_status(bracket_error, loose), value=bracket_error, tolerance=loose),
        Finding('chart.quadratic_diagonal', status=_sample_status(quadratic, loose), value=quadratic, tolerance=loose),
    ]
    return Report.from_findings(findings, numeric_provenance(settings, group=group.name,
                                                             tolerance_estimate=max(bracket_error, quadratic)))


def beta_diagonal_check(group: ChartedLieGroup, g, h=None, samples: int = 6) -> Report:
    """Degeneracies of β at the unit (enforced) and β_{g,g} against α_g(t+s) and α_g(t+2s) (reported)"""
    h = g if h is None else h
    unit = group.unit()
    alpha_g = alpha_simplex(group, g)
    alpha_h = alpha_simplex(group, h)
    gt = _inner_coordinates(group, g, 'g')
    beta_gg = beta_simplex(group, g, g)
    beta_eh = beta_simplex(group, unit, h)
    beta_ge = beta_simplex(group, g, unit)
    grid = [(t, s) for t in np.linspace(0.0, 1.0, samples) for s in np.linspace(0.0, 1.0, samples) if t + s <= 1.0]

    def worst(pairs):
        return max(group.distance(a, b) for a, b in pairs)

    left = worst((beta_eh(t, s), alpha_h(s)) for t, s in grid)
    right = worst((beta_ge(t, s), alpha_g(t + s)) for t, s in grid)
    plus_s = worst((beta_gg(t, s), alpha_g(t + s)) for t, s in grid)
    plus_2s = worst((beta_gg(t, s), group.point((t + 2.0 * s) * gt)) for t, s in grid)
    tolerance = 1e-10
    findings = [
        Finding('beta.degenerate_unit_first', status=_sample_status(left, tolerance), value=left, tolerance=tolerance),
        Finding('beta.degenerate_unit_second', status=_sample_status(right, tolerance), value=right,
                tolerance=tolerance),
        Finding('beta.diagonal_t_plus_s', status=INFO, value={'deviation': plus_s, 'holds': plus_s <= tolerance}),
        Finding('beta.diagonal_t_plus_2s', status=INFO, value={'deviation': plus_2s, 'holds': plus_2s <= tolerance}),
    ]
    return Report.from_findings(findings, {'group': group.name, 'grid_points': len(grid)})


def gamma_boundary_check(group: ChartedLieGroup, g, chart: Chart, samples: int = 9) -> Report:
    """Edges of γ_g: α_g at u = 0, α'_g at v = 0, constant g on u + v = 1"""
    gamma = gamma_simplex(group, g, chart)
    other = group.with_chart(chart)
    alpha = alpha_simplex(group, g)
    alpha_prime = alpha_simplex(other, g)
    rs = np.linspace(0.0, 1.0, samples)
    edge_alpha = max(group.distance(gamma(0.0, r), alpha(r)) for r in rs)
    edge_prime = max(group.distance(gamma(r, 0.0), alpha_prime(r)) for r in rs)
    hypotenuse = max(group.distance(gamma(r, 1.0 - r), g) for r in rs)
    tolerance = 1e-10
    holds = max(edge_alpha, edge_prime, hypotenuse) <= tolerance
    findings = [
        Finding('gamma.edge_alpha', status=_sample_status(edge_alpha, tolerance), value=edge_alpha,
                tolerance=tolerance),
        Finding('gamma.edge_alpha_prime', status=_sample_status(edge_prime, tolerance), value=edge_prime,
                tolerance=tolerance),
        Finding('gamma.edge_constant', status=_sample_status(hypotenuse, tolerance), value=hypotenuse,
                tolerance=tolerance),
        Finding('gamma.boundary_identity', status=INFO,
                value='alpha - alpha_prime (third edge degenerate)' if holds else 'neither'),
    ]
    return Report.from_findings(findings, {'group': group.name, 'chart': chart.name})


def richardson_check(group: ChartedLieGroup, omega: LieAlgebraCocycle, g, h,
                     settings: Optional[Settings] = None, tolerance: float = 1e-8) -> Report:
    """F_{ω,β}(g, h) at quadrature order n and 2n"""
    settings = settings or get_settings()
    n = settings.quad_order
    coarse = F_omega_beta(group, omega, g, h, n, settings.tangent_step)
    fine = F_omega_beta(group, omega, g, h, 2 * n, settings.tangent_step)
    change = float(np.max(np.abs(fine - coarse)))
    findings = [Finding('quadrature.convergence', status=_sample_status(change, tolerance),
                        value={'order_n': coarse, 'order_2n': fine, 'change': change}, tolerance=tolerance)]
    return Report.from_findings(findings, numeric_provenance(settings, tolerance_estimate=change))


def numeric_provenance(settings: Settings, **extra) -> Dict[str, object]:
    provenance = {'quad_order': settings.quad_order, 'fd_step': settings.fd_step,
                  'tangent_step': settings.tangent_step}
    provenance.update(extra)
    return provenance
