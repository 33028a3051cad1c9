"""
Gauss rules on the interval, the unit square and the triangle {t, s ≥ 0, t + s ≤ 1}
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss

from errors import InvalidInputError, NumericalError


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes (k, dim) and weights (k,) on a reference domain"""
    points: np.ndarray
    weights: np.ndarray
    order: int
    domain: str

    def integrate(self, fn: Callable[..., np.ndarray]) -> np.ndarray:
        """Σ w_i fn(*p_i), summed in node order"""
        values = [np.atleast_1d(np.asarray(fn(*p), dtype=float)) for p in self.points]
        stacked = np.stack(values)
        if not np.all(np.isfinite(stacked)):
            bad = int(np.flatnonzero(~np.all(np.isfinite(stacked.reshape(len(values), -1)), axis=1))[0])
            raise NumericalError(f"Non-finite integrand at node {tuple(self.points[bad])} on the {self.domain}")
        return np.tensordot(self.weights, stacked, axes=1)


def _check_order(order: int):
    if order < 1:
        raise InvalidInputError(f"Quadrature order must be >= 1, got {order}")


@lru_cache(maxsize=None)
def gauss_legendre_01(order: int):
    """Gauss-Legendre nodes and weights mapped to [0, 1]"""
    _check_order(order)
    x, w = leggauss(order)
    return (x + 1.0) / 2.0, w / 2.0


@lru_cache(maxsize=None)
def line_rule(order: int) -> QuadratureRule:
    x, w = gauss_legendre_01(order)
    return QuadratureRule(points=x[:, None], weights=w, order=order, domain='interval')


@lru_cache(maxsize=None)
def square_rule(order: int) -> QuadratureRule:
    x, w = gauss_legendre_01(order)
    u, v = np.meshgrid(x, x, indexing='ij')
    wu, wv = np.meshgrid(w, w, indexing='ij')
    points = np.stack([u.ravel(), v.ravel()], axis=1)
    return QuadratureRule(points=points, weights=(wu * wv).ravel(), order=order, domain='square')


@lru_cache(maxsize=None)
def triangle_rule(order: int) -> QuadratureRule:
    """Collapsed-square rule: t = u, s = (1 − u)v with Jacobian 1 − u"""
    x, w = gauss_legendre_01(order)
    u, v = np.meshgrid(x, x, indexing='ij')
    wu, wv = np.meshgrid(w, w, indexing='ij')
    t = u.ravel()
    s = ((1.0 - u) * v).ravel()
    weights = (wu * wv * (1.0 - u)).ravel()
    return QuadratureRule(points=np.stack([t, s], axis=1), weights=weights, order=order, domain='triangle')


def rule_for(domain: str, order: int) -> QuadratureRule:
    rules = {'interval': line_rule, 'square': square_rule, 'triangle': triangle_rule}
    if domain not in rules:
        raise InvalidInputError(f"Unknown quadrature domain: {domain}")
    return rules[domain](order)
