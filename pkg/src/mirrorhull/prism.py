"""Closed-form volume ratio Vol(conv(S, S^H)) / Vol(S).

The hull of the simplex and its mirror image decomposes into slanted prisms
over the orthogonal projections of the upper facets, giving

    ratio = 2n * sum_{upper j} <n_j, u> <u, s - s_j> / D,     D = sqrt(n(n+1)/2)

with coordinates re-based at a touching vertex (s is then the sum of the other
n vertices).  The term for the facet opposite the touching vertex reduces to
<u_0, u>^2.  The hull oracle validates the formula on random directions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hyperplane import SupportHyperplane, upper_facets
from .simplex import EPS_GEOM, RegularSimplex


@dataclass(frozen=True)
class RatioReport:
    """ratio = 2n * sum of contributions; x = <u_0, u> for the re-based apex."""

    ratio: float
    k: int
    contributions: tuple[tuple[int, float], ...]
    x: float
    s_dots: tuple[float, ...]


def ratio_formula(S: RegularSimplex, H: SupportHyperplane) -> RatioReport:
    """Evaluate the prism-sum ratio for a supporting hyperplane of S."""
    if not H.touching:
        raise ValueError("empty touching set")
    n = S.n
    base = min(H.touching)
    rel = S.vertices - S.vertices[base]
    s_rel = rel.sum(axis=0)
    ufs = upper_facets(S, H)  # raises if H does not support S
    d_norm = math.sqrt(n * (n + 1) / 2)
    contributions = []
    s_dots = []
    total = 0.0
    for j, normal in zip(ufs.indices, ufs.normals):
        term = float(normal @ H.u) * float(H.u @ (s_rel - rel[j])) / d_norm
        contributions.append((j, term))
        s_dots.append(float(rel[j] @ H.u))
        total += term
    return RatioReport(
        ratio=2 * n * total,
        k=len(ufs.indices),
        contributions=tuple(contributions),
        x=float(S.facet_normals[base] @ H.u),
        s_dots=tuple(s_dots),
    )


def ratio_batch(S: RegularSimplex, directions: np.ndarray) -> np.ndarray:
    """Ratio for each unit row of directions at once (the optimizer's hot path).

    Vectorized restatement of ratio_formula: with t the lowest touching vertex,
    <u, s_rel - rel_j> = <u, s> - n*offset - <u, s_j>, so no per-row re-basing
    is needed.
    """
    n = S.n
    dots = directions @ S.vertices.T  # (R, n+1)
    offsets = dots.min(axis=1)
    ndots = directions @ S.facet_normals.T
    sdot = dots.sum(axis=1)
    factors = sdot[:, None] - n * offsets[:, None] - dots
    terms = np.where(ndots > EPS_GEOM, ndots * factors, 0.0)
    d_norm = math.sqrt(n * (n + 1) / 2)
    return 2 * n * terms.sum(axis=1) / d_norm


def f_value(n: int, k: int, x: float, s_dots) -> float:
    """The bracketed expression whose 2n-multiple is the ratio:

    f = (2/n) sum d_l^2 - sqrt(2/(n(n+1))) (n+2) x sum d_l + k x^2

    where the d_l are the k-1 non-apex upper-vertex heights <s_{i_l}, u> and
    x = <u_0, u>.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    s_dots = tuple(float(d) for d in s_dots)
    if len(s_dots) != k - 1:
        raise ValueError(f"need {k - 1} vertex heights, got {len(s_dots)}")
    if not 1 / n - EPS_GEOM <= x <= 1 + EPS_GEOM:
        raise ValueError(f"x={x} outside [1/{n}, 1]")
    sq = sum(d * d for d in s_dots)
    lin = sum(s_dots)
    return (2 / n) * sq - math.sqrt(2 / (n * (n + 1))) * (n + 2) * x * lin + k * x * x
