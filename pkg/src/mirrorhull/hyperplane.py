"""Supporting hyperplanes: construction, reflection, projection, upper facets."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .simplex import EPS_GEOM, RegularSimplex, Vector


@dataclass(frozen=True)
class SupportHyperplane:
    """Hyperplane {x : <u, x> = offset} supporting the simplex from below.

    u is the unit inner normal (pointing into the half-space containing the
    simplex), offset the minimum of <u, s_i> over vertices, touching the set of
    vertex indices attaining that minimum within EPS_GEOM.
    """

    u: np.ndarray
    offset: float
    touching: frozenset[int]


@dataclass(frozen=True)
class UpperFacetSet:
    indices: tuple[int, ...]
    normals: np.ndarray  # (k, n), outward unit normals matching indices


def support_from_direction(S: RegularSimplex, u: Vector) -> SupportHyperplane:
    """Supporting hyperplane of S with inner normal direction u (normalized)."""
    u = np.asarray(u, dtype=float)
    norm = np.linalg.norm(u)
    if norm < EPS_GEOM:
        raise ValueError("zero direction vector")
    u = u / norm
    dots = S.vertices @ u
    offset = float(dots.min())
    touching = frozenset(int(i) for i in np.nonzero(dots <= offset + EPS_GEOM)[0])
    u = u.copy()
    u.setflags(write=False)
    return SupportHyperplane(u=u, offset=offset, touching=touching)


def reflect(points: np.ndarray, H: SupportHyperplane) -> np.ndarray:
    """Mirror image of each point in H: p - 2(<u,p> - offset) u."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    heights = points @ H.u - H.offset
    return points - 2.0 * heights[:, None] * H.u


def project(points: np.ndarray, H: SupportHyperplane) -> np.ndarray:
    """Orthogonal projection of each point onto H."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    heights = points @ H.u - H.offset
    return points - heights[:, None] * H.u


def upper_facets(S: RegularSimplex, H: SupportHyperplane) -> UpperFacetSet:
    """Facets of S whose outward normal has positive dot with the inner normal.

    These are the facets first hit by rays travelling orthogonally toward H.
    Raises if H does not actually support S.
    """
    dots = S.vertices @ H.u
    if dots.min() < H.offset - EPS_GEOM:
        raise ValueError("hyperplane does not support the simplex")
    ndots = S.facet_normals @ H.u
    indices = tuple(int(j) for j in np.nonzero(ndots > EPS_GEOM)[0])
    if not indices:
        raise ValueError("no upper facet; direction is not supporting")
    # Vertex-sum criterion: <s - (n+1) s_j, u> >= 0 for each upper facet, a
    # translation-invariant restatement of the normal test.
    for j in indices:
        crit = (S.s - (S.n + 1) * S.vertices[j]) @ H.u
        assert crit >= -EPS_GEOM, f"vertex criterion violated at facet {j}: {crit}"
    return UpperFacetSet(indices=indices, normals=S.facet_normals[list(indices)])
