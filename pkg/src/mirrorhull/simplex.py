"""Unit-edge regular n-simplex in intrinsic coordinates.

The simplex lives in R^n with vertex 0 at the origin.  Coordinates come from
the ambient construction s_i = (e_i - e_0)/sqrt(2) in R^(n+1), mapped through a
fixed Helmert-type orthonormal basis of the subspace orthogonal to the all-ones
direction.  Every derived constant has a closed form which the test suite pins
against the coordinate computation at 1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

Vector = np.ndarray

# Predicate tolerance for geometric decisions (touching sets, upper facets,
# one-sided tests).  Closed-form identity checks use 1e-12 instead.
EPS_GEOM = 1e-9

MAX_DIM = 8


def helmert_basis(n: int) -> np.ndarray:
    """Rows k=1..n of the Helmert matrix: an orthonormal basis of {x : sum(x)=0}
    in R^(n+1).  Row k is (1,...,1,-k,0,...,0)/sqrt(k(k+1)) with k ones."""
    basis = np.zeros((n, n + 1))
    for k in range(1, n + 1):
        basis[k - 1, :k] = 1.0
        basis[k - 1, k] = -k
        basis[k - 1] /= math.sqrt(k * (k + 1))
    return basis


def s_norm(n: int) -> float:
    """|s| where s is the sum of the vertices seen from vertex 0."""
    return math.sqrt(n * (n + 1) / 2)


def centroid_norm(n: int) -> float:
    return math.sqrt(n / (2 * (n + 1)))


def height(n: int) -> float:
    """Distance from a vertex to the opposite facet's hyperplane."""
    return math.sqrt((n + 1) / (2 * n))


def s2k_norm(k: int) -> float:
    """|s_{2,k}|, the sum of k-1 non-apex vertices of an upper-facet chain."""
    return math.sqrt((k - 1) * k / 2)


def simplex_volume(n: int) -> float:
    """n-volume of the unit-edge regular n-simplex: sqrt(n+1)/(n! 2^(n/2))."""
    return math.sqrt(n + 1) / (math.factorial(n) * 2 ** (n / 2))


@dataclass(frozen=True)
class RegularSimplex:
    """Unit-edge regular n-simplex, vertex 0 at the origin.

    vertices:       (n+1, n) array, row i is vertex s_i
    centroid:       (n,) array
    facet_normals:  (n+1, n) array, row j is the outward unit normal of the
                    facet opposite vertex j
    s:              (n,) array, sum of the vertices
    """

    n: int
    vertices: np.ndarray
    centroid: np.ndarray
    facet_normals: np.ndarray
    s: np.ndarray


@dataclass(frozen=True)
class SimplexConstants:
    """Per-(n, k) scalars of the upper-facet analysis."""

    n: int
    k: int
    s2k_norm: float
    cos_beta: float
    sin_beta: float


def _geometric_facet_normals(vertices: np.ndarray) -> np.ndarray:
    """Outward unit normal of each facet, from the facet's difference vectors.

    The normal of the facet opposite vertex j spans the null space of the
    (n-1) x n matrix of differences among the remaining vertices; orientation
    is fixed by positive dot with (facet centroid - simplex centroid).
    """
    m, n = vertices.shape
    centroid = vertices.mean(axis=0)
    normals = np.zeros((m, n))
    for j in range(m):
        facet = np.delete(vertices, j, axis=0)
        diffs = facet[1:] - facet[0]
        # Null space via SVD: with full rank n-1 the last right-singular
        # vector is the unique direction orthogonal to the facet.
        _, sing, vt = np.linalg.svd(diffs)
        if sing[-1] < 1e-9:
            raise ValueError("degenerate facet: difference vectors are rank deficient")
        normal = vt[-1]
        if normal @ (facet.mean(axis=0) - centroid) < 0:
            normal = -normal
        normals[j] = normal / np.linalg.norm(normal)
    return normals


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def build_simplex(n: int) -> RegularSimplex:
    """Construct the unit-edge regular n-simplex, 1 <= n <= 8."""
    if not 1 <= n <= MAX_DIM:
        raise ValueError(f"dimension out of range: n={n}, need 1 <= n <= {MAX_DIM}")
    basis = helmert_basis(n)
    ambient = (np.eye(n + 1) - np.eye(n + 1)[0]) / math.sqrt(2)
    vertices = ambient @ basis.T
    if n == 1:
        normals = np.array([[-1.0], [1.0]])
    else:
        normals = _geometric_facet_normals(vertices)
    s = vertices.sum(axis=0)
    return RegularSimplex(
        n=n,
        vertices=_freeze(vertices),
        centroid=_freeze(vertices.mean(axis=0)),
        facet_normals=_freeze(normals),
        s=_freeze(s),
    )


def simplex_from_vertices(vertices: np.ndarray) -> RegularSimplex:
    """Wrap a congruent copy of the regular simplex given by explicit vertices.

    Accepts any (n+1, n) vertex array with unit pairwise distances; used for
    rotated or re-based copies whose coordinates come from elsewhere.
    """
    vertices = np.asarray(vertices, dtype=float)
    m, n = vertices.shape
    if m != n + 1:
        raise ValueError(f"need n+1 vertices in dimension n, got {m} in R^{n}")
    dists = np.linalg.norm(vertices[:, None, :] - vertices[None, :, :], axis=2)
    off = dists[~np.eye(m, dtype=bool)]
    if abs(off - 1.0).max() > 1e-9:
        raise ValueError("vertices are not a unit-edge regular simplex")
    vertices = vertices.copy()
    return RegularSimplex(
        n=n,
        vertices=_freeze(vertices),
        centroid=_freeze(vertices.mean(axis=0)),
        facet_normals=_freeze(_geometric_facet_normals(vertices)),
        s=_freeze(vertices.sum(axis=0)),
    )


def facet_normal(S: RegularSimplex, j: int) -> Vector:
    """Outward unit normal of the facet opposite vertex j; j=0 gives s/|s|."""
    if not 0 <= j <= S.n:
        raise ValueError(f"facet index out of range: j={j}, n={S.n}")
    return S.facet_normals[j]


def r_family_normal(S: RegularSimplex, r: int) -> Vector:
    """Inner normal of the supporting hyperplane through vertices s_0..s_r that
    is parallel to the affine hull of the remaining vertices.

    In ambient coordinates the normal is
    (-(n-r),...,-(n-r),(r+1),...,(r+1)) / sqrt((n-r)(r+1)(n+1))
    with r+1 leading entries; it satisfies <u, u_0> = sqrt((n-r)/(r+1))/sqrt(n).
    """
    n = S.n
    if not 0 <= r <= n - 1:
        raise ValueError(f"r out of range: r={r}, need 0 <= r <= {n - 1}")
    ambient = np.empty(n + 1)
    ambient[: r + 1] = -(n - r)
    ambient[r + 1 :] = r + 1
    ambient /= math.sqrt((n - r) * (r + 1) * (n + 1))
    return helmert_basis(n) @ ambient


def simplex_constants(n: int, k: int) -> SimplexConstants:
    """Scalars for the k-upper-facet configuration: |s_{2,k}| and the angle
    beta between s_{2,k} and u_0, cos beta = sqrt(1 - (n-k+1)/(nk))."""
    if n < 2 or not 2 <= k <= n:
        raise ValueError(f"need n >= 2 and 2 <= k <= n, got n={n}, k={k}")
    sin2 = (n - k + 1) / (n * k)
    return SimplexConstants(
        n=n,
        k=k,
        s2k_norm=s2k_norm(k),
        cos_beta=math.sqrt(1 - sin2),
        sin_beta=math.sqrt(sin2),
    )


def to_ambient(S: RegularSimplex, points: np.ndarray) -> np.ndarray:
    """Map intrinsic points back to the ambient zero-sum subspace of R^(n+1).

    Debugging aid: rows are coordinates in the hyperplane sum(x)=0, in which
    the vertices read (e_i - e_0)/sqrt(2).
    """
    return np.atleast_2d(points) @ helmert_basis(S.n)
