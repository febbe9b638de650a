"""Independent convex-hull volume oracle for small point sets in up to 8 dims.

Facets come from exhaustive enumeration of d-point subsets (no incremental
construction, hence no insertion-order degeneracies); coplanar candidates are
merged; the volume is assembled as sum of facet cones from an interior point.
Point count is capped (default 24, the contract limit) because the subset count
is C(m, d); callers that knowingly exceed it pass max_points explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .hyperplane import SupportHyperplane, project, reflect
from .simplex import EPS_GEOM, MAX_DIM, RegularSimplex

MAX_POINTS = 24

# Monte Carlo batch size; fixed so the sample stream is reproducible.
_MC_CHUNK = 1 << 17


@dataclass(frozen=True)
class Facet:
    normal: np.ndarray
    offset: float
    members: tuple[int, ...]
    measure: float


@dataclass(frozen=True)
class Polytope:
    dim: int
    points: np.ndarray
    facets: tuple[Facet, ...]
    volume: float
    degenerate: bool = False


def simplex_measure(vertices: np.ndarray) -> float:
    """k-measure of the simplex on k+1 points (any ambient dimension), via the
    Gram determinant of the edge vectors from vertex 0."""
    vertices = np.asarray(vertices, dtype=float)
    diffs = vertices[1:] - vertices[0]
    gram = diffs @ diffs.T
    det = np.linalg.det(gram)
    return math.sqrt(max(det, 0.0)) / math.factorial(len(diffs))


def _affine_rank(points: np.ndarray, tol: float = 1e-9) -> int:
    diffs = points - points[0]
    sing = np.linalg.svd(diffs, compute_uv=False)
    return int((sing > tol).sum())


def _group_rows(rows: np.ndarray, tol: float) -> list[np.ndarray]:
    """Partition row indices so that inside a group, the sorted values of every
    column have no gap larger than tol.  True duplicate facets have spread
    ~1e-12 per coordinate, far under the 1e-9 merge tolerance, so a group never
    splits; distinct facets differ by >> tol in some coordinate."""
    groups = [np.arange(len(rows))]
    for col in range(rows.shape[1]):
        refined = []
        for g in groups:
            order = np.argsort(rows[g, col], kind="stable")
            vals = rows[g[order], col]
            cut = 0
            for b in np.nonzero(np.diff(vals) > tol)[0]:
                refined.append(g[order[cut : b + 1]])
                cut = b + 1
            refined.append(g[order[cut:]])
        groups = refined
    return groups


def _tangent_basis(normal: np.ndarray) -> np.ndarray:
    """Orthonormal basis of the hyperplane orthogonal to normal, as columns.

    Householder reflection mapping the normal onto +-e_0: its remaining columns
    span the complement; much cheaper than an SVD in the recursion hot path.
    """
    v = normal.copy()
    v[0] += math.copysign(np.linalg.norm(normal), normal[0])
    house = np.eye(len(normal)) - (2.0 / (v @ v)) * np.outer(v, v)
    return house[:, 1:]


def _merge_candidates(normals: np.ndarray, offsets: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
    """Collapse the duplicate (normal, offset) rows of one facet.

    A facet with f members is found C(f, d) times with spread ~1e-12.  Stage 1
    collapses rows agreeing to 10 decimals (vectorized); stage 2 gap-splits the
    few cell means at tol, repairing clusters that straddle a rounding edge.
    """
    rows = np.hstack([normals, offsets[:, None]])
    cells, inverse = np.unique(np.round(rows, 10), axis=0, return_inverse=True)
    means = np.zeros_like(cells)
    np.add.at(means, inverse, rows)
    counts = np.bincount(inverse, minlength=len(cells)).astype(float)
    means /= counts[:, None]
    merged = []
    for group in _group_rows(means, tol):
        rep = means[group].mean(axis=0)
        merged.append(rep)
    out = np.array(merged)
    out_normals = out[:, :-1]
    out_normals /= np.linalg.norm(out_normals, axis=1)[:, None]
    return out_normals, out[:, -1]


def _measure_core(points: np.ndarray, labels: np.ndarray, cache: dict) -> float:
    """Volume of the hull of full-rank points; lean recursion for facet
    measures (no validation, no facet records).

    labels carries each row's index in the top-level point set; a face's
    intrinsic measure depends only on its vertex set, so caching by that set
    collapses the recursion from the flag tree to the face lattice.
    """
    m, d = points.shape
    if d == 1:
        return float(points[:, 0].max() - points[:, 0].min())
    normals, offsets = kernels.candidate_facets(points, EPS_GEOM)
    normals, offsets = _merge_candidates(normals, offsets, EPS_GEOM)
    interior = points.mean(axis=0)
    heights = points @ normals.T - offsets
    volume = 0.0
    for idx in range(len(normals)):
        members = np.nonzero(np.abs(heights[:, idx]) <= EPS_GEOM)[0]
        measure = _facet_measure(points[members], normals[idx], labels[members], cache)
        volume += measure * (offsets[idx] - float(normals[idx] @ interior))
    return volume / d


def _facet_measure(facet_points: np.ndarray, normal: np.ndarray, labels: np.ndarray, cache: dict) -> float:
    """(d-1)-measure of a facet, by isometric projection into d-1 coordinates."""
    key = frozenset(int(i) for i in labels)
    hit = cache.get(key)
    if hit is not None:
        return hit
    d = facet_points.shape[1]
    basis = _tangent_basis(normal)
    projected = (facet_points - facet_points[0]) @ basis
    if len(facet_points) == d:
        measure = simplex_measure(projected)
    else:
        measure = _measure_core(projected, labels, cache)
    cache[key] = measure
    return measure


def hull_volume(points: np.ndarray, dim: int | None = None, *, max_points: int = MAX_POINTS) -> Polytope:
    """Convex hull of the points with facet structure and exact dim-volume.

    Degenerate input (affine rank < dim) returns volume 0 with the degenerate
    flag set rather than raising, so probes at tangential directions are safe.
    """
    points = np.ascontiguousarray(points, dtype=float)
    m, d = points.shape
    if dim is not None and dim != d:
        raise ValueError(f"dim={dim} does not match point dimension {d}")
    if d > MAX_DIM:
        raise ValueError(f"dimension limit exceeded: {d} > {MAX_DIM}")
    if m > max_points:
        raise ValueError(f"point-count limit exceeded: {m} > {max_points}")
    if m < 2 or float(np.abs(points - points[0]).max()) < EPS_GEOM:
        raise ValueError("all points coincide")
    if d == 1:
        # Interval: two 0-measure-1 facets, no recursion (reflected hulls can
        # carry duplicate points, which would otherwise recurse into 0 dims).
        lo = float(points[:, 0].min())
        hi = float(points[:, 0].max())
        lo_normal = np.array([-1.0])
        hi_normal = np.array([1.0])
        lo_normal.setflags(write=False)
        hi_normal.setflags(write=False)
        facets_1d = (
            Facet(
                normal=lo_normal,
                offset=-lo,
                members=tuple(int(i) for i in np.nonzero(points[:, 0] <= lo + EPS_GEOM)[0]),
                measure=1.0,
            ),
            Facet(
                normal=hi_normal,
                offset=hi,
                members=tuple(int(i) for i in np.nonzero(points[:, 0] >= hi - EPS_GEOM)[0]),
                measure=1.0,
            ),
        )
        frozen = points.copy()
        frozen.setflags(write=False)
        return Polytope(dim=1, points=frozen, facets=facets_1d, volume=hi - lo)
    if _affine_rank(points) < d:
        flat = points.copy()
        flat.setflags(write=False)
        return Polytope(dim=d, points=flat, facets=(), volume=0.0, degenerate=True)

    normals, offsets = kernels.candidate_facets(points, EPS_GEOM)
    normals, offsets = _merge_candidates(normals, offsets, EPS_GEOM)
    facets = []
    interior = points.mean(axis=0)
    volume = 0.0
    cache: dict = {}
    all_labels = np.arange(m)
    for idx in range(len(normals)):
        normal = normals[idx]
        offset = float(offsets[idx])
        heights = points @ normal - offset
        members = tuple(int(i) for i in np.nonzero(np.abs(heights) <= EPS_GEOM)[0])
        measure = _facet_measure(points[list(members)], normal, all_labels[list(members)], cache)
        normal = normal.copy()
        normal.setflags(write=False)
        facets.append(Facet(normal=normal, offset=offset, members=members, measure=measure))
        volume += measure * (offset - float(normal @ interior))
    volume /= d
    frozen = points.copy()
    frozen.setflags(write=False)
    return Polytope(dim=d, points=frozen, facets=tuple(facets), volume=volume)


def monte_carlo_volume(P: Polytope, samples: int, seed: int) -> tuple[float, float]:
    """Rejection-sampling volume estimate and its binomial standard error.

    Deterministic for fixed (seed, samples): the bounding-box stream comes from
    np.random.default_rng(seed) in fixed-size batches.
    """
    if P.degenerate or not P.facets:
        raise ValueError("degenerate polytope")
    lo = P.points.min(axis=0)
    hi = P.points.max(axis=0)
    box_vol = float(np.prod(hi - lo))
    normals = np.array([f.normal for f in P.facets])
    offsets = np.array([f.offset for f in P.facets])
    rng = np.random.default_rng(seed)
    hits = 0
    remaining = samples
    while remaining > 0:
        batch = min(_MC_CHUNK, remaining)
        x = lo + rng.random((batch, P.dim)) * (hi - lo)
        hits += kernels.count_inside(x, normals, offsets, EPS_GEOM)
        remaining -= batch
    p_hat = hits / samples
    estimate = box_vol * p_hat
    stderr = box_vol * math.sqrt(p_hat * (1.0 - p_hat) / samples)
    return estimate, stderr


def hull_ratio(S: RegularSimplex, H: SupportHyperplane, objective: str = "reflection") -> float:
    """Vol(conv(S u S^H)) / Vol(S) by explicit hulls; objective="projection"
    uses the orthogonal shadow S'_H instead of the mirror image."""
    if objective == "reflection":
        partner = reflect(S.vertices, H)
    elif objective == "projection":
        partner = project(S.vertices, H)
    else:
        raise ValueError(f"unknown objective: {objective!r}")
    joint = hull_volume(np.vstack([S.vertices, partner]))
    base = hull_volume(np.asarray(S.vertices))
    return joint.volume / base.volume
