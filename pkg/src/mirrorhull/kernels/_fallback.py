"""Pure numpy kernels for the hull oracle.

Same contract as the compiled module: candidate_facets enumerates all
d-point subsets that span a hyperplane with every input point weakly on one
side; count_inside counts sample points satisfying all facet inequalities.
Normals use the generalized cross product (cofactor expansion over minors of
the row-normalized difference matrix), batched over subsets and chunked to
bound memory.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

# Subsets processed per batch; caps the minor stack at a few MB.
_CHUNK = 32768

# Row-normalized difference vectors whose cross product is shorter than this
# are treated as affinely dependent.
_DEGENERATE = 1e-9


def _cross_normals(diffs: np.ndarray) -> np.ndarray:
    """Generalized cross product of each (d-1, d) block in a (m, d-1, d) stack.

    Component i of the result is (-1)^i det(block with column i removed).
    """
    m, dm1, d = diffs.shape
    normals = np.empty((m, d))
    cols = np.arange(d)
    for i in range(d):
        minor = diffs[:, :, cols != i]
        normals[:, i] = np.linalg.det(minor) * (1.0 if i % 2 == 0 else -1.0)
    return normals


def candidate_facets(points: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
    """All one-sided hyperplanes through d-point subsets of the input.

    Returns (normals, offsets) with outward orientation: every input point p
    satisfies <normal, p> <= offset + tol.  Duplicates from coplanar point
    groups are kept; the caller merges them.
    """
    points = np.ascontiguousarray(points, dtype=float)
    m, d = points.shape
    if d == 1:
        normals = np.array([[1.0], [-1.0]])
        offsets = np.array([points[:, 0].max(), -points[:, 0].min()])
        return normals, offsets
    subsets = np.array(list(combinations(range(m), d)), dtype=np.intp)
    kept_normals = []
    kept_offsets = []
    for lo in range(0, len(subsets), _CHUNK):
        chunk = subsets[lo : lo + _CHUNK]
        pts = points[chunk]  # (c, d, d)
        diffs = pts[:, 1:, :] - pts[:, :1, :]
        norms = np.linalg.norm(diffs, axis=2, keepdims=True)
        ok = norms[:, :, 0].min(axis=1) > _DEGENERATE
        diffs = np.where(norms > _DEGENERATE, diffs / np.maximum(norms, 1e-300), 0.0)
        normals = _cross_normals(diffs)
        lengths = np.linalg.norm(normals, axis=1)
        ok &= lengths > _DEGENERATE
        if not ok.any():
            continue
        normals = normals[ok] / lengths[ok, None]
        base = pts[ok, 0, :]
        offsets = np.einsum("ij,ij->i", normals, base)
        heights = points @ normals.T - offsets  # (m, kept)
        above = heights.max(axis=0)
        below = heights.min(axis=0)
        one_sided_up = above <= tol
        one_sided_down = below >= -tol
        for sel, sign in ((one_sided_up, 1.0), (one_sided_down & ~one_sided_up, -1.0)):
            if sel.any():
                kept_normals.append(sign * normals[sel])
                kept_offsets.append(sign * offsets[sel])
    if not kept_normals:
        return np.empty((0, d)), np.empty(0)
    return np.concatenate(kept_normals), np.concatenate(kept_offsets)


def count_inside(
    samples: np.ndarray, normals: np.ndarray, offsets: np.ndarray, tol: float
) -> int:
    """Number of sample rows inside the intersection of the half-spaces."""
    heights = samples @ normals.T - offsets
    return int((heights <= tol).all(axis=1).sum())
