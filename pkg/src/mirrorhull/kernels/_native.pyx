# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hull oracle.

Mirrors the numpy fallback: candidate_facets enumerates d-point subsets whose
hyperplane has every input point weakly on one side, with normals from the
cofactor expansion (minor determinants via Gaussian elimination with partial
pivoting, matching the fallback's LU-based determinants); count_inside counts
points satisfying all facet inequalities with an early exit per row.
"""

from libc.math cimport fabs, sqrt

import numpy as np

cimport numpy as cnp

cnp.import_array()

DEF MAXD = 9

cdef double DEGENERATE = 1e-9


cdef double _det(double[:, ::1] a, int k) noexcept nogil:
    # In-place Gaussian elimination with partial pivoting on the leading k x k
    # block; a is scratch and is destroyed.
    cdef int i, j, p, piv
    cdef double best, tmp, factor, det = 1.0
    for j in range(k):
        piv = j
        best = fabs(a[j, j])
        for i in range(j + 1, k):
            if fabs(a[i, j]) > best:
                best = fabs(a[i, j])
                piv = i
        if best == 0.0:
            return 0.0
        if piv != j:
            for p in range(k):
                tmp = a[j, p]
                a[j, p] = a[piv, p]
                a[piv, p] = tmp
            det = -det
        det *= a[j, j]
        for i in range(j + 1, k):
            factor = a[i, j] / a[j, j]
            for p in range(j, k):
                a[i, p] -= factor * a[j, p]
    return det


def candidate_facets(points, double tol):
    """All one-sided hyperplanes through d-point subsets; see the fallback."""
    cdef const double[:, ::1] pts = np.ascontiguousarray(points, dtype=np.float64)
    cdef int m = pts.shape[0]
    cdef int d = pts.shape[1]
    if d == 1:
        lo = min(points[i, 0] for i in range(m))
        hi = max(points[i, 0] for i in range(m))
        return np.array([[1.0], [-1.0]]), np.array([hi, -lo])
    if d > MAXD:
        raise ValueError("dimension too large for the compiled kernel")

    cdef double[:, ::1] diffs = np.empty((d - 1, d))
    cdef double[:, ::1] minor = np.empty((d - 1, d - 1))
    cdef double[::1] normal = np.empty(d)
    cdef int[::1] c = np.empty(d, dtype=np.intc)
    cdef int i, j, p, q, col, sign
    cdef double length, offset, h, hi_side, lo_side
    cdef bint degenerate, flip

    out_normals = []
    out_offsets = []

    for i in range(d):
        c[i] = i
    while True:
        # Hyperplane through points c[0..d-1]: normalized difference rows,
        # cofactor normal, one-sided test with early exit.
        degenerate = False
        for i in range(d - 1):
            length = 0.0
            for j in range(d):
                diffs[i, j] = pts[c[i + 1], j] - pts[c[0], j]
                length += diffs[i, j] * diffs[i, j]
            length = sqrt(length)
            if length <= DEGENERATE:
                degenerate = True
                break
            for j in range(d):
                diffs[i, j] /= length
        if not degenerate:
            length = 0.0
            sign = 1
            for col in range(d):
                for p in range(d - 1):
                    q = 0
                    for j in range(d):
                        if j != col:
                            minor[p, q] = diffs[p, j]
                            q += 1
                normal[col] = sign * _det(minor, d - 1)
                sign = -sign
                length += normal[col] * normal[col]
            length = sqrt(length)
            if length > DEGENERATE:
                offset = 0.0
                for j in range(d):
                    normal[j] /= length
                    offset += normal[j] * pts[c[0], j]
                hi_side = 0.0
                lo_side = 0.0
                for i in range(m):
                    h = -offset
                    for j in range(d):
                        h += normal[j] * pts[i, j]
                    if h > hi_side:
                        hi_side = h
                    elif h < lo_side:
                        lo_side = h
                    if hi_side > tol and lo_side < -tol:
                        break
                flip = False
                if hi_side <= tol:
                    pass
                elif lo_side >= -tol:
                    flip = True
                else:
                    hi_side = 1.0  # marker: discard
                if hi_side <= tol or flip:
                    if flip:
                        out_normals.append([-normal[j] for j in range(d)])
                        out_offsets.append(-offset)
                    else:
                        out_normals.append([normal[j] for j in range(d)])
                        out_offsets.append(offset)
        # Odometer step to the next d-subset of {0..m-1}.
        i = d - 1
        while i >= 0 and c[i] == m - d + i:
            i -= 1
        if i < 0:
            break
        c[i] += 1
        for j in range(i + 1, d):
            c[j] = c[j - 1] + 1

    if not out_normals:
        return np.empty((0, d)), np.empty(0)
    return np.array(out_normals), np.array(out_offsets)


def count_inside(samples, normals, offsets, double tol):
    """Rows of samples inside all half-spaces <normal, x> <= offset + tol."""
    cdef const double[:, ::1] x = np.ascontiguousarray(samples, dtype=np.float64)
    cdef const double[:, ::1] a = np.ascontiguousarray(normals, dtype=np.float64)
    cdef const double[::1] b = np.ascontiguousarray(offsets, dtype=np.float64)
    cdef int n = x.shape[0]
    cdef int d = x.shape[1]
    cdef int f = a.shape[0]
    cdef int i, j, k, hits = 0
    cdef double h
    cdef bint inside
    with nogil:
        for i in range(n):
            inside = True
            for j in range(f):
                h = -b[j] - tol
                for k in range(d):
                    h += a[j, k] * x[i, k]
                if h > 0.0:
                    inside = False
                    break
            if inside:
                hits += 1
    return hits
