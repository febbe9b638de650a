"""Closed-form case analysis of the ratio maximization, and the explicit
optimal 5-dimensional body.

For k upper facets the ratio bound reduces to x[Ax + sqrt(B) sqrt(1-x^2)] with
    A = 1 - (k-1)(n+2)/(n(n+1)),   B = ((n+2)/n)^2 (k-1)(n-k+1)/(n+1),
whose quartic (A^2+B)x^4 - (2A+B)x^2 + 1 has real roots exactly when
4 <= (n-k+1)(n+2)/n.  The surviving cases are closed by the bounding functions
g4, h5, g5 below; the 5-dimensional optimum is realized by an explicit rotated
frame whose eleven-vertex hull this module reconstructs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_INV_PHI = (math.sqrt(5) - 1) / 2  # 1/phi
_INV_PHI2 = (3 - math.sqrt(5)) / 2  # 1/phi^2


@dataclass(frozen=True)
class CaseRecord:
    n: int
    k: int
    A: float
    B: float
    real_roots: tuple[float, float] | None  # (x1^2, x2^2), larger first
    feasible: bool


def case_record(n: int, k: int) -> CaseRecord:
    """Coefficients, feasibility, and quartic roots for the (n, k) case."""
    if n < 2 or not 2 <= k <= n:
        raise ValueError(f"need n >= 2 and 2 <= k <= n, got n={n}, k={k}")
    A = 1 - (k - 1) * (n + 2) / (n * (n + 1))
    B = ((n + 2) / n) ** 2 * (k - 1) * (n - k + 1) / (n + 1)
    # Integer form of 4 <= (n-k+1)(n+2)/n, exact at the boundary.
    feasible = 4 * n <= (n - k + 1) * (n + 2)
    roots = None
    if feasible:
        disc = B * (4 * A + B - 4)
        # Boundary cases, e.g. (6,4), evaluate to ~-4e-16 in floats.
        disc = max(disc, 0.0)
        half_span = math.sqrt(disc)
        denom = 2 * (A * A + B)
        roots = ((2 * A + B + half_span) / denom, (2 * A + B - half_span) / denom)
    return CaseRecord(n=n, k=k, A=A, B=B, real_roots=roots, feasible=feasible)


def f_upper_bound(n: int, k: int, x: float) -> float:
    """x(Ax + sqrt(B) sqrt(1-x^2)); values >= 1 only between the quartic roots."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x={x} outside [0, 1]")
    rec = case_record(n, k)
    return x * (rec.A * x + math.sqrt(rec.B) * math.sqrt(1.0 - x * x))


def golden_section_max(fn, lo: float, hi: float, tol: float = 1e-10) -> tuple[float, float]:
    """Golden-section maximizer for a unimodal function on [lo, hi]."""
    a, b = lo, hi
    h = b - a
    c = a + _INV_PHI2 * h
    d = a + _INV_PHI * h
    fc, fd = fn(c), fn(d)
    while h > tol:
        h *= _INV_PHI
        if fc > fd:
            b, d, fd = d, c, fc
            c = a + _INV_PHI2 * h
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * h
            fd = fn(d)
    x = (a + b) / 2
    return x, fn(x)


def _maximize_on(fn, lo: float, hi: float, tol: float = 1e-10) -> tuple[float, float]:
    """Maximize on [lo, hi]: golden-section when an empirical concavity check
    passes (second differences <= 0 on a grid), else dense grid plus a local
    golden polish around the best bracket."""
    grid = np.linspace(lo, hi, 401)
    vals = np.array([fn(t) for t in grid])
    if (np.diff(vals, 2) <= 1e-12).all():
        return golden_section_max(fn, lo, hi, tol)
    dense = np.linspace(lo, hi, 20001)
    best = int(np.argmax([fn(t) for t in dense]))
    return golden_section_max(fn, dense[max(best - 1, 0)], dense[min(best + 1, len(dense) - 1)], tol)


def g4(x: float) -> float:
    """Bounding function of the (n=4, k=2) case."""
    coeff = math.sqrt(27 / 20) - math.sqrt(15 / 64)
    return (5 / 8) * x * x + coeff * x * math.sqrt(1.0 - x * x) + 3 / 16


def maximize_g4() -> tuple[float, float]:
    """Maximum of g4 over [1/2, sqrt(20/23)], which contains the feasibility
    interval [sqrt(5/8), sqrt(20/23)]; the maximizer is interior to both."""
    return _maximize_on(g4, 0.5, math.sqrt(20 / 23))


def h5(x: float) -> float:
    """Bounding function of the (n=5, k=3) endpoint analysis."""
    return -(29 / 50) * x * x + (11 / 25) * x * math.sqrt(1.0 - x * x) + 6 / 25


def maximize_h5() -> tuple[float, float]:
    return _maximize_on(h5, 0.0, 1.0)


def g5(phi: float) -> float:
    """Bounding function of the (n=5, k=2) case, in the rotation angle."""
    c, s = math.cos(phi), math.sin(phi)
    return (3 / 5) * c * c + (math.sqrt(6) / 3) * s * c + 1 / 5


def maximize_g5() -> tuple[float, float]:
    return _maximize_on(g5, 0.0, math.pi / 2)


def phi_max_exact() -> float:
    """Stationary angle of g5: cos^2 = (1 + sqrt(27/77))/2."""
    return math.acos(math.sqrt((1 + math.sqrt(27 / 77)) / 2))


def g5_max_exact() -> float:
    """g5 at the stationary angle: 1/2 + sqrt(77)/(10 sqrt(3))."""
    return 0.5 + math.sqrt(77) / (10 * math.sqrt(3))


# Angle with sin = sqrt(2/5), cos = sqrt(3/5); x = sin(phi + _PSI) links the
# endpoint variable x to the rotation angle phi.
_PSI = math.atan(math.sqrt(2 / 3))


def substitution_bridge(x: float) -> float:
    """Endpoint bound of the (n=5, k=2) case at x = <u_0, u>, checked against
    its g5 form under x = sqrt(3/5) sin(phi) + sqrt(2/5) cos(phi)."""
    if not math.sqrt(2 / 5) - 1e-12 <= x <= 1 + 1e-12:
        raise ValueError(f"x={x} outside the substitution range [sqrt(2/5), 1]")
    x = min(x, 1.0)
    endpoint = (17 / 25) * x * x + (23 * math.sqrt(6) / 75) * x * math.sqrt(1.0 - x * x) + 4 / 25
    phi = math.asin(x) - _PSI
    assert abs(endpoint - g5(phi)) <= 1e-10, "substitution identity violated"
    return endpoint


# Recorded reference constants, kept verbatim for cross-checking.  The (5,3)
# B and root entries do not satisfy the defining relations above (the B formula
# gives 49/25, and the recorded root pair solves the quartic under neither B);
# check_recorded_constants flags such entries instead of correcting them.
RECORDED_CASE_CONSTANTS = {
    (4, 2): {"A": 7 / 10, "B": 27 / 20, "roots": (20 / 23, 5 / 8)},
    (5, 2): {"A": 23 / 30, "B": 98 / 75},
    (5, 3): {
        "A": 8 / 15,
        "B": 196 / 75,
        "roots": (9 * (23 + 7 * math.sqrt(2)) / 326, 9 * (23 - 7 * math.sqrt(2)) / 326),
    },
}


@dataclass(frozen=True)
class ConstantCheck:
    n: int
    k: int
    name: str
    recorded: float
    computed: float
    deviation: float
    agrees: bool


def check_recorded_constants(tol: float = 1e-12) -> tuple[ConstantCheck, ...]:
    """Compare every recorded constant against the formula-computed value."""
    checks = []
    for (n, k), entry in sorted(RECORDED_CASE_CONSTANTS.items()):
        rec = case_record(n, k)
        pairs = [("A", entry["A"], rec.A), ("B", entry["B"], rec.B)]
        if "roots" in entry:
            pairs.append(("x1^2", entry["roots"][0], rec.real_roots[0]))
            pairs.append(("x2^2", entry["roots"][1], rec.real_roots[1]))
        for name, recorded, computed in pairs:
            dev = abs(recorded - computed)
            checks.append(
                ConstantCheck(
                    n=n, k=k, name=name, recorded=recorded, computed=computed,
                    deviation=dev, agrees=dev <= tol,
                )
            )
    return tuple(checks)


def _rotation_5d(phi: float) -> np.ndarray:
    """Rotation of the frame in the plane of coordinates 5 and 6."""
    rot = np.eye(6)
    c, s = math.cos(phi), math.sin(phi)
    rot[4, 4] = c
    rot[4, 5] = -s
    rot[5, 4] = s
    rot[5, 5] = c
    return rot


# Frame coordinates of the facet normals through the touching vertex before
# rotation: u_0 spans (sqrt(15)/5, sqrt(10)/5) and the second upper-facet
# normal (-sqrt(15)/5, sqrt(10)/5) in the rotation plane.
_U0_BASE = np.array([0, 0, 0, 0, math.sqrt(15) / 5, math.sqrt(10) / 5])
_U1_BASE = np.array([0, 0, 0, 0, -math.sqrt(15) / 5, math.sqrt(10) / 5])


@dataclass(frozen=True)
class Construction5D:
    """The optimal 5-dimensional configuration, in an adapted orthonormal frame.

    The frame's last axis is the support normal (the hyperplane is "last
    coordinate = 0"); the first axis is the ambient all-ones direction, along
    which every vertex has coordinate 0, so reduced 5-dim coordinates drop it.
    Rotation by phi in the (5,6)-coordinate plane sweeps the family that starts
    with an edge in the hyperplane; at phi_max the hull of the simplex and its
    mirror image attains the maximal volume, with the eleven vertices below.
    """

    a: float  # 1 + sqrt(27/77)
    b: float  # 1 - sqrt(27/77)
    phi_max: float
    basis_matrix: np.ndarray  # (6,6) orthogonal; columns are the frame axes
    base_vertices: np.ndarray  # (6,6) frame coords of s_0..s_5 at phi = 0
    optimal_vertices: np.ndarray  # (11,5) reduced coords of the optimal hull
    normals: tuple[np.ndarray, np.ndarray]  # u_0(phi_max), u_1(phi_max), frame coords

    def vertices(self, phi: float) -> np.ndarray:
        """Frame coordinates of s_0..s_5 rotated by phi."""
        return self.base_vertices @ _rotation_5d(phi).T

    def reduced_vertices(self, phi: float) -> np.ndarray:
        return self.vertices(phi)[:, 1:]

    def u0(self, phi: float) -> np.ndarray:
        return _rotation_5d(phi) @ _U0_BASE

    def u1(self, phi: float) -> np.ndarray:
        return _rotation_5d(phi) @ _U1_BASE

    @property
    def support_direction(self) -> np.ndarray:
        return np.eye(6)[5]


def build_construction_5d() -> Construction5D:
    """Reconstruct the optimal 5-dimensional body from its defining frame."""
    r6 = 1 / math.sqrt(6)
    r2 = 1 / math.sqrt(2)
    r3 = 1 / math.sqrt(3)
    q = 1 / (2 * math.sqrt(3))
    basis = np.array(
        [
            [r6, 0.0, 0.0, 0.0, -r2, -r3],
            [r6, 0.0, 0.0, 0.0, r2, -r3],
            [r6, -r2, 0.0, 0.5, 0.0, q],
            [r6, 0.0, -r2, -0.5, 0.0, q],
            [r6, 0.0, r2, -0.5, 0.0, q],
            [r6, r2, 0.0, 0.5, 0.0, q],
        ]
    )
    # Row i of the basis matrix holds the frame coordinates of the i-th ambient
    # unit vector; the vertices are (e_i - e_0)/sqrt(2).
    base_vertices = (basis - basis[0]) / math.sqrt(2)

    root = math.sqrt(27 / 77)
    a, b = 1 + root, 1 - root
    phi_max = phi_max_exact()

    rotated = base_vertices @ _rotation_5d(phi_max).T
    mirrored = rotated * np.array([1, 1, 1, 1, 1, -1])
    stack = [rotated[0]]
    for i in range(1, 6):
        stack.append(rotated[i])
        stack.append(mirrored[i])
    frame_optimal = np.array(stack)
    assert np.abs(frame_optimal[:, 0]).max() < 1e-12, "frame drops its first axis"

    u0_max = np.array(
        [0, 0, 0, 0, math.sqrt(3 * a / 10) - math.sqrt(2 * b / 10),
         math.sqrt(2 * a / 10) + math.sqrt(3 * b / 10)]
    )
    u1_max = np.array(
        [0, 0, 0, 0, -math.sqrt(3 * a / 10) - math.sqrt(2 * b / 10),
         math.sqrt(2 * a / 10) - math.sqrt(3 * b / 10)]
    )

    for arr in (basis, base_vertices, u0_max, u1_max):
        arr.setflags(write=False)
    optimal = frame_optimal[:, 1:].copy()
    optimal.setflags(write=False)
    return Construction5D(
        a=a,
        b=b,
        phi_max=phi_max,
        basis_matrix=basis,
        base_vertices=base_vertices,
        optimal_vertices=optimal,
        normals=(u0_max, u1_max),
    )


@dataclass(frozen=True)
class Decomposition5D:
    """Exact pieces of the optimal body: two pyramids over a common prism base
    plus one simplex sliver, summing to the full volume."""

    prism_base_vol4: float
    pyramids_vol: float
    simplex_part_vol: float
    total: float


def decomposition_5d() -> Decomposition5D:
    root = math.sqrt(27 / 77)
    a, b = 1 + root, 1 - root
    return Decomposition5D(
        prism_base_vol4=(math.sqrt(3 * a / 32) + math.sqrt(b / 16)) / 3,
        pyramids_vol=(math.sqrt(3) + 19 / math.sqrt(77)) / 120,
        simplex_part_vol=(math.sqrt(3) + 1 / math.sqrt(77)) / 480,
        total=(5 * math.sqrt(3) + math.sqrt(77)) / 480,
    )
