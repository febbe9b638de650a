"""Closed-form ratio: face-direction values, aligned-face family, oracle agreement."""

import math

import numpy as np
import pytest

from mirrorhull.hull import hull_ratio
from mirrorhull.hyperplane import SupportHyperplane, support_from_direction
from mirrorhull.prism import f_value, ratio_batch, ratio_formula
from mirrorhull.simplex import build_simplex, r_family_normal


def test_vertex_direction_gives_twice_dimension():
    for n in range(2, 9):
        S = build_simplex(n)
        H = support_from_direction(S, np.asarray(S.facet_normals[0]))
        rep = ratio_formula(S, H)
        assert abs(rep.ratio - 2 * n) < 1e-12
        assert rep.k == 1
        assert abs(rep.x - 1.0) < 1e-12


def test_aligned_face_family_closed_form():
    # Supporting at the face s_0..s_r parallel to the rest gives 2(n-r).
    for n in range(2, 9):
        S = build_simplex(n)
        for r in range(n):
            H = support_from_direction(S, r_family_normal(S, r))
            rep = ratio_formula(S, H)
            assert abs(rep.ratio - 2 * (n - r)) < 1e-9
            assert rep.k == r + 1


def test_formula_matches_hull_oracle_on_seeded_directions():
    rng = np.random.default_rng(987)
    for n in range(2, 6):
        S = build_simplex(n)
        for _ in range(40):
            H = support_from_direction(S, rng.standard_normal(n))
            rep = ratio_formula(S, H)
            assert abs(rep.ratio - hull_ratio(S, H)) < 1e-9


def test_formula_matches_oracle_at_corner_directions():
    # Rotating away from an aligned direction crosses touching-set changes.
    S = build_simplex(2)
    for theta in np.linspace(-0.4, 0.4, 41):
        c, s = math.cos(theta), math.sin(theta)
        rot = np.array([[c, -s], [s, c]])
        u = rot @ r_family_normal(S, 0)
        H = support_from_direction(S, u)
        assert abs(ratio_formula(S, H).ratio - hull_ratio(S, H)) < 1e-8


def test_batch_agrees_with_scalar_path():
    rng = np.random.default_rng(321)
    for n in (2, 4, 6):
        S = build_simplex(n)
        dirs = rng.standard_normal((64, n))
        dirs /= np.linalg.norm(dirs, axis=1)[:, None]
        batch = ratio_batch(S, dirs)
        for row, expected in zip(dirs, batch):
            H = support_from_direction(S, row)
            assert abs(ratio_formula(S, H).ratio - expected) < 1e-12


def test_ratio_is_continuous_along_a_path():
    # Path from u0 toward an edge-aligned direction; the upper-facet count
    # changes along the way but the ratio must not jump.
    S = build_simplex(4)
    a = r_family_normal(S, 0)
    b = r_family_normal(S, 1)
    ts = np.linspace(0.0, 1.0, 401)
    values = []
    for t in ts:
        u = (1 - t) * a + t * b
        H = support_from_direction(S, u)
        values.append(ratio_formula(S, H).ratio)
    steps = np.abs(np.diff(values))
    assert steps.max() < 0.05


def test_report_invariants_over_seeded_directions():
    rng = np.random.default_rng(456)
    for n in range(2, 7):
        S = build_simplex(n)
        for _ in range(120):
            H = support_from_direction(S, rng.standard_normal(n))
            rep = ratio_formula(S, H)
            # Contribution sum identity and sign of each prism term.
            total = sum(term for _, term in rep.contributions)
            assert abs(2 * n * total - rep.ratio) < 1e-12
            assert min(term for _, term in rep.contributions) > -1e-12
            assert 1 / n - 1e-9 <= rep.x <= 1 + 1e-12
            assert len(rep.s_dots) == rep.k
            assert rep.ratio > 0


def test_bracket_value_reproduces_the_ratio():
    # ratio = 2n * f(x, non-apex upper heights), every k from 1 to n.
    rng = np.random.default_rng(123)
    seen = set()
    for n in range(2, 7):
        S = build_simplex(n)
        for _ in range(200):
            H = support_from_direction(S, rng.standard_normal(n))
            rep = ratio_formula(S, H)
            base = min(H.touching)
            heights = [d for (j, _), d in zip(rep.contributions, rep.s_dots) if j != base]
            assert abs(2 * n * f_value(n, rep.k, rep.x, heights) - rep.ratio) < 1e-12
            seen.add((n, rep.k))
    assert (5, 2) in seen and (5, 3) in seen  # multi-facet cases were exercised


def test_bracket_value_closed_form_examples():
    # With the single extra height at each case's critical slope the bracket
    # collapses to x^2 exactly.
    for x in np.linspace(0.55, 0.95, 9):
        d5 = math.sqrt(5 / 12) * x
        assert abs(f_value(5, 2, x, (d5,)) - x * x) < 1e-12
        d4 = math.sqrt(2 / 5) * x
        assert abs(f_value(4, 2, x, (d4,)) - x * x) < 1e-12


def test_bracket_validation():
    with pytest.raises(ValueError):
        f_value(4, 0, 0.5, ())
    with pytest.raises(ValueError):
        f_value(4, 3, 0.5, (0.1,))  # needs k-1 heights
    with pytest.raises(ValueError):
        f_value(4, 2, 1.5, (0.1,))


def test_empty_touching_set_rejected():
    S = build_simplex(3)
    u = np.asarray(S.facet_normals[0])
    H = SupportHyperplane(u=u, offset=0.0, touching=frozenset())
    with pytest.raises(ValueError):
        ratio_formula(S, H)
