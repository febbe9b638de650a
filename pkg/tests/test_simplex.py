"""Closed-form constants of the regular simplex against its coordinates."""

import math

import numpy as np
import pytest

from mirrorhull.hull import simplex_measure
from mirrorhull.simplex import (
    build_simplex,
    centroid_norm,
    facet_normal,
    height,
    helmert_basis,
    r_family_normal,
    s2k_norm,
    s_norm,
    simplex_constants,
    simplex_from_vertices,
    simplex_volume,
    to_ambient,
)

DIMS = range(1, 9)


def test_helmert_basis_is_orthonormal_and_sums_to_zero():
    for n in DIMS:
        basis = helmert_basis(n)
        assert np.abs(basis @ basis.T - np.eye(n)).max() < 1e-12
        assert np.abs(basis.sum(axis=1)).max() < 1e-12


def test_edges_are_unit():
    for n in DIMS:
        V = np.asarray(build_simplex(n).vertices)
        dists = np.linalg.norm(V[:, None, :] - V[None, :, :], axis=2)
        off = dists[~np.eye(n + 1, dtype=bool)]
        assert np.abs(off - 1.0).max() < 1e-12


def test_gram_matrix_from_origin_vertex():
    # <s_i, s_j> = 1/2 + delta_ij/2 for i, j >= 1, with vertex 0 at the origin.
    for n in DIMS:
        V = np.asarray(build_simplex(n).vertices)
        gram = V[1:] @ V[1:].T
        expected = (np.ones((n, n)) + np.eye(n)) / 2
        assert np.abs(gram - expected).max() < 1e-12


def test_vertex_sum_and_centroid_norms():
    for n in DIMS:
        S = build_simplex(n)
        assert abs(np.linalg.norm(S.s) - s_norm(n)) < 1e-12
        assert abs(np.linalg.norm(S.centroid) - centroid_norm(n)) < 1e-12


def test_height_is_vertex_to_facet_distance():
    for n in range(2, 9):
        S = build_simplex(n)
        for j in range(n + 1):
            other = (j + 1) % (n + 1)
            gap = float(S.facet_normals[j] @ (S.vertices[j] - S.vertices[other]))
            assert abs(abs(gap) - height(n)) < 1e-12


def test_volume_closed_form_matches_gram_measure():
    for n in DIMS:
        V = np.asarray(build_simplex(n).vertices)
        assert abs(simplex_measure(V) - simplex_volume(n)) < 1e-12


def test_minkowski_facet_relation():
    # Sum of facet (n-1)-measures times outward normals vanishes.
    for n in range(2, 9):
        S = build_simplex(n)
        total = np.zeros(n)
        for j in range(n + 1):
            facet = np.delete(np.asarray(S.vertices), j, axis=0)
            total += simplex_measure(facet) * np.asarray(S.facet_normals[j])
        assert np.abs(total).max() < 1e-10


def test_facet_normals_are_vertex_direction_vectors():
    # Outward normal opposite vertex j is (s - (n+1) s_j) normalized, and the
    # un-normalized vector always has length s_norm(n).
    for n in range(2, 9):
        S = build_simplex(n)
        for j in range(n + 1):
            vec = S.s - (n + 1) * S.vertices[j]
            assert abs(np.linalg.norm(vec) - s_norm(n)) < 1e-12
            assert np.abs(vec / np.linalg.norm(vec) - S.facet_normals[j]).max() < 1e-12


def test_facet_normal_pairwise_dots():
    for n in range(2, 9):
        S = build_simplex(n)
        gram = np.asarray(S.facet_normals) @ np.asarray(S.facet_normals).T
        expected = -np.full((n + 1, n + 1), 1 / n) + (1 + 1 / n) * np.eye(n + 1)
        assert np.abs(gram - expected).max() < 1e-12


def test_facet_normal_accessor_and_range():
    S = build_simplex(3)
    assert np.abs(facet_normal(S, 0) - S.s / np.linalg.norm(S.s)).max() < 1e-12
    with pytest.raises(ValueError):
        facet_normal(S, 4)
    with pytest.raises(ValueError):
        facet_normal(S, -1)


def test_build_is_deterministic():
    for n in (2, 5, 8):
        a, b = build_simplex(n), build_simplex(n)
        assert np.array_equal(np.asarray(a.vertices), np.asarray(b.vertices))
        assert np.array_equal(np.asarray(a.facet_normals), np.asarray(b.facet_normals))


def test_arrays_are_frozen():
    S = build_simplex(4)
    with pytest.raises(ValueError):
        np.asarray(S.vertices)[0, 0] = 1.0


def test_dimension_limits():
    with pytest.raises(ValueError):
        build_simplex(0)
    with pytest.raises(ValueError):
        build_simplex(9)


def test_to_ambient_recovers_standard_coordinates():
    for n in (2, 4, 6):
        S = build_simplex(n)
        amb = to_ambient(S, np.asarray(S.vertices))
        expected = (np.eye(n + 1) - np.eye(n + 1)[0]) / math.sqrt(2)
        assert np.abs(amb - expected).max() < 1e-12


def test_r_family_normal_values():
    for n in range(2, 9):
        S = build_simplex(n)
        for r in range(n):
            u = r_family_normal(S, r)
            assert abs(np.linalg.norm(u) - 1.0) < 1e-12
            # Touches exactly vertices 0..r: equal minimal heights there.
            dots = np.asarray(S.vertices) @ u
            assert np.abs(dots[: r + 1] - dots.min()).max() < 1e-12
            assert dots[r + 1 :].min() > dots.min() + 1e-6
            # Angle to the vertex direction u0.
            expected = math.sqrt((n - r) / (r + 1)) / math.sqrt(n)
            assert abs(float(u @ S.facet_normals[0]) - expected) < 1e-12


def test_r_family_special_cases():
    S = build_simplex(5)
    assert np.abs(r_family_normal(S, 0) - S.facet_normals[0]).max() < 1e-12
    # r=1 written out in ambient coordinates.
    ambient = np.array([-2.0, -2.0, 1.0, 1.0, 1.0, 1.0]) / (2 * math.sqrt(3))
    assert np.abs(r_family_normal(S, 1) - helmert_basis(5) @ ambient).max() < 1e-12
    with pytest.raises(ValueError):
        r_family_normal(S, 5)
    with pytest.raises(ValueError):
        r_family_normal(S, -1)


def test_simplex_from_vertices_round_trip():
    for n in (2, 3, 5):
        S = build_simplex(n)
        T = simplex_from_vertices(np.asarray(S.vertices))
        assert np.abs(np.asarray(T.facet_normals) - np.asarray(S.facet_normals)).max() < 1e-9
        assert np.abs(T.centroid - S.centroid).max() < 1e-12


def test_simplex_from_vertices_accepts_rotated_copies():
    rng = np.random.default_rng(11)
    S = build_simplex(4)
    q, _ = np.linalg.qr(rng.standard_normal((4, 4)))
    T = simplex_from_vertices(np.asarray(S.vertices) @ q.T + rng.standard_normal(4))
    assert T.n == 4
    gram = np.asarray(T.facet_normals) @ np.asarray(T.facet_normals).T
    assert np.abs(np.diag(gram) - 1.0).max() < 1e-12


def test_simplex_from_vertices_rejects_bad_input():
    with pytest.raises(ValueError):
        simplex_from_vertices(np.zeros((3, 3)))
    with pytest.raises(ValueError):
        simplex_from_vertices(2.0 * np.asarray(build_simplex(3).vertices))


def test_scalar_helpers():
    assert abs(s_norm(5) - math.sqrt(15)) < 1e-15
    assert abs(height(2) - math.sqrt(3) / 2) < 1e-15
    assert abs(simplex_volume(2) - math.sqrt(3) / 4) < 1e-15
    assert abs(simplex_volume(3) - 1 / (6 * math.sqrt(2))) < 1e-15
    assert s2k_norm(1) == 0.0
    assert abs(s2k_norm(3) - math.sqrt(3)) < 1e-15


def test_simplex_constants_identities():
    for n in range(2, 9):
        for k in range(2, n + 1):
            c = simplex_constants(n, k)
            assert abs(c.cos_beta**2 + c.sin_beta**2 - 1.0) < 1e-12
            assert abs(c.sin_beta**2 - (n - k + 1) / (n * k)) < 1e-12
            assert abs(c.s2k_norm - math.sqrt((k - 1) * k / 2)) < 1e-12
    with pytest.raises(ValueError):
        simplex_constants(3, 1)
    with pytest.raises(ValueError):
        simplex_constants(3, 4)
