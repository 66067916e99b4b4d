import math

import numpy as np
import pytest

from steenrips.errors import MetricError, ValidationError
from steenrips.metric import (
    FiniteMetricSpace,
    GroupAction,
    antipodal_action,
    circle_grid,
    gluing_wedge,
    linf_product,
    load_distance_matrix,
    load_points_csv,
    metric_from_points,
    projective_sample,
    quotient_metric,
    save_distance_matrix,
    sphere_sample,
    vr_filtration,
)
from steenrips.synthetic import random_metric_space

import io
from itertools import combinations


def three_point_space(dist=1.0):
    d = np.full((3, 3), dist)
    np.fill_diagonal(d, 0.0)
    return FiniteMetricSpace(d)


def test_metric_validation():
    with pytest.raises(MetricError):
        FiniteMetricSpace([[0.0, 1.0], [2.0, 0.0]])  # asymmetric
    with pytest.raises(MetricError):
        FiniteMetricSpace([[0.0, 0.0], [0.0, 0.0]])  # coincident points
    with pytest.raises(MetricError):
        FiniteMetricSpace([[0.0, 5.0, 1.0], [5.0, 0.0, 1.0], [1.0, 1.0, 0.0]])
    with pytest.raises(MetricError):
        FiniteMetricSpace([[0.0, float("nan")], [float("nan"), 0.0]])
    with pytest.raises(MetricError):
        FiniteMetricSpace([[0.0, float("inf")], [float("inf"), 0.0]])


def test_vr_three_points():
    K = vr_filtration(three_point_space(), 2, 2.0)
    assert len(K) == 7
    assert K.value_of([0, 1, 2]) == 1.0


def test_vr_below_minimum_distance():
    K = vr_filtration(three_point_space(), 2, 0.5)
    assert len(K) == 3 and K.dimension == 0


def test_vr_matches_subset_enumeration():
    rng = np.random.default_rng(6)
    for _ in range(10):
        X = random_metric_space(rng, int(rng.integers(3, 8)))
        max_dim = 2
        scale = float(rng.uniform(0.2, 1.2))
        K = vr_filtration(X, max_dim, scale)
        expected = {}
        for k in range(1, max_dim + 2):
            for subset in combinations(range(X.n), k):
                diam = max((X.d[a, b] for a, b in combinations(subset, 2)),
                           default=0.0)
                if diam <= scale:
                    expected[subset] = diam
        got = dict(zip(K.simplices, K.values))
        assert got == expected


def test_vr_monotone_in_caps():
    rng = np.random.default_rng(16)
    X = random_metric_space(rng, 7)
    small = vr_filtration(X, 1, 0.5)
    big = vr_filtration(X, 2, 0.9)
    for s, v in zip(small.simplices, small.values):
        assert big.index.get(s) is not None
        assert big.value_of(s) == v


def test_four_point_circle_distances():
    X = circle_grid(4, 1.0)
    assert X.d[0, 1] == pytest.approx(math.pi / 2)
    assert X.d[0, 2] == pytest.approx(math.pi)


def test_gluing_wedge_two_segments():
    two = FiniteMetricSpace([[0.0, 1.0], [1.0, 0.0]])
    W = gluing_wedge(two, 0, two, 0)
    assert W.n == 3
    assert sorted(W.d[np.triu_indices(3, 1)].tolist()) == [1.0, 1.0, 2.0]


def test_gluing_wedge_with_point_is_identity():
    rng = np.random.default_rng(23)
    X = random_metric_space(rng, 5)
    P = FiniteMetricSpace([[0.0]])
    W = gluing_wedge(X, 2, P, 0)
    assert np.array_equal(W.d, X.d)


def test_gluing_wedge_invalid_basepoint():
    two = FiniteMetricSpace([[0.0, 1.0], [1.0, 0.0]])
    with pytest.raises(ValidationError):
        gluing_wedge(two, 5, two, 0)


def test_linf_product_with_point_is_identity():
    rng = np.random.default_rng(29)
    X = random_metric_space(rng, 6)
    P = FiniteMetricSpace([[0.0]])
    assert np.array_equal(linf_product(P, X).d, X.d)


def test_linf_product_two_by_two():
    a = FiniteMetricSpace([[0.0, 1.0], [1.0, 0.0]])
    b = FiniteMetricSpace([[0.0, 2.0], [2.0, 0.0]])
    P = linf_product(a, b)
    off = sorted(P.d[np.triu_indices(4, 1)].tolist())
    assert off == [1.0, 1.0, 2.0, 2.0, 2.0, 2.0]


def test_quotient_trivial_action():
    rng = np.random.default_rng(37)
    X = random_metric_space(rng, 5)
    act = GroupAction(X, (tuple(range(5)),))
    assert np.array_equal(quotient_metric(X, act).d, X.d)


def test_quotient_circle_antipodal():
    # 2k points on a radius-2 circle under the antipodal swap: k points on
    # a radius-1 circle
    for k in (3, 5):
        big = circle_grid(2 * k, 2.0)
        perm = tuple((i + k) % (2 * k) for i in range(2 * k))
        act = GroupAction(big, (perm,))
        q = quotient_metric(big, act)
        small = circle_grid(k, 1.0)
        assert np.allclose(np.sort(q.d, axis=None), np.sort(small.d, axis=None))


def test_quotient_free_action_orbit_count():
    X = sphere_sample(2, 2.0, 10, seed=3, antipodal_closure=True)
    act = antipodal_action(X)
    assert quotient_metric(X, act).n == 10


def test_group_action_rejects_non_isometry():
    d = np.array([[0.0, 1.0, 2.0], [1.0, 0.0, 2.5], [2.0, 2.5, 0.0]])
    X = FiniteMetricSpace(d)
    with pytest.raises(ValidationError):
        GroupAction(X, ((1, 0, 2),))


def test_sphere_sample_antipodal_distance():
    X = sphere_sample(2, 1.5, 8, seed=1, antipodal_closure=True)
    for i in range(8):
        assert X.d[i, i + 8] == pytest.approx(math.pi * 1.5)


def test_sphere_sample_deterministic():
    a = sphere_sample(2, 1.0, 12, seed=42)
    b = sphere_sample(2, 1.0, 12, seed=42)
    assert np.array_equal(a.d, b.d)
    c = sphere_sample(2, 1.0, 12, seed=43)
    assert not np.array_equal(a.d, c.d)


def test_circle_grid_consecutive_distance():
    X = circle_grid(40, 1.0)
    assert X.d[0, 1] == pytest.approx(2 * math.pi / 40)


def test_projective_sample_diameter_bound():
    Q = projective_sample(2, 15, seed=7)
    assert Q.n == 15
    assert Q.diameter() <= math.pi + 1e-9


def test_distance_matrix_roundtrip():
    rng = np.random.default_rng(41)
    X = random_metric_space(rng, 6)
    buf = io.StringIO()
    save_distance_matrix(X, buf)
    Y = load_distance_matrix(buf.getvalue())
    assert np.array_equal(X.d, Y.d)


def test_points_csv_euclidean_and_sphere():
    pts = load_points_csv("0,0\n1,0\n0,1\n")
    X = metric_from_points(pts, "euclidean")
    assert X.d[0, 1] == pytest.approx(1.0)
    on_sphere = np.array([[2.0, 0.0, 0.0], [0.0, 2.0, 0.0], [-2.0, 0.0, 0.0]])
    S = metric_from_points(on_sphere, "sphere:2")
    assert S.d[0, 2] == pytest.approx(2 * math.pi)
    with pytest.raises(ValidationError):
        metric_from_points(on_sphere * 1.1, "sphere:2")
    with pytest.raises(ValidationError):
        metric_from_points(pts, "hyperbolic")
