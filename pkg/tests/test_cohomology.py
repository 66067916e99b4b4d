import math

import numpy as np
import pytest

from steenrips.cohomology import (
    Bar,
    Barcode,
    betti_number,
    cohomology_basis,
    persistent_barcode,
)
from steenrips.errors import ValidationError
from steenrips.metric import circle_grid, vr_filtration
from steenrips.simplicial import build, coboundary, rp2_complex, sublevel
from steenrips.synthetic import random_filtered_complex

from oracles import brute_barcode, brute_betti

INF = math.inf


def test_bar_validation():
    with pytest.raises(ValidationError):
        Bar(0, 1.0, 1.0)
    with pytest.raises(ValidationError):
        Bar(0, 0.0, 1.0, 0)


def test_barcode_multiset_merge_and_sort():
    b = Barcode([Bar(1, 0.0, 2.0), Bar(0, 0.0, INF), Bar(1, 0.0, 2.0)])
    assert b.bars[0].degree == 0
    assert b.bars[1].multiplicity == 2
    assert len(b) == 3


def test_barcode_json_roundtrip():
    b = Barcode([Bar(1, 0.5, 2.0, 3), Bar(0, 0.0, INF)])
    d = b.to_json_dict()
    assert d["field"] == "F2"
    assert d["bars"][0]["death"] is None
    assert Barcode.from_json_dict(d) == b


def test_single_point_barcode():
    K = build([([0], 0.0)])
    assert persistent_barcode(K, 1) == Barcode([Bar(0, 0.0, INF)])


def test_four_point_circle_barcode():
    X = circle_grid(4, 1.0)
    K = vr_filtration(X, 3, 4.0)
    bc = persistent_barcode(K, 1)
    half_pi, pi = math.pi / 2, math.pi
    deg1 = bc.in_degree(1).expanded()
    assert len(deg1) == 1
    assert deg1[0][0] == pytest.approx(half_pi)
    assert deg1[0][1] == pytest.approx(pi)
    deg0 = bc.in_degree(0).expanded()
    assert deg0.count((0.0, INF)) == 1
    finite0 = [p for p in deg0 if p[1] != INF]
    assert len(finite0) == 3
    assert all(d == pytest.approx(half_pi) for _, d in finite0)


def test_reduced_flag_drops_one_component_bar():
    K = build([([0], 0.0), ([1], 0.0)])
    assert len(persistent_barcode(K, 0)) == 2
    assert len(persistent_barcode(K, 0, reduced=True)) == 1


def test_barcode_against_brute_force():
    rng = np.random.default_rng(17)
    for _ in range(30):
        K = random_filtered_complex(rng, target_size=22)
        assert persistent_barcode(K, K.dimension) == brute_barcode(K, K.dimension)


def test_vr_barcode_against_brute_force():
    from steenrips.synthetic import random_metric_space

    rng = np.random.default_rng(18)
    for _ in range(10):
        X = random_metric_space(rng, int(rng.integers(4, 7)))
        K = vr_filtration(X, 2, X.diameter() + 1e-9)
        assert persistent_barcode(K, 2) == brute_barcode(K, 2)


def test_alive_counts_equal_betti_of_sublevels():
    rng = np.random.default_rng(19)
    for _ in range(20):
        K = random_filtered_complex(rng, target_size=20)
        bc = persistent_barcode(K, K.dimension)
        for i in range(K.num_values):
            Ki = sublevel(K, i)
            t = K.distinct_values[i]
            for p in range(K.dimension + 1):
                assert bc.alive(p, t) == len(cohomology_basis(Ki, p))
                assert bc.alive(p, t) == betti_number(Ki, p)


def test_disjoint_union_is_multiset_union():
    rng = np.random.default_rng(23)
    for _ in range(10):
        A = random_filtered_complex(rng, target_size=12, random_values=False)
        B = random_filtered_complex(rng, target_size=12, random_values=False)
        shift = max(v for _, v in zip(A.simplices, A.values)) if len(A) else 0
        offset = 1 + max(v for s in A.simplices for v in s)
        union = build(
            [(list(s), v) for s, v in zip(A.simplices, A.values)]
            + [([v + offset for v in s], val)
               for s, val in zip(B.simplices, B.values)]
        )
        got = persistent_barcode(union, 3)
        want = persistent_barcode(A, 3).union(persistent_barcode(B, 3))
        assert got == want


def test_cohomology_basis_triangle():
    hollow = build([([v], 0.0) for v in range(3)]
                   + [([a, b], 0.0) for a, b in ((0, 1), (0, 2), (1, 2))])
    basis = cohomology_basis(hollow, 1)
    assert len(basis) == 1
    assert coboundary(basis.cocycles[0]).is_zero
    full = build([([v], 0.0) for v in range(3)]
                 + [([a, b], 0.0) for a, b in ((0, 1), (0, 2), (1, 2))]
                 + [([0, 1, 2], 0.0)])
    assert len(cohomology_basis(full, 1)) == 0


def test_cohomology_basis_cocycles_and_independence():
    rng = np.random.default_rng(27)
    for _ in range(15):
        K = random_filtered_complex(rng, target_size=20)
        for p in range(K.dimension + 1):
            basis = cohomology_basis(K, p)
            assert len(basis) == brute_betti(K, p)
            for c in basis.cocycles:
                assert coboundary(c).is_zero


def test_rp2_betti():
    K = rp2_complex()
    assert [len(cohomology_basis(K, p)) for p in range(3)] == [1, 1, 1]


def test_rp2_barcode():
    K = rp2_complex()
    bc = persistent_barcode(K, 2)
    assert bc == Barcode([Bar(0, 0.0, INF), Bar(1, 0.0, INF), Bar(2, 0.0, INF)])
