import io

import numpy as np
import pytest

from steenrips.errors import (
    ClosureError,
    DimensionMismatchError,
    DuplicateSimplexError,
    MonotonicityError,
    ValidationError,
)
from steenrips.gf2 import rank
from steenrips.simplicial import (
    Cochain,
    build,
    coboundary,
    coboundary_matrix,
    cochain_from_simplices,
    dump_complex,
    load_complex,
    restrict_cochain,
    rp2_complex,
    sublevel,
    zero_cochain,
)
from steenrips.synthetic import random_filtered_complex

TRIANGLE_BOUNDARY = [
    ([0], 0.0), ([1], 0.0), ([2], 0.0),
    ([0, 1], 0.0), ([0, 2], 0.0), ([1, 2], 0.0),
]
FULL_TRIANGLE = TRIANGLE_BOUNDARY + [([0, 1, 2], 0.0)]


def test_build_simple_path():
    K = build([([0], 0.0), ([1], 0.0), ([0, 1], 1.0)])
    assert len(K) == 3
    assert K.dimension == 1
    assert K.distinct_values == (0.0, 1.0)


def test_build_closure_error():
    with pytest.raises(ClosureError):
        build([([0, 1], 1.0)])


def test_build_monotonicity_error():
    with pytest.raises(MonotonicityError):
        build([([0], 0.0), ([1], 2.0), ([0, 1], 1.0)])


def test_build_duplicate_error():
    with pytest.raises(DuplicateSimplexError):
        build([([0], 0.0), ([0], 1.0)])


def test_build_rejects_non_finite_values():
    with pytest.raises(ValidationError):
        build([([0], float("nan"))])
    with pytest.raises(ValidationError):
        build([([0], float("inf"))])


def test_full_triangle_euler():
    K = build(FULL_TRIANGLE)
    assert K.euler_characteristic() == 1


def test_canonical_order_total():
    rng = np.random.default_rng(2)
    for _ in range(20):
        K = random_filtered_complex(rng)
        entries = list(zip(K.simplices, K.values))
        perm = rng.permutation(len(entries))
        K2 = build([(list(entries[i][0]), entries[i][1]) for i in perm])
        assert K == K2


def test_faces_precede_cofaces():
    rng = np.random.default_rng(4)
    for _ in range(20):
        K = random_filtered_complex(rng)
        for pos, s in enumerate(K.simplices):
            if len(s) == 1:
                continue
            for facet in [s[:i] + s[i + 1:] for i in range(len(s))]:
                assert K.index[facet] < pos


def test_coboundary_triangle_boundary():
    K = build(TRIANGLE_BOUNDARY)
    m = coboundary_matrix(K, 0)
    assert m.rows == 3 and m.ncols == 3
    assert rank(m) == 2


def test_coboundary_above_top_dimension():
    K = build(TRIANGLE_BOUNDARY)
    m = coboundary_matrix(K, 1)
    assert m.rows == 0 and m.ncols == 3


def test_coboundary_full_triangle_degree1():
    K = build(FULL_TRIANGLE)
    m = coboundary_matrix(K, 1)
    assert m.rows == 1 and m.ncols == 3
    assert m.columns == (1, 1, 1)


def test_delta_squared_is_zero():
    rng = np.random.default_rng(8)
    for _ in range(20):
        K = random_filtered_complex(rng)
        for p in range(K.dimension):
            prod = coboundary_matrix(K, p + 1) @ coboundary_matrix(K, p)
            assert all(c == 0 for c in prod.columns)


def test_sublevel_whole_and_empty():
    K = build([([0], 0.0), ([1], 0.0), ([2], 1.0), ([0, 1], 2.0)])
    assert sublevel(K, K.num_values - 1) == K
    K0 = sublevel(K, 0)
    assert len(K0) == 2 and K0.dimension == 0
    with pytest.raises(ValidationError):
        sublevel(K, K.num_values)


def test_sublevel_triangle_vertices_only():
    K = build([([v], 0.0) for v in range(3)]
              + [([0, 1], 1.0), ([0, 2], 1.0), ([1, 2], 1.0)])
    K0 = sublevel(K, 0)
    assert len(K0) == 3 and K0.dimension == 0


def test_sublevel_nested():
    rng = np.random.default_rng(14)
    for _ in range(10):
        K = random_filtered_complex(rng)
        prev = set()
        for i in range(K.num_values):
            cur = set(sublevel(K, i).simplices)
            assert prev <= cur
            prev = cur


def test_restrict_cochain_identity_and_zero():
    K = build([([v], 0.0) for v in range(3)]
              + [([0, 1], 1.0), ([0, 2], 1.0), ([1, 2], 2.0)])
    c = cochain_from_simplices(K, 1, [[1, 2]])
    assert restrict_cochain(c, sublevel(K, K.num_values - 1)).bits == c.bits
    r = restrict_cochain(c, sublevel(K, 1))
    assert r.is_zero


def test_restrict_cochain_host_mismatch():
    K = build(FULL_TRIANGLE)
    other = build([([0], 0.0), ([5], 0.0)])
    c = zero_cochain(K, 1)
    with pytest.raises(DimensionMismatchError):
        restrict_cochain(c, other)


def test_restriction_commutes_with_coboundary():
    rng = np.random.default_rng(21)
    for _ in range(25):
        K = random_filtered_complex(rng, target_size=20)
        for p in range(K.dimension):
            bits = int(rng.integers(0, 1 << K.n_simplices(p)))
            c = Cochain(K, p, bits)
            for i in range(K.num_values):
                Ki = sublevel(K, i)
                a = coboundary(restrict_cochain(c, Ki))
                b = restrict_cochain(coboundary(c), Ki)
                assert a.bits == b.bits


def test_rp2_complex_counts():
    K = rp2_complex()
    assert K.n_simplices(0) == 6
    assert K.n_simplices(1) == 15
    assert K.n_simplices(2) == 10
    assert K.euler_characteristic() == 1


def test_text_roundtrip():
    rng = np.random.default_rng(31)
    for _ in range(10):
        K = random_filtered_complex(rng)
        buf = io.StringIO()
        dump_complex(K, buf)
        K2 = load_complex(buf.getvalue())
        assert K == K2


def test_text_parsing():
    K = load_complex("# comment\n0 0\n0 1\n1.5 0 1  # edge\n")
    assert len(K) == 3
    assert K.value_of([0, 1]) == 1.5
    with pytest.raises(ValidationError):
        load_complex("0\n")
    with pytest.raises(ValidationError):
        load_complex("x 0 1\n")
