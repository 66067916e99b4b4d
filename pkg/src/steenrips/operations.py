"""Persistent image/kernel barcodes of cohomology operations.

Ranks of the structure maps are assembled into a table over filtration
indices and converted to bars by Mobius inversion.  theta_rank and
kernel_rank are the literal per-pair operations (sublevel complexes,
explicit restriction, quotient ranks); theta_rank_function and
kernel_rank_function build the whole table from one global coboundary
reduction, exploiting that a sublevel's cochains occupy a bit-prefix of
the full complex's:

* a column reduced to a distinct lowest set bit survives masking to the
  prefix iff its pivot lies inside the prefix, so the rank of any masked
  column span is the number of pivots below the prefix length;
* the coboundary of a simplex outside a sublevel masks to zero there
  (faces precede cofaces), so one global coboundary matrix serves every
  sublevel at once.

The two paths are interchangeable; tests pin their exact agreement.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cohomology import Bar, Barcode, cohomology_basis
from .errors import InternalInvariantError, ValidationError
from .gf2 import F2Matrix, PivotTable
from .simplicial import (
    Cochain,
    FilteredComplex,
    coboundary_columns,
    restrict_cochain,
    sublevel,
    zero_cochain,
)
from .steenrod import _cup_bits, sq as _sq
from .gf2 import quotient_rank

INF = math.inf


@dataclass(frozen=True)
class Operation:
    """Linear cohomology operation: identity, zero, or a Steenrod square."""

    kind: str
    source_degree: int
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("identity", "zero", "sq"):
            raise ValidationError(f"unknown operation kind {self.kind!r}")
        if self.source_degree < 0:
            raise ValidationError("source degree must be nonnegative")
        if self.kind == "sq" and self.k < 0:
            raise ValidationError("Steenrod square index must be nonnegative")

    @classmethod
    def identity(cls, degree: int) -> "Operation":
        return cls("identity", degree)

    @classmethod
    def zero(cls, degree: int) -> "Operation":
        return cls("zero", degree)

    @classmethod
    def sq(cls, k: int, source_degree: int) -> "Operation":
        return cls("sq", source_degree, k)

    @property
    def target_degree(self) -> int:
        return self.source_degree + (self.k if self.kind == "sq" else 0)

    @property
    def name(self) -> str:
        if self.kind == "identity":
            return "id"
        if self.kind == "zero":
            return "zero"
        return f"Sq{self.k}"

    def apply(self, c: Cochain) -> Cochain:
        """Chain-level action on a cocycle of the source degree."""
        if c.degree != self.source_degree:
            raise ValidationError(
                f"{self.name} expects degree {self.source_degree}, got {c.degree}"
            )
        if self.kind == "identity":
            return c
        if self.kind == "zero":
            return zero_cochain(c.host, self.target_degree)
        return _sq(self.k, c)


class RankFunction:
    """Table r(i, j) of structure-map ranks over filtration indices.

    Stored on the compressed grid of indices where the module can
    change; rank(i, j) resolves arbitrary indices through that grid.
    """

    __slots__ = ("n", "indices", "table")

    def __init__(self, n: int, indices: Sequence[int], table: np.ndarray):
        self.n = n
        self.indices = list(indices)
        self.table = np.asarray(table, dtype=np.int64)
        if self.indices and self.indices[0] != 0:
            raise ValidationError("compressed grid must start at index 0")
        if self.table.shape != (len(self.indices), len(self.indices)):
            raise ValidationError("table shape does not match grid size")

    @classmethod
    def dense(cls, table) -> "RankFunction":
        t = np.asarray(table, dtype=np.int64)
        return cls(t.shape[0], range(t.shape[0]), t)

    def rank(self, i: int, j: int) -> int:
        if not 0 <= i <= j < self.n:
            raise ValidationError(f"need 0 <= i <= j < {self.n}, got ({i}, {j})")
        a = bisect_right(self.indices, i) - 1
        b = bisect_right(self.indices, j) - 1
        return int(self.table[a, b])


class _CombinedReducer:
    """Reduce against a fixed pivot dict, then a growing local table.

    The fixed columns may be masked on the fly; the local table tracks
    companion coefficient vectors when requested.
    """

    __slots__ = ("fixed", "mask", "local")

    def __init__(self, fixed: dict[int, int], mask: int | None = None):
        self.fixed = fixed
        self.mask = mask
        self.local: dict[int, tuple[int, int]] = {}

    def feed(self, bits: int, companion: int = 0) -> tuple[int, int]:
        """Fully reduce; store nonzero residuals. Returns (residual, companion)."""
        fixed, mask, local = self.fixed, self.mask, self.local
        while bits:
            p = (bits & -bits).bit_length() - 1
            col = fixed.get(p)
            if col is not None:
                bits ^= col if mask is None else col & mask
                continue
            entry = local.get(p)
            if entry is None:
                local[p] = (bits, companion)
                return bits, companion
            bits ^= entry[0]
            companion ^= entry[1]
        return 0, companion

    def pivots(self) -> list[int]:
        return sorted(self.local)


def _basis_bits_at(K: FilteredComplex, ell: int, j: int,
                   delta_ell: list[int], delta_below: list[int]) -> list[int]:
    """Cocycle representatives of a basis of H^ell(K_j), bit-packed over
    the full complex's ell-simplex order (support inside the prefix)."""
    n_src = K.count_at(ell, j)
    n_tgt = K.count_at(ell + 1, j)
    mask_tgt = (1 << n_tgt) - 1
    table: dict[int, tuple[int, int]] = {}
    null_companions: list[int] = []
    for c in range(n_src):
        bits = delta_ell[c] & mask_tgt
        comp = 1 << c
        while bits:
            p = (bits & -bits).bit_length() - 1
            entry = table.get(p)
            if entry is None:
                table[p] = (bits, comp)
                break
            bits ^= entry[0]
            comp ^= entry[1]
        else:
            null_companions.append(comp)
    # quotient by coboundaries from one dimension below
    reducer = _CombinedReducer({})
    if ell >= 1:
        n_b = K.count_at(ell - 1, j)
        mask_src = (1 << n_src) - 1
        for c in range(n_b):
            reducer.feed(delta_below[c] & mask_src)
    reps = []
    for z in null_companions:
        residual, _ = reducer.feed(z)
        if residual:
            reps.append(residual)
    return reps


def _image_bits(K: FilteredComplex, op: Operation, cocycle_bits: int,
                count_m: int) -> int:
    """Chain-level op applied to a sublevel cocycle, evaluated on the
    first count_m target simplices (all faces lie in the sublevel)."""
    if op.kind == "identity":
        return cocycle_bits
    if op.kind == "zero":
        return 0
    ell = op.source_degree
    if op.k > ell:
        return 0
    return _cup_bits(K, ell, ell, ell - op.k, cocycle_bits, cocycle_bits,
                     count=count_m)


def _relevant_indices(K: FilteredComplex, degrees: set[int]) -> list[int]:
    """Indices where the complex changes in any of the given degrees."""
    if K.num_values == 0:
        return []
    out = [0]
    degs = [p for p in degrees if 0 <= p <= K.dimension]
    prev = {p: K.count_at(p, 0) for p in degs}
    for i in range(1, K.num_values):
        cur = {p: K.count_at(p, i) for p in degs}
        if cur != prev:
            out.append(i)
            prev = cur
    return out


def _grid_degrees(op: Operation) -> set[int]:
    ell, m = op.source_degree, op.target_degree
    return {ell - 1, ell, ell + 1, m, m + 1}


def theta_rank(K: FilteredComplex, op: Operation, i: int, j: int) -> int:
    """Rank of img(theta at K_j) -> H^m(K_i): apply the operation to a
    basis of H^ell(K_j), restrict, and quotient by K_i's coboundaries."""
    if i > j:
        raise ValidationError(f"need i <= j, got ({i}, {j})")
    ell, m = op.source_degree, op.target_degree
    Kj = sublevel(K, j)
    basis = cohomology_basis(Kj, ell)
    images = [op.apply(c) for c in basis.cocycles]
    Ki = sublevel(K, i)
    restricted = [restrict_cochain(w, Ki) for w in images]
    span = F2Matrix(Ki.n_simplices(m), tuple(w.bits for w in restricted))
    bound = F2Matrix(Ki.n_simplices(m),
                     tuple(coboundary_columns(Ki, m - 1)) if m >= 1 else ())
    return quotient_rank(span, bound)


def kernel_rank(K: FilteredComplex, op: Operation, i: int, j: int) -> int:
    """Rank of ker(theta at K_j) -> H^ell(K_i)."""
    if i > j:
        raise ValidationError(f"need i <= j, got ({i}, {j})")
    ell, m = op.source_degree, op.target_degree
    Kj = sublevel(K, j)
    basis = cohomology_basis(Kj, ell)
    images = [op.apply(c) for c in basis.cocycles]
    d_table = PivotTable()
    if m >= 1:
        for col in coboundary_columns(Kj, m - 1):
            d_table.insert(col)
    reducer = _CombinedReducer(d_table.columns())
    alphas = []
    for t, w in enumerate(images):
        residual, comp = reducer.feed(w.bits, 1 << t)
        if residual == 0:
            alphas.append(comp)
    kappas = []
    for alpha in alphas:
        acc = zero_cochain(Kj, ell)
        t = 0
        while alpha:
            if alpha & 1:
                acc = acc + basis.cocycles[t]
            alpha >>= 1
            t += 1
        kappas.append(acc)
    Ki = sublevel(K, i)
    restricted = [restrict_cochain(c, Ki) for c in kappas]
    span = F2Matrix(Ki.n_simplices(ell), tuple(c.bits for c in restricted))
    bound = F2Matrix(Ki.n_simplices(ell),
                     tuple(coboundary_columns(Ki, ell - 1)) if ell >= 1 else ())
    return quotient_rank(span, bound)


def _rank_table(K: FilteredComplex, op: Operation, kernel: bool) -> RankFunction:
    """Build the full rank table via the global-reduction fast path."""
    ell, m = op.source_degree, op.target_degree
    N = K.num_values
    if N == 0:
        return RankFunction(0, [], np.zeros((0, 0), dtype=np.int64))
    rel = _relevant_indices(K, _grid_degrees(op))
    R = len(rel)

    delta_ell = coboundary_columns(K, ell) if ell <= K.dimension else []
    delta_below = coboundary_columns(K, ell - 1) if ell >= 1 else []
    # global coboundary reduction in the target degree
    d_m = PivotTable()
    if m >= 1:
        for col in coboundary_columns(K, m - 1):
            d_m.insert(col)
    d_m_cols = d_m.columns()
    d_ell_cols = None
    if kernel:
        if ell >= 1 and m != ell:
            d_ell = PivotTable()
            for col in delta_below:
                d_ell.insert(col)
            d_ell_cols = d_ell.columns()
        elif m == ell:
            d_ell_cols = d_m_cols
        else:
            d_ell_cols = {}

    count_deg = ell if kernel else m
    prefix = np.array([K.count_at(count_deg, idx) for idx in rel], dtype=np.int64)
    table = np.zeros((R, R), dtype=np.int64)

    for b, j in enumerate(rel):
        basis = _basis_bits_at(K, ell, j, delta_ell, delta_below)
        n_m_j = K.count_at(m, j)
        images = [_image_bits(K, op, c, n_m_j) for c in basis]
        if not kernel:
            reducer = _CombinedReducer(d_m_cols)
            for w in images:
                reducer.feed(w)
            pivots = np.array(reducer.pivots(), dtype=np.int64)
        else:
            mask_j = (1 << n_m_j) - 1
            membership = _CombinedReducer(d_m_cols, mask=mask_j)
            alphas = []
            for t, w in enumerate(images):
                residual, comp = membership.feed(w, 1 << t)
                if residual == 0:
                    alphas.append(comp)
            kappas = []
            for alpha in alphas:
                acc = 0
                t = 0
                while alpha:
                    if alpha & 1:
                        acc ^= basis[t]
                    alpha >>= 1
                    t += 1
                kappas.append(acc)
            reducer = _CombinedReducer(d_ell_cols)
            for kap in kappas:
                reducer.feed(kap)
            pivots = np.array(reducer.pivots(), dtype=np.int64)
        table[: b + 1, b] = np.searchsorted(pivots, prefix[: b + 1], side="left")
    return RankFunction(N, rel, table)


def theta_rank_function(K: FilteredComplex, op: Operation) -> RankFunction:
    return _rank_table(K, op, kernel=False)


def kernel_rank_function(K: FilteredComplex, op: Operation) -> RankFunction:
    return _rank_table(K, op, kernel=True)


def rank_to_barcode(R: RankFunction, values: Sequence[float],
                    reversed_module: bool = False, degree: int = 0) -> Barcode:
    """Mobius inversion of a rank table into a barcode.

    Multiplicity of the bar alive on grid indices [b, d-1] (death at
    value d, or infinite past the end) is
    mu(b, d) = (r(b, d-1) - r(b, d)) - (r(b-1, d-1) - r(b-1, d)).
    Cohomology modules are contravariant: with reversed_module the
    indices are mirrored before inversion and bars mirrored back.
    Negative multiplicities signal a broken rank function and raise.
    """
    if R.n != len(values):
        raise ValidationError("value grid does not match the rank table")
    if R.n == 0:
        return Barcode()
    rel = R.indices
    size = len(rel)
    T = R.table
    if reversed_module:
        Tm = np.zeros_like(T)
        for a in range(size):
            for b in range(a, size):
                Tm[a, b] = T[size - 1 - b, size - 1 - a]
        T = Tm
    # padded so that r(-1, .) = r(., size) = 0
    A = np.zeros((size + 2, size + 2), dtype=np.int64)
    A[1:size + 1, 1:size + 1] = T
    # mu[b, d] over 0 <= b < d <= size
    mu = np.zeros((size, size + 1), dtype=np.int64)
    for b in range(size):
        r_bd = A[b + 1, b + 2:size + 2]          # r(b, d) for d = b+1 .. size
        r_bdm1 = A[b + 1, b + 1:size + 1]        # r(b, d-1)
        r_pbd = A[b, b + 2:size + 2]             # r(b-1, d)
        r_pbdm1 = A[b, b + 1:size + 1]           # r(b-1, d-1)
        mu[b, b + 1:] = (r_bdm1 - r_bd) - (r_pbdm1 - r_pbd)
    if (mu < 0).any():
        raise InternalInvariantError("negative multiplicity in Mobius inversion")
    bars = []
    for b, d in zip(*np.nonzero(mu)):
        mult = int(mu[b, d])
        if reversed_module:
            lo = size - d            # first compressed index alive
            hi_next = size - b       # compressed death index (size => infinite)
        else:
            lo, hi_next = int(b), int(d)
        birth = values[rel[lo]]
        death = INF if hi_next >= size else values[rel[hi_next]]
        bars.append(Bar(degree, birth, death, mult))
    return Barcode(bars)


def image_barcode(K: FilteredComplex, op: Operation) -> Barcode:
    """Barcode of the image persistence module of the operation."""
    R = theta_rank_function(K, op)
    return rank_to_barcode(R, K.distinct_values, reversed_module=True,
                           degree=op.target_degree)


def kernel_barcode(K: FilteredComplex, op: Operation) -> Barcode:
    """Barcode of the kernel persistence module of the operation."""
    R = kernel_rank_function(K, op)
    return rank_to_barcode(R, K.distinct_values, reversed_module=True,
                           degree=op.source_degree)


def _signal_min_death(bars: list[Bar], eps: float | None) -> float:
    if not bars:
        return 0.0
    if eps is not None:
        deaths = [b.death for b in bars if b.birth <= eps]
        return min(deaths) if deaths else 0.0
    # On a finite sample nothing is born at scale 0, so "bars born at the
    # start" is read as the signal bars: persistence at least half the
    # maximum.  (Noise is born late and dies fast; the classes of the
    # underlying space give the dominant bars.)
    pmax = max(b.death - b.birth for b in bars)
    if math.isinf(pmax):
        return min(b.death for b in bars if math.isinf(b.death))
    return min(b.death for b in bars if b.death - b.birth >= pmax / 2.0)


def homological_radius(barcode: Barcode, degree: int,
                       eps: float | None = None) -> float:
    """First death of the degree-``degree`` signal classes, at VR scale
    (the neighborhood-scale value is half of this).

    With ``eps`` given, takes the minimum death among bars born by eps
    (the exact reading for filtrations whose classes appear at the
    start); otherwise the signal bars are those of at least half the
    maximal persistence in the degree.  Returns 0 when the degree is
    empty, inf when the signal never dies.
    """
    return _signal_min_death(
        [b for b in barcode.bars if b.degree == degree], eps
    )


def theta_radius(barcode: Barcode, eps: float | None = None) -> float:
    """First death of the signal bars of an operation barcode (VR scale)."""
    return _signal_min_death(list(barcode.bars), eps)
