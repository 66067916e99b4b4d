"""Simplicial complexes, filtrations, coboundaries and cochains.

A filtered complex is stored in a single canonical order: simplices
sorted by (filtration value, dimension, lexicographic vertices).  Faces
always precede cofaces, and within every dimension the simplices appear
in nondecreasing value order, so each sublevel set is a prefix of the
canonical order in every dimension.  Cochains ride on that order: the
support of a degree-p cochain is a bit-vector indexed by the p-simplices
of its host complex.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence, TextIO

from .errors import (
    ClosureError,
    DimensionMismatchError,
    DuplicateSimplexError,
    InternalInvariantError,
    MonotonicityError,
    ValidationError,
)
from .gf2 import F2Matrix, F2Vector, PivotTable

Simplex = tuple[int, ...]


def normalize_simplex(vertices: Iterable[int]) -> Simplex:
    vs = tuple(sorted(int(v) for v in vertices))
    if not vs:
        raise ValidationError("empty vertex list")
    if any(v < 0 for v in vs):
        raise ValidationError(f"negative vertex id in {vs}")
    if len(set(vs)) != len(vs):
        raise ValidationError(f"repeated vertex in {vs}")
    return vs


class FilteredComplex:
    """Finite filtered simplicial complex in canonical order.

    Construct through :func:`build`; instances are immutable.
    """

    __slots__ = (
        "simplices",
        "values",
        "index",
        "dim_simplices",
        "dim_values",
        "dim_index",
        "distinct_values",
        "_dim_value_lists",
        "parent",
    )

    def __init__(self, simplices: Sequence[Simplex], values: Sequence[float],
                 parent: "FilteredComplex | None" = None):
        self.simplices = tuple(simplices)
        self.values = tuple(float(v) for v in values)
        self.index = {s: i for i, s in enumerate(self.simplices)}
        top = max((len(s) for s in self.simplices), default=0)
        by_dim: list[list[Simplex]] = [[] for _ in range(top)]
        val_by_dim: list[list[float]] = [[] for _ in range(top)]
        for s, v in zip(self.simplices, self.values):
            by_dim[len(s) - 1].append(s)
            val_by_dim[len(s) - 1].append(v)
        self.dim_simplices = tuple(tuple(ss) for ss in by_dim)
        self.dim_values = tuple(tuple(vv) for vv in val_by_dim)
        self.dim_index = tuple(
            {s: i for i, s in enumerate(ss)} for ss in self.dim_simplices
        )
        seen: list[float] = []
        for v in self.values:
            if not seen or v > seen[-1]:
                seen.append(v)
        self.distinct_values = tuple(seen)
        self._dim_value_lists = tuple(list(vv) for vv in self.dim_values)
        self.parent = parent

    # -- basic queries -------------------------------------------------

    def __len__(self) -> int:
        return len(self.simplices)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FilteredComplex)
                and self.simplices == other.simplices
                and self.values == other.values)

    def __hash__(self):
        return hash((self.simplices, self.values))

    @property
    def dimension(self) -> int:
        return len(self.dim_simplices) - 1

    @property
    def num_values(self) -> int:
        return len(self.distinct_values)

    def n_simplices(self, p: int) -> int:
        if 0 <= p < len(self.dim_simplices):
            return len(self.dim_simplices[p])
        return 0

    def count_at(self, p: int, i: int) -> int:
        """Number of p-simplices with value <= the i-th distinct value."""
        if not 0 <= p < len(self.dim_simplices):
            return 0
        return bisect_right(self._dim_value_lists[p], self.distinct_values[i])

    def euler_characteristic(self) -> int:
        return sum((-1) ** p * self.n_simplices(p)
                   for p in range(len(self.dim_simplices)))

    def value_of(self, simplex: Iterable[int]) -> float:
        return self.values[self.index[normalize_simplex(simplex)]]

    def is_prefix_of(self, other: "FilteredComplex") -> bool:
        n = len(self.simplices)
        return (n <= len(other.simplices)
                and other.simplices[:n] == self.simplices
                and other.values[:n] == self.values)


def build(filtered_simplices: Iterable[tuple[Iterable[int], float]]) -> FilteredComplex:
    """Validate and canonically sort a list of (vertex list, value) pairs.

    Raises ClosureError, MonotonicityError or DuplicateSimplexError on a
    bad filtration.  Rebuilding from any permutation of the same pairs
    yields an identical complex.
    """
    entries: dict[Simplex, float] = {}
    for vertices, value in filtered_simplices:
        s = normalize_simplex(vertices)
        if s in entries:
            raise DuplicateSimplexError(f"simplex {s} listed twice")
        value = float(value)
        if value != value or value in (float("inf"), float("-inf")):
            raise ValidationError(f"filtration value of {s} must be finite")
        entries[s] = value
    order = sorted(entries, key=lambda s: (entries[s], len(s), s))
    for s in order:
        if len(s) == 1:
            continue
        for facet in combinations(s, len(s) - 1):
            if facet not in entries:
                raise ClosureError(f"{s} present without its face {facet}")
            if entries[facet] > entries[s]:
                raise MonotonicityError(
                    f"face {facet} (value {entries[facet]}) enters after "
                    f"{s} (value {entries[s]})"
                )
    return FilteredComplex(order, [entries[s] for s in order])


def sublevel(K: FilteredComplex, i: int) -> FilteredComplex:
    """Prefix complex of everything with value <= the i-th distinct value."""
    if not 0 <= i < K.num_values:
        raise ValidationError(
            f"filtration index {i} out of range [0, {K.num_values})"
        )
    t = K.distinct_values[i]
    n = bisect_right(K.values, t)
    root = K.parent if K.parent is not None else K
    return FilteredComplex(K.simplices[:n], K.values[:n], parent=root)


@dataclass(frozen=True)
class Cochain:
    """F2 cochain: bit i of ``bits`` is the value on the i-th p-simplex."""

    host: FilteredComplex
    degree: int
    bits: int = 0

    def __post_init__(self):
        n = self.host.n_simplices(self.degree)
        if self.bits < 0 or self.bits >> n:
            raise DimensionMismatchError(
                f"support does not fit the {n} simplices of degree {self.degree}"
            )

    @property
    def support(self) -> F2Vector:
        return F2Vector(self.host.n_simplices(self.degree), self.bits)

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def value_on(self, simplex: Iterable[int]) -> int:
        pos = self.host.dim_index[self.degree][normalize_simplex(simplex)]
        return (self.bits >> pos) & 1

    def __xor__(self, other: "Cochain") -> "Cochain":
        if self.host is not other.host or self.degree != other.degree:
            raise DimensionMismatchError("cochains on different hosts/degrees")
        return Cochain(self.host, self.degree, self.bits ^ other.bits)

    __add__ = __xor__

    def simplices(self) -> tuple[Simplex, ...]:
        sims = self.host.dim_simplices[self.degree]
        return tuple(sims[i] for i in self.support.support())


def zero_cochain(K: FilteredComplex, p: int) -> Cochain:
    return Cochain(K, p, 0)


def cochain_from_simplices(K: FilteredComplex, p: int,
                           simplices: Iterable[Iterable[int]]) -> Cochain:
    bits = 0
    for s in simplices:
        bits ^= 1 << K.dim_index[p][normalize_simplex(s)]
    return Cochain(K, p, bits)


def coboundary_columns(K: FilteredComplex, p: int) -> list[int]:
    """Bit-packed columns of delta_p, one per p-simplex, rows (p+1)-simplices."""
    n_src = K.n_simplices(p)
    cols = [0] * n_src
    if p + 1 > K.dimension:
        return cols
    src_index = K.dim_index[p]
    for row, tau in enumerate(K.dim_simplices[p + 1]):
        bit = 1 << row
        for facet in combinations(tau, p + 1):
            cols[src_index[facet]] |= bit
    return cols


def coboundary_matrix(K: FilteredComplex, p: int) -> F2Matrix:
    """Matrix of delta: C^p -> C^{p+1} in the canonical simplex order."""
    if p < 0:
        raise ValidationError("degree must be nonnegative")
    return F2Matrix(K.n_simplices(p + 1), tuple(coboundary_columns(K, p)))


def coboundary(c: Cochain) -> Cochain:
    """Apply delta to a cochain."""
    cols = coboundary_columns(c.host, c.degree)
    acc, bits = 0, c.bits
    while bits:
        i = (bits & -bits).bit_length() - 1
        acc ^= cols[i]
        bits &= bits - 1
    return Cochain(c.host, c.degree + 1, acc)


def restrict_cochain(c: Cochain, K_i: FilteredComplex) -> Cochain:
    """Pull a cochain back along the inclusion of a sublevel complex."""
    if not K_i.is_prefix_of(c.host):
        raise DimensionMismatchError(
            "target complex is not a sublevel of the cochain's host"
        )
    n = K_i.n_simplices(c.degree)
    return Cochain(K_i, c.degree, c.bits & ((1 << n) - 1))


# -- reference spaces ------------------------------------------------------


def _icosahedron() -> tuple[list[tuple[float, float, float]], list[tuple[int, int, int]]]:
    phi = (1.0 + 5.0 ** 0.5) / 2.0
    verts: list[tuple[float, float, float]] = []
    for a in (1.0, -1.0):
        for b in (phi, -phi):
            verts.append((0.0, a, b))
            verts.append((a, b, 0.0))
            verts.append((b, 0.0, a))
    # edges join vertices at squared distance 4
    def d2(u, v):
        return sum((x - y) ** 2 for x, y in zip(u, v))

    n = len(verts)
    adj = [[j for j in range(n) if j != i and abs(d2(verts[i], verts[j]) - 4.0) < 1e-9]
           for i in range(n)]
    faces = []
    for i in range(n):
        for j in adj[i]:
            if j <= i:
                continue
            for k in adj[j]:
                if k <= j or k not in adj[i]:
                    continue
                faces.append((i, j, k))
    return verts, faces


def rp2_complex() -> FilteredComplex:
    """Minimal 6-vertex triangulation of the projective plane, all values 0.

    Built as the antipodal quotient of the icosahedron and self-validated:
    Euler characteristic 1, F2 Betti numbers (1, 1, 1), every edge has
    exactly two cofacing triangles.
    """
    verts, faces = _icosahedron()
    if len(verts) != 12 or len(faces) != 20:
        raise InternalInvariantError("icosahedron construction failed")
    antipode = {}
    for i, v in enumerate(verts):
        for j, w in enumerate(verts):
            if all(abs(x + y) < 1e-9 for x, y in zip(v, w)):
                antipode[i] = j
    orbit_of: dict[int, int] = {}
    for i in range(12):
        if i not in orbit_of:
            label = len(set(orbit_of.values()))
            orbit_of[i] = label
            orbit_of[antipode[i]] = label
    quotient_faces = {tuple(sorted({orbit_of[v] for v in f})) for f in faces}
    if len(quotient_faces) != 10 or any(len(f) != 3 for f in quotient_faces):
        raise InternalInvariantError("icosahedron quotient is not 10 triangles")

    simplices: list[tuple[Simplex, float]] = [((v,), 0.0) for v in range(6)]
    edges = {e for f in quotient_faces for e in combinations(f, 2)}
    simplices += [(e, 0.0) for e in sorted(edges)]
    simplices += [(f, 0.0) for f in sorted(quotient_faces)]
    K = build(simplices)

    if K.euler_characteristic() != 1:
        raise InternalInvariantError("quotient is not RP2: wrong Euler characteristic")
    cofaces: dict[Simplex, int] = {e: 0 for e in edges}
    for f in quotient_faces:
        for e in combinations(f, 2):
            cofaces[e] += 1
    if any(c != 2 for c in cofaces.values()):
        raise InternalInvariantError("quotient is not a closed surface")
    # F2 Betti numbers via coboundary ranks
    ranks = []
    for p in range(3):
        table = PivotTable()
        for col in coboundary_columns(K, p):
            table.insert(col)
        ranks.append(len(table))
    betti = [K.n_simplices(p) - ranks[p] - (ranks[p - 1] if p else 0)
             for p in range(3)]
    if betti != [1, 1, 1]:
        raise InternalInvariantError(f"quotient has Betti {betti}, expected (1,1,1)")
    return K


# -- text format -----------------------------------------------------------


def load_complex(source: TextIO | str) -> FilteredComplex:
    """Read the one-simplex-per-line text format: ``value v0 v1 ... vk``.

    ``#`` starts a comment; blank lines are ignored.  The simplices are
    sorted and validated by :func:`build`.
    """
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = source.read().splitlines()
    entries = []
    for ln, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ValidationError(f"line {ln}: need a value and at least one vertex")
        try:
            value = float(parts[0])
            vertices = [int(t) for t in parts[1:]]
        except ValueError as exc:
            raise ValidationError(f"line {ln}: {exc}") from None
        entries.append((vertices, value))
    return build(entries)


def dump_complex(K: FilteredComplex, stream: TextIO) -> None:
    """Write the canonical form of the text format (round-trips exactly)."""
    for s, v in zip(K.simplices, K.values):
        stream.write(f"{v!r} " + " ".join(str(x) for x in s) + "\n")
