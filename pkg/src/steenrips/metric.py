"""Finite metric spaces, metric constructions and Vietoris-Rips expansion.

Distances live in plain numpy float64 matrices.  Validation is strict:
symmetry, zero diagonal, positivity and the triangle inequality are
checked to 1e-9 and violations are hard errors, because the downstream
decomposition and stability theorems assume metrics.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import TextIO

import numpy as np

from .errors import InternalInvariantError, MetricError, ValidationError
from .simplicial import FilteredComplex, build

_TOL = 1e-9


class FiniteMetricSpace:
    """Symmetric distance matrix with zero diagonal and triangle inequality."""

    __slots__ = ("n", "d")

    def __init__(self, d):
        d = np.asarray(d, dtype=np.float64)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise MetricError("distance matrix must be square")
        n = d.shape[0]
        if n == 0:
            raise MetricError("empty metric space")
        if not np.isfinite(d).all():
            raise MetricError("distances must be finite")
        if np.abs(np.diag(d)).max(initial=0.0) > _TOL:
            raise MetricError("diagonal must be zero")
        if np.abs(d - d.T).max(initial=0.0) > _TOL:
            raise MetricError("distance matrix must be symmetric")
        off = d[~np.eye(n, dtype=bool)]
        if off.size and off.min() <= 0.0:
            raise MetricError("distinct points at non-positive distance")
        # d(x,y) <= d(x,z) + d(z,y) for all z, within tolerance
        slack = (d[:, None, :] + d[None, :, :]).min(axis=2)
        if (d > slack + _TOL).any():
            i, j = np.unravel_index(np.argmax(d - slack), d.shape)
            raise MetricError(
                f"triangle inequality fails at points ({i}, {j})"
            )
        d = d.copy()
        d.flags.writeable = False
        self.n = n
        self.d = d

    def diameter(self) -> float:
        return float(self.d.max())

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True)
class GroupAction:
    """Finite isometric action given by generator permutations."""

    space: FiniteMetricSpace
    generators: tuple[tuple[int, ...], ...]
    elements: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self):
        n = self.space.n
        for g in self.generators:
            if sorted(g) != list(range(n)):
                raise ValidationError(f"not a permutation of {n} points: {g}")
            perm = np.asarray(g)
            if np.abs(self.space.d[np.ix_(perm, perm)] - self.space.d).max() > _TOL:
                raise ValidationError("generator is not an isometry")
        identity = tuple(range(n))
        elems = {identity}
        frontier = [identity]
        while frontier:
            e = frontier.pop()
            for g in self.generators:
                h = tuple(g[i] for i in e)
                if h not in elems:
                    elems.add(h)
                    frontier.append(h)
        object.__setattr__(self, "elements", tuple(sorted(elems)))

    def orbits(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for x in range(self.space.n):
            if x in seen:
                continue
            orb = sorted({e[x] for e in self.elements})
            seen.update(orb)
            out.append(tuple(orb))
        return out


def vr_filtration(X: FiniteMetricSpace, max_dim: int, max_scale: float) -> FilteredComplex:
    """Vietoris-Rips filtration up to the given dimension and scale.

    A simplex enters at its diameter (exact IEEE max of pairwise
    distances, vertices at 0); incremental lower-neighbor expansion over
    the distance graph thresholded at max_scale.
    """
    if max_dim < 0:
        raise ValidationError("max_dim must be nonnegative")
    if not max_scale > 0:
        raise ValidationError("max_scale must be positive")
    d = X.d
    n = X.n
    lower: list[list[int]] = [
        [u for u in range(v) if d[u, v] <= max_scale] for v in range(n)
    ]
    simplices: list[tuple[tuple[int, ...], float]] = [((v,), 0.0) for v in range(n)]

    def expand(simplex: tuple[int, ...], diam: float, candidates: list[int]):
        for idx, u in enumerate(candidates):
            dd = max(diam, max(float(d[u, w]) for w in simplex))
            face = (u,) + simplex
            simplices.append((face, dd))
            if len(face) <= max_dim:
                rest = [w for w in candidates[:idx] if d[w, u] <= max_scale]
                if rest:
                    expand(face, dd, rest)

    if max_dim >= 1:
        for v in range(n):
            if lower[v]:
                expand((v,), 0.0, lower[v])
    return build(simplices)


def gluing_wedge(X: FiniteMetricSpace, x0: int, Y: FiniteMetricSpace, y0: int) -> FiniteMetricSpace:
    """Wedge of two pointed spaces: cross distances route through basepoints."""
    if not 0 <= x0 < X.n:
        raise ValidationError(f"basepoint {x0} out of range")
    if not 0 <= y0 < Y.n:
        raise ValidationError(f"basepoint {y0} out of range")
    keep = [j for j in range(Y.n) if j != y0]
    n = X.n + len(keep)
    d = np.zeros((n, n))
    d[:X.n, :X.n] = X.d
    d[X.n:, X.n:] = Y.d[np.ix_(keep, keep)]
    cross = X.d[:, x0][:, None] + Y.d[y0, keep][None, :]
    d[:X.n, X.n:] = cross
    d[X.n:, :X.n] = cross.T
    return FiniteMetricSpace(d)


def linf_product(X: FiniteMetricSpace, Y: FiniteMetricSpace) -> FiniteMetricSpace:
    """Product space with d((x,y),(x',y')) = max of factor distances.

    Point (i, j) gets index i * |Y| + j.
    """
    dx = np.kron(X.d, np.ones((Y.n, Y.n)))
    dy = np.kron(np.ones((X.n, X.n)), Y.d)
    return FiniteMetricSpace(np.maximum(dx, dy))


def quotient_metric(X: FiniteMetricSpace, action: GroupAction) -> FiniteMetricSpace:
    """Orbit space with d([x],[y]) = min over the group of d(x, g y)."""
    if action.space is not X:
        raise ValidationError("action is not an action on this space")
    orbits = action.orbits()
    k = len(orbits)
    d = np.zeros((k, k))
    for a in range(k):
        ra = orbits[a][0]
        for b in range(a + 1, k):
            val = min(float(X.d[ra, y]) for y in orbits[b])
            d[a, b] = d[b, a] = val
    try:
        return FiniteMetricSpace(d)
    except MetricError as exc:
        # cannot happen for a proper isometric action
        raise InternalInvariantError(f"quotient is not a metric: {exc}") from exc


def antipodal_action(X: FiniteMetricSpace) -> GroupAction:
    """Action swapping point k with point k + n/2 (antipodally closed samples)."""
    if X.n % 2:
        raise ValidationError("antipodal action needs an even point count")
    half = X.n // 2
    perm = tuple(list(range(half, X.n)) + list(range(half)))
    return GroupAction(X, (perm,))


def sphere_sample(n: int, radius: float, count: int, seed: int = 0,
                  antipodal_closure: bool = False) -> FiniteMetricSpace:
    """Uniform sample of the round n-sphere of the given radius.

    Gaussian normalization; geodesic distance radius * angle.  With
    antipodal_closure the antipode of every sample is appended, so the
    swap permutation is an exact isometry of the matrix.
    """
    if n < 1:
        raise ValidationError("sphere dimension must be >= 1")
    if count < 2:
        raise ValidationError("need at least two sample points")
    rng = np.random.default_rng(seed)
    pts = rng.standard_normal((count, n + 1))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    if antipodal_closure:
        pts = np.vstack([pts, -pts])
    cosines = np.clip(pts @ pts.T, -1.0, 1.0)
    d = radius * np.arccos(cosines)
    np.fill_diagonal(d, 0.0)
    d = np.minimum(d, d.T)
    return FiniteMetricSpace(d)


def circle_grid(count: int, radius: float = 1.0) -> FiniteMetricSpace:
    """count equally spaced points on a circle, geodesic distances."""
    if count < 2:
        raise ValidationError("need at least two grid points")
    d = np.zeros((count, count))
    step = 2.0 * math.pi * radius / count
    for i in range(count):
        for j in range(i + 1, count):
            m = min(j - i, count - (j - i))
            d[i, j] = d[j, i] = step * m
    return FiniteMetricSpace(d)


def projective_sample(dim: int, count: int, seed: int = 0,
                      radius: float = 2.0) -> FiniteMetricSpace:
    """Sample of real projective space: antipodal quotient of a sphere sample.

    The default sphere radius 2 makes the quotient's diameter pi*radius/2.
    """
    sphere = sphere_sample(dim, radius, count, seed, antipodal_closure=True)
    return quotient_metric(sphere, antipodal_action(sphere))


# -- file formats -----------------------------------------------------------


def load_distance_matrix(source: TextIO | str) -> FiniteMetricSpace:
    """Read the text format: first line N, then N rows of N reals."""
    text = source if isinstance(source, str) else source.read()
    tokens = text.split()
    if not tokens:
        raise ValidationError("empty distance-matrix file")
    try:
        n = int(tokens[0])
    except ValueError:
        raise ValidationError("first token must be the point count") from None
    if len(tokens) != 1 + n * n:
        raise ValidationError(
            f"expected {n * n} matrix entries, found {len(tokens) - 1}"
        )
    try:
        vals = [float(t) for t in tokens[1:]]
    except ValueError as exc:
        raise ValidationError(f"bad matrix entry: {exc}") from None
    return FiniteMetricSpace(np.asarray(vals).reshape(n, n))


def save_distance_matrix(X: FiniteMetricSpace, stream: TextIO) -> None:
    stream.write(f"{X.n}\n")
    for row in X.d:
        stream.write(" ".join(repr(float(v)) for v in row) + "\n")


def load_points_csv(source: TextIO | str) -> np.ndarray:
    """Point cloud CSV: one point per row, numeric columns."""
    text = source if isinstance(source, str) else source.read()
    rows = []
    for rec in csv.reader(io.StringIO(text)):
        if not rec or all(not cell.strip() for cell in rec):
            continue
        try:
            rows.append([float(cell) for cell in rec])
        except ValueError as exc:
            raise ValidationError(f"bad CSV value: {exc}") from None
    if not rows:
        raise ValidationError("empty point-cloud file")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ValidationError("rows have inconsistent column counts")
    return np.asarray(rows, dtype=np.float64)


def metric_from_points(points: np.ndarray, kind: str = "euclidean") -> FiniteMetricSpace:
    """Build a metric from coordinates: ``euclidean`` or ``sphere:<radius>``."""
    pts = np.asarray(points, dtype=np.float64)
    if kind == "euclidean":
        diff = pts[:, None, :] - pts[None, :, :]
        return FiniteMetricSpace(np.sqrt((diff ** 2).sum(axis=2)))
    if kind.startswith("sphere:"):
        try:
            radius = float(kind.split(":", 1)[1])
        except ValueError:
            raise ValidationError(f"bad sphere radius in {kind!r}") from None
        norms = np.linalg.norm(pts, axis=1)
        if np.abs(norms - radius).max() > 1e-6:
            raise ValidationError(
                "points are not on the sphere of the requested radius"
            )
        unit = pts / norms[:, None]
        d = radius * np.arccos(np.clip(unit @ unit.T, -1.0, 1.0))
        np.fill_diagonal(d, 0.0)
        return FiniteMetricSpace(np.minimum(d, d.T))
    raise ValidationError(f"unknown metric kind {kind!r}")
