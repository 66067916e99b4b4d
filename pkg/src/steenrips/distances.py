"""Exact bottleneck distance, brute-force oracle, stability and GH bounds.

The bottleneck distance is computed combinatorially: binary search over
the finite set of candidate costs, feasibility decided by maximum
bipartite matching (Kuhn's augmenting paths) on the diagonal-augmented
threshold graph.  No geometric approximation; acceptance tests compare
for equality against exhaustive enumeration.
"""

from __future__ import annotations

import math

import numpy as np

from .cohomology import Barcode
from .errors import InternalInvariantError, ValidationError
from .metric import FiniteMetricSpace, vr_filtration
from .operations import Operation, image_barcode

INF = math.inf


def _pair_cost(a: tuple[float, float], b: tuple[float, float]) -> float:
    """L-infinity cost of matching two bars; infinite bars only match
    each other, at the difference of births."""
    ainf, binf = math.isinf(a[1]), math.isinf(b[1])
    if ainf != binf:
        return INF
    if ainf:
        return abs(a[0] - b[0])
    return max(abs(a[0] - b[0]), abs(a[1] - b[1]))


def _unmatched_cost(a: tuple[float, float]) -> float:
    return INF if math.isinf(a[1]) else (a[1] - a[0]) / 2.0


def _max_matching(n_left: int, n_right: int, adj: list[list[int]]) -> int:
    """Size of a maximum matching (Kuhn's augmenting paths)."""
    match_right = [-1] * n_right

    def augment(u: int, seen: list[bool]) -> bool:
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                if match_right[v] == -1 or augment(match_right[v], seen):
                    match_right[v] = u
                    return True
        return False

    size = 0
    for u in range(n_left):
        if augment(u, [False] * n_right):
            size += 1
    return size


def _feasible(fa: list[tuple[float, float]], fb: list[tuple[float, float]],
              c: float) -> bool:
    """Is there a partial matching of cost <= c between finite bars?

    Diagonal-augmented formulation: left = A-bars + one diagonal slot per
    B-bar, right = B-bars + one diagonal slot per A-bar; feasibility is a
    perfect matching of the augmented graph.  Bars within c of the
    diagonal and not adjacent to any bar that must be matched can always
    pair with a diagonal slot, so they are removed up front.
    """
    must_a = [i for i, a in enumerate(fa) if _unmatched_cost(a) > c]
    must_b = [j for j, b in enumerate(fb) if _unmatched_cost(b) > c]
    keep_a = set(must_a)
    for i, a in enumerate(fa):
        if i not in keep_a and any(_pair_cost(a, fb[j]) <= c for j in must_b):
            keep_a.add(i)
    keep_b = set(must_b)
    for j, b in enumerate(fb):
        if j not in keep_b and any(_pair_cost(fa[i], b) <= c for i in must_a):
            keep_b.add(j)
    ka = [fa[i] for i in sorted(keep_a)]
    kb = [fb[j] for j in sorted(keep_b)]
    n, m = len(ka), len(kb)
    adj: list[list[int]] = []
    for a in ka:
        row = [j for j, b in enumerate(kb) if _pair_cost(a, b) <= c]
        if _unmatched_cost(a) <= c:
            row.extend(range(m, m + n))
        adj.append(row)
    for j, b in enumerate(kb):
        row = list(range(m, m + n))  # diagonal slots pair freely
        if _unmatched_cost(b) <= c:
            row.insert(0, j)
        adj.append(row)
    return _max_matching(n + m, m + n, adj) == n + m


def bottleneck(A: Barcode, B: Barcode, degree: int) -> float:
    """Exact bottleneck distance between the degree-``degree`` parts.

    Mismatched infinite-bar counts give inf (not an error).
    """
    bars_a = A.expanded(degree)
    bars_b = B.expanded(degree)
    inf_a = sorted(a for a, d in bars_a if math.isinf(d))
    inf_b = sorted(a for a, d in bars_b if math.isinf(d))
    if len(inf_a) != len(inf_b):
        return INF
    inf_cost = max((abs(x - y) for x, y in zip(inf_a, inf_b)), default=0.0)
    fa = [p for p in bars_a if not math.isinf(p[1])]
    fb = [p for p in bars_b if not math.isinf(p[1])]
    if not fa and not fb:
        return inf_cost
    candidates = {0.0}
    for p in fa + fb:
        candidates.add(_unmatched_cost(p))
    for a in fa:
        for b in fb:
            candidates.add(_pair_cost(a, b))
    ordered = sorted(candidates)
    lo, hi = 0, len(ordered) - 1
    if not _feasible(fa, fb, ordered[hi]):
        # all-unmatched is always feasible at the largest half-persistence
        raise InternalInvariantError("threshold graph not monotone")
    while lo < hi:
        mid = (lo + hi) // 2
        if _feasible(fa, fb, ordered[mid]):
            hi = mid
        else:
            lo = mid + 1
    return max(inf_cost, ordered[lo])


def bottleneck_oracle(A: Barcode, B: Barcode, degree: int) -> float:
    """Exhaustive minimum over all partial matchings (<= 7 bars per side)."""
    bars_a = A.expanded(degree)
    bars_b = B.expanded(degree)
    if len(bars_a) > 7 or len(bars_b) > 7:
        raise ValidationError("oracle limited to 7 bars per side")
    n, m = len(bars_a), len(bars_b)
    best = INF

    def recurse(i: int, used: int, cost: float):
        nonlocal best
        if cost >= best:
            return
        if i == n:
            total = cost
            for j in range(m):
                if not used >> j & 1:
                    total = max(total, _unmatched_cost(bars_b[j]))
            best = min(best, total)
            return
        recurse(i + 1, used, max(cost, _unmatched_cost(bars_a[i])))
        for j in range(m):
            if not used >> j & 1:
                recurse(i + 1, used | 1 << j,
                        max(cost, _pair_cost(bars_a[i], bars_b[j])))

    recurse(0, 0, 0.0)
    return best


def _invariant_barcodes(X: FiniteMetricSpace, degrees: list[int],
                        ops: list[Operation], max_dim: int, max_scale: float):
    from .cohomology import persistent_barcode

    K = vr_filtration(X, max_dim, max_scale)
    homology = persistent_barcode(K, max(degrees, default=0))
    images = {op: image_barcode(K, op) for op in ops}
    return homology, images


def gh_lower_bound(X: FiniteMetricSpace, Y: FiniteMetricSpace,
                   degrees: list[int], ops: list[Operation],
                   max_dim: int, max_scale: float) -> dict:
    """Per-invariant bottleneck distances and the Gromov-Hausdorff lower
    bound max(d_B) / 2, with the invariant achieving it."""
    hom_x, img_x = _invariant_barcodes(X, degrees, ops, max_dim, max_scale)
    hom_y, img_y = _invariant_barcodes(Y, degrees, ops, max_dim, max_scale)
    per_invariant = []
    for m in degrees:
        per_invariant.append({
            "invariant": f"H{m}",
            "d_B": bottleneck(hom_x, hom_y, m),
        })
    for op in ops:
        per_invariant.append({
            "invariant": f"img{op.name}@deg{op.target_degree}",
            "d_B": bottleneck(img_x[op], img_y[op], op.target_degree),
        })
    if not per_invariant:
        raise ValidationError("no invariants requested")
    best = max(per_invariant, key=lambda e: e["d_B"])
    return {
        "per_invariant": per_invariant,
        "gh_lower_bound": best["d_B"] / 2.0,
        "argmax": best["invariant"],
    }


def stability_check(X: FiniteMetricSpace, delta: float, trials: int,
                    seed: int, op: Operation, degree: int,
                    max_dim: int, max_scale: float | None = None) -> dict:
    """Perturb the metric by sup-norm <= delta and verify the stability
    inequality: every bottleneck distance must stay <= delta.

    Returns per-trial distances, the max observed ratio d_B/delta, and a
    list of violating trials (empty when the inequality holds throughout).
    """
    from .cohomology import persistent_barcode

    if delta < 0:
        raise ValidationError("delta must be nonnegative")
    rng = np.random.default_rng(seed)
    if max_scale is None:
        max_scale = X.diameter() + 2.0 * delta + 1e-9
    K = vr_filtration(X, max_dim, max_scale)
    base_h = persistent_barcode(K, degree)
    base_img = image_barcode(K, op)

    results = []
    violations = []
    for trial in range(trials):
        pert = None
        for _ in range(100):
            noise = rng.uniform(-delta, delta, size=(X.n, X.n))
            noise = np.triu(noise, 1)
            noise = noise + noise.T
            try:
                pert = FiniteMetricSpace(X.d + noise)
                break
            except ValidationError:
                continue
        if pert is None:
            raise ValidationError(
                "could not produce a valid perturbed metric after 100 tries"
            )
        Kp = vr_filtration(pert, max_dim, max_scale)
        d_h = bottleneck(base_h, persistent_barcode(Kp, degree), degree)
        d_img = bottleneck(base_img, image_barcode(Kp, op), op.target_degree)
        results.append({"trial": trial, "d_B_homology": d_h, "d_B_image": d_img})
        tol = delta + 1e-12
        if d_h > tol or d_img > tol:
            violations.append(trial)
    worst = max(
        (max(r["d_B_homology"], r["d_B_image"]) for r in results),
        default=0.0,
    )
    return {
        "delta": delta,
        "trials": trials,
        "operation": op.name,
        "degree": degree,
        "max_ratio": (worst / delta) if delta > 0 else 0.0,
        "violations": violations,
        "results": results,
        "passed": not violations,
    }
