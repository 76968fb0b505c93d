"""Wicket recognition and exact counting.

A wicket is an ordered 9-tuple (x1,y1,z1,x2,y2,z2,x3,y3,z3) of distinct
elements with x_i + y_i = z_i and x1 + x2 = x3. Counts are of ordered
tuples. The fast path fixes (x1, x2), views each leg as a choice of y_i,
and enforces the nine-element distinctness by inclusion-exclusion over the
pairwise leg coincidences (two legs can share at most one element because
the x_i are pairwise distinct), with every term a shifted vector product.
"""

from __future__ import annotations

import math
from itertools import combinations, product

import numpy as np

from .intset import IntSet

FACT9 = math.factorial(9)


def is_wicket(entries, n: int) -> bool:
    t = tuple(entries)
    if len(t) != 9 or len(set(t)) != 9:
        return False
    if any(not 1 <= e <= n for e in t):
        return False
    x1, y1, z1, x2, y2, z2, x3, y3, z3 = t
    return (
        x1 + y1 == z1 and x2 + y2 == z2 and x3 + y3 == z3 and x1 + x2 == x3
    )


def _bool_array(s: IntSet, n: int) -> np.ndarray:
    arr = np.zeros(n + 1, dtype=bool)
    arr[list(s)] = True
    return arr


def _leg(t: np.ndarray, x: int) -> np.ndarray:
    """Indicator over y of the pair {y, y+x} lying inside t."""
    out = np.zeros_like(t)
    if x < len(t) - 1:
        out[1 : len(t) - x] = t[1 : len(t) - x] & t[1 + x :]
    return out


def _deg(leg: np.ndarray, x: int) -> np.ndarray:
    """deg[e] = number of leg pairs containing the element e (0, 1 or 2)."""
    d = leg.astype(np.int64)
    out = d.copy()
    out[x:] += d[: len(d) - x]
    return out


def _shift_product_sum(p1, p2, p3, s2: int, s3: int) -> int:
    """sum over y of p1[y] * p2[y+s2] * p3[y+s3], shifts possibly negative."""
    m = len(p1)
    lo = max(0, -s2, -s3)
    hi = min(m, m - s2, m - s3)
    if hi <= lo:
        return 0
    a = p1[lo:hi]
    b = p2[lo + s2 : hi + s2]
    c = p3[lo + s3 : hi + s3]
    return int(np.sum(a & b & c))


def _disjoint_triples(x1: int, x2: int, t1: np.ndarray, t2: np.ndarray, t3: np.ndarray) -> int:
    """Ordered (y1, y2, y3) with legs pairwise disjoint, leg i inside t_i."""
    x3 = x1 + x2
    p1, p2, p3 = _leg(t1, x1), _leg(t2, x2), _leg(t3, x3)
    c1, c2, c3 = int(p1.sum()), int(p2.sum()), int(p3.sum())
    if c1 == 0 or c2 == 0 or c3 == 0:
        return 0
    d1, d2, d3 = _deg(p1, x1), _deg(p2, x2), _deg(p3, x3)

    o12 = int(np.dot(d1, d2))
    o13 = int(np.dot(d1, d3))
    o23 = int(np.dot(d2, d3))

    def pair_overlap_profile(deg_other: np.ndarray, x: int) -> np.ndarray:
        # per-y count of other-leg pairs meeting {y, y+x}
        out = deg_other.copy()
        out[: len(out) - x] += deg_other[x:]
        return out

    u12 = pair_overlap_profile(d2, x1)
    u13 = pair_overlap_profile(d3, x1)
    t_1 = int(np.sum(p1 * u12 * u13))
    u21 = pair_overlap_profile(d1, x2)
    u23 = pair_overlap_profile(d3, x2)
    t_2 = int(np.sum(p2 * u21 * u23))
    u31 = pair_overlap_profile(d1, x3)
    u32 = pair_overlap_profile(d2, x3)
    t_3 = int(np.sum(p3 * u31 * u32))

    # all three legs pairwise intersecting: the shared-element patterns fix
    # y2 = y1 + s2 and y3 = y1 + s3 with s3 - s2 a valid leg-2/3 offset
    d12_shifts = (0, -x2, x1, x1 - x2)
    d13_shifts = (0, -x3, x1, x1 - x3)
    d23_shifts = {0, -x3, x2, x2 - x3}
    q = 0
    for s2 in d12_shifts:
        for s3 in d13_shifts:
            if s3 - s2 in d23_shifts:
                q += _shift_product_sum(p1, p2, p3, s2, s3)

    return c1 * c2 * c3 - o12 * c3 - o13 * c2 - o23 * c1 + t_1 + t_2 + t_3 - q


def count_wickets(s: IntSet, chi: IntSet | None = None, method: str = "ie") -> int:
    """Ordered wicket count over s; legs restricted to chi when given."""
    if chi is not None:
        for e in chi:
            if e not in s:
                raise ValueError("chi must be a subset of s")
    if method == "enumerate":
        return sum(1 for _ in iter_wickets(s, chi))
    if method != "ie":
        raise ValueError(f"unknown method {method!r}")
    n = s.n
    base = _bool_array(chi if chi is not None else s, n)
    total = 0
    elems = s.elements()
    for x1 in elems:
        for x2 in elems:
            if x2 == x1:
                continue
            x3 = x1 + x2
            if x3 > n or x3 not in s:
                continue
            t = base.copy()
            t[x1] = t[x2] = t[x3] = False
            total += _disjoint_triples(x1, x2, t, t, t)
    return total


def iter_wickets(s: IntSet, chi: IntSet | None = None):
    """Explicit enumeration of ordered wickets (slow path, small n)."""
    n = s.n
    legs_ground = set(chi if chi is not None else s)
    elems = s.elements()
    smask = set(elems)
    for x1 in elems:
        for x2 in elems:
            if x2 == x1:
                continue
            x3 = x1 + x2
            if x3 not in smask:
                continue
            xs = {x1, x2, x3}
            legs = []
            for x in (x1, x2, x3):
                legs.append(
                    [
                        (y, y + x)
                        for y in legs_ground
                        if y + x <= n
                        and y + x in legs_ground
                        and y not in xs
                        and y + x not in xs
                    ]
                )
            for y1, z1 in legs[0]:
                e1 = {y1, z1}
                for y2, z2 in legs[1]:
                    if y2 in e1 or z2 in e1:
                        continue
                    e2 = e1 | {y2, z2}
                    for y3, z3 in legs[2]:
                        if y3 in e2 or z3 in e2:
                            continue
                        yield (x1, y1, z1, x2, y2, z2, x3, y3, z3)


def count_wickets_unordered(s: IntSet, chi: IntSet | None = None) -> int:
    """Number of distinct 9-element entry sets supporting a wicket."""
    return len({frozenset(w) for w in iter_wickets(s, chi)})


def _two_leg_disjoint(xa: int, xb: int, t: np.ndarray) -> int:
    pa, pb = _leg(t, xa), _leg(t, xb)
    ca, cb = int(pa.sum()), int(pb.sum())
    if ca == 0 or cb == 0:
        return 0
    return ca * cb - int(np.dot(_deg(pa, xa), _deg(pb, xb)))


def count_wickets_containing(u, n: int) -> int:
    """Wickets in [n]^9 whose entry set contains every element of u."""
    u_set = set(u)
    if not u_set:
        raise ValueError("u must be nonempty")
    if any(not 1 <= e <= n for e in u_set) or len(u_set) > 9:
        return 0
    full = np.ones(n + 1, dtype=bool)
    full[0] = False
    total = 0
    for x1 in range(1, n):
        for x2 in range(1, n - x1 + 1):
            if x2 == x1:
                continue
            x3 = x1 + x2
            xs = {x1, x2, x3}
            u_rest = sorted(u_set - xs)
            if len(u_rest) > 6:
                continue
            t = full.copy()
            t[[x1, x2, x3]] = False
            total += _count_required(x1, x2, t, u_rest)
    return total


def _iter_leg_groups(u_rest: list[int]):
    """All ways to split u_rest into three ordered groups of size <= 2."""
    k = len(u_rest)
    pool = set(u_rest)
    for size0 in range(min(2, k) + 1):
        for g0 in combinations(u_rest, size0):
            rest1 = sorted(pool - set(g0))
            k1 = len(rest1)
            if k1 > 4:
                continue
            for size1 in range(max(0, k1 - 2), min(2, k1) + 1):
                for g1 in combinations(rest1, size1):
                    g2 = tuple(sorted(set(rest1) - set(g1)))
                    yield [list(g0), list(g1), list(g2)]


def _count_required(x1: int, x2: int, t: np.ndarray, u_rest: list[int]) -> int:
    x3 = x1 + x2
    if not u_rest:
        return _disjoint_triples(x1, x2, t, t, t)
    xleg = (x1, x2, x3)
    n = len(t) - 1
    u_rest_set = set(u_rest)
    total = 0
    for groups in _iter_leg_groups(u_rest):
        # candidate pairs for each constrained leg
        leg_candidates: list[list[frozenset[int]] | None] = []
        feasible = True
        for i in range(3):
            g = groups[i]
            x = xleg[i]
            if not g:
                leg_candidates.append(None)
                continue
            cands = []
            if len(g) == 2:
                a, b = sorted(g)
                if b - a == x and t[a] and t[b]:
                    cands.append(frozenset((a, b)))
            else:
                a = g[0]
                for y in (a, a - x):
                    z = y + x
                    if 1 <= y and z <= n and t[y] and t[z]:
                        other = z if y == a else y
                        if other not in u_rest_set:
                            cands.append(frozenset((y, z)))
            if not cands:
                feasible = False
                break
            leg_candidates.append(cands)
        if not feasible:
            continue
        free_legs = [i for i in range(3) if leg_candidates[i] is None]
        fixed_lists = [c for c in leg_candidates if c is not None]
        for combo in product(*fixed_lists):
            used: set[int] = set()
            ok = True
            for pair in combo:
                if used & pair:
                    ok = False
                    break
                used |= pair
            if not ok:
                continue
            if not free_legs:
                total += 1
                continue
            t_free = t.copy()
            t_free[list(used | u_rest_set)] = False
            if len(free_legs) == 1:
                p = _leg(t_free, xleg[free_legs[0]])
                total += int(p.sum())
            else:
                total += _two_leg_disjoint(
                    xleg[free_legs[0]], xleg[free_legs[1]], t_free
                )
    return total


def claim_extension_bound(u_size: int, n: int) -> int:
    """Upper bound (9!)^(l+1) n^l on wickets containing a u_size-element
    set, with l = ceil((8 - u_size)/2) clamped to [0, 4]."""
    ell = max(0, min(4, math.ceil((8 - u_size) / 2)))
    return FACT9 ** (ell + 1) * n**ell
