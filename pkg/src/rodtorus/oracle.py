"""
Slow brute-force checkers, kept independent of the cell search.

isotopy_bruteforce tries every lift of the target point within a radius and
tests the straight segment against every obstacle.  intersect_bruteforce
looks for an exact common point of two rods by enumerating lattice
translates.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import floor

from .errors import NotParallelPair, SameRod
from .fibration import PointLattice, frac2, obstacle, quotient
from .isotopy import Isotopic, canonical_order, segment_clear


@dataclass(frozen=True)
class OracleConfig:
    lift_radius: int = 8
    sample_denominator: int = 16

    def __post_init__(self):
        if self.lift_radius < 1:
            raise ValueError("lift_radius must be >= 1")
        if self.sample_denominator < 2:
            raise ValueError("sample_denominator must be >= 2")


@dataclass(frozen=True)
class NotFoundWithin:
    radius: int


def isotopy_bruteforce(vp, i, j, cfg=OracleConfig()):
    if i == j:
        raise SameRod("need two distinct rods")
    ri, rj = vp.rods[i], vp.rods[j]
    if ri.direction != rj.direction:
        raise NotParallelPair(f"rods {i} and {j} are not parallel")
    q = quotient(ri.direction)
    a = frac2(q.coords(ri.basepoint))
    b = frac2(q.coords(rj.basepoint))
    families, points = [], []
    for k, r in enumerate(vp.rods):
        if k not in (i, j):
            ob = obstacle(q, r)
            (points if isinstance(ob, PointLattice) else families).append(ob)
    R = cfg.lift_radius
    targets = [(b[0] + x, b[1] + y) for x, y in product(range(-R, R + 1), repeat=2)]
    targets.sort(key=lambda t: canonical_order(a, t))
    for t in targets:
        if segment_clear(a, t, families, points):
            return Isotopic(q.lift((t[0] - a[0], t[1] - a[1])), t)
    return NotFoundWithin(R)


def _solve_meeting(r1, r2, lam):
    """Exact (s, t) with r1(s) == r2(t) + lam, or None."""
    d1, d2 = r1.direction, r2.direction
    rhs = [b2 + l - b1 for b1, b2, l in zip(r1.basepoint, r2.basepoint, lam)]
    # s*d1 - t*d2 == rhs ; solve using any invertible 2x2 subsystem
    for p, q in ((0, 1), (0, 2), (1, 2)):
        det = -d1[p] * d2[q] + d1[q] * d2[p]
        if det:
            s = Fraction(-rhs[p] * d2[q] + rhs[q] * d2[p], det)
            t = Fraction(d1[p] * rhs[q] - d1[q] * rhs[p], det)
            ok = all(s * d1[k] - t * d2[k] == rhs[k] for k in range(3))
            return (s, t) if ok else None
    # parallel directions: rhs must be a multiple of d1
    k = next(k for k in range(3) if d1[k])
    s = Fraction(rhs[k], d1[k])
    if all(s * d1[c] == rhs[c] for c in range(3)):
        return (s, Fraction(0))
    return None


def intersect_bruteforce(r1, r2, cfg=OracleConfig()):
    """
    True only when an exact common point is found.

    Parameters s, t in [0, 1) cover each circle once, so any meeting point
    differs by a translate lam with |lam|_inf <= |d1|_inf + |d2|_inf + 1.
    A float scan over a parameter grid proposes translates first; the full
    box (capped at lift_radius) is then enumerated.
    """
    bound = max(map(abs, r1.direction)) + max(map(abs, r2.direction)) + 1
    bound = min(bound, cfg.lift_radius)
    tried = set()
    n = cfg.sample_denominator
    for si, ti in product(range(n), repeat=2):
        s, t = si / n, ti / n
        p1 = [float(b) + s * d for b, d in zip(r1.basepoint, r1.direction)]
        p2 = [float(b) + t * d for b, d in zip(r2.basepoint, r2.direction)]
        lam = tuple(floor(x - y + 0.5) for x, y in zip(p1, p2))
        if lam in tried or max(map(abs, lam)) > bound:
            continue
        tried.add(lam)
        if _solve_meeting(r1, r2, lam) is not None:
            return True
    for lam in product(range(-bound, bound + 1), repeat=3):
        if lam not in tried and _solve_meeting(r1, r2, lam) is not None:
            return True
    return False
