"""
Linear isotopy between parallel rods.

Let d be the common direction of rods i and j.  A linear isotopy sweeps rod
i along a vector v, and the swept annulus is a union of whole fibres of the
d-fibration, so everything reduces to the quotient torus: rod i becomes a
point a, rod j a point b, every other rod either a point lattice (parallel
to d) or a periodic family of lines.  The sweep is legal exactly when the
segment from a to some lift of b crosses no line and passes through no
other obstacle point.

The segment crosses no line precisely when its end lies in the cell of the
line arrangement that contains a.  With two non-parallel line families the
cell is a bounded convex polygon and only finitely many lifts of b can lie
in it, so the search terminates with a definite answer.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

from .errors import (EndpointOnObstacle, NotParallelPair, ResourceLimitExceeded,
                     SameRod)
from .fibration import (LineFamily, PointLattice, QuotientTorus, frac2,
                        obstacle, quotient)
from .lattice import UnimodularMatrix3, cross

DEFAULT_RADIUS = 16


# -- exact segment predicates ------------------------------------------------

def crosses_family(a, b, fam):
    """True iff the closed segment [a, b] meets some line of the family."""
    la, lb = fam.level(a), fam.level(b)
    lo, hi = min(la, lb), max(la, lb)
    return ceil(lo) <= hi


def point_on_open_segment(a, b, p):
    """
    Return a translate p + (integer vector) lying strictly between a and b,
    or None.  Exact; scans integer positions along the longer axis.
    """
    dx, dy = b[0] - a[0], b[1] - a[1]
    axis = 0 if abs(dx) >= abs(dy) else 1
    other = 1 - axis
    da, do = (dx, dy) if axis == 0 else (dy, dx)
    if da == 0:
        return None
    lo, hi = sorted((a[axis], b[axis]))
    # integers n with lo < p[axis] + n < hi
    n0 = floor(lo - p[axis]) + 1
    n1 = ceil(hi - p[axis]) - 1
    for n in range(n0, n1 + 1):
        s = (p[axis] + n - a[axis]) / da
        y = a[other] + s * do
        if (y - p[other]).denominator == 1:
            q = [None, None]
            q[axis] = p[axis] + n
            q[other] = y
            return tuple(q)
    return None


def segment_clear(a, b, families, points):
    a = tuple(Fraction(x) for x in a)
    b = tuple(Fraction(x) for x in b)
    if a == b:
        raise ValueError("degenerate segment")
    for fam in families:
        if fam.level(a).denominator == 1 or fam.level(b).denominator == 1:
            raise EndpointOnObstacle(f"endpoint lies on line family {fam}")
    for pt in points:
        for e in (a, b):
            if (e[0] - pt.p[0]).denominator == 1 and (e[1] - pt.p[1]).denominator == 1:
                raise EndpointOnObstacle(f"endpoint lies on obstacle point {pt}")
    if any(crosses_family(a, b, fam) for fam in families):
        return False
    return all(point_on_open_segment(a, b, pt.p) is None for pt in points)


def canonical_order(a, t):
    d = (t[0] - a[0], t[1] - a[1])
    return (max(abs(d[0]), abs(d[1])), d[0], d[1])


# -- verdicts and certificates ----------------------------------------------

@dataclass(frozen=True)
class Strip:
    """k < m.x - c < k + 1 holds at the source point."""
    m: tuple
    c: Fraction
    k: int

    def contains(self, x):
        level = self.m[0] * x[0] + self.m[1] * x[1] - self.c
        return self.k < level < self.k + 1


@dataclass(frozen=True)
class Candidate:
    target: tuple
    blocker: tuple = None      # exact obstacle point on the open segment


@dataclass(frozen=True)
class CellCertificate:
    pair: tuple
    direction: tuple
    basis_change: tuple
    source: tuple
    target_base: tuple
    strips: tuple
    candidates: tuple
    bounded: bool
    vertices: tuple = ()


@dataclass(frozen=True)
class Isotopic:
    v: tuple
    target: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class NotIsotopic:
    certificate: CellCertificate


@dataclass(frozen=True)
class Undecided:
    search_radius: int


class CellBudget:
    """Counts arrangement cells examined; raises once the cap is passed."""

    def __init__(self, limit=None):
        self.limit = limit
        self.used = 0

    def spend(self, n=1):
        self.used += n
        if self.limit is not None and self.used > self.limit:
            raise ResourceLimitExceeded(f"more than {self.limit} cells examined")


# -- the arena of a parallel pair -------------------------------------------

@dataclass
class Arena:
    q: QuotientTorus
    source: tuple
    target_base: tuple
    families: list
    points: list


def check_pair(vp, i, j):
    n = len(vp.rods)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"rod index out of range: {i}, {j}")
    if i == j:
        raise SameRod(f"rods {i} and {j} are the same rod")
    if vp.rods[i].direction != vp.rods[j].direction:
        raise NotParallelPair(f"rods {i} and {j} are not parallel")


def arena(vp, i, j, q=None):
    ri, rj = vp.rods[i], vp.rods[j]
    q = q or quotient(ri.direction)
    families, points = [], []
    for k, r in enumerate(vp.rods):
        if k in (i, j):
            continue
        ob = obstacle(q, r)
        (points if isinstance(ob, PointLattice) else families).append(ob)
    return Arena(q, frac2(q.coords(ri.basepoint)), frac2(q.coords(rj.basepoint)),
                 families, points)


def _strips(source, families):
    out = {}
    for fam in families:
        level = fam.level(source)
        out[(fam.m, fam.c)] = Strip(fam.m, fam.c, floor(level))
    return sorted(out.values(), key=lambda s: (s.m, s.c))


def _independent_normals(strips):
    for s in strips:
        for t in strips:
            if s.m[0] * t.m[1] - s.m[1] * t.m[0]:
                return s, t
    return None


def _meet(m1, l1, m2, l2):
    det = m1[0] * m2[1] - m1[1] * m2[0]
    return (Fraction(l1 * m2[1] - l2 * m1[1], det),
            Fraction(m1[0] * l2 - m2[0] * l1, det))


def _clip(poly, m, bound, keep_below):
    """Clip a convex polygon by m.x <= bound (or >= bound)."""
    def inside(x):
        v = m[0] * x[0] + m[1] * x[1]
        return v <= bound if keep_below else v >= bound

    out = []
    for idx, cur in enumerate(poly):
        nxt = poly[(idx + 1) % len(poly)]
        ci, ni = inside(cur), inside(nxt)
        if ci:
            out.append(cur)
        if ci != ni:
            vc = m[0] * cur[0] + m[1] * cur[1]
            vn = m[0] * nxt[0] + m[1] * nxt[1]
            s = (bound - vc) / (vn - vc)
            out.append((cur[0] + s * (nxt[0] - cur[0]), cur[1] + s * (nxt[1] - cur[1])))
    deduped = []
    for x in out:
        if not deduped or deduped[-1] != x:
            deduped.append(x)
    if len(deduped) > 1 and deduped[0] == deduped[-1]:
        deduped.pop()
    return deduped


def cell_polygon(strips):
    """Vertices of the closure of the cell, counter-clockwise; None if unbounded."""
    pair = _independent_normals(strips)
    if pair is None:
        return None
    s, t = pair
    lo_s, hi_s = s.c + s.k, s.c + s.k + 1
    lo_t, hi_t = t.c + t.k, t.c + t.k + 1
    poly = [_meet(s.m, lo_s, t.m, lo_t), _meet(s.m, hi_s, t.m, lo_t),
            _meet(s.m, hi_s, t.m, hi_t), _meet(s.m, lo_s, t.m, hi_t)]
    if _signed_area(poly) < 0:
        poly.reverse()
    for u in strips:
        if u is s or u is t:
            continue
        poly = _clip(poly, u.m, u.c + u.k, keep_below=False)
        poly = _clip(poly, u.m, u.c + u.k + 1, keep_below=True)
    return tuple(poly)


def _signed_area(poly):
    return sum(p[0] * q[1] - q[0] * p[1] for p, q in zip(poly, poly[1:] + poly[:1]))


def _lifts_in_cell(base, strips, xrange, yrange_hint=None):
    """Integer shifts lam with base + lam strictly inside every strip, lam[0] in xrange."""
    out = []
    for lx in xrange:
        x = base[0] + lx
        lo, hi = None, None
        ok = True
        for s in strips:
            mx, my = s.m
            a0 = s.k + s.c - mx * x
            a1 = a0 + 1
            if my == 0:
                if not (a0 < 0 < a1):
                    ok = False
                    break
                continue
            l, h = sorted((a0 / my, a1 / my))
            lo = l if lo is None else max(lo, l)
            hi = h if hi is None else min(hi, h)
        if not ok:
            continue
        if lo is None:
            lo, hi = yrange_hint
            ys = range(lo, hi + 1)
        else:
            ys = range(floor(lo - base[1]) + 1, ceil(hi - base[1]))
            if yrange_hint is not None:
                ys = range(max(ys.start, yrange_hint[0]), min(ys.stop, yrange_hint[1] + 1))
        for ly in ys:
            out.append((lx, ly))
    return out


def _blocker(source, target, points):
    for pt in points:
        hit = point_on_open_segment(source, target, pt.p)
        if hit is not None:
            return hit
    return None


def decide_linear_isotopy(vp, i, j, radius=DEFAULT_RADIUS, budget=None):
    check_pair(vp, i, j)
    if budget is not None:
        budget.spend()
    ar = arena(vp, i, j)
    a, b = ar.source, ar.target_base
    strips = _strips(a, ar.families)
    poly = cell_polygon(strips)
    if poly is not None:
        xs = [p[0] for p in poly]
        xrange = range(ceil(min(xs) - b[0]), floor(max(xs) - b[0]) + 1)
        lams = _lifts_in_cell(b, strips, xrange)
    else:
        lams = _lifts_in_cell(b, strips, range(-radius, radius + 1), (-radius, radius))
    targets = sorted(((b[0] + lx, b[1] + ly) for lx, ly in lams),
                     key=lambda t: canonical_order(a, t))
    tried = []
    for t in targets:
        assert not any(s_.m[0] * t[0] + s_.m[1] * t[1] - s_.c == s_.k for s_ in strips)
        hit = _blocker(a, t, ar.points)
        if hit is None:
            return Isotopic(_sweep_vector(ar.q, a, t), t)
        tried.append(Candidate(t, hit))
    if poly is None and (targets or not _strip_band_empty(b, strips)):
        return Undecided(radius)
    cert = CellCertificate(
        pair=(i, j), direction=vp.rods[i].direction, basis_change=ar.q.basis_change.rows,
        source=a, target_base=b, strips=tuple(strips), candidates=tuple(tried),
        bounded=poly is not None, vertices=poly or ())
    return NotIsotopic(cert)


def _strip_band_empty(b, strips):
    """With all normals parallel: True iff no lift of b lies in every strip."""
    if not strips:
        return False
    m = strips[0].m
    lo = max(s.k + s.c for s in strips)
    hi = min(s.k + s.c + 1 for s in strips)
    mb = m[0] * b[0] + m[1] * b[1]
    n = floor(lo - mb) + 1
    return not (mb + n < hi)


def _sweep_vector(q, a, t):
    return q.lift((t[0] - a[0], t[1] - a[1]))


# -- independent re-checks ---------------------------------------------------

def verify_isotopy_witness(vp, i, j, v):
    """
    Re-check a linear isotopy from rod i along v ending on rod j.

    Deliberately avoids the strip/cell machinery used by the search.
    """
    try:
        check_pair(vp, i, j)
        v = tuple(Fraction(x) for x in v)
        if len(v) != 3:
            return False
        ri, rj = vp.rods[i], vp.rods[j]
        d = ri.direction
        w = [bi + vi - bj for bi, vi, bj in zip(ri.basepoint, v, rj.basepoint)]
        # w lies in R.d + Z^3 iff every entry of d x w is an integer (d primitive)
        if any(Fraction(x).denominator != 1 for x in cross(d, w)):
            return False
        q = quotient(d)
        a = q.coords(ri.basepoint)
        dv = q.coords(v)
        t = (a[0] + dv[0], a[1] + dv[1])
        if t == a:
            return False
        families, points = [], []
        for k, r in enumerate(vp.rods):
            if k in (i, j):
                continue
            ob = obstacle(q, r)
            (points if isinstance(ob, PointLattice) else families).append(ob)
        return segment_clear(a, t, families, points)
    except (EndpointOnObstacle, NotParallelPair, SameRod, IndexError, ValueError, TypeError):
        return False


def verify_certificate(vp, cert):
    """Re-verify a non-isotopy certificate from the packing alone."""
    try:
        return _verify_certificate(vp, cert)
    except (NotParallelPair, SameRod, IndexError, ValueError, TypeError, ZeroDivisionError):
        return False


def _in_strip(s, x):
    level = s.m[0] * x[0] + s.m[1] * x[1] - s.c
    return s.k < level < s.k + 1


def _verify_certificate(vp, cert):
    i, j = cert.pair
    check_pair(vp, i, j)
    d = vp.rods[i].direction
    if tuple(cert.direction) != d:
        return False
    U = UnimodularMatrix3(cert.basis_change)
    if U.apply(d) != (1, 0, 0):
        return False
    q = QuotientTorus(d, U)
    a = frac2(q.coords(vp.rods[i].basepoint))
    b = frac2(q.coords(vp.rods[j].basepoint))
    if tuple(cert.source) != a or tuple(cert.target_base) != b:
        return False

    fams, pts = set(), []
    for k, r in enumerate(vp.rods):
        if k in (i, j):
            continue
        ob = obstacle(q, r)
        if isinstance(ob, LineFamily):
            fams.add((ob.m, ob.c))
        else:
            pts.append(ob.p)
    strips = list(cert.strips)
    if {(s.m, s.c) for s in strips} != fams or len(strips) != len(fams):
        return False
    for s in strips:
        level = s.m[0] * a[0] + s.m[1] * a[1] - s.c
        if not (s.k < level < s.k + 1):
            return False

    # each recorded candidate must be a lift of b that is out of the cell or blocked
    for cand in cert.candidates:
        t = tuple(cand.target)
        if (t[0] - b[0]).denominator != 1 or (t[1] - b[1]).denominator != 1:
            return False
        if not all(_in_strip(s, t) for s in strips):
            continue
        if cand.blocker is None or not _valid_blocker(a, t, cand.blocker, pts):
            return False
    listed = {tuple(c.target) for c in cert.candidates}

    indep = None
    for s in strips:
        for t in strips:
            if s.m[0] * t.m[1] - s.m[1] * t.m[0]:
                indep = (s, t)
                break
        if indep:
            break
    if cert.bounded != (indep is not None):
        return False
    if indep is None:
        # only an empty band is a proof when the cell is unbounded
        if cert.candidates or not strips:
            return False
        m = strips[0].m
        lo = max(s.c + s.k for s in strips)
        hi = min(s.c + s.k + 1 for s in strips)
        mb = m[0] * b[0] + m[1] * b[1]
        return all(not (lo < mb + n < hi) for n in range(floor(lo - mb), ceil(hi - mb) + 1))

    # two independent strips pin m.lam to one integer each, so lam is unique
    s, t = indep
    ns = []
    for u in (s, t):
        lo = u.k + u.c - (u.m[0] * b[0] + u.m[1] * b[1])
        n = floor(lo) + 1
        if n < lo + 1:
            ns.append(n)
    if len(ns) == 2:
        det = s.m[0] * t.m[1] - s.m[1] * t.m[0]
        lx = Fraction(ns[0] * t.m[1] - ns[1] * s.m[1], det)
        ly = Fraction(s.m[0] * ns[1] - t.m[0] * ns[0], det)
        if lx.denominator == 1 and ly.denominator == 1:
            only = (b[0] + lx, b[1] + ly)
            if all(_in_strip(u, only) for u in strips) and only not in listed:
                return False
    for vtx in cert.vertices:
        for u in strips:
            level = u.m[0] * vtx[0] + u.m[1] * vtx[1] - u.c
            if not (u.k <= level <= u.k + 1):
                return False
    return True


def _valid_blocker(a, t, x, pts):
    x = tuple(Fraction(c) for c in x)
    if not any((x[0] - p[0]).denominator == 1 and (x[1] - p[1]).denominator == 1 for p in pts):
        return False
    # collinear and strictly between
    ax, ay = x[0] - a[0], x[1] - a[1]
    tx, ty = t[0] - a[0], t[1] - a[1]
    if ax * ty - ay * tx != 0:
        return False
    dotp = ax * tx + ay * ty
    return 0 < dotp < tx * tx + ty * ty
