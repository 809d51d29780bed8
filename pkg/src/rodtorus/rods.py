"""
Rods, packings and packing validation.

A rod is stored as a primitive, sign-canonical integer direction together
with a rational basepoint reduced into [0, 1)^3.  Two Rod values compare
equal when they are the same circle in the 3-torus, regardless of which
point of the circle was used as basepoint.
"""
from dataclasses import dataclass, field
from itertools import combinations

from .errors import IntersectingRods, EmptyPacking, NotPrimitive
from .fibration import frac, project_rod, quotient
from .lattice import (as_rat, as_vec, canonical_sign, cross, dot, gcd3,
                      primitive_normal, primitive_part)
from .lattice import direction_rank as _rank


@dataclass(frozen=True, eq=False)
class Rod:
    direction: tuple
    basepoint: tuple

    @property
    def key(self):
        """(direction, quotient point): a complete invariant of the circle."""
        q = quotient(self.direction)
        return self.direction, project_rod(q, self).p

    @property
    def canonical_basepoint(self):
        q = quotient(self.direction)
        p = project_rod(q, self).p
        return tuple(frac(x) for x in q.lift(p))

    def __eq__(self, other):
        if not isinstance(other, Rod):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def point(self, t):
        return tuple(b + t * d for b, d in zip(self.basepoint, self.direction))

    def __repr__(self):
        bp = ", ".join(str(x) for x in self.basepoint)
        return f"Rod({self.direction}@({bp}))"


def make_rod(direction, basepoint, mode="strict"):
    """
    Build a Rod.

    In "strict" mode a non-primitive direction is an error (such a line does
    not close up to an embedded circle in its given parametrisation).  In
    "normalize" mode the direction is divided by its gcd, which describes the
    same point set.
    """
    direction = as_vec(direction)
    g = gcd3(*direction)
    if g != 1:
        if mode == "strict":
            raise NotPrimitive(f"direction {direction} has gcd {g}")
        if mode != "normalize":
            raise ValueError(f"unknown mode {mode!r}")
        direction = primitive_part(direction)
    basepoint = tuple(as_rat(x) for x in basepoint)
    if len(basepoint) != 3:
        raise ValueError("basepoint needs 3 coordinates")
    return Rod(canonical_sign(direction), tuple(frac(x) for x in basepoint))


def parallel(r1, r2):
    return r1.direction == r2.direction


def rods_intersect(r1, r2):
    if parallel(r1, r2):
        return r1.key == r2.key
    n = primitive_normal(r1.direction, r2.direction)
    delta = [a - b for a, b in zip(r1.basepoint, r2.basepoint)]
    return dot(n, delta).denominator == 1


@dataclass(frozen=True)
class RodPacking:
    rods: tuple
    name: str = None

    def __post_init__(self):
        object.__setattr__(self, "rods", tuple(self.rods))

    def __len__(self):
        return len(self.rods)

    def __getitem__(self, i):
        return self.rods[i]

    def __iter__(self):
        return iter(self.rods)


@dataclass(frozen=True)
class ValidatedPacking:
    packing: RodPacking
    parallel_classes: tuple = field(compare=False)
    direction_rank: int = field(compare=False)

    @property
    def rods(self):
        return self.packing.rods

    def __len__(self):
        return len(self.packing.rods)

    def __getitem__(self, i):
        return self.packing.rods[i]

    def parallel_pairs(self):
        """All index pairs i < j of distinct parallel rods, in lexicographic order."""
        pairs = []
        for cls in self.parallel_classes:
            pairs.extend(combinations(cls, 2))
        return sorted(pairs)


def intersecting_pairs(rods):
    return [(i, j) for i, j in combinations(range(len(rods)), 2)
            if rods_intersect(rods[i], rods[j])]


def parallel_classes(rods):
    classes = {}
    for i, r in enumerate(rods):
        classes.setdefault(r.direction, []).append(i)
    return tuple(sorted(tuple(c) for c in classes.values()))


def validate_packing(p):
    if not isinstance(p, RodPacking):
        p = RodPacking(tuple(p))
    if not p.rods:
        raise EmptyPacking("a packing needs at least one rod")
    bad = intersecting_pairs(p.rods)
    if bad:
        raise IntersectingRods(bad)
    return ValidatedPacking(p, parallel_classes(p.rods),
                            _rank([r.direction for r in p.rods]))


def direction_rank(vp):
    return vp.direction_rank


def independence_triple(rods):
    """First (i, j, k) in lexicographic order with independent directions, or None."""
    n = len(rods)
    for i, j in combinations(range(n), 2):
        c = cross(rods[i].direction, rods[j].direction)
        if not any(c):
            continue
        for k in range(j + 1, n):
            if dot(c, rods[k].direction):
                return (i, j, k)
    return None


def transform_rod(rod, U, shift=(0, 0, 0)):
    """Image of a rod under x -> U.x + shift (U unimodular)."""
    return make_rod(U.apply(rod.direction),
                    [a + s for a, s in zip(U.apply(rod.basepoint), shift)],
                    mode="normalize")


def transform_packing(p, U, shift=(0, 0, 0)):
    rods = p.rods if isinstance(p, (RodPacking, ValidatedPacking)) else p
    return RodPacking(tuple(transform_rod(r, U, shift) for r in rods))
