"""
Circle fibrations of the 3-torus and projection of rods to the base 2-torus.

For a primitive direction d we fix U in GL3(Z) with U.d = e1.  In the new
coordinates the fibres are the e1-circles, the quotient coordinates are the
last two, and the deck lattice of the base is exactly Z^2.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor, gcd

from .lattice import UnimodularMatrix3, as_vec, is_primitive, unimodular_completion
from .errors import NotPrimitive


def frac(x):
    """x mod 1, in [0, 1)."""
    x = Fraction(x)
    return x - floor(x)


def frac2(p):
    return (frac(p[0]), frac(p[1]))


@dataclass(frozen=True)
class QuotientTorus:
    direction: tuple
    basis_change: UnimodularMatrix3

    def coords(self, x):
        """Quotient coordinates (in the cover R^2) of a point of R^3."""
        y = self.basis_change.apply(x)
        return (y[1], y[2])

    def lift(self, p, height=0):
        """A point of R^3 over the quotient point p."""
        return self.basis_change.apply_inverse((height, p[0], p[1]))


@lru_cache(maxsize=4096)
def quotient(direction):
    direction = as_vec(direction)
    if not is_primitive(direction):
        raise NotPrimitive(f"{direction} is not primitive")
    return QuotientTorus(direction, unimodular_completion(direction))


@dataclass(frozen=True)
class ProjectedPoint:
    p: tuple


@dataclass(frozen=True)
class ProjectedGeodesic:
    anchor: tuple
    direction2: tuple


@dataclass(frozen=True)
class LineFamily:
    """All lines {x in R^2 : m.x in c + Z}; m is a primitive normal."""
    m: tuple
    c: Fraction

    def level(self, x):
        return self.m[0] * x[0] + self.m[1] * x[1] - self.c


@dataclass(frozen=True)
class PointLattice:
    """The translates p + Z^2 of a single point."""
    p: tuple


def canonical_sign2(v):
    if v[0] < 0 or (v[0] == 0 and v[1] < 0):
        return (-v[0], -v[1])
    return tuple(v)


def project_rod(q, rod):
    d = q.basis_change.apply(rod.direction)
    anchor = frac2(q.coords(rod.basepoint))
    d2 = (d[1], d[2])
    if d2 == (0, 0):
        return ProjectedPoint(anchor)
    g = gcd(*d2)
    return ProjectedGeodesic(anchor, canonical_sign2((d2[0] // g, d2[1] // g)))


def geodesic_normal_form(g):
    dx, dy = g.direction2
    m = canonical_sign2((dy, -dx))
    return LineFamily(m, frac(m[0] * g.anchor[0] + m[1] * g.anchor[1]))


def obstacle(q, rod):
    """The lifted obstacle a rod casts on the cover of the quotient torus."""
    image = project_rod(q, rod)
    if isinstance(image, ProjectedPoint):
        return PointLattice(image.p)
    return geodesic_normal_form(image)


def lifts_to_same_point(q, x, y):
    """True when x and y in R^3 lie over the same point of the quotient torus."""
    a, b = q.coords(x), q.coords(y)
    return (a[0] - b[0]).denominator == 1 and (a[1] - b[1]).denominator == 1


def on_family(fam, x):
    return fam.level(x).denominator == 1

