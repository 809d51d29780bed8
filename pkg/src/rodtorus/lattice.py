"""
Exact integer lattice algebra in dimension three.

Everything here works on plain Python ints (arbitrary precision) and
fractions.Fraction; there is no floating point anywhere.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from numbers import Integral, Rational

from .errors import AllZeroVector, DegenerateSpan, ExactnessError, NotPrimitive

IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def as_int(x):
    if isinstance(x, bool) or not isinstance(x, Integral):
        raise ExactnessError(f"expected an integer, got {x!r}")
    return int(x)


def as_rat(x):
    """Coerce an int or Fraction to Fraction; anything inexact is refused."""
    if isinstance(x, bool):
        raise ExactnessError(f"expected a rational, got {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise ExactnessError(f"expected an exact rational, got {x!r}")


def as_vec(v):
    v = tuple(as_int(x) for x in v)
    if len(v) != 3:
        raise ValueError(f"expected 3 coordinates, got {len(v)}")
    return v


def xgcd(a, b):
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def gcd3(a, b, c):
    if a == 0 and b == 0 and c == 0:
        raise AllZeroVector("gcd of the zero vector is undefined")
    return gcd(gcd(a, b), c)


def canonical_sign(v):
    """Flip v so that its first nonzero entry is positive."""
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def primitive_part(v):
    g = gcd3(*v)
    return tuple(x // g for x in v)


def is_primitive(v):
    return any(v) and gcd3(*v) == 1


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def det3(rows):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def matvec(rows, v):
    return tuple(sum(r[k] * v[k] for k in range(3)) for r in rows)


def matmul(A, B):
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(3)) for j in range(3))
                 for i in range(3))


def transpose(A):
    return tuple(tuple(A[j][i] for j in range(3)) for i in range(3))


def vecmat(v, rows):
    """Row vector times matrix."""
    return tuple(sum(v[k] * rows[k][j] for k in range(3)) for j in range(3))


def _integral_inverse(rows, det):
    # adjugate / det, exact because |det| == 1
    (a, b, c), (d, e, f), (g, h, i) = rows
    adj = ((e * i - f * h, c * h - b * i, b * f - c * e),
           (f * g - d * i, a * i - c * g, c * d - a * f),
           (d * h - e * g, b * g - a * h, a * e - b * d))
    return tuple(tuple(x * det for x in r) for r in adj)


@dataclass(frozen=True)
class UnimodularMatrix3:
    rows: tuple
    inverse: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        rows = tuple(as_vec(r) for r in self.rows)
        if len(rows) != 3:
            raise ValueError("expected a 3x3 matrix")
        det = det3(rows)
        if det not in (1, -1):
            raise ValueError(f"matrix is not unimodular (det={det})")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "inverse", _integral_inverse(rows, det))

    @property
    def det(self):
        return det3(self.rows)

    def apply(self, v):
        return matvec(self.rows, v)

    def apply_inverse(self, v):
        return matvec(self.inverse, v)

    def __matmul__(self, other):
        if isinstance(other, UnimodularMatrix3):
            return UnimodularMatrix3(matmul(self.rows, other.rows))
        return NotImplemented

    def inverted(self):
        return UnimodularMatrix3(self.inverse)


def _embed2(i, j, block):
    """3x3 identity with a 2x2 block placed on coordinates i, j."""
    m = [list(r) for r in IDENTITY]
    (p, q), (r, s) = block
    m[i][i], m[i][j], m[j][i], m[j][j] = p, q, r, s
    return tuple(tuple(r) for r in m)


def _euclid_block(a, b):
    """2x2 integer matrix of det 1 sending (a, b) to (gcd(a, b), 0)."""
    x, y, g = xgcd(a, b)
    if g == 0:
        return ((1, 0), (0, 1)), 0
    return ((x, y), (-b // g, a // g)), g


def unimodular_completion(d):
    """
    Return U in GL3(Z) with U.d == (1, 0, 0).

    Built from two extended-Euclid steps: (a, b, c) -> (g, 0, c) -> (1, 0, 0).
    """
    d = as_vec(d)
    a, b, c = d
    if gcd3(a, b, c) != 1:
        raise NotPrimitive(f"{d} is not primitive")
    block1, g = _euclid_block(a, b)
    block2, _ = _euclid_block(g, c)
    U = UnimodularMatrix3(matmul(_embed2(0, 2, block2), _embed2(0, 1, block1)))
    assert U.apply(d) == (1, 0, 0)
    return U


def minors(v1, v2):
    """The three 2x2 minors of the 3x2 matrix with columns v1, v2.

    Ordered so that  det(v1 | v2 | w) == dot(minors(v1, v2), w).
    """
    return cross(v1, v2)


def _check_span(v1, v2):
    v1, v2 = as_vec(v1), as_vec(v2)
    if not any(v1) or not any(v2) or not any(cross(v1, v2)):
        raise DegenerateSpan(f"{v1} and {v2} do not span a plane")
    return v1, v2


def plane_torus_embedded(v1, v2):
    v1, v2 = _check_span(v1, v2)
    return gcd3(*minors(v1, v2)) == 1


def unimodular_extension(v1, v2):
    """
    Try to find w with det(v1 | v2 | w) == 1 via Bezout on the minors.

    Returns the matrix whose columns are v1, v2, w, or None when the minors
    have a common factor (then no integral w can exist).
    """
    v1, v2 = _check_span(v1, v2)
    m = minors(v1, v2)
    x, y, g12 = xgcd(m[0], m[1])
    z, t, g = xgcd(g12, m[2])
    if g != 1:
        return None
    w = (z * x, z * y, t)
    cols = (v1, v2, w)
    if det3(cols) != 1:
        return None
    return UnimodularMatrix3(transpose(cols))


def primitive_normal(v1, v2):
    v1, v2 = _check_span(v1, v2)
    return canonical_sign(primitive_part(cross(v1, v2)))


def direction_rank(vectors):
    """Rank over Q of a collection of integer 3-vectors."""
    vectors = [tuple(v) for v in vectors if any(v)]
    if not vectors:
        return 0
    first = vectors[0]
    second = next((v for v in vectors if any(cross(first, v))), None)
    if second is None:
        return 1
    n = cross(first, second)
    if any(dot(n, v) for v in vectors):
        return 3
    return 2
