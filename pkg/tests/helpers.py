"""Random packings and unimodular maps shared by the test modules."""
from fractions import Fraction

from rodtorus.catalog import CATALOG
from rodtorus.errors import IntersectingRods
from rodtorus.fibration import PointLattice, frac2, obstacle, quotient
from rodtorus.isotopy import _strips, cell_polygon
from rodtorus.lattice import UnimodularMatrix3, canonical_sign, gcd3, matmul
from rodtorus.rods import RodPacking, make_rod, validate_packing


def catalog_packing(name):
    rods = [make_rod(r["direction"], [Fraction(x) for x in r["basepoint"]])
            for r in CATALOG[name]["rods"]]
    return validate_packing(RodPacking(tuple(rods), name))


def packing(*specs):
    """packing(((1,0,0), (0,0,0)), ...) with basepoint entries as ints/strings."""
    rods = [make_rod(d, [Fraction(x) for x in b]) for d, b in specs]
    return validate_packing(rods)


def random_direction(rng, max_entry):
    while True:
        d = tuple(rng.randint(-max_entry, max_entry) for _ in range(3))
        if any(d) and gcd3(*d) == 1:
            return canonical_sign(d)


def random_basepoint(rng, denom):
    return tuple(Fraction(rng.randrange(denom), denom) for _ in range(3))


def random_rod(rng, max_entry, denom, direction=None):
    d = direction or random_direction(rng, max_entry)
    return make_rod(d, random_basepoint(rng, denom))


def try_validate(rods):
    try:
        return validate_packing(RodPacking(tuple(rods)))
    except IntersectingRods:
        return None


def random_packing(rng, n, max_entry, denom, directions=None, tries=200):
    """n pairwise-disjoint rods; directions drawn from `directions` if given."""
    for _ in range(tries):
        rods = []
        for _ in range(n):
            d = rng.choice(directions) if directions else random_direction(rng, max_entry)
            rods.append(random_rod(rng, max_entry, denom, d))
        vp = try_validate(rods)
        if vp is not None:
            return vp
    return None


def random_unimodular(rng, steps=6, size=2):
    M = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    for _ in range(steps):
        i, j = rng.sample(range(3), 2)
        E = [[int(r == c) for c in range(3)] for r in range(3)]
        E[i][j] = rng.randint(-size, size)
        M = matmul(E, M)
    if rng.random() < 0.5:
        p = rng.sample(range(3), 3)
        M = tuple(M[k] for k in p)
    if rng.random() < 0.5:
        M = (tuple(-x for x in M[0]), M[1], M[2])
    return UnimodularMatrix3(M)


def random_shift(rng, denom=8):
    return tuple(Fraction(rng.randrange(denom), denom) for _ in range(3))


def cell_extent(vp, i, j):
    """Max-norm reach of the arrangement cell around rod i, or None if unbounded."""
    q = quotient(vp.rods[i].direction)
    a = frac2(q.coords(vp.rods[i].basepoint))
    fams = [ob for k, r in enumerate(vp.rods) if k not in (i, j)
            for ob in [obstacle(q, r)] if not isinstance(ob, PointLattice)]
    poly = cell_polygon(_strips(a, fams))
    if poly is None:
        return None
    return max(max(abs(x - a[0]), abs(y - a[1])) for x, y in poly)


def random_pair_packing(rng, max_rods=6, max_entry=3, denom=8, radius=8):
    """
    A validated packing whose rods 0 and 1 are parallel, with a bounded cell
    that fits inside the given lift radius.
    """
    while True:
        d = random_direction(rng, max_entry)
        n = rng.randint(4, max_rods)
        rods = [random_rod(rng, max_entry, denom, d), random_rod(rng, max_entry, denom, d)]
        for _ in range(n - 2):
            if rng.random() < 0.2:
                rods.append(random_rod(rng, max_entry, denom, d))
            else:
                rods.append(random_rod(rng, max_entry, denom))
        vp = try_validate(rods)
        if vp is None:
            continue
        ext = cell_extent(vp, 0, 1)
        if ext is None or ext + 1 > radius:
            continue
        return vp
