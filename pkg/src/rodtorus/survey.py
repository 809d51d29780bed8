"""Census of small packings on a rational grid."""
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import islice, product

from .classify import classify
from .errors import ResourceLimitExceeded
from .isotopy import CellBudget
from .lattice import canonical_sign, gcd3
from .rods import RodPacking, make_rod, rods_intersect, validate_packing

CLASSES = ("hyperbolic", "seifert_fibred", "toroidal_plane", "toroidal_annulus")
MAX_CELLS_ENV = "ROD_CLASSIFIER_MAX_CELLS"


def grid_rods(max_entry, denominator):
    """All distinct rods with direction entries in [-B, B] through (1/q)Z^3."""
    dirs = sorted({canonical_sign(d) for d in product(range(-max_entry, max_entry + 1), repeat=3)
                   if any(d) and gcd3(*d) == 1})
    grid = [Fraction(k, denominator) for k in range(denominator)]
    seen, rods = set(), []
    for d in dirs:
        for b in product(grid, repeat=3):
            r = make_rod(d, b)
            if r not in seen:
                seen.add(r)
                rods.append(r)
    return rods


def label(gv):
    if gv.hyperbolic:
        return "hyperbolic"
    if gv.seifert_fibred:
        return "seifert_fibred"
    return "toroidal_plane" if gv.witness_kind == "plane_torus" else "toroidal_annulus"


def disjoint_subsets(rods, size):
    n = len(rods)
    ok = [[i != j and not rods_intersect(rods[i], rods[j]) for j in range(n)] for i in range(n)]

    def extend(chosen, start):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for k in range(start, n):
            if all(ok[c][k] for c in chosen):
                chosen.append(k)
                yield from extend(chosen, k + 1)
                chosen.pop()

    return extend([], 0)


def _classify_chunk(args):
    rods, subsets, radius = args
    budget = CellBudget()
    out = []
    for s in subsets:
        vp = validate_packing(RodPacking(tuple(rods[k] for k in s)))
        out.append(label(classify(vp, radius=radius, budget=budget)))
    return out, budget.used


def _chunks(it, size):
    it = iter(it)
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


def run_survey(max_entry, denominator, rods=2, jobs=1, radius=16,
               max_packings=None, max_cells=None, listing=None):
    """
    Classify every packing of `rods` pairwise-disjoint grid rods.

    Returns a Counter over CLASSES.  When `listing` is a list, (subset,
    label) pairs are appended to it in enumeration order.
    """
    if max_cells is None and os.environ.get(MAX_CELLS_ENV):
        max_cells = int(os.environ[MAX_CELLS_ENV])
    pool_rods = grid_rods(max_entry, denominator)
    counts = Counter({c: 0 for c in CLASSES})
    seen = cells = 0
    blocks = _chunks(disjoint_subsets(pool_rods, rods), 256)
    work = ((pool_rods, b, radius) for b in blocks)
    if jobs > 1:
        ex = ProcessPoolExecutor(jobs)
        results = ex.map(_classify_chunk, work)
    else:
        ex = None
        results = map(_classify_chunk, work)
    blocks_again = _chunks(disjoint_subsets(pool_rods, rods), 256) if listing is not None else None
    try:
        for labels, used in results:
            seen += len(labels)
            cells += used
            if max_packings is not None and seen > max_packings:
                raise ResourceLimitExceeded(f"more than {max_packings} packings")
            if max_cells is not None and cells > max_cells:
                raise ResourceLimitExceeded(f"more than {max_cells} cells examined")
            counts.update(labels)
            if listing is not None:
                listing.extend(zip(next(blocks_again), labels))
    finally:
        if ex is not None:
            ex.shutdown(cancel_futures=True)
    return counts, pool_rods
