"""
Exit criteria.  Each test prints one PASS/FAIL line; run with `pytest -s` or
look at the captured output to see them.
"""
import random
import time
from contextlib import contextmanager

from rodtorus.classify import (PlaneTorusWitness, SweptAnnulusWitness,
                               classify, transform_witness, verify_verdict)
from rodtorus.fibration import frac, quotient
from rodtorus.isotopy import (Isotopic, NotIsotopic, Undecided,
                              decide_linear_isotopy, verify_certificate,
                              verify_isotopy_witness)
from rodtorus.lattice import gcd3, minors, plane_torus_embedded, unimodular_extension
from rodtorus.oracle import NotFoundWithin, OracleConfig, isotopy_bruteforce
from rodtorus.rods import make_rod, transform_packing, validate_packing

from helpers import (catalog_packing, random_direction, random_packing,
                     random_pair_packing, random_shift, random_unimodular,
                     try_validate)


@contextmanager
def criterion(name, capsys):
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"\n[ACCEPTANCE] FAIL  {name}")
        raise
    with capsys.disabled():
        print(f"\n[ACCEPTANCE] PASS  {name}")


def timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


def test_one_and_two_rod_complements(capsys):
    with criterion("one/two rods: Seifert fibred or plane-torus toroidal, never hyperbolic", capsys):
        for name, seifert in (("single", True), ("parallel_pair", True), ("axes2", False)):
            vp = catalog_packing(name)
            gv, dt = timed(classify, vp)
            assert dt < 0.1
            assert gv.hyperbolic is False
            assert gv.seifert_fibred is seifert
            assert isinstance(gv.toroidal_witness, PlaneTorusWitness)
            assert verify_verdict(vp, gv)


def test_hyperbolicity_forward(capsys):
    with criterion("axes3 hyperbolic; isotopic_4rod toroidal with verified annulus", capsys):
        vp = catalog_packing("axes3")
        gv, dt = timed(classify, vp)
        assert dt < 0.1 and gv.hyperbolic is True
        vp = catalog_packing("isotopic_4rod")
        gv, dt = timed(classify, vp)
        assert dt < 0.1 and gv.hyperbolic is False
        w = gv.toroidal_witness
        assert isinstance(w, SweptAnnulusWitness)
        assert verify_isotopy_witness(vp, *w.pair, w.v)


DIRS_UNIT = [d for d in
             [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, -1, 0), (0, 1, 1),
              (0, 1, -1), (1, 0, 1), (1, 0, -1), (1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1)]]


def test_hyperbolicity_reverse_rank3(capsys):
    with criterion("rank 3: exactly one of hyperbolic / isotopic pair, never undecided", capsys):
        rng = random.Random(2024)
        t0 = time.perf_counter()
        seen = hyper = toroidal = 0
        while seen < 300:
            n = rng.randint(3, 5)
            denom = rng.randint(1, 4)
            # a few directions per packing so parallel pairs are common
            dirs = rng.sample(DIRS_UNIT, rng.randint(3, 4))
            vp = random_packing(rng, n, 1, denom, dirs, tries=50)
            if vp is None or vp.direction_rank != 3:
                continue
            seen += 1
            gv = classify(vp)
            assert verify_verdict(vp, gv)
            iso = []
            for i, j in vp.parallel_pairs():
                r = decide_linear_isotopy(vp, i, j)
                assert not isinstance(r, Undecided)
                if isinstance(r, Isotopic):
                    assert verify_isotopy_witness(vp, i, j, r.v)
                    iso.append((i, j))
                else:
                    assert verify_certificate(vp, r.certificate)
            assert gv.hyperbolic != bool(iso)
            hyper += gv.hyperbolic
            toroidal += bool(iso)
        assert time.perf_counter() - t0 < 60
        assert seen >= 200 and hyper > 0 and toroidal > 0


def _plant_blocker(rng, vp):
    """Add a rod parallel to rods 0, 1 over the midpoint of the found sweep."""
    r = decide_linear_isotopy(vp, 0, 1)
    if not isinstance(r, Isotopic):
        return None
    q = quotient(vp.rods[0].direction)
    a = q.coords(vp.rods[0].basepoint)
    a = (frac(a[0]), frac(a[1]))
    mid = ((a[0] + r.target[0]) / 2, (a[1] + r.target[1]) / 2)
    extra = make_rod(vp.rods[0].direction, q.lift(mid))
    return try_validate(list(vp.rods) + [extra])


def test_oracle_equivalence(capsys):
    with criterion("cell search agrees with brute force (radius 8) on random packings", capsys):
        rng = random.Random(77)
        cfg = OracleConfig(lift_radius=8)
        cases = planted = 0
        outcomes = set()
        while cases < 150:
            vp = random_pair_packing(rng, max_rods=6, max_entry=3, denom=8, radius=8)
            if cases % 4 == 0:
                blocked = _plant_blocker(rng, vp)
                if blocked is not None and len(blocked) <= 6:
                    vp = blocked
                    planted += 1
            fast = decide_linear_isotopy(vp, 0, 1)
            slow = isotopy_bruteforce(vp, 0, 1, cfg)
            if isinstance(slow, Isotopic):
                assert fast == slow
            else:
                assert isinstance(slow, NotFoundWithin)
                assert isinstance(fast, NotIsotopic)
            outcomes.add(type(fast).__name__)
            cases += 1
        assert outcomes == {"Isotopic", "NotIsotopic"}
        assert planted > 0


def test_plane_torus_predicate(capsys):
    with criterion("gcd of minors = 1 iff a det +-1 extension is built (1000 pairs)", capsys):
        rng = random.Random(28)
        done = yes = 0
        while done < 1000:
            v1 = tuple(rng.randint(-20, 20) for _ in range(3))
            v2 = tuple(rng.randint(-20, 20) for _ in range(3))
            m = minors(v1, v2)
            if not any(m):
                continue
            done += 1
            pred = plane_torus_embedded(v1, v2)
            assert pred == (gcd3(*m) == 1)
            ext = unimodular_extension(v1, v2)
            assert pred == (ext is not None and abs(ext.det) == 1)
            yes += pred
        assert 0 < yes < 1000


def test_invariance_suite(capsys):
    with criterion("verdicts invariant under GL3(Z) + translation (50 x 10)", capsys):
        rng = random.Random(99)
        packings = []
        while len(packings) < 50:
            k = len(packings)
            if k % 3 == 0:
                vp = random_pair_packing(rng, max_rods=5, max_entry=2, denom=4, radius=8)
            else:
                vp = random_packing(rng, rng.randint(1, 5), 2, 4,
                                    rng.sample(DIRS_UNIT, rng.randint(1, 4)))
            if vp is not None:
                packings.append(vp)
        for vp in packings:
            gv = classify(vp)
            for _ in range(10):
                U, s = random_unimodular(rng), random_shift(rng)
                moved = validate_packing(transform_packing(vp, U, s))
                gm = classify(moved)
                assert (gm.hyperbolic, gm.seifert_fibred, gm.witness_kind) == \
                    (gv.hyperbolic, gv.seifert_fibred, gv.witness_kind)
                assert verify_verdict(moved, gm)
                if gv.toroidal_witness is not None:
                    w = transform_witness(gv.toroidal_witness, U, s)
                    carried = type(gm)(gm.hyperbolic, gm.seifert_fibred, gm.direction_rank,
                                       w, gm.independence_triple, gm.non_isotopy_certificates)
                    assert verify_verdict(moved, carried)


def test_performance_floor(capsys):
    with criterion("<= 12 rods, entries <= 10, denominators <= 64 classify in < 1 s", capsys):
        rng = random.Random(64)
        worst = 0.0
        made = 0
        while made < 40:
            dirs = [random_direction(rng, 10) for _ in range(rng.randint(3, 6))]
            vp = random_packing(rng, 12, 10, 64, dirs, tries=20)
            if vp is None:
                continue
            made += 1
            gv, dt = timed(classify, vp)
            worst = max(worst, dt)
            assert dt < 1.0
        with capsys.disabled():
            print(f"\n[ACCEPTANCE]       worst classify time {worst * 1000:.1f} ms")
