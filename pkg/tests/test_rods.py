import random
from fractions import Fraction as F

import pytest

from rodtorus.errors import (AllZeroVector, ExactnessError, IntersectingRods,
                             NotPrimitive)
from rodtorus.oracle import OracleConfig, intersect_bruteforce
from rodtorus.rods import (RodPacking, make_rod, rods_intersect,
                           transform_packing, validate_packing)

from helpers import (random_packing, random_rod, random_shift,
                     random_unimodular, try_validate)

O = (0, 0, 0)


def test_make_rod_strict_accepts_primitive():
    r = make_rod((1, 0, 0), O)
    assert r.direction == (1, 0, 0)
    assert r.basepoint == (0, 0, 0)


def test_make_rod_strict_rejects_gcd_two():
    with pytest.raises(NotPrimitive):
        make_rod((2, 4, 6), O)


def test_make_rod_normalize_divides():
    assert make_rod((2, 4, 6), O, mode="normalize").direction == (1, 2, 3)


def test_make_rod_zero_direction():
    with pytest.raises(AllZeroVector):
        make_rod((0, 0, 0), O)


def test_make_rod_rejects_floats():
    with pytest.raises(ExactnessError):
        make_rod((1, 0, 0), (0.5, 0, 0))
    with pytest.raises(ExactnessError):
        make_rod((1.0, 0, 0), O)


def test_make_rod_reduces_mod_one_and_canonical_sign():
    r = make_rod((-1, 0, 0), (F(3, 2), F(-1, 4), 2))
    assert r.direction == (1, 0, 0)
    assert r.basepoint == (F(1, 2), F(3, 4), 0)


def test_rod_equality_is_point_set_equality():
    a = make_rod((1, 1, 0), O)
    b = make_rod((1, 1, 0), (F(1, 3), F(1, 3), 0))
    c = make_rod((1, 1, 0), (F(1, 3), 0, 0))
    assert a == b and hash(a) == hash(b)
    assert a != c


def test_intersect_examples():
    x0 = make_rod((1, 0, 0), O)
    assert rods_intersect(x0, make_rod((0, 1, 0), O))
    assert not rods_intersect(x0, make_rod((0, 1, 0), (0, 0, F(1, 2))))
    assert rods_intersect(x0, make_rod((1, 0, 0), O))


def test_validate_axes3():
    vp = validate_packing([make_rod((1, 0, 0), O),
                           make_rod((0, 1, 0), (F(1, 2), 0, F(1, 2))),
                           make_rod((0, 0, 1), (F(1, 4), F(1, 2), 0))])
    assert vp.direction_rank == 3
    assert vp.parallel_classes == ((0,), (1,), (2,))


def test_validate_duplicate_rods():
    with pytest.raises(IntersectingRods) as e:
        validate_packing([make_rod((1, 0, 0), O), make_rod((1, 0, 0), O)])
    assert e.value.pairs == [(0, 1)]


def test_validate_reports_every_violation():
    rods = [make_rod((1, 0, 0), O), make_rod((0, 1, 0), O), make_rod((0, 0, 1), O)]
    with pytest.raises(IntersectingRods) as e:
        validate_packing(rods)
    assert e.value.pairs == [(0, 1), (0, 2), (1, 2)]


def test_validate_single_rod():
    vp = validate_packing([make_rod((1, 0, 0), O)])
    assert vp.direction_rank == 1


def test_direction_rank_examples():
    half = (0, 0, F(1, 2))
    assert validate_packing([make_rod((1, 0, 0), O)]).direction_rank == 1
    assert validate_packing([make_rod((1, 0, 0), O),
                             make_rod((0, 1, 0), half)]).direction_rank == 2
    vp = validate_packing([make_rod((1, 0, 0), O), make_rod((0, 1, 0), half),
                           make_rod((1, 1, 1), (F(1, 3), 0, F(1, 4)))])
    assert vp.direction_rank == 3


def test_intersect_symmetric_and_reflexive():
    rng = random.Random(1)
    for _ in range(300):
        r1, r2 = random_rod(rng, 3, 6), random_rod(rng, 3, 6)
        assert rods_intersect(r1, r2) == rods_intersect(r2, r1)
        assert rods_intersect(r1, r1)


def test_intersect_agrees_with_oracle():
    rng = random.Random(2)
    cfg = OracleConfig(lift_radius=8)
    hits = 0
    for k in range(500):
        r1 = random_rod(rng, 2, 4)
        # bias towards shared directions and small denominators to get hits
        r2 = random_rod(rng, 2, 4, r1.direction if k % 5 == 0 else None)
        got = rods_intersect(r1, r2)
        assert got == intersect_bruteforce(r1, r2, cfg)
        hits += got
    assert 20 < hits < 480


def test_parallel_classes_form_a_partition():
    rng = random.Random(3)
    dirs = [(1, 0, 0), (0, 1, 0), (1, 1, 1)]
    for _ in range(50):
        vp = random_packing(rng, 6, 1, 8, dirs)
        idx = sorted(i for c in vp.parallel_classes for i in c)
        assert idx == list(range(len(vp)))
        for c in vp.parallel_classes:
            assert len({vp.rods[i].direction for i in c}) == 1
        reps = [vp.rods[c[0]].direction for c in vp.parallel_classes]
        assert len(set(reps)) == len(reps)


def test_validation_invariant_under_unimodular_maps():
    rng = random.Random(4)
    for _ in range(100):
        rods = [random_rod(rng, 2, 3) for _ in range(4)]
        before = try_validate(rods)
        U, s = random_unimodular(rng), random_shift(rng)
        moved = transform_packing(RodPacking(tuple(rods)), U, s)
        after = try_validate(moved.rods)
        assert (before is None) == (after is None)
        if before is not None:
            assert before.direction_rank == after.direction_rank
            assert before.parallel_classes == after.parallel_classes
