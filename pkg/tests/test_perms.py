import itertools
import math

import pytest

from conftest import brute_avoiders, contains_brute
from patstat import perms


def test_inversion_set_worked_example():
    assert perms.inversion_set((4, 1, 5, 2, 3)) == frozenset(
        {(1, 2), (1, 4), (1, 5), (3, 4), (3, 5)}
    )
    assert perms.inv((4, 1, 5, 2, 3)) == 5


def test_inversions_extremes():
    assert perms.inversion_set((1, 2, 3, 4, 5)) == frozenset()
    assert perms.inversion_set((3, 2, 1)) == frozenset({(1, 2), (1, 3), (2, 3)})
    assert perms.inv(()) == 0
    for n in range(8):
        assert perms.inv(perms.decreasing(n)) == n * (n - 1) // 2


def test_descents_and_major_index():
    assert perms.descent_set((4, 1, 5, 2, 3)) == frozenset({1, 3})
    assert perms.maj((4, 1, 5, 2, 3)) == 4
    assert perms.descent_set((3, 2, 1)) == frozenset({1, 2})
    assert perms.maj((3, 2, 1)) == 3
    for n in range(6):
        assert perms.descent_set(perms.increasing(n)) == frozenset()
        assert perms.maj(perms.increasing(n)) == 0


def test_contains_examples():
    assert perms.contains((4, 3, 6, 1, 5, 2), (1, 3, 2))
    assert perms.contains((2, 4, 1, 3), ())
    assert perms.contains((), ())
    assert not perms.contains((1, 2, 3, 4, 5), (3, 2, 1))


def test_contains_matches_brute_force():
    patterns = [q for k in range(5) for q in perms.all_perms(k)]
    for n in range(6):
        for p in perms.all_perms(n):
            for pat in patterns:
                assert perms.contains(p, pat) == contains_brute(p, pat), (p, pat)


def test_avoids_all():
    assert not perms.avoids_all((4, 3, 6, 1, 5, 2), ((1, 3, 2),))
    assert perms.avoids_all((2, 4, 1, 3), ())
    # 243 inside 2413 is a 132 copy
    assert contains_brute((2, 4, 1, 3), (1, 3, 2))
    assert not perms.avoids_all((2, 4, 1, 3), ((1, 3, 2), (2, 1, 3)))


def test_parse_and_format_roundtrip():
    assert perms.parse_perm("41523") == (4, 1, 5, 2, 3)
    assert perms.parse_perm("10,1,2,3,4,5,6,7,8,9") == (10, 1, 2, 3, 4, 5, 6, 7, 8, 9)
    assert perms.parse_perm("ε") == ()
    assert perms.format_perm(()) == "ε"
    assert perms.format_perm((4, 1, 5, 2, 3)) == "41523"
    big = tuple(range(10, 0, -1))
    assert perms.parse_perm(perms.format_perm(big)) == big
    with pytest.raises(ValueError):
        perms.parse_perm("120")
    with pytest.raises(ValueError):
        perms.perm((1, 1))


def test_reverse_complement_inverse():
    assert perms.apply_symmetry("rinf", (4, 1, 5, 2, 3)) == (3, 2, 5, 1, 4)
    assert perms.apply_symmetry("r0", (4, 1, 5, 2, 3)) == (2, 5, 1, 4, 3)
    assert perms.apply_symmetry("r1", (3, 1, 2)) == perms.inverse((3, 1, 2)) == (2, 3, 1)
    assert perms.apply_symmetry("R90", (1, 3, 2)) == (2, 3, 1)
    assert perms.apply_symmetry("r∞", (2, 1)) == (1, 2)


def test_rotation_agrees_with_reflection_composition():
    # R90 must equal the vertical reflection after the diagonal one
    for n in range(6):
        for p in perms.all_perms(n):
            assert perms.apply_symmetry("R90", p) == perms.reverse(perms.inverse(p))
            assert perms.apply_symmetry("R180", p) == perms.reverse(perms.complement(p))


def test_inv_under_symmetries_exhaustive():
    for n in range(8):
        top = math.comb(n, 2)
        for p in perms.all_perms(n):
            base = perms.inv(p)
            for f in perms.INV_PRESERVING:
                assert perms.inv(perms.apply_symmetry(f, p)) == base
            for f in perms.INV_REVERSING:
                assert perms.inv(perms.apply_symmetry(f, p)) == top - base


def test_maj_under_complement_exhaustive():
    for n in range(8):
        top = math.comb(n, 2)
        for p in perms.all_perms(n):
            assert perms.maj(perms.complement(p)) == top - perms.maj(p)


def test_containment_transported_by_symmetries():
    patterns = [q for k in range(4) for q in perms.all_perms(k)]
    for n in range(7):
        for p in perms.all_perms(n):
            for pat in patterns:
                base = perms.contains(p, pat)
                for f in perms.SYMMETRIES:
                    fp = perms.apply_symmetry(f, p)
                    fpat = perms.apply_symmetry(f, pat)
                    assert perms.contains(fp, fpat) == base


def test_symmetry_group_table():
    # the eight tags are closed under composition and act accordingly
    for f in perms.SYMMETRIES:
        for g in perms.SYMMETRIES:
            h = perms.compose_symmetries(f, g)
            assert h in perms.SYMMETRIES
            for n in range(6):
                for p in perms.all_perms(n):
                    assert perms.apply_symmetry(f, perms.apply_symmetry(g, p)) == \
                        perms.apply_symmetry(h, p)


def test_unknown_symmetry_rejected():
    with pytest.raises(ValueError):
        perms.apply_symmetry("R45", (1, 2))


def test_inflate_worked_examples():
    assert perms.inflate((1, 3, 2), ((2, 1), (1,), (2, 1, 3))) == (2, 1, 6, 4, 3, 5)
    assert perms.inflate((1, 3, 2), ((), (1,), (2, 1, 3))) == (4, 2, 1, 3)


def test_inflate_singleton_identity():
    for n in range(6):
        for p in perms.all_perms(n):
            assert perms.inflate(p, ((1,),) * n) == p


def test_inflate_component_count_checked():
    with pytest.raises(ValueError):
        perms.inflate((1, 2), ((1,),))


def test_inflate_associativity_spot_checks():
    base = (2, 1, 3)
    mids = [(1, 2), (1,), (2, 1)]
    leaves = [[(1,), (2, 1)], [()], [(1, 2, 3), (1,)]]
    nested = perms.inflate(base, [perms.inflate(m, lv) for m, lv in zip(mids, leaves)])
    flat = perms.inflate(perms.inflate(base, mids), [x for lv in leaves for x in lv])
    assert nested == flat


def test_named_families():
    assert perms.named_family("max-first", 4) == (4, 1, 2, 3)
    assert perms.named_family("min-last", 4) == (2, 3, 4, 1)
    assert perms.named_family("swap-last-two", 4) == (1, 2, 4, 3)
    assert perms.named_family("increasing", 0) == ()
    assert perms.named_family("decreasing", 3) == (3, 2, 1)
    # the swapped family is the inflation of 132 by two singleton blocks
    for n in range(2, 8):
        assert perms.named_family("swap-last-two", n) == perms.inflate(
            (1, 3, 2), (perms.increasing(n - 2), (1,), (1,))
        )
    with pytest.raises(ValueError):
        perms.named_family("max-first", 0)
    with pytest.raises(ValueError):
        perms.named_family("swap-last-two", 1)
    with pytest.raises(ValueError):
        perms.named_family("zigzag", 3)


def test_maxima_minima_helpers():
    assert perms.left_right_maxima((3, 1, 2)) == (1,)
    assert perms.left_right_maxima((2, 1, 3)) == (1, 3)
    assert perms.right_left_minima((2, 3, 1)) == (3,)
    assert perms.right_left_minima((1, 2, 3)) == (1, 2, 3)
