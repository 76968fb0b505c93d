import random

import pytest

from schurperturb.intset import IntSet
from schurperturb.wickets import (
    claim_extension_bound,
    count_wickets,
    count_wickets_containing,
    count_wickets_unordered,
    is_wicket,
    iter_wickets,
)


def oracle_count(s: IntSet, chi: IntSet | None = None) -> int:
    """Independent nested-loop count of ordered wickets."""
    elems = s.elements()
    mem = set(elems)
    ground = set(chi) if chi is not None else mem
    total = 0
    for x1 in elems:
        for x2 in elems:
            if x1 == x2:
                continue
            x3 = x1 + x2
            if x3 not in mem:
                continue
            xs = (x1, x2, x3)
            for y1 in ground:
                z1 = y1 + x1
                if z1 not in ground or y1 in xs or z1 in xs:
                    continue
                for y2 in ground:
                    z2 = y2 + x2
                    if z2 not in ground or y2 in xs or z2 in xs:
                        continue
                    if len({y1, z1, y2, z2}) != 4:
                        continue
                    for y3 in ground:
                        z3 = y3 + x3
                        if z3 not in ground or y3 in xs or z3 in xs:
                            continue
                        if {y3, z3} & {y1, z1, y2, z2}:
                            continue
                        total += 1
    return total


class TestIsWicket:
    def test_valid(self):
        w = (1, 9, 10, 2, 11, 13, 3, 4, 7)
        assert is_wicket(w, 13)

    def test_rejects_repeats_and_bad_sums(self):
        assert not is_wicket((1, 9, 10, 2, 11, 13, 3, 4, 8), 13)  # 3+4 != 8
        assert not is_wicket((1, 9, 10, 2, 11, 13, 3, 9, 12), 13)  # repeat 9
        assert not is_wicket((1, 2, 3), 9)

    def test_range(self):
        assert not is_wicket((1, 9, 10, 2, 11, 13, 3, 4, 7), 12)


class TestCountWickets:
    def test_nine_is_zero(self):
        assert count_wickets(IntSet(9, range(1, 10))) == 0

    def test_matches_oracle_small(self):
        for n in range(1, 21):
            s = IntSet.full(n)
            assert count_wickets(s) == oracle_count(s)

    def test_matches_enumerate(self):
        rng = random.Random(5)
        for _ in range(15):
            n = rng.randint(10, 26)
            s = IntSet(n, [e for e in range(1, n + 1) if rng.random() < 0.7])
            assert count_wickets(s) == count_wickets(s, method="enumerate")

    def test_random_sets_vs_oracle(self):
        rng = random.Random(11)
        for _ in range(10):
            n = rng.randint(8, 18)
            s = IntSet(n, [e for e in range(1, n + 1) if rng.random() < 0.6])
            assert count_wickets(s) == oracle_count(s)

    def test_chi_restriction(self):
        rng = random.Random(3)
        for _ in range(8):
            n = rng.randint(10, 16)
            s = IntSet.full(n)
            chi = IntSet(n, [e for e in range(1, n + 1) if rng.random() < 0.7])
            assert count_wickets(s, chi) == oracle_count(s, chi)

    def test_chi_must_be_subset(self):
        with pytest.raises(ValueError):
            count_wickets(IntSet(10, [1, 2, 3]), IntSet(10, [4]))

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            count_wickets(IntSet(5), method="bogus")

    def test_unordered_divides_ordered(self):
        s = IntSet.full(14)
        ordered = count_wickets(s)
        unordered = count_wickets_unordered(s)
        assert unordered <= ordered
        # each entry set supports at least one ordering
        assert (ordered == 0) == (unordered == 0)

    def test_iter_yields_wickets(self):
        s = IntSet.full(13)
        seen = 0
        for w in iter_wickets(s):
            assert is_wicket(w, 13)
            seen += 1
        assert seen == count_wickets(s)


class TestCountContaining:
    def test_oracle(self):
        rng = random.Random(1)
        for _ in range(10):
            n = rng.randint(8, 14)
            u = rng.sample(range(1, n + 1), rng.randint(1, 4))
            want = sum(
                1 for w in iter_wickets(IntSet.full(n)) if set(u) <= set(w)
            )
            assert count_wickets_containing(u, n) == want

    def test_empty_u_rejected(self):
        with pytest.raises(ValueError):
            count_wickets_containing([], 10)

    def test_out_of_range_is_zero(self):
        assert count_wickets_containing([11], 10) == 0

    def test_full_tuple(self):
        w = (1, 9, 10, 2, 11, 13, 3, 4, 7)
        assert count_wickets_containing(list(w), 13) >= 1


class TestClaimBound:
    def test_formula(self):
        f9 = 362880
        assert claim_extension_bound(8, 60) == f9
        assert claim_extension_bound(9, 60) == f9
        assert claim_extension_bound(6, 60) == f9**2 * 60
        assert claim_extension_bound(1, 60) == f9**5 * 60**4

    def test_bound_holds(self):
        rng = random.Random(9)
        n = 30
        for size in range(1, 10):
            for _ in range(5):
                u = rng.sample(range(1, n + 1), size)
                assert count_wickets_containing(u, n) <= claim_extension_bound(size, n)
