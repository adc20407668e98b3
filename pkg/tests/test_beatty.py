import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fwythoff import (
    CLOSED_SETS,
    Position,
    Status,
    beatty_pair,
    check_complementarity,
    check_ratio_lemma,
    closed_set,
    floor_phi,
    floor_phi2,
    is_floor_phi_value,
    mex,
)


def witness_holds(n, a):
    # integer certificate that a == floor(phi * n)
    return (2 * a - n) ** 2 <= 5 * n * n < (2 * a - n + 2) ** 2


class TestFloorPhi:
    def test_first_values(self):
        assert [floor_phi(n) for n in range(1, 11)] == [1, 3, 4, 6, 8, 9, 11, 12, 14, 16]

    def test_known_indices(self):
        assert floor_phi(0) == 0
        assert floor_phi(2) == 3
        assert floor_phi(3) == 4

    def test_witness_inequality_sweep(self):
        for n in range(0, 2000):
            assert witness_holds(n, floor_phi(n))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            floor_phi(-1)

    @given(st.integers(0, 10**15))
    def test_witness_inequality(self, n):
        assert witness_holds(n, floor_phi(n))

    @given(st.integers(1, 10**12))
    def test_matches_high_precision_float(self, n):
        with mpmath.workdps(60):
            expected = int(mpmath.floor(mpmath.phi * n))
        assert floor_phi(n) == expected

    def test_strictly_increasing_with_gaps_one_or_two(self):
        prev = floor_phi(0)
        for n in range(1, 3000):
            cur = floor_phi(n)
            assert cur - prev in (1, 2)
            prev = cur


class TestFloorPhi2:
    def test_is_floor_phi_plus_n(self):
        for n in range(0, 3000):
            assert floor_phi2(n) == floor_phi(n) + n

    def test_examples(self):
        assert floor_phi2(0) == 0
        assert floor_phi2(1) == 2
        assert floor_phi2(4) == 10


class TestBeattyMembership:
    def test_against_enumeration(self):
        members = {floor_phi(n) for n in range(1, 400)}
        for x in range(0, 300):
            assert is_floor_phi_value(x) == (x in members)

    def test_pair_fields(self):
        pair = beatty_pair(5)
        assert (pair.n, pair.a, pair.b) == (5, 8, 13)


class TestClosedSets:
    def test_p_normal(self):
        assert closed_set("P-normal", 9) == [
            (0, 0), (1, 1), (2, 3), (4, 6), (5, 8),
        ]

    def test_g1_normal(self):
        assert closed_set("G1-normal", 9) == [
            (0, 1), (2, 2), (3, 4), (5, 7), (6, 9),
        ]

    def test_g2_normal(self):
        assert closed_set("G2-normal", 9) == [
            (0, 2), (1, 3), (4, 4), (5, 6), (7, 9),
        ]

    def test_p_misere(self):
        assert closed_set("P-misere", 9) == [
            (0, 1), (2, 2), (3, 4), (5, 7), (6, 9),
        ]

    def test_g1_misere_contains_terminal(self):
        # the terminal swaps to misere value 1, ahead of the translated tail
        assert closed_set("G1-misere", 9) == [
            (0, 0), (1, 1), (2, 3), (4, 6), (5, 8),
        ]

    def test_p_wythoff(self):
        # the next member after (4, 7) is (6, 10), not (6, 9)
        assert closed_set("P-wythoff", 9) == [(0, 0), (1, 2), (3, 5), (4, 7)]
        assert closed_set("P-wythoff", 10)[-1] == (6, 10)

    def test_unknown_label(self):
        with pytest.raises(KeyError):
            closed_set("nope", 9)

    def test_negative_bound(self):
        with pytest.raises(ValueError):
            closed_set("P-normal", -1)

    def test_members_sorted_and_strictly_increasing(self):
        for label in CLOSED_SETS:
            members = closed_set(label, 400)
            smalls = [p.small for p in members]
            assert smalls == sorted(smalls)
            assert len(set(smalls)) == len(smalls)
            assert all(p.small <= p.large for p in members)

    def test_recursive_characterization(self):
        # a_n is the mex of all earlier coordinates and b_n = a_n + n - 1
        members = closed_set("P-normal", 3000)
        seen = set()
        for n, (a, b) in enumerate(members):
            if n >= 1:
                assert a == mex(seen)
                assert b == a + n - 1
            seen.update((a, b))


class TestComplementarity:
    @pytest.mark.parametrize("bound", [1, 10, 25, 10_000])
    def test_passes(self, bound):
        assert check_complementarity(bound).status is Status.PASS

    def test_partition_of_first_ten(self):
        lower = {floor_phi(i) for i in range(1, 8)}
        upper = {floor_phi2(i) for i in range(1, 5)}
        assert {v for v in lower if v <= 10} == {1, 3, 4, 6, 8, 9}
        assert {v for v in upper if v <= 10} == {2, 5, 7, 10}

    def test_unique_shifted_form(self):
        # every a >= 2 matches exactly one of floor_phi(n) + 1, floor_phi2(n) + 1
        lower = {floor_phi(n) + 1 for n in range(1, 600)}
        upper = {floor_phi2(n) + 1 for n in range(1, 400)}
        for a in range(2, 500):
            assert (a in lower) != (a in upper)

    def test_invalid_bound(self):
        with pytest.raises(ValueError):
            check_complementarity(0)


class TestRatioLemma:
    def test_examples(self):
        assert check_ratio_lemma(1, 1, 1)
        assert check_ratio_lemma(3, 2, 1)

    def test_sweep(self):
        assert all(
            check_ratio_lemma(n, k, i)
            for n in range(1, 51)
            for k in range(1, 51)
            for i in range(1, 51)
        )

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            check_ratio_lemma(0, 1, 1)
