import numpy as np
import pytest

from fwythoff import (
    CLOSED_SETS,
    BoundMismatchError,
    Convention,
    GrundyTable,
    KSequence,
    Position,
    Status,
    Variant,
    check_cover_intersect,
    check_diagonal,
    check_mex_recursion,
    check_row,
    compare_miserability,
    detect_additive_period,
    floor_phi,
    grundy,
    k_sequence,
    redundancy_witness,
    translation_probe,
    verify_characterization,
)

F = Variant.F_WYTHOFF
FR = Variant.FR_WYTHOFF
FE = Variant.FE_WYTHOFF
W = Variant.WYTHOFF
NORMAL = Convention.NORMAL
MISERE = Convention.MISERE

THEOREM_SETS = [
    ("P-normal", 0, NORMAL),
    ("G1-normal", 1, NORMAL),
    ("G2-normal", 2, NORMAL),
    ("P-misere", 0, MISERE),
    ("G1-misere", 1, MISERE),
]


class TestVerifyCharacterization:
    def test_p_set_on_small_strip(self, tables):
        t = tables.get(F, NORMAL, 9, 9)
        item = verify_characterization(t, CLOSED_SETS["P-normal"], 0)
        assert item.status is Status.PASS

    def test_value_one_cells(self, tables):
        t = tables.get(F, NORMAL, 9, 9)
        item = verify_characterization(t, CLOSED_SETS["G1-normal"], 1)
        assert item.status is Status.PASS

    def test_mismatched_query_fails_with_first_difference(self, tables):
        t = tables.get(F, NORMAL, 9, 9)
        item = verify_characterization(t, CLOSED_SETS["G2-normal"], 1)
        assert item.status is Status.FAIL
        assert item.counterexample == Position(0, 2)

    @pytest.mark.parametrize("size", [10, 16, 33])
    @pytest.mark.parametrize("label,g,convention", THEOREM_SETS)
    def test_theorem_sets_hold_at_any_strip(self, tables, label, g, convention, size):
        t = tables.get(F, convention, size, size)
        assert verify_characterization(t, CLOSED_SETS[label], g).status is Status.PASS

    def test_bound_restriction(self, tables):
        t = tables.get(F, NORMAL, 33, 33)
        item = verify_characterization(t, CLOSED_SETS["P-normal"], 0, bound=9)
        assert item.status is Status.PASS
        assert item.parameters["expected_size"] == 5

    def test_bound_beyond_strip(self, tables):
        t = tables.get(F, NORMAL, 9, 9)
        with pytest.raises(BoundMismatchError):
            verify_characterization(t, CLOSED_SETS["P-normal"], 0, bound=10)


class TestKSequence:
    def test_zero_sequence(self, tables):
        seq = k_sequence(tables.get(F, NORMAL, 9, 9), 0)
        assert list(seq.entries) == [(0, 0), (1, 1), (2, 3), (4, 6), (5, 8)]
        # row 7 is the first whose witness (7, 11) escapes the strip
        assert seq.complete_below == 7

    def test_two_sequence(self, tables):
        seq = k_sequence(tables.get(F, NORMAL, 9, 9), 2)
        assert list(seq.entries) == [(0, 2), (1, 3), (4, 4), (5, 6), (7, 9)]

    def test_nine_sequence(self, tables):
        seq = k_sequence(tables.get(F, NORMAL, 9, 9), 9)
        assert list(seq.entries) == [(0, 9), (1, 8)]

    def test_negative_k(self, tables):
        with pytest.raises(ValueError):
            k_sequence(tables.get(F, NORMAL, 9, 9), -1)

    def test_entries_strictly_increase(self, tables):
        for k in range(6):
            seq = k_sequence(tables.get(F, NORMAL, 64, 64), k)
            smalls = [p.small for p in seq.entries]
            assert all(x < y for x, y in zip(smalls, smalls[1:]))


class TestMexRecursion:
    def test_zero_sequence(self, tables):
        seq = k_sequence(tables.get(F, NORMAL, 64, 64), 0)
        assert check_mex_recursion(seq).status is Status.PASS

    def test_one_sequence_second_entry(self, tables):
        seq = k_sequence(tables.get(F, NORMAL, 64, 64), 1)
        assert list(seq.entries[:2]) == [(0, 1), (2, 2)]  # a_1 = mex{0, 1} = 2
        assert check_mex_recursion(seq).status is Status.PASS

    def test_singleton_vacuous(self):
        seq = KSequence(5, (Position(0, 5),), 9, 9, 1)
        assert check_mex_recursion(seq).status is Status.PASS

    def test_empty_rejected(self):
        seq = KSequence(99, (), 9, 9, 0)
        with pytest.raises(ValueError):
            check_mex_recursion(seq)

    def test_detects_violation(self):
        seq = KSequence(0, (Position(0, 0), Position(2, 3)), 9, 9, 3)
        item = check_mex_recursion(seq)
        assert item.status is Status.FAIL
        assert item.counterexample["expected_small"] == 1


class TestCoverIntersect:
    def test_zero_sequence(self, tables):
        seq = k_sequence(tables.get(F, NORMAL, 128, 128), 0)
        item = check_cover_intersect(seq, 50)
        assert item.status is Status.PASS
        assert item.parameters["intersection"] == [0, 1]

    def test_two_sequence(self, tables):
        seq = k_sequence(tables.get(F, NORMAL, 128, 128), 2)
        item = check_cover_intersect(seq, 50)
        assert item.status is Status.PASS
        assert item.parameters["intersection"] == [4]

    def test_effective_bound_caps_at_completeness(self, tables):
        seq = k_sequence(tables.get(F, NORMAL, 9, 9), 0)
        item = check_cover_intersect(seq, 50)
        assert item.parameters["effective_bound"] == seq.complete_below - 1

    def test_detects_gap(self):
        seq = KSequence(0, (Position(0, 0), Position(2, 3)), 9, 9, 3)
        item = check_cover_intersect(seq, 2)
        assert item.status is Status.FAIL
        assert item.counterexample == {"uncovered": 1}


class TestCheckRow:
    def test_row_zero(self, tables):
        assert check_row(tables.get(F, NORMAL, 9, 9), 0, 9).status is Status.PASS

    def test_row_two(self, tables):
        assert check_row(tables.get(F, NORMAL, 9, 9), 2, 7).status is Status.PASS

    def test_row_five_strip_too_short_for_g13(self, tables):
        # values 9..12 live beyond column 9, so coverage is undecided there
        item = check_row(tables.get(F, NORMAL, 9, 9), 5, 13)
        assert item.status is Status.INCONCLUSIVE
        assert item.parameters["missing"] == [9, 10, 11, 12]

    def test_fr_duplicate_is_hard_failure(self, tables):
        t = tables.get(FR, NORMAL, 16, 16)
        item = check_row(t, 2, 0)
        assert item.status is Status.FAIL
        assert item.counterexample["columns"] == [0, 1]

    def test_fr_existence_only_mode(self, tables):
        t = tables.get(FR, NORMAL, 16, 16)
        assert check_row(t, 2, 3, require_distinct=False).status is Status.PASS


class TestCheckDiagonal:
    def test_main_diagonal_small_strip(self, tables):
        item = check_diagonal(tables.get(F, NORMAL, 9, 9), 0, 3)
        assert item.status is Status.PASS
        assert item.parameters["scanned_from"] == 1

    def test_main_diagonal_unique_zero_at_one(self, tables):
        t = tables.get(F, NORMAL, 32, 32)
        zeros = [b for b in range(1, 33) if grundy(t, (b, b)) == 0]
        assert zeros == [1]

    def test_offset_four_zero_witness(self, tables):
        t = tables.get(F, NORMAL, 32, 32)
        assert grundy(t, (7, 11)) == 0  # b = floor_phi(4) + 1 = 7
        assert floor_phi(4) + 1 == 7
        assert check_diagonal(t, 4, 0).status is Status.PASS

    def test_detects_duplicate_on_main_diagonal(self):
        # an artificial table whose main diagonal repeats a value
        values = np.full((3, 3), -1, dtype=np.int32)
        values[0, 0] = 0
        values[1, 1] = 7
        values[2, 2] = 7
        values[0, 1] = values[0, 2] = values[1, 2] = 1
        t = GrundyTable(F, NORMAL, 2, 2, values)
        item = check_diagonal(t, 0, 0)
        assert item.status is Status.FAIL
        assert item.counterexample["value"] == 7

    def test_offset_diagonals_record_repeats_without_failing(self, tables):
        # value 3 sits at both (1, 2) and (4, 5): real repetition, not a bug
        t = tables.get(F, NORMAL, 32, 32)
        assert grundy(t, (1, 2)) == grundy(t, (4, 5)) == 3
        item = check_diagonal(t, 1, 3)
        assert item.status is not Status.FAIL
        assert item.parameters["duplicates"]["value"] == 3
        assert item.parameters["duplicates"]["b"] == [1, 4]


class TestAdditivePeriod:
    def test_row_zero_is_plus_one(self, tables):
        cert = detect_additive_period(tables.get(F, NORMAL, 4, 1024), 0)
        assert (cert.period, cert.preperiod) == (1, 0)
        assert cert.validated_upto == 1024

    def test_row_one_alternates(self, tables):
        cert = detect_additive_period(tables.get(F, NORMAL, 4, 1024), 1)
        assert (cert.period, cert.preperiod) == (2, 0)
        # independent check of the certified relation over the whole row
        row = [grundy(tables.get(F, NORMAL, 4, 1024), (1, n)) for n in range(1025)]
        assert all(row[n + 2] == row[n] + 2 for n in range(1023))

    def test_short_strip_yields_nothing(self, tables):
        assert detect_additive_period(tables.get(F, NORMAL, 9, 9), 5) is None

    def test_window_rule(self, tables):
        # a certificate must validate over at least max(2p, min_window) points
        t = tables.get(F, NORMAL, 4, 1024)
        cert = detect_additive_period(t, 3, min_window=128)
        window = (1024 - cert.period) - cert.preperiod + 1
        assert window >= max(2 * cert.period, 128)


class TestMiserability:
    def test_f_wythoff_strongly_miserable(self, tables):
        item = compare_miserability(
            tables.get(F, NORMAL, 64, 64), tables.get(F, MISERE, 64, 64)
        )
        assert item.status is Status.PASS
        assert item.parameters["classification"] == "strongly-miserable"
        assert item.parameters["strong_violations"] == 0

    def test_fr_strongly_miserable(self, tables):
        item = compare_miserability(
            tables.get(FR, NORMAL, 64, 64), tables.get(FR, MISERE, 64, 64)
        )
        assert item.parameters["classification"] == "strongly-miserable"

    def test_wythoff_miserable_not_strongly(self, tables):
        item = compare_miserability(
            tables.get(W, NORMAL, 64, 64), tables.get(W, MISERE, 64, 64)
        )
        assert item.status is Status.PASS
        assert item.parameters["classification"] == "miserable"
        assert item.parameters["strong_violations"] > 0
        witness = item.parameters["first_strong_violation"]
        assert witness["normal"] == witness["misere"]
        assert witness["normal"] in (0, 1)

    def test_neither_detected_on_synthetic_tables(self):
        values_n = np.array([[0]], dtype=np.int32)
        values_m = np.array([[5]], dtype=np.int32)
        tn = GrundyTable(F, NORMAL, 0, 0, values_n)
        tm = GrundyTable(F, MISERE, 0, 0, values_m)
        item = compare_miserability(tn, tm)
        assert item.status is Status.FAIL
        assert item.parameters["classification"] == "neither"

    def test_bound_mismatch(self, tables):
        with pytest.raises(BoundMismatchError):
            compare_miserability(
                tables.get(F, NORMAL, 64, 64), tables.get(F, MISERE, 9, 9)
            )

    def test_convention_mismatch(self, tables):
        with pytest.raises(ValueError):
            compare_miserability(
                tables.get(F, NORMAL, 9, 9), tables.get(F, NORMAL, 9, 9)
            )


class TestRedundancyWitness:
    @pytest.mark.parametrize("k", [1, 2, 5])
    def test_witnesses_pass(self, tables, k):
        t = tables.get(FR, NORMAL, 64, 64)
        item = redundancy_witness(k, t)
        assert item.status is Status.PASS
        assert item.parameters["n"] in (2, 3)
        assert item.parameters["single_pile_witness"] == Position(2, 3 + k)

    def test_requires_fr_normal_table(self, tables):
        with pytest.raises(ValueError):
            redundancy_witness(1, tables.get(F, NORMAL, 64, 64))

    def test_requires_positive_k(self, tables):
        with pytest.raises(ValueError):
            redundancy_witness(0, tables.get(FR, NORMAL, 64, 64))


class TestTranslationProbe:
    def test_recovers_theorem_forms(self, tables):
        t = tables.get(F, NORMAL, 256, 256)
        expectations = {
            0: (1, 1, ((0, 0),)),
            1: (2, 1, ((0, 1),)),
            2: (4, 2, ((0, 2), (1, 3))),
        }
        for g, (offset, start, prefix) in expectations.items():
            fit = translation_probe(k_sequence(t, g))
            assert fit is not None
            assert (fit.offset, fit.start, fit.prefix) == (offset, start, prefix)

    def test_open_values_probe_cleanly(self, tables):
        t = tables.get(F, NORMAL, 256, 256)
        for g in range(3, 7):
            fit = translation_probe(k_sequence(t, g))
            # no translated form announced at this scale; record either way
            assert fit is None or fit.offset <= 64

    def test_requires_ten_entries(self, tables):
        seq = k_sequence(tables.get(F, NORMAL, 9, 9), 0)
        with pytest.raises(ValueError):
            translation_probe(seq)
