import math

import pytest
from hypothesis import given, strategies as st

from kralcove.columns import (
    Filling,
    KNColumn,
    SplitPair,
    column_alphabet,
    enumerate_KR,
    enumerate_kn_columns,
    enumerate_tensor,
    extend,
    filling_from_json,
    filling_to_json,
    format_column,
    format_filling,
    parse_column,
    parse_filling,
    split,
    unsplit,
    validate_kn,
)
from kralcove.weyl import LieType, letter_key

A3 = LieType("A", 3)
A4 = LieType("A", 4)
B2 = LieType("B", 2)
B3 = LieType("B", 3)
B6 = LieType("B", 6)
B8 = LieType("B", 8)
C2 = LieType("C", 2)
C3 = LieType("C", 3)
D4 = LieType("D", 4)


class TestValidity:
    def test_b6_column_with_repeated_zero(self):
        assert validate_kn(B6, (2, 3, 0, 0, -2))

    def test_pair_condition(self):
        # 1 and 1-bar adjacent: a + b = 2 > 1
        assert not validate_kn(C2, (1, -1))
        assert validate_kn(C2, (2, -2))
        assert not validate_kn(D4, (1, -1))
        assert validate_kn(D4, (4, -4))

    def test_d_alternation(self):
        assert validate_kn(D4, (-4, 4))
        assert not validate_kn(D4, (4, 4))
        assert not validate_kn(D4, (-3, 3))
        # pair condition for 4 reads off the single occurrences: 3 + 3 > 4
        assert not validate_kn(D4, (3, -4, 4, -3))

    def test_d_alternating_run_uses_extreme_occurrences(self):
        D5 = LieType("D", 5)
        assert validate_kn(D5, (5, -5, 5))
        assert validate_kn(D5, (-5, 5, -5))

    def test_zero_only_in_b(self):
        assert validate_kn(B2, (0, 0))
        assert not validate_kn(C2, (0,))
        assert not validate_kn(D4, (0,))
        assert not validate_kn(A3, (0,))

    def test_a_rejects_bars(self):
        assert validate_kn(A3, (1, 3))
        assert not validate_kn(A3, (1, -3))

    def test_strictly_increasing(self):
        assert not validate_kn(B3, (2, 1))
        assert not validate_kn(B3, (1, 1))
        assert not validate_kn(B3, (-1, -2))
        assert validate_kn(B3, (2, 0, -2))

    def test_out_of_range_letter(self):
        assert not validate_kn(B2, (3,))

    def test_kn_column_constructor_validates(self):
        KNColumn(C2, (2, -2))
        with pytest.raises(ValueError):
            KNColumn(C2, (1, -1))


class TestEnumeration:
    def test_b2_height_one(self):
        cols = enumerate_kn_columns(B2, 1)
        assert [c.entries for c in cols] == [(1,), (2,), (0,), (-2,), (-1,)]

    def test_small_counts(self):
        assert len(enumerate_kn_columns(C2, 2)) == 5
        assert len(enumerate_kn_columns(C2, 1)) == 4
        assert len(enumerate_kn_columns(B3, 1)) == 7

    def test_d4_adjoint_column_count(self):
        # dim of the second fundamental crystal of D4 (exterior square
        # of the 8-dimensional vector representation)
        assert len(enumerate_kn_columns(D4, 2)) == 28

    def test_type_a_counts_are_binomial(self):
        for h in range(5):
            assert len(enumerate_kn_columns(A4, h)) == math.comb(4, h)

    def test_lex_order(self):
        for lt in (B3, C3, D4):
            for h in (1, 2):
                cols = enumerate_kn_columns(lt, h)
                keys = [
                    tuple(letter_key(x, lt.rank) for x in c.entries) for c in cols
                ]
                assert keys == sorted(keys)
                assert len(set(keys)) == len(keys)

    def test_height_zero(self):
        assert [c.entries for c in enumerate_kn_columns(B3, 0)] == [()]

    def test_height_out_of_range(self):
        with pytest.raises(ValueError):
            enumerate_kn_columns(B3, 4)
        with pytest.raises(ValueError):
            enumerate_kn_columns(B3, -1)


class TestSplit:
    def test_b8_worked_example(self):
        pair = split(B8, (5, 0, -8, -5))
        assert pair == SplitPair((4, 7, -8, -5), (5, -8, -7, -4), 4, False)

    def test_paired_letter(self):
        assert split(C2, (2, -2)) == SplitPair((1, -2), (2, -1), 2, False)

    def test_untouched_column(self):
        pair = split(C2, (2, -1))
        assert pair.left == pair.right == (2, -1)

    def test_zero_substitute_ignores_paired_bound(self):
        # the substitute for 0 may exceed the paired letter 2
        pair = split(B3, (2, 0, -2))
        assert pair == SplitPair((1, 3, -2), (2, -3, -1), 3, False)

    def test_two_zeros(self):
        assert split(B2, (0, 0)) == SplitPair((1, 2), (-2, -1), 2, False)

    def test_d4_extreme_pair_orders_stay_distinct(self):
        assert split(D4, (4, -4)) == SplitPair((3, 4), (-4, -3), 2, False)
        assert split(D4, (-4, 4)) == SplitPair((3, -4), (4, -3), 2, False)

    def test_type_a_is_diagonal(self):
        pair = split(A3, (1, 3))
        assert pair.left == pair.right == (1, 3)

    def test_unsplittable(self):
        with pytest.raises(ValueError, match="not splittable"):
            split(C2, (1, -1))

    def test_split_output_has_no_pairs_or_zeros(self):
        for lt in (B2, B3, C2, C3, D4):
            for h in range(lt.rank + 1):
                for col in enumerate_kn_columns(lt, h):
                    pair = split(lt, col)
                    for half in (pair.left, pair.right):
                        assert 0 not in half
                        assert not any(-x in half for x in half)
                    assert {abs(x) for x in pair.left} == {
                        abs(x) for x in pair.right
                    }

    def test_split_is_injective(self):
        for lt in (B2, B3, C2, C3, D4):
            for h in range(lt.rank + 1):
                cols = enumerate_kn_columns(lt, h)
                pairs = {split(lt, c) for c in cols}
                assert len(pairs) == len(cols)


class TestUnsplit:
    def test_roundtrip_exhaustive(self):
        for lt in (LieType("A", 4), B2, B3, LieType("B", 4), C2, C3, LieType("C", 4)):
            top = lt.rank if lt.family != "A" else lt.rank - 1
            for h in range(top + 1):
                for col in enumerate_kn_columns(lt, h):
                    assert unsplit(lt, split(lt, col)) == col.entries

    def test_d_refused(self):
        with pytest.raises(ValueError):
            unsplit(D4, split(D4, (4, -4)))


class TestExtend:
    def test_b8_worked_example(self):
        pair = split(B8, (5, 0, -8, -5))
        assert extend(B8, pair, 6) == SplitPair(
            (4, 7, -8, -5, -2, -1), (1, 2, 5, -8, -7, -4), 6, True
        )

    def test_b3_single_box(self):
        pair = extend(B3, split(B3, (1,)), 3)
        assert pair == SplitPair((1, -3, -2), (1, 2, 3), 3, True)

    def test_same_height_only_flips_flag(self):
        pair = split(C2, (2, -2))
        assert extend(C2, pair, 2) == SplitPair(pair.left, pair.right, 2, True)

    def test_out_of_range(self):
        pair = split(B3, (1, 2))
        with pytest.raises(ValueError):
            extend(B3, pair, 1)
        with pytest.raises(ValueError):
            extend(B3, pair, 4)

    def test_empty_column(self):
        assert extend(B2, split(B2, ()), 2) == SplitPair((-2, -1), (1, 2), 2, True)


class TestEnumerateKR:
    def test_counts(self):
        assert len(enumerate_KR(B2, 1)) == 5
        assert len(enumerate_KR(B3, 1)) == 7
        assert len(enumerate_KR(C2, 1)) == 4
        assert len(enumerate_KR(C2, 2)) == 5
        # 28 columns of height 2 plus the empty column extended
        assert len(enumerate_KR(D4, 2)) == 29
        assert len(enumerate_KR(B2, 2)) == 11

    def test_all_extended_to_target_height(self):
        for lt, r in ((B2, 2), (C2, 2), (D4, 2), (A4, 2)):
            for pair in enumerate_KR(lt, r):
                assert pair.extended
                assert pair.height == r
                assert len(pair.left) == len(pair.right) == r

    def test_distinct(self):
        for lt, r in ((B2, 2), (B3, 2), (C3, 2), (D4, 2)):
            pairs = enumerate_KR(lt, r)
            assert len(set(pairs)) == len(pairs)

    def test_type_a(self):
        pairs = enumerate_KR(A4, 2)
        assert len(pairs) == 6
        assert all(p.left == p.right for p in pairs)


class TestEnumerateTensor:
    def test_counts_match_admissible_counts(self):
        # the model sizes that the bijection must reproduce
        assert len(enumerate_tensor(A3, (3, 2))) == 27
        assert len(enumerate_tensor(C2, (1,))) == 4
        assert len(enumerate_tensor(C2, (1, 1))) == 5
        assert len(enumerate_tensor(B2, (2,))) == 25

    def test_doubled_shape(self):
        filling = enumerate_tensor(B2, (2, 1))[0]
        assert filling.doubled
        assert [len(c) for c in filling.columns] == [2, 2, 1, 1]

    def test_plain_shape_in_type_a(self):
        filling = enumerate_tensor(A3, (2, 1))[0]
        assert not filling.doubled
        assert [len(c) for c in filling.columns] == [2, 1]

    def test_filling_height_mismatch_raises(self):
        with pytest.raises(ValueError):
            Filling(B2, (1,), ((1, 2),))
        with pytest.raises(ValueError):
            Filling(A3, (1,), ((1,), (1,)))


class TestSplitProperties:
    @given(st.data())
    def test_split_halves_are_sorted_and_have_common_letters(self, data):
        lt = data.draw(st.sampled_from([B2, B3, C2, C3, D4]))
        h = data.draw(st.integers(0, lt.rank))
        cols = enumerate_kn_columns(lt, h)
        col = data.draw(st.sampled_from(cols)) if cols else KNColumn(lt, ())
        pair = split(lt, col)
        n = lt.rank
        for half in (pair.left, pair.right):
            keys = [letter_key(x, n) for x in half]
            assert keys == sorted(keys)
        assert pair.height == h

    @given(st.data())
    def test_extension_letters_are_fresh(self, data):
        lt = data.draw(st.sampled_from([B3, C3, D4]))
        h = data.draw(st.integers(0, lt.rank - 2))
        col = data.draw(st.sampled_from(enumerate_kn_columns(lt, h)))
        k = data.draw(st.integers(h, lt.rank))
        pair = split(lt, col)
        bigger = extend(lt, pair, k)
        new_left = set(bigger.left) - set(pair.left)
        new_right = set(bigger.right) - set(pair.right)
        assert {-x for x in new_left} == new_right
        assert all(x < 0 for x in new_left)
        assert not {abs(x) for x in new_left} & {abs(x) for x in pair.left}


class TestTextForms:
    def test_column_roundtrip(self):
        assert parse_column("5,0,-8,-5") == (5, 0, -8, -5)
        assert format_column((5, 0, -8, -5)) == "5,0,-8,-5"
        assert parse_column("") == ()
        assert format_column(()) == ""

    def test_filling_roundtrip(self):
        filling = enumerate_tensor(C2, (1, 1))[2]
        text = format_filling(filling)
        assert parse_filling(C2, (1, 1), text) == filling

    def test_filling_text_shape(self):
        filling = Filling(C2, (1,), ((1,), (2,)))
        assert format_filling(filling) == "1|2"

    def test_json_roundtrip(self):
        filling = enumerate_tensor(B2, (1,))[3]
        data = filling_to_json(filling)
        assert data["type"] == "B" and data["rank"] == 2
        assert filling_from_json(data) == filling

    def test_alphabet(self):
        assert column_alphabet(B2) == (1, 2, 0, -2, -1)
        assert column_alphabet(C2) == (1, 2, -2, -1)
        assert column_alphabet(A3) == (1, 2, 3)
