import pytest
from hypothesis import given

from oracles import bruhat_tableau_leq, inversions
from strategies import permutations_of
from schubquiv.errors import (
    IndexOutOfRange, MalformedInput, NotABijection, PatternTooLong, WindowMismatch,
)
from schubquiv.perm import (
    Permutation, all_permutations, bruhat_leq, contains_pattern, format_one_line, from_one_line,
    identity, is_smooth, left_multiply_simple, length, rank_matrix, some_reduced_word,
)
from schubquiv.words import evaluate_word


def P(text):
    return from_one_line(text)


class TestParsing:
    def test_digits_and_commas_agree(self):
        assert P("43251") == Permutation((4, 3, 2, 5, 1))
        assert P("4,3,2,5,1") == P("43251")
        assert P("4 3 2 5 1") == P("43251")

    def test_identity_text(self):
        assert P("12345") == identity(5)

    def test_long_windows_use_commas(self):
        w = Permutation(tuple(range(10, 0, -1)))
        assert format_one_line(w) == "10,9,8,7,6,5,4,3,2,1"
        assert from_one_line(format_one_line(w)) == w

    @pytest.mark.parametrize("bad", ["12a", "", "4,x,1"])
    def test_malformed(self, bad):
        with pytest.raises(MalformedInput):
            P(bad)

    @pytest.mark.parametrize("bad", ["1224", "1245", "0"])
    def test_not_a_bijection(self, bad):
        with pytest.raises(NotABijection):
            P(bad)

    @given(permutations_of(1, 12))
    def test_round_trip(self, w):
        assert from_one_line(format_one_line(w)) == w


class TestLength:
    def test_values(self):
        assert length(identity(6)) == 0
        assert length(P("43251")) == 7
        assert length(P("4231")) == 5

    @given(permutations_of())
    def test_matches_inversion_oracle(self, w):
        assert length(w) == inversions(w.images)

    @given(permutations_of())
    def test_inverse_has_same_length(self, w):
        assert length(w.inverse()) == length(w)
        assert w.inverse().inverse() == w


class TestSimpleMultiplication:
    def test_values(self):
        assert left_multiply_simple(3, P("34251")) == P("43251")
        assert left_multiply_simple(1, identity(2)) == P("21")
        assert left_multiply_simple(3, P("43251")) == P("34251")

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            left_multiply_simple(5, identity(5))
        with pytest.raises(IndexOutOfRange):
            left_multiply_simple(0, identity(5))

    @given(permutations_of(2, 7))
    def test_involution_and_length_change(self, w):
        for i in range(1, w.window):
            v = left_multiply_simple(i, w)
            assert left_multiply_simple(i, v) == w
            assert abs(length(v) - length(w)) == 1


class TestPatterns:
    def test_reference_cases(self):
        assert contains_pattern(P("45312"), P("3412"))
        assert contains_pattern(P("53421"), P("4231"))
        assert not contains_pattern(P("31542"), P("4231"))
        assert not contains_pattern(P("31542"), P("3412"))

    def test_smoothness(self):
        assert is_smooth(P("31542"))
        assert is_smooth(P("65124837"))
        assert not is_smooth(P("4231"))
        assert not is_smooth(P("3412"))

    def test_pattern_too_long(self):
        with pytest.raises(PatternTooLong):
            contains_pattern(P("123"), P("4231"))

    @pytest.mark.parametrize("m,count", [(3, 6), (4, 22), (5, 88), (6, 366)])
    def test_smooth_counts(self, m, count):
        # number of permutations avoiding both [4231] and [3412]
        assert sum(is_smooth(w) for w in all_permutations(m)) == count


class TestBruhat:
    def test_small_cases(self):
        for w in all_permutations(4):
            assert bruhat_leq(identity(4), w)
            assert bruhat_leq(w, w)
        assert not bruhat_leq(P("321"), P("312"))

    def test_window_mismatch(self):
        with pytest.raises(WindowMismatch):
            bruhat_leq(identity(3), identity(4))

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_matches_tableau_criterion(self, m):
        perms = list(all_permutations(m))
        for u in perms:
            for w in perms:
                assert bruhat_leq(u, w) == bruhat_tableau_leq(u.images, w.images)

    def test_interval_sizes_of_longest(self):
        w0 = Permutation((4, 3, 2, 1))
        assert sum(bruhat_leq(u, w0) for u in all_permutations(4)) == 24

    def test_rank_matrix_reference_table(self):
        # d_{p,q} lower bounds listed for [65124837]
        expected = [
            [0, 0, 1, 1, 1, 1, 1, 1],
            [0, 0, 1, 2, 2, 2, 2, 2],
            [0, 0, 1, 2, 2, 2, 3, 3],
            [0, 0, 1, 2, 3, 3, 4, 4],
            [0, 1, 2, 3, 4, 4, 5, 5],
            [1, 2, 3, 4, 5, 5, 6, 6],
            [1, 2, 3, 4, 5, 5, 6, 7],
            [1, 2, 3, 4, 5, 6, 7, 8],
        ]
        assert [list(r) for r in rank_matrix(P("65124837"))] == expected


class TestReducedWord:
    def test_trivial(self):
        assert some_reduced_word(identity(4)).letters == ()
        assert some_reduced_word(P("21")).letters == (1,)

    def test_all_of_s4(self):
        for w in all_permutations(4):
            word = some_reduced_word(w)
            assert evaluate_word(word) == w
            assert len(word) == length(w)

    @given(permutations_of(2, 7))
    def test_property(self, w):
        word = some_reduced_word(w)
        assert evaluate_word(word) == w and len(word) == length(w)
