from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import permutations_of
from schubquiv.errors import (
    LetterOutOfRange, MalformedInput, NotABraid, NotCommuting, NotReduced, WordDoesNotEvaluateToW,
)
from schubquiv.perm import all_permutations, identity, length, some_reduced_word
from schubquiv.perm import from_one_line as P
from schubquiv.words import (
    ReducedWord, braid_move, commutation_move, evaluate_word, geometrically_compatible_word,
    is_geometrically_compatible, is_reduced, parse_word, reduced_words, repair, target_multiset,
)

GOOD = "1 2 3 1 2 1 4"
BAD = "3 1 2 1 3 2 4"


def W(text, window=5):
    return parse_word(text, window)


class TestBasics:
    def test_parse(self):
        assert W(GOOD).letters == (1, 2, 3, 1, 2, 1, 4)
        assert W("1,2,3").letters == (1, 2, 3)
        assert W("").letters == ()
        with pytest.raises(MalformedInput):
            W("1 x")
        with pytest.raises(LetterOutOfRange):
            W("5")

    def test_right_to_left_indexing(self):
        word = W(GOOD)
        assert [word.letter(k) for k in range(1, 8)] == [4, 1, 2, 1, 3, 2, 1]

    def test_evaluation(self):
        assert evaluate_word(W(GOOD)) == P("43251")
        assert evaluate_word(W(BAD)) == P("43251")
        assert evaluate_word(W("")) == identity(5)

    def test_reducedness(self):
        assert not is_reduced(W("1 1"))
        assert is_reduced(W(GOOD))
        assert is_reduced(W(""))


class TestMoves:
    def test_commutation(self):
        assert commutation_move(W(BAD), 1) == W("1 3 2 1 3 2 4")
        assert commutation_move(W("1 4 1"), 2) == W("1 1 4")
        with pytest.raises(NotCommuting):
            commutation_move(W("1 2"), 1)

    def test_braid(self):
        assert braid_move(W("1 3 2 3 1 2 4"), 2) == W("1 2 3 2 1 2 4")
        assert braid_move(W("1 2 3 2 1 2 4"), 4) == W(GOOD)
        with pytest.raises(NotABraid):
            braid_move(W("1 3 1"), 1)

    @given(permutations_of(3, 6), st.data())
    def test_random_moves_preserve_evaluation(self, w, data):
        word = some_reduced_word(w)
        for _ in range(8):
            L = word.letters
            opts = [("c", p) for p in range(1, len(L)) if abs(L[p - 1] - L[p]) >= 2]
            opts += [("b", p) for p in range(1, len(L) - 1) if L[p - 1] == L[p + 1] and abs(L[p] - L[p - 1]) == 1]
            if not opts:
                break
            kind, p = data.draw(st.sampled_from(opts))
            word = commutation_move(word, p) if kind == "c" else braid_move(word, p)
            assert evaluate_word(word) == w and len(word) == length(w)


class TestCompatibility:
    def test_reference_pair(self):
        w = P("43251")
        assert is_geometrically_compatible(W(GOOD), w)
        assert not is_geometrically_compatible(W(BAD), w)
        assert is_geometrically_compatible(W(""), identity(5))
        assert target_multiset(w) == Counter({1: 3, 2: 2, 3: 1, 4: 1})

    def test_errors(self):
        with pytest.raises(WordDoesNotEvaluateToW):
            is_geometrically_compatible(W("1 2"), P("43251"))
        with pytest.raises(NotReduced):
            is_geometrically_compatible(W("1 1"), identity(5))

    def test_repair_transcript(self):
        w = P("43251")
        moves, ok = repair(W(BAD), w)
        assert ok
        assert [(m.kind, m.pos, str(m.result)) for m in moves] == [
            ("commute", 1, "1 3 2 1 3 2 4"),
            ("commute", 4, "1 3 2 3 1 2 4"),
            ("braid", 2, "1 2 3 2 1 2 4"),
            ("braid", 4, GOOD),
        ]
        assert all(evaluate_word(m.result) == w for m in moves)

    def test_output_for_reference_permutation(self):
        word = geometrically_compatible_word(P("43251"))
        assert Counter(word.letters) == Counter({1: 3, 2: 2, 3: 1, 4: 1})
        assert geometrically_compatible_word(identity(5)).letters == ()

    @pytest.mark.parametrize("m", [3, 4, 5, 6])
    def test_exists_for_every_permutation(self, m):
        for w in all_permutations(m):
            word = geometrically_compatible_word(w)
            assert evaluate_word(word) == w
            assert is_geometrically_compatible(word, w)

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_directed_repair_never_stalls(self, m):
        for w in all_permutations(m):
            moves, ok = repair(some_reduced_word(w), w)
            assert ok, w

    @pytest.mark.parametrize("m", [3, 4])
    def test_any_start_repairs(self, m):
        for w in all_permutations(m):
            for start in reduced_words(w):
                word = geometrically_compatible_word(w, start=start)
                assert is_geometrically_compatible(word, w)

    def test_reduced_words_enumeration(self):
        words = list(reduced_words(P("321")))
        assert sorted(x.letters for x in words) == [(1, 2, 1), (2, 1, 2)]
        # 16 reduced words for the longest element of S_4
        assert len(list(reduced_words(P("4321")))) == 16
        for w in all_permutations(4):
            for word in reduced_words(w):
                assert evaluate_word(word) == w and len(word) == length(w)

    def test_word_type(self):
        with pytest.raises(LetterOutOfRange):
            ReducedWord(3, (3,))
