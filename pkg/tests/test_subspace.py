import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import all_vectors, coordinate_space, span_set, subspaces_as_sets
from schubquiv.errors import BadSandwich
from schubquiv.subspace import Subspace, enumerate_subspaces, gaussian_binomial, standard_flag_space


def vectors(q, m, k):
    return st.lists(st.tuples(*[st.integers(0, q - 1)] * m), min_size=0, max_size=k)


class TestCanonicalForm:
    @given(st.sampled_from([2, 3]), st.data())
    def test_equal_spans_iff_equal_bases(self, q, data):
        m = 3
        a = data.draw(vectors(q, m, 3))
        b = data.draw(vectors(q, m, 3))
        sa, sb = Subspace.span(q, m, a), Subspace.span(q, m, b)
        assert (span_set(a, q, m) == span_set(b, q, m)) == (sa.basis == sb.basis)
        assert sa.elements() == set(span_set(a, q, m))

    @given(st.sampled_from([2, 3]), st.data())
    def test_containment_and_meet(self, q, data):
        m = 3
        a = Subspace.span(q, m, data.draw(vectors(q, m, 3)))
        b = Subspace.span(q, m, data.draw(vectors(q, m, 3)))
        ea, eb = a.elements(), b.elements()
        assert (a <= b) == (ea <= eb)
        assert q ** a.meet_dim(b) == len(ea & eb)
        assert a.join(b).elements() == set(span_set(list(ea | eb), q, m))

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            Subspace.span(2, 3, [(1, 0)])


class TestEnumeration:
    def test_small_counts(self):
        assert len(list(enumerate_subspaces(2, 2, 1))) == 3
        assert len(list(enumerate_subspaces(2, 3, 1))) == 7

    def test_dim_of_lower(self):
        low = standard_flag_space(3, 4, 2)
        assert list(enumerate_subspaces(3, 4, 2, low, None)) == [low]

    @pytest.mark.parametrize("q,m", [(2, 3), (2, 4), (3, 3)])
    def test_matches_brute_force(self, q, m):
        for d in range(m + 1):
            got = [s.elements() for s in enumerate_subspaces(q, m, d)]
            assert len(got) == gaussian_binomial(m, d, q)
            assert {frozenset(s) for s in got} == subspaces_as_sets(q, m, d)

    def test_canonical_order(self):
        subs = list(enumerate_subspaces(2, 4, 2))
        assert [s.basis for s in subs] == sorted(s.basis for s in subs)

    @pytest.mark.parametrize("q", [2, 3])
    def test_sandwiches(self, q):
        m = 4
        for lo_d in range(m + 1):
            for hi_d in range(lo_d, m + 1):
                for lo in enumerate_subspaces(q, m, lo_d):
                    his = [h for h in enumerate_subspaces(q, m, hi_d, lo, None)]
                    for hi in his[:2]:
                        for d in range(lo_d, hi_d + 1):
                            got = list(enumerate_subspaces(q, m, d, lo, hi))
                            assert len(got) == gaussian_binomial(hi_d - lo_d, d - lo_d, q)
                            assert all(lo <= s <= hi and s.dim == d for s in got)
                            assert len({s.basis for s in got}) == len(got)

    def test_coordinate_flag(self):
        for i in range(4):
            assert standard_flag_space(2, 3, i).elements() == set(coordinate_space(2, 3, i))

    def test_bad_sandwich(self):
        a = Subspace.span(2, 3, [(1, 0, 0)])
        b = Subspace.span(2, 3, [(0, 1, 0)])
        with pytest.raises(BadSandwich):
            list(enumerate_subspaces(2, 3, 1, a, b))
        with pytest.raises(BadSandwich):
            list(enumerate_subspaces(2, 3, 0, a, None))


@pytest.mark.parametrize("m,k,q,value", [(2, 1, 2, 3), (3, 1, 2, 7), (4, 2, 2, 35), (4, 2, 3, 130), (5, 0, 3, 1)])
def test_gaussian_binomial(m, k, q, value):
    assert gaussian_binomial(m, k, q) == value


def test_vectors_oracle_size():
    assert len(all_vectors(3, 2)) == 9
