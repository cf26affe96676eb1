import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schubquiv.dimvec import rank_vector, smooth_vector
from schubquiv.errors import EntryExceedsAmbient, NTooSmall, ShapeMismatch
from schubquiv.gridquiver import (
    DimensionVector, GridRep, build_M, build_quiver, dim_M, euler_form, expected_grassmannian_dim,
    hom_dimension, zero_rep,
)
from schubquiv.perm import from_one_line


def dimvecs(n):
    return st.lists(st.lists(st.integers(0, 5), min_size=n, max_size=n), min_size=n + 1, max_size=n + 1).map(
        lambda rows: DimensionVector(n, tuple(map(tuple, rows))))


class TestQuiver:
    @pytest.mark.parametrize("n,horizontal,vertical,relations", [(2, 3, 4, 2), (3, 8, 9, 6)])
    def test_counts(self, n, horizontal, vertical, relations):
        q = build_quiver(n)
        assert q.shape == (n + 1, n)
        assert len(q.vertices) == (n + 1) * n
        assert len(q.horizontal_arrows) == horizontal
        assert len(q.vertical_arrows) == vertical
        assert len(q.relations) == relations

    @pytest.mark.parametrize("n", range(2, 8))
    def test_count_formulas(self, n):
        q = build_quiver(n)
        assert len(q.arrows) == (n + 1) * (n - 1) + n * n
        assert len(q.relations) == n * (n - 1)

    def test_n_too_small(self):
        with pytest.raises(NTooSmall):
            build_quiver(1)


class TestDimensionVector:
    def test_dim_M(self):
        d = dim_M(3)
        assert d.rows == ((1, 1, 1), (2, 2, 2), (3, 3, 3), (4, 4, 4))
        assert dim_M(2).total() == 12

    def test_shape_checked(self):
        with pytest.raises(ShapeMismatch):
            DimensionVector(2, ((0, 0), (0, 0)))
        with pytest.raises(ShapeMismatch):
            dim_M(2) + dim_M(3)

    def test_boundary_get(self):
        d = dim_M(2)
        assert d.get(0, 1) == 0 and d.get(1, 0) == 0 and d.get(2, 2) == 2

    @given(dimvecs(3))
    def test_json_round_trip(self, d):
        assert DimensionVector.from_json(json.loads(json.dumps(d.to_json()))) == d

    @given(dimvecs(2), dimvecs(2))
    def test_arithmetic(self, a, b):
        assert (a + b) - b == a
        assert (a + b).total() == a.total() + b.total()


class TestEulerForm:
    def test_dim_M_n2_by_hand(self):
        # vertices 28, arrows 30, squares 8
        assert euler_form(build_quiver(2), dim_M(2), dim_M(2)) == 6

    @given(dimvecs(3))
    def test_zero_is_neutral(self, d):
        q = build_quiver(3)
        assert euler_form(q, d, DimensionVector.zero(3)) == 0
        assert euler_form(q, DimensionVector.zero(3), d) == 0

    @given(dimvecs(2), dimvecs(2), dimvecs(2))
    def test_bilinear(self, a, b, c):
        q = build_quiver(2)
        assert euler_form(q, a + b, c) == euler_form(q, a, c) + euler_form(q, b, c)
        assert euler_form(q, c, a + b) == euler_form(q, c, a) + euler_form(q, c, b)

    def test_expected_dimensions(self):
        q = build_quiver(4)
        assert expected_grassmannian_dim(q, rank_vector(from_one_line("43251"))) == 7
        assert expected_grassmannian_dim(q, dim_M(4)) == 0
        assert expected_grassmannian_dim(build_quiver(2), smooth_vector(from_one_line("321"))) == 3

    def test_entry_exceeds_ambient(self):
        bad = DimensionVector(2, ((2, 0), (0, 0), (0, 0)))
        with pytest.raises(EntryExceedsAmbient):
            expected_grassmannian_dim(build_quiver(2), bad)


class TestRepresentations:
    def test_M_satisfies_relations(self):
        for n in (2, 3, 4):
            M = build_M(build_quiver(n))
            assert M.satisfies_relations()
            assert M.dimension_vector() == dim_M(n)

    def test_bad_shape_rejected(self):
        M = build_M(build_quiver(2))
        maps = dict(M.maps)
        maps[((1, 1), (1, 2))] = ((1, 0),)
        with pytest.raises(ShapeMismatch):
            GridRep(2, "Q", M.dims, maps)

    def test_non_commuting_square_rejected(self):
        M = build_M(build_quiver(2))
        maps = dict(M.maps)
        maps[((1, 1), (1, 2))] = ((0,),)
        with pytest.raises(ValueError):
            GridRep(2, "Q", M.dims, maps)

    @pytest.mark.parametrize("n,expected", [(2, 6), (3, 10), (4, 15), (5, 21)])
    def test_endomorphisms_of_M(self, n, expected):
        q = build_quiver(n)
        M = build_M(q)
        assert hom_dimension(M, M) == expected == (n + 1) * (n + 2) // 2
        assert euler_form(q, dim_M(n), dim_M(n)) == expected

    def test_endomorphisms_over_prime_field(self):
        M = build_M(build_quiver(3), field=2)
        assert hom_dimension(M, M) == 10

    def test_zero_rep(self):
        q = build_quiver(3)
        assert hom_dimension(zero_rep(q), build_M(q)) == 0
        assert hom_dimension(build_M(q), zero_rep(q)) == 0
