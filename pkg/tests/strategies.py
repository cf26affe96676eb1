from hypothesis import strategies as st

from schubquiv.perm import Permutation


def permutations_of(min_window=1, max_window=6):
    return st.integers(min_window, max_window).flatmap(
        lambda m: st.permutations(list(range(1, m + 1))).map(lambda p: Permutation(tuple(p))))
