"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from wrep.freegroup import FreeWord
from wrep.ring import LaurentPoly
from wrep.welded import WeldedWord


def laurent(vars=("t",), max_terms=4, max_exp=3, max_coeff=5):
    exps = st.tuples(*[st.integers(-max_exp, max_exp) for _ in vars])
    return st.dictionaries(exps, st.integers(-max_coeff, max_coeff), max_size=max_terms).map(
        lambda d: LaurentPoly(vars, d))


def free_words(rank=4, max_len=12):
    letters = st.integers(1, rank).flatmap(lambda k: st.sampled_from([k, -k]))
    return st.lists(letters, max_size=max_len).map(lambda ls: FreeWord(rank, ls))


def welded_words(n, max_len=6):
    gens = st.tuples(st.sampled_from("sSt"), st.integers(1, n - 1))
    return st.lists(gens, max_size=max_len).map(lambda gs: WeldedWord(n, gs))
