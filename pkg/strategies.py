"""Hypothesis strategies shared by the test modules"""
from hypothesis import strategies as st

from color_metrics import is_s0
from partition import enumerate_p2nb, enumerate_pair_partitions
from patterns import BracketPattern

P2NB_POOL = tuple(p for n in (0, 2, 4, 6) for p in enumerate_p2nb(n))
S0_POOL = tuple(p for p in P2NB_POOL if is_s0(p))
PAIR_POOL = tuple(p for n in (0, 2, 4) for p in enumerate_pair_partitions(n))


def p2nb_partitions():
    return st.sampled_from(P2NB_POOL)


def s0_partitions():
    return st.sampled_from(S0_POOL)


def pair_partitions():
    return st.sampled_from(PAIR_POOL)


def patterns(max_frame: int = 8):
    return st.integers(min_value=1, max_value=(1 << max_frame) - 1).map(lambda k: BracketPattern(2 * k))
