"""Hypothesis strategies for small clutters."""
from hypothesis import strategies as st

from clutterlab.clutter_core import Clutter, minimal_sets


@st.composite
def clutters(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    raw = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=2 * n + 2))
    return Clutter._from_masks(n, minimal_sets(raw))


@st.composite
def clutter_and_spec(draw, max_n=7):
    c = draw(clutters(max_n=max_n))
    roles = draw(st.lists(st.integers(0, 2), min_size=c.ground_size, max_size=c.ground_size))
    i = sum(1 << k for k, r in enumerate(roles) if r == 1)
    j = sum(1 << k for k, r in enumerate(roles) if r == 2)
    return c, i, j
