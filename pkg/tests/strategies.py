"""Hypothesis strategies for random simple games."""

from hypothesis import strategies as st

from simplegames.game_core import SimpleGame, minimize


@st.composite
def games(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    full = (1 << n) - 1
    sets = draw(st.lists(st.integers(1, full), min_size=1, max_size=8))
    return SimpleGame(n, tuple(minimize(sets)))
