import random

import pytest
from hypothesis import strategies as st

from wfao.automata import palette, random_automaton, random_sizes
from wfao.semiring import CATALOG

SEMIRINGS = list(CATALOG.values())
SR_IDS = [sr.name for sr in SEMIRINGS]


def elements(sr):
    """Hypothesis strategy over carrier values, palette first."""
    pal = palette(sr)
    return st.sampled_from(pal)


def make(kind, sr, seed, max_states=3):
    sizes = random_sizes(random.Random(seed), max_states=max_states)
    return random_automaton(kind, sr, sizes, seed)


@pytest.fixture(params=SEMIRINGS, ids=SR_IDS)
def sr(request):
    return request.param
