"""Weighted finite automata with output over semirings.

Sequential, Mealy-type and Moore-type models, their behaviors under the
1n-, n1-, sequential and crisp-deterministic semantics, the constructive
conversions between the models, and a bounded equivalence checker.
"""

from .automata import (
    CrispDetMealy,
    CrispDetMoore,
    MealyWFA,
    MooreWFA,
    SequentialWFA,
    WordPair,
    check_crisp_deterministic,
    promote_to_crisp,
    random_automaton,
    validate,
)
from .convert import (
    ConversionReport,
    convert,
    find_p,
    mealy_to_moore,
    mealy_to_sequential,
    moore_to_mealy,
    moore_to_sequential,
    sequential_to_mealy,
    sequential_to_moore,
)
from .equiv import EquivVerdict, check_equiv, enumerate_word_pairs
from .semantics import Semantics, behavior, behavior_oracle, delta_word, mu_word
from .semiring import (
    BOOLEAN,
    CATALOG,
    GODEL,
    NATURALS,
    RATIONALS,
    TROPICAL,
    VITERBI,
    Elem,
    Semiring,
    get_semiring,
)

__version__ = "0.1.0"
