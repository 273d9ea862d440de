"""The two Gödel-semiring Mealy automata used as worked examples.

The states are unnamed in the source, so they are called ``a1`` and ``a2``.
"""

from .automata import MealyWFA
from .semiring import GODEL
from .sralgebra import SrMatrix, SrVector

STATES = ("a1", "a2")


def _vec(values):
    return SrVector.from_list(GODEL, STATES, values)


def _mat(rows):
    return SrMatrix.from_rows(GODEL, STATES, rows)


def example1() -> MealyWFA:
    """X = {0}, Y = {0, 1}; separates 1n and s from n1 on (000, 010)."""
    return MealyWFA(
        GODEL, STATES, ("0",), ("0", "1"),
        sigma=_vec([1.0, 0.0]),
        delta={"0": _mat([[0.7, 0.5], [0.0, 0.8]])},
        omega={("0", "0"): _vec([0.6, 0.4]), ("0", "1"): _vec([0.2, 0.7])},
    )


def example2() -> MealyWFA:
    """X = {0, 1}, Y = {0}; separates 1n from s on (01, 00)."""
    return MealyWFA(
        GODEL, STATES, ("0", "1"), ("0",),
        sigma=_vec([1.0, 0.0]),
        delta={
            "0": _mat([[0.7, 0.5], [0.0, 0.8]]),
            "1": _mat([[0.3, 1.0], [0.2, 0.0]]),
        },
        omega={("0", "0"): _vec([0.6, 0.4]), ("1", "0"): _vec([0.2, 0.7])},
    )


# word pair, semantics, value as printed alongside each example
EXPECTED = {
    "example1": [
        (("0", "0", "0"), ("0", "1", "0"), "1n", 0.4),
        (("0", "0", "0"), ("0", "1", "0"), "s", 0.4),
        (("0", "0", "0"), ("0", "1", "0"), "n1", 0.5),
    ],
    "example2": [
        (("0", "1"), ("0", "0"), "1n", 0.5),
        (("0", "1"), ("0", "0"), "s", 0.2),
    ],
}

BUILDERS = {"example1": example1, "example2": example2}
