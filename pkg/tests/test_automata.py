import pytest

from wfao.automata import (
    CrispDetMealy, MealyWFA, MooreWFA, WordPair, check_crisp_deterministic,
    promote_to_crisp, random_automaton, validate,
)
from wfao.errors import NotCrispError
from wfao.worked_examples import example1, example2
from wfao.semiring import GODEL, NATURALS
from wfao.sralgebra import SrMatrix, SrVector

from conftest import SEMIRINGS, SR_IDS

KINDS = ["sequential", "mealy", "moore", "cd-mealy", "cd-moore"]


def codes(a):
    return [v.code for v in validate(a)]


def test_examples_are_valid():
    assert validate(example1()) == []
    assert validate(example2()) == []


def test_violations():
    a = example1()
    bad = MealyWFA(GODEL, a.states, a.inputs, a.outputs, a.sigma,
                   {"0": SrMatrix(GODEL, a.states, {("a1", "a1"): 1.5})}, a.omega)
    assert codes(bad) == ["carrier"]
    empty = MealyWFA(GODEL, a.states, (), a.outputs, a.sigma, {}, {})
    assert "empty-set" in codes(empty)
    partial = CrispDetMealy(GODEL, ("p", "q"), ("x",), ("0",), "p", {("p", "x"): "q"})
    assert codes(partial) == ["partial-transition"]
    stray = CrispDetMealy(GODEL, ("p",), ("x",), ("0",), "r", {("p", "x"): "p"})
    assert codes(stray) == ["initial-state"]


def test_word_pair():
    w = WordPair(("0", "1"), ("1", "1"))
    assert len(w) == 2 and list(w) == [("0", "1"), ("1", "1")]
    assert str(w) == "0,1;1,1"
    assert w + WordPair(("0",), ("0",)) == WordPair(("0", "1", "0"), ("1", "1", "0"))
    with pytest.raises(ValueError):
        WordPair(("0",), ())


def _crisp_pair(sr, sigma, rows):
    st = ("p", "q")
    return MooreWFA(sr, st, ("x",), ("0",), SrVector.from_list(sr, st, sigma),
                    {"x": SrMatrix.from_rows(sr, st, rows)},
                    {"0": SrVector.from_list(sr, st, [sr.one, sr.one])})


def test_crisp_check_and_promotion():
    assert not check_crisp_deterministic(example1())
    with pytest.raises(NotCrispError):
        promote_to_crisp(example2())
    swap = _crisp_pair(NATURALS, [1, 0], [[0, 1], [1, 0]])
    assert check_crisp_deterministic(swap)
    f = promote_to_crisp(swap)
    assert f.initial_state == "p"
    assert f.transitions == {("p", "x"): "q", ("q", "x"): "p"}
    assert f.to_matrix_form() == swap
    assert not check_crisp_deterministic(_crisp_pair(NATURALS, [1, 1], [[0, 1], [1, 0]]))
    assert not check_crisp_deterministic(_crisp_pair(NATURALS, [1, 0], [[2, 0], [1, 0]]))

    one = ("s",)
    m = MealyWFA(NATURALS, one, ("x",), ("0",), SrVector.from_list(NATURALS, one, [1]),
                 {"x": SrMatrix.from_rows(NATURALS, one, [[1]])}, {})
    f = promote_to_crisp(m)
    assert f.initial_state == "s" and f.step("s", "x") == "s"


@pytest.mark.parametrize("sr", SEMIRINGS, ids=SR_IDS)
@pytest.mark.parametrize("kind", KINDS)
def test_random_automata(kind, sr):
    for seed in range(100):
        a = random_automaton(kind, sr, (2, 2, 2), seed)
        assert a == random_automaton(kind, sr, (2, 2, 2), seed)
        assert validate(a) == []
        if kind.startswith("cd-"):
            assert check_crisp_deterministic(a.to_matrix_form())


def test_random_rejects():
    with pytest.raises(ValueError):
        random_automaton("mealy", GODEL, (0, 1, 1), 0)
    with pytest.raises(ValueError):
        random_automaton("transducer", GODEL, (1, 1, 1), 0)
