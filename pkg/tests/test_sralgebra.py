import random

import pytest

from wfao.errors import IndexMismatch, SemiringMismatch
from wfao.automata import palette
from wfao.semiring import BOOLEAN, GODEL, NATURALS, VITERBI
from wfao.sralgebra import (
    SrMatrix, SrVector, all_ones, diag, dot, hadamard, identity_matrix,
    mat_mul, mat_vec, total, vec_mat, zero_matrix, zero_vector,
)

from conftest import SEMIRINGS, SR_IDS

AB = ("a", "b")


def V(sr, values, states=AB):
    return SrVector.from_list(sr, states, values)


def M(sr, rows, states=AB):
    return SrMatrix.from_rows(sr, states, rows)


def rand_matrix(sr, states, rng):
    pal = palette(sr)
    return SrMatrix(sr, states, {(a, b): rng.choice(pal) for a in states for b in states})


def rand_vector(sr, states, rng):
    pal = palette(sr)
    return SrVector(sr, states, {a: rng.choice(pal) for a in states})


def test_godel_products():
    m1 = M(GODEL, [[0.6, 0.5], [0, 0.4]])
    m2 = M(GODEL, [[0.2, 0.2], [0, 0.7]])
    assert mat_mul(m1, m2).to_rows() == [[0.2, 0.5], [0, 0.4]]
    d = M(GODEL, [[0.7, 0.5], [0, 0.8]])
    assert vec_mat(V(GODEL, [1, 0]), d).to_list() == [0.7, 0.5]
    assert mat_vec(d, V(GODEL, [0.2, 0.7])).to_list() == [0.5, 0.7]
    assert dot(V(GODEL, [1, 0]), V(GODEL, [0.4, 0.9])) == 0.4
    assert hadamard(V(GODEL, [0.6, 0.4]), V(GODEL, [0.2, 0.7])).to_list() == [0.2, 0.4]
    assert diag(V(GODEL, [0.6, 0.4])).to_rows() == [[0.6, 0], [0, 0.4]]
    assert mat_mul(diag(V(GODEL, [0.6, 0.4])), d).to_rows() == [[0.6, 0.5], [0, 0.4]]


def test_small_cases():
    assert dot(V(NATURALS, [1, 2]), V(NATURALS, [3, 4])) == 11
    assert dot(all_ones(BOOLEAN, AB), all_ones(BOOLEAN, AB)) == 1
    assert identity_matrix(NATURALS, AB).to_rows() == [[1, 0], [0, 1]]
    assert all_ones(NATURALS, AB).to_list() == [1, 1]
    assert diag(all_ones(NATURALS, AB)) == identity_matrix(NATURALS, AB)
    assert total(V(NATURALS, [2, 5])) == 7


@pytest.mark.parametrize("sr", SEMIRINGS, ids=SR_IDS)
def test_units_and_zeros(sr):
    rng = random.Random(7)
    states = ("p", "q", "r")
    m, v = rand_matrix(sr, states, rng), rand_vector(sr, states, rng)
    i, z, zv = identity_matrix(sr, states), zero_matrix(sr, states), zero_vector(sr, states)
    assert mat_mul(m, i) == m and mat_mul(i, m) == m
    assert mat_mul(z, m) == z
    assert vec_mat(v, i) == v and mat_vec(i, v) == v
    assert vec_mat(zv, m) == zv and mat_vec(m, zv) == zv
    assert hadamard(v, all_ones(sr, states)) == v
    assert hadamard(v, zv) == zv
    assert sr.eq(dot(v, zv), sr.zero)


def test_zero_entries_are_dropped():
    v = V(GODEL, [0.0, 0.3])
    assert v.entries == {"b": 0.3}
    assert v["a"] == 0.0


def test_mismatches():
    with pytest.raises(SemiringMismatch):
        dot(V(GODEL, [1, 0]), V(VITERBI, [1, 0]))
    with pytest.raises(IndexMismatch):
        dot(V(GODEL, [1, 0]), V(GODEL, [1, 0], ("b", "a")))
    with pytest.raises(IndexMismatch):
        SrVector(GODEL, AB, {"c": 0.5})
    with pytest.raises(ValueError):
        identity_matrix(GODEL, ())
    with pytest.raises(ValueError):
        all_ones(GODEL, ())


@pytest.mark.parametrize("sr", SEMIRINGS, ids=SR_IDS)
def test_dot_against_loop(sr):
    rng = random.Random(3)
    states = ("p", "q", "r")
    for _ in range(50):
        v1, v2 = rand_vector(sr, states, rng), rand_vector(sr, states, rng)
        acc = sr.zero
        for a in states:
            acc = sr.add(acc, sr.mul(v1[a], v2[a]))
        assert sr.eq(dot(v1, v2), acc)


@pytest.mark.parametrize("sr", [GODEL, NATURALS], ids=["godel", "naturals"])
def test_associativity(sr):
    rng = random.Random(11)
    for trial in range(30):
        states = tuple(f"s{i}" for i in range(rng.randint(1, 4)))
        m1, m2, m3 = (rand_matrix(sr, states, rng) for _ in range(3))
        v = rand_vector(sr, states, rng)
        assert mat_mul(mat_mul(m1, m2), m3).approx_eq(mat_mul(m1, mat_mul(m2, m3)))
        assert vec_mat(vec_mat(v, m1), m2).approx_eq(vec_mat(v, mat_mul(m1, m2)))
        assert mat_vec(m1, mat_vec(m2, v)).approx_eq(mat_vec(mat_mul(m1, m2), v))
