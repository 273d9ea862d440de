"""State-indexed vectors and square matrices over a semiring.

Both containers are sparse: only entries different from the semiring zero
are stored.  Index sets are ordered tuples of state names and must match
exactly (same names, same order) for two objects to be combined.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

from .errors import IndexMismatch, SemiringMismatch
from .semiring import Semiring

State = str


def _check_states(states) -> tuple:
    states = tuple(states)
    if len(set(states)) != len(states):
        raise ValueError(f"duplicate state names in {states!r}")
    return states


@dataclass(frozen=True)
class SrVector:
    semiring: Semiring
    states: tuple
    entries: Mapping[State, Any] = field(default_factory=dict)

    def __post_init__(self):
        states = _check_states(self.states)
        known = set(states)
        zero = self.semiring.zero
        entries = {}
        for a, w in dict(self.entries).items():
            if a not in known:
                raise IndexMismatch(f"vector entry for unknown state {a!r}")
            if w != zero:
                entries[a] = w
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_list(cls, semiring: Semiring, states: Sequence[State], values: Sequence) -> "SrVector":
        if len(values) != len(states):
            raise IndexMismatch("value list and state list differ in length")
        return cls(semiring, tuple(states), dict(zip(states, values)))

    def __getitem__(self, a: State):
        return self.entries.get(a, self.semiring.zero)

    def to_list(self) -> list:
        return [self[a] for a in self.states]

    def approx_eq(self, other: "SrVector") -> bool:
        _compatible(self, other)
        eq = self.semiring.eq
        return all(eq(self[a], other[a]) for a in self.states)


@dataclass(frozen=True)
class SrMatrix:
    semiring: Semiring
    states: tuple
    entries: Mapping[tuple, Any] = field(default_factory=dict)

    def __post_init__(self):
        states = _check_states(self.states)
        known = set(states)
        zero = self.semiring.zero
        entries = {}
        for (a, b), w in dict(self.entries).items():
            if a not in known or b not in known:
                raise IndexMismatch(f"matrix entry for unknown state pair {(a, b)!r}")
            if w != zero:
                entries[(a, b)] = w
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, semiring: Semiring, states: Sequence[State], rows: Sequence[Sequence]) -> "SrMatrix":
        if len(rows) != len(states) or any(len(r) != len(states) for r in rows):
            raise IndexMismatch("matrix rows do not match the state list")
        return cls(
            semiring,
            tuple(states),
            {(a, b): w for a, row in zip(states, rows) for b, w in zip(states, row)},
        )

    def __getitem__(self, key: tuple):
        return self.entries.get(key, self.semiring.zero)

    def row(self, a: State) -> dict:
        return {b: w for (r, b), w in self.entries.items() if r == a}

    def to_rows(self) -> list:
        return [[self[(a, b)] for b in self.states] for a in self.states]

    def approx_eq(self, other: "SrMatrix") -> bool:
        _compatible(self, other)
        eq = self.semiring.eq
        return all(eq(self[(a, b)], other[(a, b)]) for a in self.states for b in self.states)


def _compatible(x, y) -> None:
    if x.semiring is not y.semiring:
        raise SemiringMismatch(f"{x.semiring.name} vs {y.semiring.name}")
    if x.states != y.states:
        raise IndexMismatch(f"index sets differ: {x.states!r} vs {y.states!r}")


def _result(cls, sr: Semiring, states: tuple, entries: dict):
    # operands were validated on construction; only zeros need dropping
    obj = object.__new__(cls)
    zero = sr.zero
    object.__setattr__(obj, "semiring", sr)
    object.__setattr__(obj, "states", states)
    object.__setattr__(obj, "entries", {k: w for k, w in entries.items() if w != zero})
    return obj


def _rows(m: SrMatrix) -> dict:
    rows: dict = {}
    for (a, b), w in m.entries.items():
        rows.setdefault(a, []).append((b, w))
    return rows


def mat_mul(m1: SrMatrix, m2: SrMatrix) -> SrMatrix:
    """(m1·m2)(a, b) = Σ_c m1(a, c)·m2(c, b)."""
    _compatible(m1, m2)
    sr = m1.semiring
    add, mul = sr.plus, sr.times
    rows2 = _rows(m2)
    out: dict = {}
    for (a, c), w1 in m1.entries.items():
        for b, w2 in rows2.get(c, ()):
            p = mul(w1, w2)
            key = (a, b)
            out[key] = add(out[key], p) if key in out else p
    return _result(SrMatrix, sr, m1.states, out)


def vec_mat(v: SrVector, m: SrMatrix) -> SrVector:
    """(v·m)(b) = Σ_a v(a)·m(a, b)."""
    _compatible(v, m)
    sr = v.semiring
    add, mul = sr.plus, sr.times
    vals = v.entries
    out: dict = {}
    for (a, b), w in m.entries.items():
        if a in vals:
            p = mul(vals[a], w)
            out[b] = add(out[b], p) if b in out else p
    return _result(SrVector, sr, v.states, out)


def mat_vec(m: SrMatrix, v: SrVector) -> SrVector:
    """(m·v)(a) = Σ_b m(a, b)·v(b)."""
    _compatible(m, v)
    sr = v.semiring
    add, mul = sr.plus, sr.times
    vals = v.entries
    out: dict = {}
    for (a, b), w in m.entries.items():
        if b in vals:
            p = mul(w, vals[b])
            out[a] = add(out[a], p) if a in out else p
    return _result(SrVector, sr, v.states, out)


def dot(v1: SrVector, v2: SrVector):
    _compatible(v1, v2)
    sr = v1.semiring
    other = v2.entries
    return sr.sum(sr.times(w, other[a]) for a, w in v1.entries.items() if a in other)


def hadamard(v1: SrVector, v2: SrVector) -> SrVector:
    _compatible(v1, v2)
    sr = v1.semiring
    other = v2.entries
    return _result(SrVector, sr, v1.states, {a: sr.times(w, other[a]) for a, w in v1.entries.items() if a in other})


def diag(v: SrVector) -> SrMatrix:
    return _result(SrMatrix, v.semiring, v.states, {(a, a): w for a, w in v.entries.items()})


def identity_matrix(semiring: Semiring, states: Iterable[State]) -> SrMatrix:
    states = tuple(states)
    if not states:
        raise ValueError("identity matrix needs a non-empty state list")
    return SrMatrix(semiring, states, {(a, a): semiring.one for a in states})


def all_ones(semiring: Semiring, states: Iterable[State]) -> SrVector:
    states = tuple(states)
    if not states:
        raise ValueError("all-ones vector needs a non-empty state list")
    return SrVector(semiring, states, {a: semiring.one for a in states})


def zero_vector(semiring: Semiring, states: Iterable[State]) -> SrVector:
    return SrVector(semiring, tuple(states), {})


def zero_matrix(semiring: Semiring, states: Iterable[State]) -> SrMatrix:
    return SrMatrix(semiring, tuple(states), {})


def total(v: SrVector):
    """Σ_a v(a), i.e. the scalar product with the all-ones vector."""
    return v.semiring.sum(v.entries.values())
