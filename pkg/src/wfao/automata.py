"""Sequential, Mealy-type and Moore-type weighted automata with output.

Weight families are kept as sparse maps from symbols to vectors/matrices;
a missing key stands for the all-zero vector or matrix.  Automata are
immutable once built.  Construction only checks structure (index sets,
keys); carrier membership and alphabet invariants are reported by
:func:`validate` so that bad input can be described rather than crash.
"""

from __future__ import annotations

import functools

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import ClassVar, Mapping, Sequence

from .errors import IndexMismatch, NotCrispError
from .semiring import Semiring
from .sralgebra import SrMatrix, SrVector, zero_matrix, zero_vector


@dataclass(frozen=True)
class WordPair:
    """A pair ``(u, v)`` of equally long input and output words."""

    u: tuple = ()
    v: tuple = ()

    def __post_init__(self):
        u, v = tuple(self.u), tuple(self.v)
        if len(u) != len(v):
            raise ValueError(f"input and output words differ in length ({len(u)} != {len(v)})")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    def __len__(self) -> int:
        return len(self.u)

    def __iter__(self):
        return iter(zip(self.u, self.v))

    def __add__(self, other: "WordPair") -> "WordPair":
        return WordPair(self.u + other.u, self.v + other.v)

    def __str__(self) -> str:
        return f"{','.join(self.u)};{','.join(self.v)}"


def as_word_pair(w) -> WordPair:
    if isinstance(w, WordPair):
        return w
    u, v = w
    return WordPair(tuple(u), tuple(v))


def _freeze_family(family, states, semiring, what):
    out = {}
    for key, item in dict(family).items():
        if item.states != states:
            raise IndexMismatch(f"{what} {key!r} is indexed by {item.states!r}, expected {states!r}")
        if item.semiring is not semiring:
            raise IndexMismatch(f"{what} {key!r} is over {item.semiring.name}, expected {semiring.name}")
        if item.entries:
            out[key] = item
    return out


class _Base:
    kind: ClassVar[str]

    @property
    def size(self) -> int:
        return len(self.states)

    def _init_common(self):
        for name in ("states", "inputs", "outputs"):
            object.__setattr__(self, name, tuple(getattr(self, name)))


@dataclass(frozen=True)
class SequentialWFA(_Base):
    """``(A, X, Y, σ, μ)`` with μ keyed by ``(x, y)``."""

    kind: ClassVar[str] = "sequential"

    semiring: Semiring
    states: tuple
    inputs: tuple
    outputs: tuple
    sigma: SrVector
    mu: Mapping[tuple, SrMatrix] = field(default_factory=dict)

    def __post_init__(self):
        self._init_common()
        _check_sigma(self)
        object.__setattr__(self, "mu", _freeze_family(self.mu, self.states, self.semiring, "mu"))

    def mu_xy(self, x, y) -> SrMatrix:
        return self.mu.get((x, y)) or zero_matrix(self.semiring, self.states)


@dataclass(frozen=True)
class MealyWFA(_Base):
    """``(A, X, Y, σ, δ, ω)`` with δ keyed by ``x`` and ω by ``(x, y)``."""

    kind: ClassVar[str] = "mealy"

    semiring: Semiring
    states: tuple
    inputs: tuple
    outputs: tuple
    sigma: SrVector
    delta: Mapping[str, SrMatrix] = field(default_factory=dict)
    omega: Mapping[tuple, SrVector] = field(default_factory=dict)

    def __post_init__(self):
        self._init_common()
        _check_sigma(self)
        object.__setattr__(self, "delta", _freeze_family(self.delta, self.states, self.semiring, "delta"))
        object.__setattr__(self, "omega", _freeze_family(self.omega, self.states, self.semiring, "omega"))

    def delta_x(self, x) -> SrMatrix:
        return self.delta.get(x) or zero_matrix(self.semiring, self.states)

    def omega_xy(self, x, y) -> SrVector:
        return self.omega.get((x, y)) or zero_vector(self.semiring, self.states)


@dataclass(frozen=True)
class MooreWFA(_Base):
    """``(A, X, Y, σ, δ, ω)`` with ω keyed by the output symbol alone."""

    kind: ClassVar[str] = "moore"

    semiring: Semiring
    states: tuple
    inputs: tuple
    outputs: tuple
    sigma: SrVector
    delta: Mapping[str, SrMatrix] = field(default_factory=dict)
    omega: Mapping[str, SrVector] = field(default_factory=dict)

    def __post_init__(self):
        self._init_common()
        _check_sigma(self)
        object.__setattr__(self, "delta", _freeze_family(self.delta, self.states, self.semiring, "delta"))
        object.__setattr__(self, "omega", _freeze_family(self.omega, self.states, self.semiring, "omega"))

    def delta_x(self, x) -> SrMatrix:
        return self.delta.get(x) or zero_matrix(self.semiring, self.states)

    def omega_y(self, y) -> SrVector:
        return self.omega.get(y) or zero_vector(self.semiring, self.states)


def _check_sigma(a) -> None:
    if a.sigma.states != a.states:
        raise IndexMismatch(f"initial vector indexed by {a.sigma.states!r}, expected {a.states!r}")
    if a.sigma.semiring is not a.semiring:
        raise IndexMismatch("initial vector is over a different semiring")


@dataclass(frozen=True)
class CrispDetMealy(_Base):
    """Functional form: initial state, transition function ``(a, x) -> a'``."""

    kind: ClassVar[str] = "cd-mealy"

    semiring: Semiring
    states: tuple
    inputs: tuple
    outputs: tuple
    initial_state: str
    transitions: Mapping[tuple, str] = field(default_factory=dict)
    omega: Mapping[tuple, SrVector] = field(default_factory=dict)

    def __post_init__(self):
        self._init_common()
        object.__setattr__(self, "transitions", dict(self.transitions))
        object.__setattr__(self, "omega", _freeze_family(self.omega, self.states, self.semiring, "omega"))

    def step(self, a, x):
        return self.transitions[(a, x)]

    def omega_xy(self, x, y) -> SrVector:
        return self.omega.get((x, y)) or zero_vector(self.semiring, self.states)

    def to_matrix_form(self) -> MealyWFA:
        return self._matrix_form

    @functools.cached_property
    def _matrix_form(self) -> MealyWFA:
        return MealyWFA(
            self.semiring, self.states, self.inputs, self.outputs,
            _unit_sigma(self), _crisp_delta(self), dict(self.omega),
        )


@dataclass(frozen=True)
class CrispDetMoore(_Base):
    kind: ClassVar[str] = "cd-moore"

    semiring: Semiring
    states: tuple
    inputs: tuple
    outputs: tuple
    initial_state: str
    transitions: Mapping[tuple, str] = field(default_factory=dict)
    omega: Mapping[str, SrVector] = field(default_factory=dict)

    def __post_init__(self):
        self._init_common()
        object.__setattr__(self, "transitions", dict(self.transitions))
        object.__setattr__(self, "omega", _freeze_family(self.omega, self.states, self.semiring, "omega"))

    def step(self, a, x):
        return self.transitions[(a, x)]

    def omega_y(self, y) -> SrVector:
        return self.omega.get(y) or zero_vector(self.semiring, self.states)

    def to_matrix_form(self) -> MooreWFA:
        return self._matrix_form

    @functools.cached_property
    def _matrix_form(self) -> MooreWFA:
        return MooreWFA(
            self.semiring, self.states, self.inputs, self.outputs,
            _unit_sigma(self), _crisp_delta(self), dict(self.omega),
        )


def _unit_sigma(m) -> SrVector:
    return SrVector(m.semiring, m.states, {m.initial_state: m.semiring.one})


def _crisp_delta(m) -> dict:
    one = m.semiring.one
    delta = {}
    for x in m.inputs:
        entries = {(a, m.transitions[(a, x)]): one for a in m.states if (a, x) in m.transitions}
        delta[x] = SrMatrix(m.semiring, m.states, entries)
    return delta


AUTOMATON_KINDS = {
    cls.kind: cls for cls in (SequentialWFA, MealyWFA, MooreWFA, CrispDetMealy, CrispDetMoore)
}


# --- validation -----------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


def validate(automaton) -> list[Violation]:
    """Return every broken invariant of ``automaton``; empty means valid."""
    out: list[Violation] = []
    a = automaton
    sr = a.semiring
    for name, label in (("states", "state set"), ("inputs", "input alphabet"), ("outputs", "output alphabet")):
        seq = getattr(a, name)
        if not seq:
            out.append(Violation("empty-set", f"{label} must be non-empty"))
        if len(set(seq)) != len(seq):
            out.append(Violation("duplicate", f"{label} has repeated entries"))

    X, Y = set(a.inputs), set(a.outputs)

    def weight(where, w):
        if not sr.contains(w):
            out.append(Violation("carrier", f"{where}: {w!r} is not in {sr.name} carrier {sr.carrier}"))

    def vector(where, vec):
        for st, w in vec.entries.items():
            weight(f"{where}[{st}]", w)

    def matrix(where, mat):
        for (p, q), w in mat.entries.items():
            weight(f"{where}[{p},{q}]", w)

    if isinstance(a, (CrispDetMealy, CrispDetMoore)):
        if a.initial_state not in a.states:
            out.append(Violation("initial-state", f"initial state {a.initial_state!r} is not a state"))
        for (st, x), target in a.transitions.items():
            if st not in a.states or x not in X or target not in a.states:
                out.append(Violation("transition", f"bad transition {st!r} --{x!r}--> {target!r}"))
        for st in a.states:
            for x in a.inputs:
                if (st, x) not in a.transitions:
                    out.append(Violation("partial-transition", f"no transition from {st!r} on {x!r}"))
    else:
        vector("sigma", a.sigma)

    if isinstance(a, SequentialWFA):
        for (x, y), m in a.mu.items():
            if x not in X or y not in Y:
                out.append(Violation("unknown-symbol", f"mu key {(x, y)!r} outside X×Y"))
            matrix(f"mu[{x},{y}]", m)
    if isinstance(a, (MealyWFA, MooreWFA)):
        for x, m in a.delta.items():
            if x not in X:
                out.append(Violation("unknown-symbol", f"delta key {x!r} outside X"))
            matrix(f"delta[{x}]", m)
    if isinstance(a, (MealyWFA, CrispDetMealy)):
        for (x, y), vec in a.omega.items():
            if x not in X or y not in Y:
                out.append(Violation("unknown-symbol", f"omega key {(x, y)!r} outside X×Y"))
            vector(f"omega[{x},{y}]", vec)
    if isinstance(a, (MooreWFA, CrispDetMoore)):
        for y, vec in a.omega.items():
            if y not in Y:
                out.append(Violation("unknown-symbol", f"omega key {y!r} outside Y"))
            vector(f"omega[{y}]", vec)
    return out


# --- crisp-deterministic machines ------------------------------------------

def _unit_row(sr: Semiring, states, lookup) -> str | None:
    """The unique state holding one, provided every other entry is zero."""
    hit = None
    for st in states:
        w = lookup(st)
        if sr.eq(w, sr.one):
            if hit is not None:
                return None
            hit = st
        elif not sr.eq(w, sr.zero):
            return None
    return hit


def check_crisp_deterministic(m) -> bool:
    if isinstance(m, (CrispDetMealy, CrispDetMoore)):
        return not validate(m)
    if not isinstance(m, (MealyWFA, MooreWFA)):
        return False
    sr = m.semiring
    if _unit_row(sr, m.states, m.sigma.__getitem__) is None:
        return False
    for x in m.inputs:
        d = m.delta_x(x)
        for a in m.states:
            if _unit_row(sr, m.states, lambda b: d[(a, b)]) is None:
                return False
    return True


def promote_to_crisp(m):
    """Read a crisp-deterministic matrix-form machine as its functional form."""
    if not isinstance(m, (MealyWFA, MooreWFA)) or not check_crisp_deterministic(m):
        raise NotCrispError("automaton is not crisp-deterministic")
    sr = m.semiring
    a0 = _unit_row(sr, m.states, m.sigma.__getitem__)
    transitions = {}
    for x in m.inputs:
        d = m.delta_x(x)
        for a in m.states:
            transitions[(a, x)] = _unit_row(sr, m.states, lambda b: d[(a, b)])
    cls = CrispDetMealy if isinstance(m, MealyWFA) else CrispDetMoore
    return cls(sr, m.states, m.inputs, m.outputs, a0, transitions, dict(m.omega))


def as_matrix_form(m):
    if isinstance(m, (CrispDetMealy, CrispDetMoore)):
        return m.to_matrix_form()
    return m


# --- random generation -------------------------------------------------------

def palette(sr: Semiring) -> list:
    """Zero, one and up to four mid-range carrier values."""
    mids = {
        "boolean": [],
        "godel": [0.2, 0.4, 0.6, 0.8],
        "viterbi": [0.2, 0.4, 0.6, 0.8],
        "tropical": [0.5, 1.0, 2.0, 3.0],
        "naturals": [2, 3, 4, 5],
        "rationals": [Fraction(1, 2), Fraction(1, 3), Fraction(3, 2), Fraction(2)],
    }[sr.name]
    return [sr.zero, sr.one, *mids]


def random_automaton(kind: str, semiring: Semiring, sizes: Sequence[int] | Mapping, seed: int):
    """A valid automaton of ``kind`` drawn from a seeded stream.

    ``sizes`` is ``(n_states, n_inputs, n_outputs)``.  States are named
    ``q0, q1, ...``, inputs ``a, b, ...`` and outputs ``0, 1, ...``.
    """
    if isinstance(sizes, Mapping):
        sizes = (sizes["states"], sizes["inputs"], sizes["outputs"])
    n_a, n_x, n_y = sizes
    if min(n_a, n_x, n_y) < 1:
        raise ValueError(f"sizes must be positive, got {sizes!r}")
    if kind not in AUTOMATON_KINDS:
        raise ValueError(f"unsupported automaton kind {kind!r}")
    rng = random.Random(seed)
    sr = semiring
    states = tuple(f"q{i}" for i in range(n_a))
    X = tuple(chr(ord("a") + i) for i in range(n_x))
    Y = tuple(str(i) for i in range(n_y))
    pal = palette(sr)

    def vec():
        return SrVector(sr, states, {a: rng.choice(pal) for a in states})

    def mat():
        return SrMatrix(sr, states, {(a, b): rng.choice(pal) for a in states for b in states})

    if kind == "sequential":
        return SequentialWFA(sr, states, X, Y, vec(), {(x, y): mat() for x in X for y in Y})
    if kind == "mealy":
        return MealyWFA(sr, states, X, Y, vec(), {x: mat() for x in X},
                        {(x, y): vec() for x in X for y in Y})
    if kind == "moore":
        return MooreWFA(sr, states, X, Y, vec(), {x: mat() for x in X}, {y: vec() for y in Y})
    a0 = rng.choice(states)
    transitions = {(a, x): rng.choice(states) for a in states for x in X}
    if kind == "cd-mealy":
        return CrispDetMealy(sr, states, X, Y, a0, transitions, {(x, y): vec() for x in X for y in Y})
    return CrispDetMoore(sr, states, X, Y, a0, transitions, {y: vec() for y in Y})


def random_sizes(rng: random.Random, max_states=3, max_inputs=2, max_outputs=2) -> tuple:
    return rng.randint(1, max_states), rng.randint(1, max_inputs), rng.randint(1, max_outputs)
