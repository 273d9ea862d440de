"""Constructive conversions between sequential, Mealy and Moore automata.

Each conversion returns the new automaton together with a
:class:`ConversionReport` stating which behaviors coincide and the bound on
the number of states.  Composite states are named by joining their
components with ``|``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import (
    CrispDetMealy,
    CrispDetMoore,
    MealyWFA,
    MooreWFA,
    SequentialWFA,
    validate,
)
from .errors import ConditionUnsatisfied, InvalidAutomaton, NoTheorem
from .semantics import Semantics
from .sralgebra import SrMatrix, SrVector

SEP = "|"
DEFAULT_P_MAX = 64


@dataclass(frozen=True)
class ConversionReport:
    theorem: int
    source_kind: str
    source_size: int
    target_kind: str
    target_size: int
    bound: int
    guarantees: tuple  # ((source tag, target tag), ...)
    p: int | None = None
    y0: str | None = None

    @property
    def within_bound(self) -> bool:
        return self.target_size <= self.bound

    def __str__(self) -> str:
        pairs = ", ".join(f"{s} -> {t}" for s, t in self.guarantees)
        extra = ""
        if self.p is not None:
            extra += f", p={self.p}"
        if self.y0 is not None:
            extra += f", y0={self.y0}"
        return (
            f"construction {self.theorem}: {self.source_kind}[{self.source_size}] -> "
            f"{self.target_kind}[{self.target_size}] (bound {self.bound}; {pairs}{extra})"
        )


def _name(*parts) -> str:
    return SEP.join(parts)


def _prepare(a, *kinds):
    if isinstance(a, (CrispDetMealy, CrispDetMoore)):
        a = a.to_matrix_form()
    if a.kind not in kinds:
        raise TypeError(f"expected a {' or '.join(kinds)} automaton, got {a.kind}")
    problems = validate(a)
    if problems:
        raise InvalidAutomaton(problems)
    return a


def _unique(states) -> tuple:
    states = tuple(states)
    if len(set(states)) != len(states):
        raise ValueError(f"composite state names collide; state names must not contain {SEP!r}")
    return states


def mealy_to_sequential(m: MealyWFA):
    """Fuse output and transition weights: μ(a,x,y,b) = ω(a,x,y)·δ(a,x,b)."""
    m = _prepare(m, "mealy")
    sr = m.semiring
    mu = {}
    for x in m.inputs:
        d = m.delta_x(x)
        for y in m.outputs:
            o = m.omega_xy(x, y)
            mu[(x, y)] = SrMatrix(sr, m.states, {
                (a, b): sr.mul(o[a], w) for (a, b), w in d.entries.items()
            })
    b = SequentialWFA(sr, m.states, m.inputs, m.outputs, m.sigma, mu)
    return b, ConversionReport(1, "mealy", m.size, "sequential", b.size, m.size,
                               ((Semantics.S, Semantics.SEQ),))


def moore_to_sequential(m: MooreWFA):
    """μ(a,x,y,b) = δ(a,x,b)·ω(b,y)."""
    m = _prepare(m, "moore")
    sr = m.semiring
    mu = {}
    for x in m.inputs:
        d = m.delta_x(x)
        for y in m.outputs:
            o = m.omega_y(y)
            mu[(x, y)] = SrMatrix(sr, m.states, {
                (a, b): sr.mul(w, o[b]) for (a, b), w in d.entries.items()
            })
    b = SequentialWFA(sr, m.states, m.inputs, m.outputs, m.sigma, mu)
    return b, ConversionReport(2, "moore", m.size, "sequential", b.size, m.size,
                               ((Semantics.ONE_N, Semantics.SEQ),))


def sequential_to_moore(s: SequentialWFA):
    """States A×Y; a state remembers the output symbol emitted on entering it."""
    s = _prepare(s, "sequential")
    sr = s.semiring
    y0 = s.outputs[0]
    pair = {(a, y): _name(a, y) for a in s.states for y in s.outputs}
    states = _unique(pair.values())
    sigma = SrVector(sr, states, {pair[(a, y0)]: w for a, w in s.sigma.entries.items()})
    delta = {}
    for x in s.inputs:
        entries = {}
        # δ^B((a1,y1), x, (a2,y2)) = μ(a1, x, y2, a2), for every y1
        for y2 in s.outputs:
            for (a1, a2), w in s.mu_xy(x, y2).entries.items():
                for y1 in s.outputs:
                    entries[(pair[(a1, y1)], pair[(a2, y2)])] = w
        delta[x] = SrMatrix(sr, states, entries)
    omega = {
        y: SrVector(sr, states, {pair[(a, y)]: sr.one for a in s.states})
        for y in s.outputs
    }
    b = MooreWFA(sr, states, s.inputs, s.outputs, sigma, delta, omega)
    return b, ConversionReport(3, "sequential", s.size, "moore", b.size,
                               s.size * len(s.outputs), ((Semantics.SEQ, Semantics.ONE_N),), y0=y0)


def mealy_to_moore(m: MealyWFA):
    """States A ∪ A×X; the pair states carry the pending Mealy output."""
    m = _prepare(m, "mealy")
    sr = m.semiring
    pair = {(a, x): _name(a, x) for a in m.states for x in m.inputs}
    states = _unique((*m.states, *pair.values()))
    sigma = SrVector(sr, states, dict(m.sigma.entries))
    delta = {}
    for x in m.inputs:
        entries = {(a, pair[(a, x)]): sr.one for a in m.states}
        # δ^B((a1,x1), x, (a2,x)) = δ^A(a1, x1, a2)
        for x1 in m.inputs:
            for (a1, a2), w in m.delta_x(x1).entries.items():
                entries[(pair[(a1, x1)], pair[(a2, x)])] = w
        delta[x] = SrMatrix(sr, states, entries)
    omega = {}
    for y in m.outputs:
        omega[y] = SrVector(sr, states, {
            pair[(a, x)]: m.omega_xy(x, y)[a] for a in m.states for x in m.inputs
        })
    b = MooreWFA(sr, states, m.inputs, m.outputs, sigma, delta, omega)
    guarantees = ((Semantics.ONE_N, Semantics.ONE_N), (Semantics.N_ONE, Semantics.N_ONE))
    return b, ConversionReport(4, "mealy", m.size, "moore", b.size,
                               m.size * (len(m.inputs) + 1), guarantees)


def moore_to_mealy(m: MooreWFA):
    """States A×A; a pair (a1, a2) stands for the transition a1 -> a2 about to happen."""
    m = _prepare(m, "moore")
    sr = m.semiring
    pair = {(a1, a2): _name(a1, a2) for a1 in m.states for a2 in m.states}
    states = _unique(pair.values())
    sigma = SrVector(sr, states, {
        pair[(a1, a2)]: w for a1, w in m.sigma.entries.items() for a2 in m.states
    })
    chain = {
        (pair[(a1, a2)], pair[(a2, a3)]): sr.one
        for a1 in m.states for a2 in m.states for a3 in m.states
    }
    delta = {x: SrMatrix(sr, states, chain) for x in m.inputs}
    omega = {}
    for x in m.inputs:
        d = m.delta_x(x)
        for y in m.outputs:
            o = m.omega_y(y)
            omega[(x, y)] = SrVector(sr, states, {
                pair[(a1, a2)]: sr.mul(w, o[a2]) for (a1, a2), w in d.entries.items()
            })
    b = MealyWFA(sr, states, m.inputs, m.outputs, sigma, delta, omega)
    return b, ConversionReport(5, "moore", m.size, "mealy", b.size, m.size ** 2,
                               ((Semantics.ONE_N, Semantics.ONE_N),))


def _image(s: SequentialWFA) -> list:
    sr = s.semiring
    seen = [sr.zero]
    for m in s.mu.values():
        for w in m.entries.values():
            if w not in seen:
                seen.append(w)
    return seen


def _smallest_p(sr, values, k: int, p_max: int):
    """Smallest p <= p_max with (p·k)s = s for every s in ``values``."""
    if sr.idempotent:
        return 1
    for p in range(1, p_max + 1):
        if all(sr.eq(sr.nat_scale(p * k, s), s) for s in values):
            return p
    return None


def find_p(s: SequentialWFA, p_max: int = DEFAULT_P_MAX):
    """Smallest p <= p_max with (p·k)s = s on the image of μ, k = |X|·|Y|."""
    if p_max < 1:
        raise ValueError("p_max must be at least 1")
    k = len(s.inputs) * len(s.outputs)
    return _smallest_p(s.semiring, _image(s), k, p_max)


def sequential_to_mealy(s: SequentialWFA, p_max: int = DEFAULT_P_MAX):
    """States A×X×Y; a state (a, x, y) commits to reading x and emitting y.

    Every state tuple of the source is matched by k = |X|·|Y| tuples of the
    result (the last state is free), so the initial weights are scaled by p
    with (p·k)s = s.  The same scaling multiplies the empty-word value
    Σ_a σ(a) by p·k, so p must also fix that sum.
    """
    s = _prepare(s, "sequential")
    sr = s.semiring
    k = len(s.inputs) * len(s.outputs)
    image = _image(s)
    p = _smallest_p(sr, image, k, p_max)
    if p is None:
        witness = next(v for v in image if not sr.eq(sr.nat_scale(k, v), v))
        raise ConditionUnsatisfied(
            f"no p <= {p_max} with ({k}p)s = s on the image of mu; "
            f"witness s = {witness!r}", witness)
    empty_value = sr.sum(s.sigma.entries.values())
    p = _smallest_p(sr, [*image, empty_value], k, p_max)
    if p is None:
        raise ConditionUnsatisfied(
            f"no p <= {p_max} with ({k}p)s = s for both the image of mu and the "
            f"empty-word value s = {empty_value!r}", empty_value)

    triple = {(a, x, y): _name(a, x, y) for a in s.states for x in s.inputs for y in s.outputs}
    states = _unique(triple.values())
    sigma = SrVector(sr, states, {
        name: sr.nat_scale(p, s.sigma[a]) for (a, _, _), name in triple.items()
    })
    delta = {}
    for x in s.inputs:
        entries = {}
        # δ^B((a1,x1,y1), x, (a2,x2,y2)) = μ(a1, x, y1, a2): the source state's y
        for y1 in s.outputs:
            for (a1, a2), w in s.mu_xy(x, y1).entries.items():
                for x1 in s.inputs:
                    src = triple[(a1, x1, y1)]
                    for x2 in s.inputs:
                        for y2 in s.outputs:
                            entries[(src, triple[(a2, x2, y2)])] = w
        delta[x] = SrMatrix(sr, states, entries)
    omega = {
        (x, y): SrVector(sr, states, {triple[(a, x, y)]: sr.one for a in s.states})
        for x in s.inputs for y in s.outputs
    }
    b = MealyWFA(sr, states, s.inputs, s.outputs, sigma, delta, omega)
    return b, ConversionReport(6, "sequential", s.size, "mealy", b.size, s.size * k,
                               ((Semantics.SEQ, Semantics.S),), p=p)


# (source kind, target kind, semantics named on the Mealy/Moore side)
CONVERSIONS = {
    ("mealy", "sequential", Semantics.S): mealy_to_sequential,
    ("moore", "sequential", Semantics.ONE_N): moore_to_sequential,
    ("sequential", "moore", Semantics.ONE_N): sequential_to_moore,
    ("mealy", "moore", Semantics.ONE_N): mealy_to_moore,
    ("mealy", "moore", Semantics.N_ONE): mealy_to_moore,
    ("moore", "mealy", Semantics.ONE_N): moore_to_mealy,
    ("sequential", "mealy", Semantics.S): sequential_to_mealy,
}


def convert(a, target_kind: str, semantics, p_max: int = DEFAULT_P_MAX):
    """Pick the unique construction for (source kind, target kind, semantics)."""
    source_kind = {"cd-mealy": "mealy", "cd-moore": "moore"}.get(a.kind, a.kind)
    try:
        tag = Semantics(semantics)
    except ValueError:
        raise NoTheorem(f"unknown semantics {semantics!r}") from None
    fn = CONVERSIONS.get((source_kind, target_kind, tag))
    if fn is None:
        raise NoTheorem(f"no conversion from {source_kind} to {target_kind} preserves {tag} semantics")
    if fn is sequential_to_mealy:
        return fn(a, p_max=p_max)
    return fn(a)
