"""Behaviors of weighted automata with output.

Two independent evaluators are provided for every semantics:

* :func:`behavior` composes vectors and matrices (linear in the word length);
* :func:`behavior_oracle` enumerates state tuples and adds up the path
  products one by one.  It is exponential and exists to check the former.

Semantics tags and the automaton kinds they apply to::

    seq   sequential
    1n    mealy, moore (and crisp-deterministic machines in matrix form)
    n1    mealy, moore (idem)
    s     mealy (idem)
    cd    crisp-deterministic mealy / moore
"""

from __future__ import annotations

import enum
import itertools

from .automata import (
    CrispDetMealy,
    CrispDetMoore,
    MealyWFA,
    MooreWFA,
    SequentialWFA,
    WordPair,
    as_word_pair,
    check_crisp_deterministic,
    promote_to_crisp,
)
from .errors import EnumerationTooLarge, IncompatibleSemantics, UnknownSymbol
from .sralgebra import (
    SrMatrix,
    diag,
    dot,
    hadamard,
    identity_matrix,
    mat_mul,
    mat_vec,
    total,
    vec_mat,
)

ORACLE_LIMIT = 10**7


class Semantics(str, enum.Enum):
    SEQ = "seq"
    ONE_N = "1n"
    N_ONE = "n1"
    S = "s"
    CD = "cd"

    def __str__(self) -> str:
        return self.value


_ALLOWED = {
    "sequential": {Semantics.SEQ},
    "mealy": {Semantics.ONE_N, Semantics.N_ONE, Semantics.S, Semantics.CD},
    "moore": {Semantics.ONE_N, Semantics.N_ONE, Semantics.CD},
    "cd-mealy": {Semantics.ONE_N, Semantics.N_ONE, Semantics.S, Semantics.CD},
    "cd-moore": {Semantics.ONE_N, Semantics.N_ONE, Semantics.CD},
}


def compatible_tags(automaton) -> set:
    tags = set(_ALLOWED[automaton.kind])
    if isinstance(automaton, (MealyWFA, MooreWFA)) and not check_crisp_deterministic(automaton):
        tags.discard(Semantics.CD)
    return tags


def _resolve(automaton, tag):
    """Normalize ``tag`` and bring ``automaton`` into the form it needs."""
    try:
        tag = Semantics(tag)
    except ValueError:
        raise IncompatibleSemantics(f"unknown semantics {tag!r}") from None
    if tag not in _ALLOWED.get(automaton.kind, ()):
        raise IncompatibleSemantics(f"semantics {tag} does not apply to a {automaton.kind} automaton")
    if tag is Semantics.CD:
        if isinstance(automaton, (MealyWFA, MooreWFA)):
            if not check_crisp_deterministic(automaton):
                raise IncompatibleSemantics("cd semantics needs a crisp-deterministic automaton")
            automaton = promote_to_crisp(automaton)
    elif isinstance(automaton, (CrispDetMealy, CrispDetMoore)):
        automaton = automaton.to_matrix_form()
    return automaton, tag


def _check_symbols(automaton, w: WordPair) -> None:
    X, Y = set(automaton.inputs), set(automaton.outputs)
    for x, y in w:
        if x not in X:
            raise UnknownSymbol(f"input symbol {x!r} is not in the input alphabet")
        if y not in Y:
            raise UnknownSymbol(f"output symbol {y!r} is not in the output alphabet")


def mu_word(a: SequentialWFA, w) -> SrMatrix:
    """μ_{u,v} = μ_{x1,y1}·...·μ_{xn,yn}; the identity for the empty pair."""
    w = as_word_pair(w)
    _check_symbols(a, w)
    m = identity_matrix(a.semiring, a.states)
    for x, y in w:
        m = mat_mul(m, a.mu_xy(x, y))
    return m


def delta_word(a, u) -> SrMatrix:
    """δ_u = δ_{x1}·...·δ_{xn}; the identity for the empty word."""
    a = a.to_matrix_form() if isinstance(a, (CrispDetMealy, CrispDetMoore)) else a
    X = set(a.inputs)
    m = identity_matrix(a.semiring, a.states)
    for x in u:
        if x not in X:
            raise UnknownSymbol(f"input symbol {x!r} is not in the input alphabet")
        m = mat_mul(m, a.delta_x(x))
    return m


def behavior(a, tag, w):
    """The value of ``a`` on the word pair ``w`` under semantics ``tag``."""
    w = as_word_pair(w)
    a, tag = _resolve(a, tag)
    _check_symbols(a, w)
    if tag is Semantics.CD:
        return _cd(a, w)
    if len(w) == 0:
        return total(a.sigma)
    return _MATRIX_FORMS[(a.kind, tag)](a, list(w))


def _seq(a: SequentialWFA, letters):
    r = a.sigma
    for x, y in letters:
        r = vec_mat(r, a.mu_xy(x, y))
    return total(r)


def _mealy_s(a: MealyWFA, letters):
    # μ_{x,y} = D(ω_{x,y})·δ_x, applied to a row vector
    r = a.sigma
    for x, y in letters:
        r = vec_mat(hadamard(r, a.omega_xy(x, y)), a.delta_x(x))
    return total(r)


def _mealy_1n(a: MealyWFA, letters):
    # suffix vectors: ω_{xu,yv} = D(ω_{x,y})·δ_x·ω_{u,v}
    x, y = letters[-1]
    w = a.omega_xy(x, y)
    for x, y in reversed(letters[:-1]):
        w = mat_vec(diag(a.omega_xy(x, y)), mat_vec(a.delta_x(x), w))
    return dot(a.sigma, w)


def _mealy_n1(a: MealyWFA, letters):
    # ω_{ux,vy} = ω_{u,v} ⊙ (δ_u·ω_{x,y}), carrying δ_u along
    x, y = letters[0]
    w = a.omega_xy(x, y)
    prefix = a.delta_x(x)
    for x, y in letters[1:]:
        w = hadamard(w, mat_vec(prefix, a.omega_xy(x, y)))
        prefix = mat_mul(prefix, a.delta_x(x))
    return dot(a.sigma, w)


def _moore_1n(a: MooreWFA, letters):
    # ω_{xu,yv} = δ_x·D(ω_y)·ω_{u,v}, seeded with δ_{xn}·ω_{yn}
    x, y = letters[-1]
    w = mat_vec(a.delta_x(x), a.omega_y(y))
    for x, y in reversed(letters[:-1]):
        w = mat_vec(a.delta_x(x), hadamard(a.omega_y(y), w))
    return dot(a.sigma, w)


def _moore_n1(a: MooreWFA, letters):
    # ω_{ux,vy} = ω_{u,v} ⊙ (δ_{ux}·ω_y)
    w = None
    prefix = None
    for x, y in letters:
        prefix = a.delta_x(x) if prefix is None else mat_mul(prefix, a.delta_x(x))
        term = mat_vec(prefix, a.omega_y(y))
        w = term if w is None else hadamard(w, term)
    return dot(a.sigma, w)


_MATRIX_FORMS = {
    ("sequential", Semantics.SEQ): _seq,
    ("mealy", Semantics.S): _mealy_s,
    ("mealy", Semantics.ONE_N): _mealy_1n,
    ("mealy", Semantics.N_ONE): _mealy_n1,
    ("moore", Semantics.ONE_N): _moore_1n,
    ("moore", Semantics.N_ONE): _moore_n1,
}


def _cd(a, w: WordPair):
    sr = a.semiring
    value = sr.one
    state = a.initial_state
    if isinstance(a, CrispDetMealy):
        for x, y in w:
            value = sr.mul(value, a.omega_xy(x, y)[state])
            state = a.step(state, x)
    else:
        for x, y in w:
            state = a.step(state, x)
            value = sr.mul(value, a.omega_y(y)[state])
    return value


# --- path-sum oracle -------------------------------------------------------
#
# Every non-cd behavior is a sum, over state tuples (a0, a1, ..., a_{w-1}),
# of a product whose factors are grouped per position:
#
#     first(a0) · step_1(a0, a0, a1) · step_2(a0, a1, a2) · ...
#
# where step_k(a0, prev, cur) may read the start state (n1 semantics refer to
# δ_{x1..xk}(a0, ak)).  The tuples are walked depth first so that shared
# prefixes are multiplied once; a prefix equal to zero contributes zero for
# every completion and is skipped.  No sums are exchanged with products.


class _Dense:
    """Positional weight tables for one automaton."""

    def __init__(self, a):
        self.sr = a.semiring
        self.n = len(a.states)
        idx = range(self.n)
        st = a.states
        self.sigma = [a.sigma[s] for s in st]
        if isinstance(a, SequentialWFA):
            self.mu = {
                (x, y): [[a.mu_xy(x, y)[(st[i], st[j])] for j in idx] for i in idx]
                for x in a.inputs for y in a.outputs
            }
        else:
            self.delta = {x: [[a.delta_x(x)[(st[i], st[j])] for j in idx] for i in idx] for x in a.inputs}
            if isinstance(a, MealyWFA):
                self.omega = {(x, y): [a.omega_xy(x, y)[s] for s in st] for x in a.inputs for y in a.outputs}
            else:
                self.omega = {y: [a.omega_y(y)[s] for s in st] for y in a.outputs}
        self._paths: dict = {}

    def path_delta(self, u: tuple) -> list:
        """δ_u as a table, each entry an explicit sum over intermediate tuples."""
        if u in self._paths:
            return self._paths[u]
        sr, n = self.sr, self.n
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = sr.zero
                for mid in itertools.product(range(n), repeat=len(u) - 1):
                    path = (i, *mid, j)
                    acc = sr.add(acc, sr.prod(self.delta[x][path[k]][path[k + 1]] for k, x in enumerate(u)))
                row.append(acc)
            table.append(row)
        self._paths[u] = table
        return table


_dense_cache: list = [None, None]


def _dense(a) -> _Dense:
    # keep the automaton referenced so its id cannot be reused
    if _dense_cache[0] is not a:
        _dense_cache[:] = [a, _Dense(a)]
    return _dense_cache[1]


def _factors(d: _Dense, kind, tag, xs, ys):
    """(first, steps) for the displayed sum of ``kind`` under ``tag``."""
    n = len(xs)
    sr = d.sr
    mul = sr.times
    sigma = d.sigma
    if kind == "sequential":
        # σ(a0)·μ_{x1,y1}(a0,a1)·...·μ_{xn,yn}(a_{n-1},an)
        mus = [d.mu[(x, y)] for x, y in zip(xs, ys)]
        first = lambda a0: sigma[a0]
        steps = [lambda a0, p, s, m=m: m[p][s] for m in mus]
        return first, steps
    if kind == "moore":
        deltas = [d.delta[x] for x in xs]
        omegas = [d.omega[y] for y in ys]
        first = lambda a0: sigma[a0]
        if tag is Semantics.ONE_N:
            # σ(a0)·δ_{x1}(a0,a1)·ω_{y1}(a1)·...·δ_{xn}(a_{n-1},an)·ω_{yn}(an)
            steps = [lambda a0, p, s, dl=dl, om=om: mul(dl[p][s], om[s]) for dl, om in zip(deltas, omegas)]
        else:
            # σ(a0)·δ_{x1}(a0,a1)·ω_{y1}(a1)·δ_{x1x2}(a0,a2)·ω_{y2}(a2)·...
            prefixes = [d.path_delta(tuple(xs[:k])) for k in range(1, n + 1)]
            steps = [lambda a0, p, s, dl=dl, om=om: mul(dl[a0][s], om[s]) for dl, om in zip(prefixes, omegas)]
        return first, steps
    # mealy
    deltas = [d.delta[x] for x in xs]
    omegas = [d.omega[(x, y)] for x, y in zip(xs, ys)]
    first = lambda a0: mul(sigma[a0], omegas[0][a0])
    if tag is Semantics.S:
        # σ(a0)·ω_{x1,y1}(a0)·δ_{x1}(a0,a1)·ω_{x2,y2}(a1)·...·ω_{xn,yn}(a_{n-1})·δ_{xn}(a_{n-1},an)
        steps = [lambda a0, p, s, dl=dl, om=om: mul(dl[p][s], om[s]) for dl, om in zip(deltas, omegas[1:])]
        last = deltas[-1]
        steps.append(lambda a0, p, s: last[p][s])
    elif tag is Semantics.ONE_N:
        # σ(a0)·ω_{x1,y1}(a0)·δ_{x1}(a0,a1)·ω_{x2,y2}(a1)·...·δ_{x_{n-1}}(a_{n-2},a_{n-1})·ω_{xn,yn}(a_{n-1})
        steps = [lambda a0, p, s, dl=dl, om=om: mul(dl[p][s], om[s]) for dl, om in zip(deltas, omegas[1:])]
    else:
        # σ(a0)·ω_{x1,y1}(a0)·δ_{x1}(a0,a1)·ω_{x2,y2}(a1)·δ_{x1x2}(a0,a2)·ω_{x3,y3}(a2)·...
        prefixes = [d.path_delta(tuple(xs[:k])) for k in range(1, n)]
        steps = [lambda a0, p, s, dl=dl, om=om: mul(dl[a0][s], om[s]) for dl, om in zip(prefixes, omegas[1:])]
    return first, steps


def behavior_oracle(a, tag, w):
    """Evaluate the behavior by brute-force summation over state tuples."""
    w = as_word_pair(w)
    a, tag = _resolve(a, tag)
    _check_symbols(a, w)
    n = len(w)
    n_states = len(a.states)
    if n_states ** (n + 1) > ORACLE_LIMIT:
        raise EnumerationTooLarge(f"{n_states}^{n + 1} state tuples exceed the oracle limit {ORACLE_LIMIT}")
    if tag is Semantics.CD:
        return _cd_oracle(a, w)
    d = _dense(a)
    sr = d.sr
    if n == 0:
        # σ·ω_{ε,ε} (resp. σ·μ_{ε,ε}·τ) with the identity written out
        return sr.sum(
            sr.mul(d.sigma[i], sr.one if i == j else sr.zero)
            for i in range(n_states) for j in range(n_states)
        )
    first, steps = _factors(d, a.kind, tag, w.u, w.v)
    zero, add, mul = sr.zero, sr.plus, sr.times
    states = range(n_states)
    depth = len(steps)
    acc = zero

    def walk(k, a0, prev, prefix):
        nonlocal acc
        step = steps[k]
        for s in states:
            value = mul(prefix, step(a0, prev, s))
            if value == zero:
                continue
            if k + 1 == depth:
                acc = add(acc, value)
            else:
                walk(k + 1, a0, s, value)

    for a0 in states:
        value = first(a0)
        if value == zero:
            continue
        if depth == 0:
            acc = add(acc, value)
        else:
            walk(0, a0, a0, value)
    return acc


def _cd_oracle(a, w: WordPair):
    """Sum over all state sequences of crisp indicator products.

    Only the sequence that follows the transition function contributes; the
    sum is kept explicit so this stays independent of the run in :func:`_cd`.
    """
    sr = a.semiring
    st = a.states
    n = len(w)
    if n == 0:
        return sr.one
    mealy = isinstance(a, CrispDetMealy)
    acc = sr.zero
    # Mealy reads ω at a0..a_{n-1}; Moore at a1..an
    for t in itertools.product(st, repeat=n + 1):
        if t[0] != a.initial_state:
            continue
        if any(a.transitions[(t[k], x)] != t[k + 1] for k, x in enumerate(w.u)):
            continue
        if mealy:
            factors = (a.omega_xy(x, y)[t[k]] for k, (x, y) in enumerate(w))
        else:
            factors = (a.omega_y(y)[t[k + 1]] for k, y in enumerate(w.v))
        acc = sr.add(acc, sr.prod(factors))
    return acc
