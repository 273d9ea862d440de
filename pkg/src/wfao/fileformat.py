"""JSON serialization of automata.

A document looks like::

    {
      "semiring": "godel",
      "kind": "mealy",
      "states": ["a1", "a2"],
      "input_alphabet": ["0"],
      "output_alphabet": ["0", "1"],
      "initial": {"a1": 1},
      "transitions": [{"from": "a1", "input": "0", "to": "a1", "weight": 0.7}],
      "outputs": [{"state": "a1", "input": "0", "output": "0", "weight": 0.6}]
    }

Record shapes depend on ``kind``; crisp-deterministic kinds use
``initial_state`` and weightless transitions.  Omitted records are zero.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .automata import (
    AUTOMATON_KINDS,
    CrispDetMealy,
    CrispDetMoore,
    MealyWFA,
    MooreWFA,
    SequentialWFA,
    validate,
)
from .errors import FormatError
from .semiring import CATALOG, TROPICAL, Semiring
from .sralgebra import SrMatrix, SrVector

_TOP = {"semiring", "kind", "states", "input_alphabet", "output_alphabet",
        "initial", "initial_state", "transitions", "outputs"}

# kind -> (transition fields, output fields); None means the section is absent
_RECORDS = {
    "sequential": (("from", "input", "output", "to", "weight"), None),
    "mealy": (("from", "input", "to", "weight"), ("state", "input", "output", "weight")),
    "moore": (("from", "input", "to", "weight"), ("state", "output", "weight")),
    "cd-mealy": (("from", "input", "to"), ("state", "input", "output", "weight")),
    "cd-moore": (("from", "input", "to"), ("state", "output", "weight")),
}


def encode_value(sr: Semiring, value):
    if sr is TROPICAL and value == math.inf:
        return "inf"
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return value


def decode_value(sr: Semiring, raw, where: str):
    value = raw
    if sr is TROPICAL and raw == "inf":
        value = math.inf
    elif sr.name == "rationals" and isinstance(raw, str):
        try:
            value = Fraction(raw)
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"{where}: cannot read {raw!r} as a rational") from None
    elif sr.name == "rationals" and isinstance(raw, float):
        raise FormatError(f"{where}: write rationals as integers or 'p/q' strings, got {raw!r}")
    if not sr.contains(value):
        raise FormatError(f"{where}: carrier violation, {raw!r} is not in {sr.name} ({sr.carrier})")
    return sr.normalize(value)


def _name_list(doc, key):
    seq = doc.get(key)
    if not isinstance(seq, list) or not all(isinstance(s, str) for s in seq):
        raise FormatError(f"{key!r} must be a list of strings")
    if not seq:
        raise FormatError(f"{key!r} must be non-empty")
    if len(set(seq)) != len(seq):
        raise FormatError(f"{key!r} contains duplicates")
    return tuple(seq)


def loads(text: str | bytes):
    """Parse a document into an automaton, raising :class:`FormatError`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"syntax error at line {e.lineno}, column {e.colno}: {e.msg}") from None
    except (UnicodeDecodeError, RecursionError) as e:
        raise FormatError(f"cannot decode document: {e}") from None
    if not isinstance(doc, dict):
        raise FormatError("top level must be a JSON object")
    unknown = set(doc) - _TOP
    if unknown:
        raise FormatError(f"unknown fields: {', '.join(sorted(unknown))}")

    name = doc.get("semiring")
    sr = CATALOG.get(name) if isinstance(name, str) else None
    if sr is None:
        raise FormatError(f"unknown semiring {doc.get('semiring')!r}; expected one of {', '.join(CATALOG)}")
    kind = doc.get("kind")
    if not isinstance(kind, str) or kind not in AUTOMATON_KINDS:
        raise FormatError(f"unknown kind {kind!r}; expected one of {', '.join(AUTOMATON_KINDS)}")
    states = _name_list(doc, "states")
    X = _name_list(doc, "input_alphabet")
    Y = _name_list(doc, "output_alphabet")
    known = {"state": set(states), "from": set(states), "to": set(states),
             "input": set(X), "output": set(Y)}
    trans_fields, out_fields = _RECORDS[kind]
    crisp = kind.startswith("cd-")

    if crisp:
        if "initial" in doc:
            raise FormatError(f"{kind} documents use 'initial_state', not 'initial'")
        init = doc.get("initial_state")
        if not isinstance(init, str) or init not in known["state"]:
            raise FormatError(f"initial_state {init!r} is not a declared state")
    else:
        if "initial_state" in doc:
            raise FormatError(f"{kind} documents use 'initial', not 'initial_state'")
        raw = doc.get("initial", {})
        if not isinstance(raw, dict):
            raise FormatError("'initial' must map state names to weights")
        sigma = {}
        for st, w in raw.items():
            if st not in known["state"]:
                raise FormatError(f"initial: unknown state {st!r}")
            sigma[st] = decode_value(sr, w, f"initial[{st}]")
    if out_fields is None and doc.get("outputs"):
        raise FormatError("sequential documents carry weights in 'transitions'; 'outputs' must be empty")

    def records(section, fields):
        raw = doc.get(section, [])
        if not isinstance(raw, list):
            raise FormatError(f"{section!r} must be a list of records")
        seen = set()
        for i, rec in enumerate(raw):
            where = f"{section}[{i}]"
            if not isinstance(rec, dict):
                raise FormatError(f"{where}: expected an object, got {rec!r}")
            if set(rec) != set(fields):
                missing = set(fields) - set(rec)
                extra = set(rec) - set(fields)
                detail = []
                if missing:
                    detail.append(f"missing {', '.join(sorted(missing))}")
                if extra:
                    detail.append(f"unknown {', '.join(sorted(extra))}")
                raise FormatError(f"{where}: {'; '.join(detail)} in {rec!r}")
            for f in fields:
                if f != "weight" and (not isinstance(rec[f], str) or rec[f] not in known[f]):
                    raise FormatError(f"{where}: unknown {f} {rec[f]!r} in {rec!r}")
            key = tuple(rec[f] for f in fields if f != "weight" and not (crisp and section == "transitions" and f == "to"))
            if key in seen:
                raise FormatError(f"{where}: duplicate record {rec!r}")
            seen.add(key)
            weight = decode_value(sr, rec["weight"], where) if "weight" in rec else None
            yield rec, weight

    trans = list(records("transitions", trans_fields))
    outs = list(records("outputs", out_fields)) if out_fields else []

    if kind == "sequential":
        mu: dict = {}
        for rec, w in trans:
            mu.setdefault((rec["input"], rec["output"]), {})[(rec["from"], rec["to"])] = w
        a = SequentialWFA(sr, states, X, Y, SrVector(sr, states, sigma),
                          {k: SrMatrix(sr, states, e) for k, e in mu.items()})
    elif crisp:
        transitions = {(rec["from"], rec["input"]): rec["to"] for rec, _ in trans}
        omega = _output_vectors(sr, states, outs, kind == "cd-mealy")
        cls = CrispDetMealy if kind == "cd-mealy" else CrispDetMoore
        a = cls(sr, states, X, Y, init, transitions, omega)
    else:
        delta: dict = {}
        for rec, w in trans:
            delta.setdefault(rec["input"], {})[(rec["from"], rec["to"])] = w
        omega = _output_vectors(sr, states, outs, kind == "mealy")
        cls = MealyWFA if kind == "mealy" else MooreWFA
        a = cls(sr, states, X, Y, SrVector(sr, states, sigma),
                {x: SrMatrix(sr, states, e) for x, e in delta.items()}, omega)

    problems = validate(a)
    if problems:
        raise FormatError("; ".join(str(p) for p in problems))
    return a


def _output_vectors(sr, states, outs, keyed_by_input: bool) -> dict:
    fam: dict = {}
    for rec, w in outs:
        key = (rec["input"], rec["output"]) if keyed_by_input else rec["output"]
        fam.setdefault(key, {})[rec["state"]] = w
    return {k: SrVector(sr, states, e) for k, e in fam.items()}


def to_document(a) -> dict:
    sr = a.semiring
    enc = lambda w: encode_value(sr, w)  # noqa: E731
    doc = {
        "semiring": sr.name,
        "kind": a.kind,
        "states": list(a.states),
        "input_alphabet": list(a.inputs),
        "output_alphabet": list(a.outputs),
    }
    st = a.states
    if isinstance(a, (CrispDetMealy, CrispDetMoore)):
        doc["initial_state"] = a.initial_state
        doc["transitions"] = [
            {"from": p, "input": x, "to": a.transitions[(p, x)]}
            for p in st for x in a.inputs if (p, x) in a.transitions
        ]
    else:
        doc["initial"] = {p: enc(a.sigma.entries[p]) for p in st if p in a.sigma.entries}
    if isinstance(a, SequentialWFA):
        doc["transitions"] = [
            {"from": p, "input": x, "output": y, "to": q, "weight": enc(m.entries[(p, q)])}
            for x in a.inputs for y in a.outputs if (m := a.mu.get((x, y)))
            for p in st for q in st if (p, q) in m.entries
        ]
    elif isinstance(a, (MealyWFA, MooreWFA)):
        doc["transitions"] = [
            {"from": p, "input": x, "to": q, "weight": enc(m.entries[(p, q)])}
            for x in a.inputs if (m := a.delta.get(x))
            for p in st for q in st if (p, q) in m.entries
        ]
    if isinstance(a, (MealyWFA, CrispDetMealy)):
        doc["outputs"] = [
            {"state": p, "input": x, "output": y, "weight": enc(v.entries[p])}
            for x in a.inputs for y in a.outputs if (v := a.omega.get((x, y)))
            for p in st if p in v.entries
        ]
    elif isinstance(a, (MooreWFA, CrispDetMoore)):
        doc["outputs"] = [
            {"state": p, "output": y, "weight": enc(v.entries[p])}
            for y in a.outputs if (v := a.omega.get(y))
            for p in st if p in v.entries
        ]
    return doc


def dumps(a, indent: int | None = 2) -> str:
    problems = validate(a)
    if problems:
        raise FormatError("; ".join(str(p) for p in problems))
    return json.dumps(to_document(a), indent=indent, ensure_ascii=False) + "\n"


def load(path):
    with open(path, "rb") as f:
        return loads(f.read())


def dump(a, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(a))
