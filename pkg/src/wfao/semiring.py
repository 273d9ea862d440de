"""Semirings and the fixed catalog used throughout the package.

A :class:`Semiring` works on plain Python values (``int``, ``float``,
``Fraction``) so the hot paths in the matrix code stay cheap.  The
:class:`Elem` wrapper pairs a value with its semiring for the checked
scalar API (``add``, ``mul``, ``nat_scale``, ``elem_eq``), which refuses
to mix elements of different semirings.
"""

from __future__ import annotations

import math
import numbers
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Any, Callable, Iterable

from .errors import CarrierError, SemiringMismatch

EQ_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class Semiring:
    """A semiring ``(S, +, ·, 0, 1)`` over raw Python values.

    ``tolerance`` is ``None`` for exact equality and an absolute epsilon for
    float-backed carriers.  Instances are compared by identity; use the
    catalog singletons.
    """

    name: str
    carrier: str
    zero: Any
    one: Any
    plus: Callable[[Any, Any], Any]
    times: Callable[[Any, Any], Any]
    idempotent: bool
    member: Callable[[Any], bool]
    normalize: Callable[[Any], Any]
    tolerance: float | None = None

    def add(self, a, b):
        return self.plus(a, b)

    def mul(self, a, b):
        return self.times(a, b)

    def sum(self, values: Iterable) -> Any:
        return reduce(self.plus, values, self.zero)

    def prod(self, values: Iterable) -> Any:
        return reduce(self.times, values, self.one)

    def nat_scale(self, n: int, s):
        """Return ``s + s + ... + s`` with ``n`` summands (``n >= 1``)."""
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise ValueError(f"additive power needs a positive integer, got {n!r}")
        if self.idempotent:
            return s
        # double-and-add; the n-fold fold is the reference in the tests
        result = None
        base = s
        while n:
            if n & 1:
                result = base if result is None else self.plus(result, base)
            n >>= 1
            if n:
                base = self.plus(base, base)
        return result

    def eq(self, a, b) -> bool:
        if self.tolerance is None:
            return a == b
        if a == b:
            return True
        if math.isinf(a) or math.isinf(b):
            return False
        return abs(a - b) <= self.tolerance

    def contains(self, value) -> bool:
        try:
            return bool(self.member(value))
        except TypeError:
            return False

    def coerce(self, value):
        """Validate ``value`` against the carrier and return its canonical form."""
        if not self.contains(value):
            raise CarrierError(f"{value!r} is not in the carrier of {self.name} ({self.carrier})")
        return self.normalize(value)

    def __call__(self, value) -> "Elem":
        return Elem(self, value)

    def __repr__(self) -> str:
        return f"Semiring({self.name})"


def _is_real(v) -> bool:
    return isinstance(v, numbers.Real) and not isinstance(v, bool)


def _is_int(v) -> bool:
    return isinstance(v, numbers.Integral) and not isinstance(v, bool)


def _unit_interval(v) -> bool:
    return _is_real(v) and 0 <= v <= 1


def _bool_member(v) -> bool:
    return (_is_int(v) or isinstance(v, bool)) and v in (0, 1)


def _tropical_member(v) -> bool:
    return _is_real(v) and not math.isnan(v) and v != -math.inf


def _rational_member(v) -> bool:
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool) and v >= 0


def _rational_times(a, b):
    # Fraction arithmetic is slow; zero factors are common in sparse machines
    if not a or not b:
        return _QZERO
    return a * b


def _rational_plus(a, b):
    if not a:
        return b
    if not b:
        return a
    return a + b


_QZERO = Fraction(0)


def _tropical_times(a, b):
    return a + b


BOOLEAN = Semiring(
    name="boolean",
    carrier="{0, 1}",
    zero=0,
    one=1,
    plus=operator.or_,
    times=operator.and_,
    idempotent=True,
    member=_bool_member,
    normalize=int,
)

GODEL = Semiring(
    name="godel",
    carrier="[0, 1]",
    zero=0.0,
    one=1.0,
    plus=max,
    times=min,
    idempotent=True,
    member=_unit_interval,
    normalize=float,
    tolerance=EQ_TOLERANCE,
)

VITERBI = Semiring(
    name="viterbi",
    carrier="[0, 1]",
    zero=0.0,
    one=1.0,
    plus=max,
    times=operator.mul,
    idempotent=True,
    member=_unit_interval,
    normalize=float,
    tolerance=EQ_TOLERANCE,
)

TROPICAL = Semiring(
    name="tropical",
    carrier="R ∪ {+inf}",
    zero=math.inf,
    one=0.0,
    plus=min,
    times=_tropical_times,
    idempotent=True,
    member=_tropical_member,
    normalize=float,
    tolerance=EQ_TOLERANCE,
)

NATURALS = Semiring(
    name="naturals",
    carrier="N ∪ {0}",
    zero=0,
    one=1,
    plus=operator.add,
    times=operator.mul,
    idempotent=False,
    member=lambda v: _is_int(v) and v >= 0,
    normalize=int,
)

RATIONALS = Semiring(
    name="rationals",
    carrier="Q >= 0",
    zero=_QZERO,
    one=Fraction(1),
    plus=_rational_plus,
    times=_rational_times,
    idempotent=False,
    member=_rational_member,
    normalize=Fraction,
)

CATALOG: dict[str, Semiring] = {
    sr.name: sr for sr in (BOOLEAN, GODEL, VITERBI, TROPICAL, NATURALS, RATIONALS)
}


def get_semiring(name: str) -> Semiring:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown semiring {name!r}; expected one of {', '.join(CATALOG)}") from None


@dataclass(frozen=True, eq=False)
class Elem:
    """A semiring element: a carrier value tagged with its semiring."""

    semiring: Semiring
    value: Any

    def __post_init__(self):
        object.__setattr__(self, "value", self.semiring.coerce(self.value))

    def _check(self, other: "Elem") -> None:
        if not isinstance(other, Elem):
            raise TypeError(f"expected a semiring element, got {type(other).__name__}")
        if other.semiring is not self.semiring:
            raise SemiringMismatch(
                f"cannot combine {self.semiring.name} and {other.semiring.name} elements"
            )

    def __add__(self, other: "Elem") -> "Elem":
        return add(self, other)

    def __mul__(self, other: "Elem") -> "Elem":
        return mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Elem):
            return NotImplemented
        return elem_eq(self, other)

    __hash__ = None  # tolerance-based equality is not transitive

    def __repr__(self) -> str:
        return f"{self.semiring.name}({self.value!r})"


def add(a: Elem, b: Elem) -> Elem:
    a._check(b)
    return Elem(a.semiring, a.semiring.add(a.value, b.value))


def mul(a: Elem, b: Elem) -> Elem:
    a._check(b)
    return Elem(a.semiring, a.semiring.mul(a.value, b.value))


def nat_scale(n: int, s: Elem) -> Elem:
    return Elem(s.semiring, s.semiring.nat_scale(n, s.value))


def elem_eq(a: Elem, b: Elem) -> bool:
    a._check(b)
    return a.semiring.eq(a.value, b.value)


def format_value(sr: Semiring, value) -> str:
    """Render a value the way the CLI and file format spell it."""
    if sr is TROPICAL and value == math.inf:
        return "inf"
    if isinstance(value, Fraction):
        return str(value)
    return str(value)
