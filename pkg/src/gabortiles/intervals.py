"""Finite unions of half-open intervals on the real line.

Endpoints are either all exact rationals (:class:`fractions.Fraction`) or all
floats.  The mode of a union is part of its value; binary operations refuse to
mix modes unless ``promote=True`` is passed, in which case the result is float.
"""

from __future__ import annotations

import bisect
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[Fraction, float]

RATIONAL = "rational"
FLOAT = "float"

_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$")


class ModeMismatch(ValueError):
    pass


def to_scalar(x) -> Scalar:
    """Coerce ``x`` to a Scalar.

    Integers and ``"p/q"`` / ``"p"`` strings become exact Fractions; floats and
    decimal strings such as ``"0.5"`` become floats.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite scalar {x!r}")
        return x
    if isinstance(x, str):
        if _RATIONAL_RE.match(x):
            return Fraction(x.replace(" ", ""))
        return to_scalar(float(x))
    # numpy scalars and the like
    if hasattr(x, "__float__"):
        if float(x).is_integer() and hasattr(x, "__index__"):
            return Fraction(int(x))
        return float(x)
    raise TypeError(f"cannot interpret {x!r} as a scalar")


def mode_of(x: Scalar) -> str:
    return RATIONAL if isinstance(x, Fraction) else FLOAT


def common_mode(values: Iterable[Scalar], promote: bool = False) -> str:
    modes = {mode_of(v) for v in values}
    if len(modes) <= 1:
        return modes.pop() if modes else RATIONAL
    if not promote:
        raise ModeMismatch("mode mismatch: rational and float scalars mixed without promotion")
    return FLOAT


def coerce(x: Scalar, mode: str) -> Scalar:
    if mode == FLOAT:
        return float(x)
    if isinstance(x, float):
        raise ModeMismatch("mode mismatch: cannot demote a float to rational")
    return x


def format_scalar(x: Scalar):
    """JSON encoding of a scalar: rationals as "p/q" strings, floats as numbers."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return float(x)


@dataclass(frozen=True, order=True)
class Interval:
    """Half-open interval ``[lo, hi)``; never empty."""

    lo: Scalar
    hi: Scalar

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi})")

    @property
    def length(self) -> Scalar:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Scalar:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= x < self.hi


@dataclass(frozen=True)
class IntervalUnion:
    """Canonical union: parts sorted, pairwise disjoint and non-adjacent.

    With ``open=True`` every part is read as the open interval ``(lo, hi)``;
    touching open parts are then kept separate, since their common endpoint
    is not a member.
    """

    parts: tuple = ()
    mode: str = RATIONAL
    open: bool = False

    # construction ---------------------------------------------------------

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence], promote: bool = False, open: bool = False) -> "IntervalUnion":
        return normalize(pairs, promote=promote, open=open)

    @classmethod
    def empty(cls, mode: str = RATIONAL) -> "IntervalUnion":
        return cls((), mode)

    # queries --------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def contains(self, x) -> bool:
        los = [p.lo for p in self.parts]
        i = bisect.bisect_right(los, x) - 1
        if i < 0:
            return False
        p = self.parts[i]
        if self.open:
            return p.lo < x < p.hi
        return p.lo <= x < p.hi

    @property
    def inf(self) -> Scalar:
        return self.parts[0].lo

    @property
    def sup(self) -> Scalar:
        return self.parts[-1].hi

    @property
    def diameter(self) -> Scalar:
        return self.sup - self.inf if self.parts else coerce(Fraction(0), self.mode)

    def endpoints(self) -> list:
        out = []
        for p in self.parts:
            out.extend((p.lo, p.hi))
        return out

    def measure(self) -> Scalar:
        return measure(self)

    def to_float(self) -> "IntervalUnion":
        if self.mode == FLOAT:
            return self
        return IntervalUnion(tuple(Interval(float(p.lo), float(p.hi)) for p in self.parts), FLOAT, self.open)

    # operations -----------------------------------------------------------

    def translate(self, t, promote: bool = False) -> "IntervalUnion":
        return translate(self, t, promote=promote)

    def intersect(self, other: "IntervalUnion", promote: bool = False) -> "IntervalUnion":
        return intersect(self, other, promote=promote)

    def union(self, other: "IntervalUnion", promote: bool = False) -> "IntervalUnion":
        mode = common_mode([Fraction(0) if self.mode == RATIONAL else 0.0,
                            Fraction(0) if other.mode == RATIONAL else 0.0], promote)
        pairs = [(p.lo, p.hi) for p in self.parts] + [(p.lo, p.hi) for p in other.parts]
        return normalize(pairs, promote=(mode == FLOAT), mode=mode)

    def scale(self, c) -> "IntervalUnion":
        c = to_scalar(c)
        if c <= 0:
            raise ValueError("scale factor must be positive")
        mode = common_mode([c] + self.endpoints(), promote=True) if self.parts else mode_of(c)
        return normalize([(p.lo * c, p.hi * c) for p in self.parts], promote=True, open=self.open, mode=mode)

    def reflect(self) -> "IntervalUnion":
        return normalize([(-p.hi, -p.lo) for p in self.parts], mode=self.mode, open=self.open)

    # serialization --------------------------------------------------------

    def to_json(self) -> dict:
        d = {"mode": self.mode, "parts": [[format_scalar(p.lo), format_scalar(p.hi)] for p in self.parts]}
        if self.open:
            d["open"] = True
        return d

    @classmethod
    def from_json(cls, d: dict) -> "IntervalUnion":
        if not isinstance(d, dict) or "parts" not in d:
            raise ValueError("interval union JSON needs a 'parts' list")
        mode = d.get("mode", RATIONAL)
        if mode not in (RATIONAL, FLOAT):
            raise ValueError(f"unknown mode {mode!r}")
        pairs = [(to_scalar(a), to_scalar(b)) for a, b in d["parts"]]
        if mode == FLOAT:
            pairs = [(float(a), float(b)) for a, b in pairs]
        return normalize(pairs, open=bool(d.get("open", False)), mode=mode if not pairs else None)

    def __repr__(self) -> str:
        inner = " ∪ ".join(f"{'(' if self.open else '['}{p.lo}, {p.hi})" for p in self.parts) or "∅"
        return f"IntervalUnion({inner})"


def normalize(pairs: Iterable[Sequence], promote: bool = False, open: bool = False,
              mode: str | None = None) -> IntervalUnion:
    """Canonical form of a list of raw ``(lo, hi)`` pairs.

    Empty raws (``lo == hi``) are dropped.  Half-open parts that overlap or
    touch are merged; open parts merge only when they overlap.
    """
    raw = []
    for pair in pairs:
        lo, hi = pair
        lo, hi = to_scalar(lo), to_scalar(hi)
        if hi < lo:
            raise ValueError(f"raw interval with lo > hi: [{lo}, {hi})")
        raw.append((lo, hi))
    values = [v for pair in raw for v in pair]
    if values:
        mode = common_mode(values, promote)
    elif mode is None:
        mode = RATIONAL
    raw = sorted((coerce(lo, mode), coerce(hi, mode)) for lo, hi in raw if lo != hi)
    merged: list = []
    for lo, hi in raw:
        if merged and (lo < merged[-1][1] or (not open and lo == merged[-1][1])):
            if hi > merged[-1][1]:
                merged[-1][1] = hi
        else:
            merged.append([lo, hi])
    return IntervalUnion(tuple(Interval(lo, hi) for lo, hi in merged), mode, open)


def _check_modes(a: IntervalUnion, b: IntervalUnion, promote: bool) -> str:
    if not a.parts:
        return b.mode if b.parts else a.mode
    if not b.parts:
        return a.mode
    if a.mode == b.mode:
        return a.mode
    if not promote:
        raise ModeMismatch("mode mismatch: rational and float interval unions mixed without promotion")
    return FLOAT


def intersect(a: IntervalUnion, b: IntervalUnion, promote: bool = False) -> IntervalUnion:
    mode = _check_modes(a, b, promote)
    if a.open or b.open:
        raise ValueError("intersect is defined for half-open unions only")
    out = []
    i = j = 0
    pa, pb = a.parts, b.parts
    while i < len(pa) and j < len(pb):
        lo = coerce(max(pa[i].lo, pb[j].lo), mode)
        hi = coerce(min(pa[i].hi, pb[j].hi), mode)
        if lo < hi:
            out.append((lo, hi))
        if pa[i].hi < pb[j].hi:
            i += 1
        else:
            j += 1
    return IntervalUnion(tuple(Interval(lo, hi) for lo, hi in out), mode)


def translate(a: IntervalUnion, t, promote: bool = False) -> IntervalUnion:
    t = to_scalar(t)
    if not a.parts:
        return a
    mode = a.mode
    if mode_of(t) != mode:
        if not promote:
            raise ModeMismatch("mode mismatch: translating by a scalar of the other mode")
        mode = FLOAT
    t = coerce(t, mode)
    shifted = ((coerce(p.lo, mode) + t, coerce(p.hi, mode) + t) for p in a.parts)
    # in float mode a very thin part can round to zero width; drop it
    parts = tuple(Interval(lo, hi) for lo, hi in shifted if lo < hi)
    return IntervalUnion(parts, mode, a.open)


def measure(a: IntervalUnion) -> Scalar:
    total = Fraction(0) if a.mode == RATIONAL else 0.0
    for p in a.parts:
        total += p.hi - p.lo
    return total


def open_difference_set(a: IntervalUnion) -> IntervalUnion:
    """``{x - y : x, y in interior(a)}`` as a union of open intervals."""
    if not a.parts:
        raise ValueError("difference set of an empty union")
    pairs = [(p.lo - q.hi, p.hi - q.lo) for p in a.parts for q in a.parts]
    return normalize(pairs, open=True, mode=a.mode)


def quadrant_parts(diff: IntervalUnion) -> list:
    """Fold an open, symmetric difference set onto ``[0, inf)``.

    Returns ``(lo, hi, lo_closed)`` triples: a part straddling 0 becomes
    ``[0, hi)``, parts on the positive side stay open.
    """
    out = []
    for p in diff.parts:
        if p.hi <= 0:
            continue
        if p.lo < 0:
            out.append((coerce(Fraction(0), diff.mode), p.hi, True))
        else:
            out.append((p.lo, p.hi, False))
    return out
