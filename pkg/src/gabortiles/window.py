"""The two-interval window Ω = [0, α) ∪ [α+β, 1+β)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .intervals import FLOAT, RATIONAL, IntervalUnion, Scalar, normalize, to_scalar

HALF = Fraction(1, 2)

ALPHA_LT_HALF = "alpha<1/2"
ALPHA_HALF = "alpha=1/2"


def is_integer(x: Scalar, tol: float = 0.0) -> bool:
    if isinstance(x, Fraction):
        return x.denominator == 1
    return abs(x - round(x)) <= tol


def is_half_integer_multiple(x: Scalar, tol: float = 0.0) -> bool:
    """True when ``x`` lies in ½ℤ."""
    return is_integer(2 * x, tol)


@dataclass(frozen=True)
class WindowParams:
    alpha: Scalar
    beta: Scalar

    def __post_init__(self):
        a, b = to_scalar(self.alpha), to_scalar(self.beta)
        if isinstance(a, float) or isinstance(b, float):
            # explicit promotion: the pair is evaluated in float mode
            a, b = float(a), float(b)
        if not (0 < a <= HALF):
            raise ValueError(f"alpha must lie in (0, 1/2], got {a}")
        if not b > 0:
            raise ValueError(f"beta must be positive, got {b}")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @property
    def mode(self) -> str:
        return FLOAT if isinstance(self.alpha, float) else RATIONAL

    @property
    def exact(self) -> bool:
        return self.mode == RATIONAL

    @cached_property
    def omega(self) -> IntervalUnion:
        a, b = self.alpha, self.beta
        return normalize([(0 * a, a), (a + b, 1 + b)])

    def set(self) -> IntervalUnion:
        return self.omega

    def is_half(self, tol: float = 1e-12) -> bool:
        if self.exact:
            return self.alpha == HALF
        return abs(self.alpha - 0.5) <= tol

    @property
    def regime(self) -> str:
        return ALPHA_HALF if self.is_half() else ALPHA_LT_HALF

    def as_float(self) -> tuple:
        return float(self.alpha), float(self.beta)

    def to_json(self) -> dict:
        from .intervals import format_scalar
        return {"alpha": format_scalar(self.alpha), "beta": format_scalar(self.beta)}

    def __repr__(self) -> str:
        return f"WindowParams(alpha={self.alpha}, beta={self.beta})"


def window(alpha, beta) -> WindowParams:
    return WindowParams(alpha, beta)


def float_close(x: float, y: float, tol: float = 1e-12) -> bool:
    return math.isclose(x, y, rel_tol=0.0, abs_tol=tol)
