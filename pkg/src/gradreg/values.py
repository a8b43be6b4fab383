"""Weights and certified extended values.

A weight is an exact rational pair; regularity values live in
``{-inf} + QQ + {+inf}`` and always carry a certification status and the
window they were computed in.  Infinities are represented by floats, which
compare correctly against ``Fraction``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

NEG_INF = float("-inf")
POS_INF = float("inf")

EXACT = "exact"
OBSERVED = "observed_lower_bound"
UPPER = "upper_bound"

Number = Union[Fraction, float]

WEIGHT_ALIASES = {
    "classic": ("1", "1"),
    "pdim": ("0", "-1"),
    "sup": ("0", "1"),
}


@dataclass(frozen=True)
class Weight:
    """An exact rational weight pair, not both components zero."""

    xi0: Fraction
    xi1: Fraction

    def __post_init__(self):
        if self.xi0 == 0 and self.xi1 == 0:
            raise ValueError("weight (0, 0) is not allowed")

    @classmethod
    def of(cls, xi0, xi1) -> "Weight":
        return cls(Fraction(xi0), Fraction(xi1))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse ``"1,3/2"`` or a named alias (classic, pdim, sup)."""
        alias = WEIGHT_ALIASES.get(text.strip())
        if alias is not None:
            return cls.of(*alias)
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"weight must be 'xi0,xi1' or an alias, got {text!r}")
        return cls.of(Fraction(parts[0].strip()), Fraction(parts[1].strip()))

    def scale(self, lam) -> "Weight":
        lam = Fraction(lam)
        if lam <= 0:
            raise ValueError("weight scaling must be positive")
        return Weight(self.xi0 * lam, self.xi1 * lam)

    def pair(self) -> Tuple[str, str]:
        return (str(self.xi0), str(self.xi1))

    def __str__(self):
        return f"({self.xi0},{self.xi1})"


@dataclass(frozen=True)
class ExtendedValue:
    """A value in {-inf} + QQ + {+inf} with certification status and window.

    ``exact``: certified equal to the true invariant.
    ``observed_lower_bound``: a sup over a truncated window.
    ``upper_bound``: a bound from above (infima scanned over partial data,
    or minima over user-supplied candidate sets).
    """

    value: Number
    status: str
    window: Optional[Tuple[int, int]] = None  # (hmax, dmax) when applicable

    def __post_init__(self):
        if self.status not in (EXACT, OBSERVED, UPPER):
            raise ValueError(f"unknown status {self.status!r}")
        v = self.value
        if isinstance(v, float) and not math.isinf(v):
            raise ValueError("finite values must be exact rationals")

    @property
    def is_finite(self) -> bool:
        return not (isinstance(self.value, float) and math.isinf(self.value))

    def scaled(self, lam) -> "ExtendedValue":
        lam = Fraction(lam)
        if not self.is_finite:
            return self
        return ExtendedValue(self.value * lam, self.status, self.window)

    def plus(self, other: "ExtendedValue") -> "ExtendedValue":
        """Sum with absorbing infinities; opposite infinities are rejected."""
        a, b = self.value, other.value
        if a == POS_INF and b == NEG_INF or a == NEG_INF and b == POS_INF:
            raise ValueError("sum of opposite infinities is undefined")
        window = self.window if self.window is not None else other.window
        status = worst_status(self.status, other.status)
        if isinstance(a, float) or isinstance(b, float):
            inf = a if isinstance(a, float) else b
            return ExtendedValue(inf, status, window)
        return ExtendedValue(a + b, status, window)

    def value_str(self) -> str:
        if self.value == POS_INF:
            return "inf"
        if self.value == NEG_INF:
            return "-inf"
        return str(self.value)

    def to_json(self) -> dict:
        out = {"value": self.value_str(), "status": self.status}
        if self.window is not None:
            out["window"] = {"hmax": self.window[0], "dmax": self.window[1]}
        return out

    def __str__(self):
        w = "" if self.window is None else f" window(h<={self.window[0]},d<={self.window[1]})"
        return f"{self.value_str()} [{self.status}]{w}"


_STATUS_RANK = {EXACT: 0, OBSERVED: 1, UPPER: 2}


def worst_status(*statuses: str) -> str:
    """Combine statuses pessimistically; mixing bound directions degrades to
    the non-exact one that appears (observed wins over upper for sums used
    here, where values enter positively)."""
    ranked = sorted(statuses, key=lambda s: _STATUS_RANK[s])
    return ranked[-1]


def exact(value, window=None) -> ExtendedValue:
    if not isinstance(value, float):
        value = Fraction(value)
    return ExtendedValue(value, EXACT, window)


def observed(value, window=None) -> ExtendedValue:
    if not isinstance(value, float):
        value = Fraction(value)
    return ExtendedValue(value, OBSERVED, window)


def upper(value, window=None) -> ExtendedValue:
    if not isinstance(value, float):
        value = Fraction(value)
    return ExtendedValue(value, UPPER, window)
