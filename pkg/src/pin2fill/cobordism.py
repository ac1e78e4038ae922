"""Maps induced on HS-bar by spin cobordisms with b1 = 0.

Up to the grading shift of the identification with
``F[[V, V^-1]][Q]/(Q^3)``, such a map is multiplication by ``V^k``,
``Q V^k``, ``Q^2 V^k`` (b2+ = 0, 1, 2) or zero (b2+ >= 3).  A
:class:`Mono` stores the Q-power and the absolute degree of the map; the
V-exponent only exists relative to the two end models.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .floer import FloerModel
from .graded import GradedMap, grading, zero_map


class InconsistentGrading(ValueError):
    """The degree of a bar map does not fit the identification shifts."""


@dataclass(frozen=True)
class CobordismData:
    b2plus: int
    b2minus: int

    def __post_init__(self):
        if self.b2plus < 0 or self.b2minus < 0:
            raise ValueError("Betti numbers are non-negative")

    def __add__(self, other: "CobordismData") -> "CobordismData":
        return CobordismData(self.b2plus + other.b2plus, self.b2minus + other.b2minus)


@dataclass(frozen=True)
class Zero:
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class Mono:
    qpow: int
    degree: Fraction

    def __post_init__(self):
        if self.qpow not in (0, 1, 2):
            raise ValueError("qpow must be 0, 1 or 2")
        object.__setattr__(self, "degree", grading(self.degree))

    def __str__(self):
        q = {0: "1", 1: "Q", 2: "Q^2"}[self.qpow]
        return f"{q}·V^k (degree {self.degree})"


BarMap = Union[Zero, Mono]
ZERO = Zero()


def grading_shift(c: CobordismData) -> Fraction:
    """Degree of the induced bar map, (b2- - 5 b2+)/4.

    Sign convention: (b2+, b2-) = (1, 9 - 8h) has degree 1 - 2h, carrying
    1 in HS-hat(S^3) to the top class of a Type I manifold. The opposite
    sign, (5 b2+ - b2-)/4, is also in circulation.
    """
    return Fraction(c.b2minus - 5 * c.b2plus, 4)


def hs_bar_map(c: CobordismData) -> BarMap:
    if c.b2plus >= 3:
        return ZERO
    return Mono(c.b2plus, grading_shift(c))


def compose_bar(f: BarMap, g: BarMap) -> BarMap:
    """f after g."""
    if isinstance(f, Zero) or isinstance(g, Zero):
        return ZERO
    q = f.qpow + g.qpow
    if q > 2:
        return ZERO
    return Mono(q, f.degree + g.degree)


def v_exponent(f: Mono, src: FloerModel, tgt: FloerModel) -> int:
    """The k with f = Q^q V^k relative to the pinned bar generators."""
    k = -(f.degree + f.qpow + src.hs_bar_shift - tgt.hs_bar_shift) / 4
    if k.denominator != 1:
        raise InconsistentGrading(
            f"degree {f.degree} with Q^{f.qpow} gives V-exponent {k} between "
            f"shifts {src.hs_bar_shift} and {tgt.hs_bar_shift}"
        )
    return int(k)


def apply_bar(f: BarMap, src: FloerModel, tgt: FloerModel) -> GradedMap:
    """Realize a bar map as a graded map HS-bar(src) -> HS-bar(tgt)."""
    if src.hs_bar is None or tgt.hs_bar is None or src.hs_bar_shift is None or tgt.hs_bar_shift is None:
        raise ValueError("both models need a bar flavor with a pinned shift")
    if isinstance(f, Zero):
        return zero_map(src.hs_bar, tgt.hs_bar, 0)
    k = v_exponent(f, src, tgt)

    def rule(lab):
        _, b, n = lab
        if b + f.qpow > 2:
            return None
        return [("e", b + f.qpow, n + k)]

    return GradedMap.from_rule(src.hs_bar, tgt.hs_bar, f.degree, rule, str(f))


__all__ = [
    "BarMap",
    "CobordismData",
    "InconsistentGrading",
    "Mono",
    "ZERO",
    "Zero",
    "apply_bar",
    "compose_bar",
    "grading_shift",
    "hs_bar_map",
    "v_exponent",
]
