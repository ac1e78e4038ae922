"""Forced intersection forms of indefinite Stein fillings.

The two engines take Floer-theoretic invariants as trusted input:

* :func:`theorem_main` -- reduced HM of rank one, Type and Froyshov h;
* :func:`theorem_contact` -- grading and tower of the contact class.

:func:`forced_qpower` replays the model-level argument: push the filling
map through the injective ``p_*`` and read off which Q-power the bar map
must carry.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .cobordism import InconsistentGrading, Mono, apply_bar
from .floer import ContactClass, FloerModel, TowerName, TypeClass, build_s3
from .graded import (
    GradedMap,
    StructuralError,
    Window,
    gf2_solve,
    grading,
    square_defects,
    square_gradings,
)
from .lattice import ClassificationError, LatticeForm, classify_even_indefinite


class HypothesisError(ValueError):
    """Input does not meet the hypotheses of the theorem it was fed to."""


class Scope(str, enum.Enum):
    indefinite = "indefinite-filling"
    negative_definite = "negative-definite-only"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FillingConstraint:
    scope: Scope
    b2plus: int | None = None
    b2minus: int | None = None
    parity: str | None = None
    lattice: LatticeForm | None = None
    note: str = field(default="", compare=False)

    @property
    def signature(self) -> int | None:
        if self.b2plus is None:
            return None
        return self.b2plus - self.b2minus

    def to_dict(self) -> dict:
        return {
            "scope": self.scope.value,
            "parity": self.parity,
            "b2plus": self.b2plus,
            "b2minus": self.b2minus,
            "signature": self.signature,
            "lattice": None if self.lattice is None else {
                "name": self.lattice.name,
                "signed": str(self.lattice),
                "p": self.lattice.p,
                "q": self.lattice.q,
                "eps": self.lattice.eps,
            },
            "note": self.note,
        }


def _negative_definite(note: str) -> FillingConstraint:
    return FillingConstraint(Scope.negative_definite, note=note)


def _indefinite(b2plus: int, b2minus: Fraction, what: str) -> FillingConstraint:
    if b2minus.denominator != 1:
        raise HypothesisError(f"inconsistent {what}: b2- = {b2minus} is not an integer")
    b2minus = int(b2minus)
    if b2minus < 1:
        return _negative_definite(
            f"b2- would be {b2minus}: no even indefinite form exists, every Stein filling is negative definite"
        )
    try:
        lattice, note = classify_even_indefinite(b2plus, b2minus), ""
    except ClassificationError as exc:
        lattice, note = None, str(exc)
    return FillingConstraint(Scope.indefinite, b2plus, b2minus, "even", lattice, note)


def theorem_main(h, t: TypeClass) -> FillingConstraint:
    h = grading(h)
    t = TypeClass(t)
    if t is TypeClass.I:
        return _indefinite(1, 9 - 8 * h, "h for rank-one hypothesis")
    return _indefinite(2, 10 - 8 * h, "h for rank-one hypothesis")


def theorem_contact(c: ContactClass) -> FillingConstraint:
    if not c.j_invariant:
        raise HypothesisError("hypothesis not met: the contact class is not j-invariant")
    if c.tower is None:
        raise HypothesisError("hypothesis not met: pi_* c is not in the image of i_*")
    d = c.d
    if c.tower is TowerName.alpha:
        return _negative_definite("alpha tower: every Stein filling is negative definite")
    if c.tower is TowerName.beta:
        return _indefinite(1, 5 - 4 * d, "contact grading")
    return _indefinite(2, 10 - 4 * d, "contact grading")


@dataclass(frozen=True)
class EulerBound:
    chi_indefinite: int | None
    chi_negdef_max: int | None
    finite: bool
    C: Fraction | None
    negdef_possible: bool | None = None

    def to_dict(self) -> dict:
        return {
            "chi_indefinite": self.chi_indefinite,
            "chi_negdef_max": self.chi_negdef_max,
            "finite": self.finite,
            "C": None if self.C is None else str(self.C),
            "negdef_possible": self.negdef_possible,
        }


def euler_bounds(fc: FillingConstraint | None, C=None) -> EulerBound:
    """Euler characteristics of fillings, given 3 sigma + 2 chi >= C and b1 = 0.

    With b1 = 0 the inequality reads 5 b2+ >= b2- + C; a negative definite
    filling therefore has b2- <= 2 - C.
    """
    chi_indef = None
    if fc is not None and fc.scope is Scope.indefinite:
        chi_indef = 1 + fc.b2plus + fc.b2minus
    if C is None:
        return EulerBound(chi_indef, None, True, None)
    C = grading(C)
    bmax = math.floor(2 - C)
    if bmax < 0:
        return EulerBound(chi_indef, None, True, C, negdef_possible=False)
    return EulerBound(chi_indef, 1 + bmax, True, C, negdef_possible=True)


# --- model-level replay -------------------------------------------------------


def _r_linear(source, target, degree, seed, seed_grading, steps) -> GradedMap:
    """Map sending each source label to ``steps(label)`` applied to ``seed``."""
    blocks = {}
    for g in source.gradings():
        labs = source.labels(g)
        if not labs:
            continue
        m = np.zeros((target.dim(g + degree), len(labs)), dtype=np.uint8)
        for j, lab in enumerate(labs):
            v, at = seed, seed_grading
            for op in steps(lab):
                v, at = op.apply(at, v), at + op.degree
            if at != g + degree:
                raise StructuralError(f"{lab!r} lands at {at}, expected {g + degree}")
            if len(v) == m.shape[0]:
                m[:, j] = v
        blocks[g] = m
    return GradedMap(source, target, degree, blocks, "W")


def filling_generator(target: FloerModel) -> tuple[Fraction, np.ndarray]:
    """The class of HS-hat that 1 must map to: the iota-lift of the HM generator."""
    gy = target.gysin
    if target.hm_generator is None:
        raise StructuralError(f"{target.name} has no HM generator to lift")
    g, _ = gy.hm.locate(target.hm_generator)
    lift = gf2_solve(gy.iota.block(g), gy.hm.unit(target.hm_generator))
    if lift is None:
        raise StructuralError(f"HM generator of {target.name} is not in the image of iota")
    return g, lift


def _source_s3(target: FloerModel, degree: Fraction) -> FloerModel:
    w = target.window.shifted(-degree)
    return build_s3(Window(min(w.lo, -24), max(w.hi, -1), w.guard))


def filling_maps(target: FloerModel):
    """S^3 model and the hat maps of the punctured filling (HS, HM)."""
    g, lift = filling_generator(target)
    degree = g + 1  # 1 in HS-hat(S^3) sits in degree -1
    s3 = _source_s3(target, degree)
    gy, sy = target.gysin, s3.gysin
    hs_map = _r_linear(sy.hs, gy.hs, degree, lift, g,
                       lambda lab: [gy.q] * lab[1] + [target.v_hs] * lab[2])
    hm_map = _r_linear(sy.hm, gy.hm, degree, gy.hm.unit(target.hm_generator), g,
                       lambda lab: [target.u_hm] * lab[1])
    return s3, hs_map, hm_map


def forced_qpower(target: FloerModel) -> int | None:
    """The unique Q-power of a bar map making the p_* naturality square commute."""
    if not target.column_of or target.pstar is None:
        raise StructuralError(f"{target.name} lacks column data or p_*")
    s3, left, _ = filling_maps(target)
    working = []
    for q in (0, 1, 2):
        try:
            right = apply_bar(Mono(q, left.degree), s3, target)
        except InconsistentGrading:
            continue
        if not square_gradings(s3.pstar, target.pstar, left, right):
            raise StructuralError("naturality square has no checkable gradings")
        if not square_defects(s3.pstar, target.pstar, left, right):
            working.append(q)
    return working[0] if len(working) == 1 else None


def top_column(target: FloerModel) -> int:
    """Q-column of the top-degree class of HS-hat, relative to 1 in HS-hat(S^3)."""
    return target.column_of[target.top_hs_label()]


def pstar_square(target: FloerModel, bar_map) -> tuple[GradedMap, GradedMap, GradedMap, GradedMap]:
    """(top, bottom, left, right) of the p_* square for a given bar map."""
    s3, left, _ = filling_maps(target)
    return s3.pstar, target.pstar, left, apply_bar(bar_map, s3, target)


def iota_square(target: FloerModel) -> tuple[GradedMap, GradedMap, GradedMap, GradedMap]:
    """(top, bottom, left, right) of the iota square for the filling maps."""
    s3, hs_map, hm_map = filling_maps(target)
    return s3.gysin.iota, target.gysin.iota, hs_map, hm_map


__all__ = [
    "EulerBound",
    "FillingConstraint",
    "HypothesisError",
    "Scope",
    "euler_bounds",
    "filling_generator",
    "filling_maps",
    "forced_qpower",
    "iota_square",
    "pstar_square",
    "theorem_contact",
    "theorem_main",
    "top_column",
]
