"""Graded models of monopole and Pin(2)-monopole Floer groups.

Every model is a finite window onto a module over ``R = F[[V]][Q]/(Q^3)``
(V of degree -4, Q of degree -1) sitting in a Gysin triangle

    HS --Q--> HS --iota--> HM --pi--> HS

together with the bar flavor ``F[[V, V^-1]][Q]/(Q^3)`` and the maps
``p: HS-hat -> HS-bar`` (hat models) or ``i: HS-bar -> HS-to`` (to models).

Basis labels used throughout:

* ``("c", col, a)``  -- ``V^a`` times the top of column ``col`` of HS-hat
* ``("U", n)``       -- ``U^n`` times the top of the HM-hat tower
* ``("x",)``         -- the reduced HM generator of a rank-one model
* ``("e", b, n)``    -- ``Q^b V^n`` times the bar generator
* ``("T", m)``       -- tower class of HM-to, ``m`` steps above its bottom
* ``("dual", lab)``  -- dual basis vector (reversed orientation)
"""

from __future__ import annotations

import dataclasses
import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .graded import (
    BoundaryError,
    GradedMap,
    GradedSpace,
    Label,
    StructuralError,
    Window,
    compose,
    gf2_rank,
    gf2_solve,
    grading,
    identity,
    is_exact_at,
)


class TypeClass(enum.Enum):
    I = "I"
    II = "II"

    def __str__(self):
        return self.value


class TowerName(enum.Enum):
    alpha = "alpha"
    beta = "beta"
    gamma = "gamma"

    def __str__(self):
        return self.value


# Q-power of a bar sub-tower -> name of its image in HS-to
TOWER_OF_QPOWER = {2: TowerName.alpha, 1: TowerName.beta, 0: TowerName.gamma}


def dual_type(t: TypeClass) -> TypeClass:
    return TypeClass.II if t is TypeClass.I else TypeClass.I


@dataclass(frozen=True)
class RingMonomial:
    qpow: int
    vpow: int
    bar: bool = False

    def __post_init__(self):
        if self.qpow not in (0, 1, 2):
            raise ValueError("Q^3 = 0: qpow must be 0, 1 or 2")
        if self.vpow < 0 and not self.bar:
            raise ValueError("negative V powers only exist in the bar flavor")

    @property
    def degree(self) -> int:
        return -self.qpow - 4 * self.vpow


@dataclass(frozen=True)
class ContactClass:
    d: Fraction
    tower: TowerName | None
    j_invariant: bool

    def __post_init__(self):
        object.__setattr__(self, "d", grading(self.d))


@dataclass(frozen=True, eq=False)
class Gysin:
    """HS --q--> HS --iota--> HM --pi--> HS."""

    hs: GradedSpace
    hm: GradedSpace
    q: GradedMap
    iota: GradedMap
    pi: GradedMap
    flavor: str = "hat"

    def pairs(self) -> list[tuple[str, GradedMap, GradedMap]]:
        return [("pi,q", self.pi, self.q), ("q,iota", self.q, self.iota), ("iota,pi", self.iota, self.pi)]


@dataclass(frozen=True, eq=False)
class FloerModel:
    name: str
    window: Window
    gysin: Gysin
    u_hm: GradedMap
    v_hs: GradedMap
    hm_hat: GradedSpace | None = None
    hm_to: GradedSpace | None = None
    hs_hat: GradedSpace | None = None
    hs_to: GradedSpace | None = None
    hs_bar: GradedSpace | None = None
    q_bar: GradedMap | None = None
    v_bar: GradedMap | None = None
    pstar: GradedMap | None = None
    istar: GradedMap | None = None
    jmath: GradedMap | None = None
    hs_bar_shift: Fraction | None = None
    column_of: Mapping[Label, int] = field(default_factory=dict)
    bar_power_of: Mapping[Label, int] = field(default_factory=dict)
    reduced: Label | None = None
    hm_generator: Label | None = None

    @property
    def gysin_q(self) -> GradedMap:
        return self.gysin.q

    @property
    def gysin_iota(self) -> GradedMap:
        return self.gysin.iota

    @property
    def gysin_pi(self) -> GradedMap:
        return self.gysin.pi

    def top_hs_label(self) -> Label:
        hs = self.gysin.hs
        g = max(g for g, n in hs.dims.items() if n)
        labs = hs.labels(g)
        if len(labs) != 1:
            raise StructuralError(f"top grading {g} of {self.name} is not one-dimensional")
        return labs[0]


# --- label enumerators -------------------------------------------------------


def _down(top: Fraction, step: int, lo: Fraction) -> Iterator[tuple[int, Fraction]]:
    n = 0
    while top - step * n >= lo:
        yield n, top - step * n
        n += 1


def _up(bottom: Fraction, step: int, hi: Fraction) -> Iterator[tuple[int, Fraction]]:
    n = 0
    while bottom + step * n <= hi:
        yield n, bottom + step * n
        n += 1


def _bar_items(shift: Fraction, w: Window) -> list[tuple[Label, Fraction]]:
    n_lo = math.floor((shift - 2 - w.hi) / 4)
    n_hi = math.ceil((shift - w.lo) / 4)
    return [(("e", b, n), shift - b - 4 * n) for n in range(n_lo, n_hi + 1) for b in range(3)]


def _bar(shift: Fraction, w: Window, name: str):
    bar = GradedSpace.from_labels(w, _bar_items(shift, w), extends_below=True, extends_above=True, name=name)
    q = GradedMap.from_rule(bar, bar, -1, lambda lab: [("e", lab[1] + 1, lab[2])] if lab[1] < 2 else None, "Q")
    v = GradedMap.from_rule(bar, bar, -4, lambda lab: [("e", lab[1], lab[2] + 1)], "V")
    powers = {lab: lab[1] for g in bar.gradings() for lab in bar.labels(g)}
    return bar, q, v, powers


def _hat_actions(hs: GradedSpace, hm: GradedSpace):
    v = GradedMap.from_rule(hs, hs, -4, lambda lab: [("c", lab[1], lab[2] + 1)], "V")
    u = GradedMap.from_rule(hm, hm, -2, lambda lab: [("U", lab[1] + 1)] if lab[0] == "U" else None, "U")
    return v, u


def _to_tower(bottom: Fraction, w: Window, extra: Iterable[tuple[Label, Fraction]] = (), name: str = ""):
    items = [(("T", m), g) for m, g in _up(bottom, 2, w.hi)] + list(extra)
    return GradedSpace.from_labels(w, items, extends_above=True, name=name)


# --- S^3 ---------------------------------------------------------------------


def build_s3(window: Window) -> FloerModel:
    """HS-hat(S^3) = R<-1> over HM-hat(S^3) = F[[U]]<-1>."""
    w = window.aligned(0)
    if not (w.lo <= -8 and w.hi >= -1):
        raise StructuralError(f"S3 model needs a window covering [-8, -1], got [{w.lo}, {w.hi}]")
    top = Fraction(-1)
    hs = GradedSpace.from_labels(
        w,
        [(("c", b, a), g - b) for a, g in _down(top, 4, w.lo - 2) for b in range(3)],
        extends_below=True,
        name="HS-hat(S3)",
    )
    hm = GradedSpace.from_labels(w, [(("U", n), g) for n, g in _down(top, 2, w.lo)], extends_below=True,
                                 name="HM-hat(S3)")
    q = GradedMap.from_rule(hs, hs, -1, lambda lab: [("c", lab[1] + 1, lab[2])] if lab[1] < 2 else None, "Q")
    iota = GradedMap.from_rule(hs, hm, 0, lambda lab: [("U", 2 * lab[2])] if lab[1] == 0 else None, "iota")
    pi = GradedMap.from_rule(hm, hs, 0, lambda lab: [("c", 2, (lab[1] - 1) // 2)] if lab[1] % 2 else None, "pi")
    v, u = _hat_actions(hs, hm)
    bar, q_bar, v_bar, powers = _bar(top, w, "HS-bar(S3)")
    pstar = GradedMap.from_rule(hs, bar, 0, lambda lab: [("e", lab[1], lab[2])], "p")
    return FloerModel(
        name="S3",
        window=w,
        gysin=Gysin(hs, hm, q, iota, pi, "hat"),
        u_hm=u,
        v_hs=v,
        hm_hat=hm,
        hm_to=_to_tower(Fraction(0), w, name="HM-to(S3)"),
        hs_hat=hs,
        hs_bar=bar,
        q_bar=q_bar,
        v_bar=v_bar,
        pstar=pstar,
        hs_bar_shift=top,
        column_of={lab: lab[1] for g in hs.gradings() for lab in hs.labels(g)},
        bar_power_of=powers,
        hm_generator=("U", 0),
    )


# --- rank-one rational homology spheres --------------------------------------


def build_rank_one(h, t: TypeClass, window: Window) -> FloerModel:
    """Model of (Y, s) with reduced HM of rank one, Froyshov invariant h, type t.

    HS-hat has three V-towers listed as columns 0, 1, 2:
    Type I tops at -2h-3, -2h, -2h-1; Type II tops at -2h-3, -2h-4, -2h-1.
    """
    h = grading(h)
    t = TypeClass(t)
    g0 = -2 * h
    w = window.aligned(g0)
    if not (w.lo <= g0 - 8 and w.hi >= g0):
        raise StructuralError(f"rank-one model needs a window covering [{g0 - 8}, {g0}]")
    type_one = t is TypeClass.I
    tops = (g0 - 3, g0, g0 - 1) if type_one else (g0 - 3, g0 - 4, g0 - 1)
    x_grading = g0 if type_one else g0 - 1

    hs = GradedSpace.from_labels(
        w,
        [(("c", col, a), g) for col in range(3) for a, g in _down(tops[col], 4, w.lo)],
        extends_below=True,
        name="HS-hat",
    )
    hm = GradedSpace.from_labels(
        w,
        [(("U", n), g) for n, g in _down(g0 - 1, 2, w.lo)] + [(("x",), x_grading)],
        extends_below=True,
        name="HM-hat",
    )

    def q_rule(lab):
        _, col, a = lab
        if col == 0:
            return [("c", 1, a + 1 if type_one else a)]
        if col == 1:
            return [("c", 2, a if type_one else a + 1)]
        return None

    def iota_rule(lab):
        _, col, a = lab
        if col == 0:
            return [("U", 2 * a + 1)]
        if a == 0 and col == (1 if type_one else 2):
            return [("x",)]
        return None

    def pi_rule(lab):
        if lab[0] == "U" and lab[1] % 2 == 0:
            return [("c", 2, lab[1] // 2)]
        return None

    def p_rule(lab):
        _, col, a = lab
        if col == 0 or (col == 1 and not type_one):
            return [("e", col, a)]
        return [("e", col, a - 1)]

    q = GradedMap.from_rule(hs, hs, -1, q_rule, "Q")
    iota = GradedMap.from_rule(hs, hm, 0, iota_rule, "iota")
    pi = GradedMap.from_rule(hm, hs, 0, pi_rule, "pi")
    v, u = _hat_actions(hs, hm)
    shift = g0 - 3
    bar, q_bar, v_bar, powers = _bar(shift, w, "HS-bar")
    pstar = GradedMap.from_rule(hs, bar, 0, p_rule, "p")
    return FloerModel(
        name=f"rank-one(h={h}, {t})",
        window=w,
        gysin=Gysin(hs, hm, q, iota, pi, "hat"),
        u_hm=u,
        v_hs=v,
        hm_hat=hm,
        hm_to=_to_tower(g0, w, [(("x",), x_grading)], name="HM-to"),
        hs_hat=hs,
        hs_bar=bar,
        q_bar=q_bar,
        v_bar=v_bar,
        pstar=pstar,
        hs_bar_shift=shift,
        column_of={lab: lab[1] for g in hs.gradings() for lab in hs.labels(g)},
        bar_power_of=powers,
        reduced=("x",),
        hm_generator=("x",),
    )


# --- orientation reversal ----------------------------------------------------
# HM-to(-Y) is dual to HM-hat(Y) with grading g <-> -1-g (S^3: top -1 <-> bottom 0).


def _dual_space(space: GradedSpace, name: str) -> GradedSpace:
    w = space.window
    dw = Window(-1 - w.hi, -1 - w.lo, w.guard)
    items = [(("dual", lab), -1 - g) for g, labs in space.basis for lab in labs]
    return GradedSpace.from_labels(dw, items, extends_below=space.extends_above,
                                   extends_above=space.extends_below, name=name)


def _dual_map(f: GradedMap, src: GradedSpace, tgt: GradedSpace, name: str) -> GradedMap:
    blocks = {-1 - (g + f.degree): m.T for g, m in f.blocks.items()}
    return GradedMap(src, tgt, f.degree, blocks, name)


def reverse(model: FloerModel) -> FloerModel:
    """To-flavor model of the reversed orientation, by duality."""
    if model.gysin.flavor != "hat" or model.pstar is None:
        raise StructuralError("reverse() needs a hat-flavor model with p_*")
    g = model.gysin
    hs = _dual_space(g.hs, "HS-to")
    hm = _dual_space(g.hm, "HM-to")
    bar = _dual_space(model.hs_bar, "HS-bar")
    gysin = Gysin(
        hs,
        hm,
        _dual_map(g.q, hs, hs, "Q"),
        _dual_map(g.pi, hs, hm, "iota"),
        _dual_map(g.iota, hm, hs, "pi"),
        "to",
    )
    return FloerModel(
        name=f"-{model.name}",
        window=hs.window,
        gysin=gysin,
        u_hm=_dual_map(model.u_hm, hm, hm, "U"),
        v_hs=_dual_map(model.v_hs, hs, hs, "V"),
        hm_to=hm,
        hs_to=hs,
        hs_bar=bar,
        q_bar=_dual_map(model.q_bar, bar, bar, "Q"),
        v_bar=_dual_map(model.v_bar, bar, bar, "V"),
        istar=_dual_map(model.pstar, bar, hs, "i"),
        jmath=identity(hm),
        hs_bar_shift=1 - model.hs_bar_shift,
        bar_power_of={("dual", lab): 2 - b for lab, b in model.bar_power_of.items()},
        reduced=("dual", model.reduced) if model.reduced is not None else None,
    )


# --- Y_{4k+1} = Sigma(2, 8k+3, 16k+7), reversed ------------------------------


def build_y4k1(k: int, window: Window, j_summand: Sequence[tuple[int, int]] = ()) -> FloerModel:
    """To-flavor model of -Sigma(2, 8k+3, 16k+7).

    HM-to = T+_0 (+) (F[[U]]/U^(2k+1))_0 (+) J(+)J.  ``j_summand`` lists J as
    pieces ``(bottom_grading, length)`` meaning (F[[U]]/U^length)_bottom; the
    involution swaps the two copies.

    HS-to: gamma tower at 4m (m >= 0), reduced classes r_m at 4m+2 (m < k),
    alpha tower at 4m+2 and beta tower at 4m+3 (m >= k).
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    w = window.aligned(0)
    if not (w.lo <= 0 and w.hi >= 4 * k + 4):
        raise StructuralError(f"Y_(4k+1) model needs a window covering [0, {4 * k + 4}]")
    j_summand = [(Fraction(b), int(n)) for b, n in j_summand]
    for b, n in j_summand:
        if n < 1 or b.denominator != 1:
            raise ValueError("J pieces need integral bottom grading and positive length")

    hm_items = [(("T", m), g) for m, g in _up(Fraction(0), 2, w.hi)]
    hm_items += [(("y", j), 2 * j) for j in range(2 * k + 1)]
    hs_items = [(("gamma", m), 4 * m) for m, _ in _up(Fraction(0), 4, w.hi)]
    hs_items += [(("r", m), 4 * m + 2) for m in range(k)]
    hs_items += [(("alpha", m), g) for m, g in ((k + i, 4 * (k + i) + 2) for i, _ in
                                                _up(Fraction(4 * k + 2), 4, w.hi))]
    hs_items += [(("beta", m), g) for m, g in ((k + i, 4 * (k + i) + 3) for i, _ in
                                               _up(Fraction(4 * k + 3), 4, w.hi))]
    for p, (b, n) in enumerate(j_summand):
        for i in range(n):
            hs_items.append((("J", p, i), b + 2 * i))
            hm_items += [(("J", p, 0, i), b + 2 * i), (("J", p, 1, i), b + 2 * i)]
    hm = GradedSpace.from_labels(w, hm_items, extends_above=True, name="HM-to")
    hs = GradedSpace.from_labels(w, hs_items, extends_above=True, name="HS-to")

    def q_rule(lab):
        if lab[0] == "gamma" and lab[1] - 1 >= k:
            return [("beta", lab[1] - 1)]
        if lab[0] == "beta":
            return [("alpha", lab[1])]
        return None

    def v_rule(lab):
        kind = lab[0]
        if kind in ("gamma", "r") and lab[1] >= 1:
            return [(kind, lab[1] - 1)]
        if kind in ("alpha", "beta") and lab[1] - 1 >= k:
            return [(kind, lab[1] - 1)]
        if kind == "J" and lab[2] >= 2:
            return [("J", lab[1], lab[2] - 2)]
        return None

    def u_rule(lab):
        kind = lab[0]
        if kind in ("T", "y") and lab[1] >= 1:
            return [(kind, lab[1] - 1)]
        if kind == "J" and lab[3] >= 1:
            return [("J", lab[1], lab[2], lab[3] - 1)]
        return None

    def iota_rule(lab):
        kind = lab[0]
        if kind == "gamma":
            return [("T", 2 * lab[1])]
        if kind == "r":
            return [("T", 2 * lab[1] + 1)]
        if kind == "J":
            return [("J", lab[1], 0, lab[2]), ("J", lab[1], 1, lab[2])]
        return None

    def pi_rule(lab):
        kind = lab[0]
        if kind == "T" and lab[1] % 2 == 1 and 2 * lab[1] >= 4 * k + 2:
            return [("alpha", (lab[1] - 1) // 2)]
        if kind == "y":
            j = lab[1]
            return [("gamma", j // 2)] if j % 2 == 0 else [("r", (j - 1) // 2)]
        if kind == "J":
            return [("J", lab[1], lab[3])]
        return None

    def istar_rule(lab):
        _, b, n = lab
        if b == 0 and -n >= 0:
            return [("gamma", -n)]
        if b == 1 and -n - 1 >= k:
            return [("beta", -n - 1)]
        if b == 2 and -n - 1 >= k:
            return [("alpha", -n - 1)]
        return None

    def j_rule(lab):
        if lab[0] == "J":
            return [("J", lab[1], 1 - lab[2], lab[3])]
        return [lab]

    q = GradedMap.from_rule(hs, hs, -1, q_rule, "Q")
    iota = GradedMap.from_rule(hs, hm, 0, iota_rule, "iota")
    pi = GradedMap.from_rule(hm, hs, 0, pi_rule, "pi")
    bar, q_bar, v_bar, powers = _bar(Fraction(0), w, "HS-bar")
    return FloerModel(
        name=f"-Y_{4 * k + 1}",
        window=w,
        gysin=Gysin(hs, hm, q, iota, pi, "to"),
        u_hm=GradedMap.from_rule(hm, hm, -2, u_rule, "U"),
        v_hs=GradedMap.from_rule(hs, hs, -4, v_rule, "V"),
        hm_to=hm,
        hs_to=hs,
        hs_bar=bar,
        q_bar=q_bar,
        v_bar=v_bar,
        istar=GradedMap.from_rule(bar, hs, 0, istar_rule, "i"),
        jmath=GradedMap.from_rule(hm, hm, 0, j_rule, "j"),
        hs_bar_shift=Fraction(0),
        bar_power_of=powers,
    )


def y4k1_contact_candidates(model: FloerModel) -> list[tuple[Fraction, np.ndarray]]:
    """The two possible contact classes: U^2k y and T_0 + U^2k y, both at grading 0."""
    hm = model.gysin.hm
    bottom = hm.unit(("y", 0))
    return [(Fraction(0), bottom), (Fraction(0), bottom ^ hm.unit(("T", 0)))]


# --- towers and contact classes ----------------------------------------------


def tower_of(model: FloerModel, g) -> TowerName | None:
    """Which of the alpha/beta/gamma towers has a nonzero class at grading g."""
    g = grading(g)
    if model.istar is None:
        raise StructuralError(f"{model.name} has no i_* map")
    bar, to = model.istar.source, model.istar.target
    if not (bar.known(g) and to.checkable(g)):
        raise BoundaryError(f"grading {g} is inside the guard band")
    block = model.istar.block(g)
    for j, lab in enumerate(bar.labels(g)):
        if block[:, j].any():
            return TOWER_OF_QPOWER[model.bar_power_of[lab]]
    return None


def tower_containing(model: FloerModel, g, v) -> TowerName | None:
    """Tower whose i_*-image at grading g contains the nonzero vector v."""
    g = grading(g)
    v = np.asarray(v, dtype=np.uint8) % 2
    if not v.any():
        return None
    tower_of(model, g)  # boundary / structure checks
    bar = model.istar.source
    block = model.istar.block(g)
    for power in (2, 1, 0):
        cols = [j for j, lab in enumerate(bar.labels(g)) if model.bar_power_of[lab] == power]
        if cols and gf2_solve(block[:, cols], v) is not None:
            return TOWER_OF_QPOWER[power]
    return None


def contact_class(model: FloerModel, g, v) -> ContactClass:
    """Place a class of HM-to at grading g: its grading, pi-image tower, j-invariance."""
    g = grading(g)
    v = np.asarray(v, dtype=np.uint8) % 2
    image = model.gysin.pi.apply(g, v)
    jv = model.jmath.apply(g, v) if model.jmath is not None else v
    return ContactClass(g, tower_containing(model, g, image), bool(np.array_equal(jv, v)))


def reduced_contact_class(model: FloerModel) -> ContactClass:
    """Contact class of a reversed rank-one model: the reduced HM generator."""
    if model.reduced is None or model.gysin.flavor != "to":
        raise StructuralError("needs a reversed rank-one model")
    hm = model.gysin.hm
    g, _ = hm.locate(model.reduced)
    return contact_class(model, g, hm.unit(model.reduced))


# --- verification ------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    check: str
    grading: Fraction | None
    ok: bool


@dataclass(frozen=True)
class VerificationReport:
    model: str
    results: tuple[CheckResult, ...]
    skipped: int = 0

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def failures(self, prefix: str = "") -> list[CheckResult]:
        return [r for r in self.results if not r.ok and r.check.startswith(prefix)]

    def summary(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for r in self.results:
            slot = out.setdefault(r.check, {"passed": 0, "failed": 0})
            slot["passed" if r.ok else "failed"] += 1
        return out


def _agree(f: GradedMap, g: GradedMap, gradings: Iterable[Fraction], check: str) -> list[CheckResult]:
    out = []
    for x in gradings:
        spaces = ((f.source, x), (f.target, x + f.degree), (g.target, x + g.degree))
        if all(s.checkable(y) for s, y in spaces):
            out.append(CheckResult(check, x, bool(np.array_equal(f.block(x), g.block(x)))))
    return out


def verify_model(model: FloerModel) -> VerificationReport:
    gy = model.gysin
    results: list[CheckResult] = []
    skipped = 0

    for label, f, g in gy.pairs():
        middle = g.source
        for x in middle.gradings():
            try:
                results.append(CheckResult(f"exact({label})", x, is_exact_at(f, g, x)))
            except BoundaryError:
                skipped += 1

    u2 = compose(model.u_hm, model.u_hm)
    results += _agree(compose(gy.iota, model.v_hs), compose(u2, gy.iota), gy.hs.gradings(), "R(iota V = U^2 iota)")
    results += _agree(compose(gy.pi, u2), compose(model.v_hs, gy.pi), gy.hm.gradings(), "R(pi U^2 = V pi)")
    results += _agree(compose(gy.q, model.v_hs), compose(model.v_hs, gy.q), gy.hs.gradings(), "R(QV = VQ)")

    if model.column_of:
        for x in gy.hs.gradings():
            if not (gy.hs.checkable(x) and gy.hs.checkable(x - 1)):
                continue
            for lab in gy.hs.labels(x):
                col = model.column_of[lab]
                if col == 2:
                    continue
                img = gy.q.apply(x, gy.hs.unit(lab))
                into_next = all(model.column_of[t] == col + 1 for t, bit in zip(gy.hs.labels(x - 1), img) if bit)
                results.append(CheckResult("Q-column", x, bool(img.any()) and into_next))

    if model.pstar is not None:
        p = model.pstar
        for x in gy.hs.gradings():
            if gy.hs.checkable(x) and p.target.checkable(x):
                results.append(CheckResult("p-injective", x, gf2_rank(p.block(x)) == gy.hs.dim(x)))
        results += _agree(compose(p, gy.q), compose(model.q_bar, p), gy.hs.gradings(), "p R-linear (Q)")
        results += _agree(compose(p, model.v_hs), compose(model.v_bar, p), gy.hs.gradings(), "p R-linear (V)")

    if model.istar is not None:
        i = model.istar
        bar = i.source
        results += _agree(compose(i, model.q_bar), compose(gy.q, i), bar.gradings(), "i R-linear (Q)")
        results += _agree(compose(i, model.v_bar), compose(model.v_hs, i), bar.gradings(), "i R-linear (V)")

    if model.reduced is not None:
        x, _ = gy.hm.locate(model.reduced)
        if gy.flavor == "hat":
            in_image = gf2_solve(gy.iota.block(x), gy.hm.unit(model.reduced)) is not None
            results.append(CheckResult("reduced in image(iota)", x, in_image))
        else:
            # dual statement: the reduced class survives pi
            results.append(CheckResult("reduced not in ker(pi)", x, bool(gy.pi.apply(x, gy.hm.unit(model.reduced)).any())))

    return VerificationReport(model.name, tuple(results), skipped)


def corrupt(model: FloerModel, g) -> FloerModel:
    """Copy of the model with the Q-block leaving grading g zeroed (negative control)."""
    g = grading(g)
    q = model.gysin.q
    bad = q.with_block(g, np.zeros_like(q.block(g)))
    return dataclasses.replace(model, name=f"{model.name} [Q@{g} zeroed]",
                               gysin=dataclasses.replace(model.gysin, q=bad))


def ladder(model: FloerModel, lo=None, hi=None) -> list[tuple[Fraction, int, int, int]]:
    """Rows (grading, dim HS, dim HM, dim HS) of the Gysin triangle, top first."""
    gy = model.gysin
    lo = model.window.lo if lo is None else grading(lo)
    hi = model.window.hi if hi is None else grading(hi)
    rows = []
    for g in reversed(list(model.window.gradings())):
        if lo <= g <= hi:
            rows.append((g, gy.hs.dim(g), gy.hm.dim(g), gy.hs.dim(g)))
    return rows


__all__ = [
    "CheckResult",
    "ContactClass",
    "FloerModel",
    "Gysin",
    "RingMonomial",
    "TowerName",
    "TypeClass",
    "VerificationReport",
    "build_rank_one",
    "build_s3",
    "build_y4k1",
    "contact_class",
    "corrupt",
    "dual_type",
    "ladder",
    "reduced_contact_class",
    "reverse",
    "tower_containing",
    "tower_of",
    "verify_model",
    "y4k1_contact_candidates",
]
