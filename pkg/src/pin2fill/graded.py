"""Graded F2 vector spaces on a finite grading window.

Infinite towers are kept only inside a :class:`Window`.  A space records
whether it keeps going below or above the window; near such an end a band
of width ``guard`` is treated as unknown and every check there raises
:class:`BoundaryError` instead of answering.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Mapping

import numpy as np

Grading = Fraction
Label = Hashable


class StructuralError(ValueError):
    """Maps or spaces that do not fit together."""


class BoundaryError(Exception):
    """A check touches gradings where the truncation hides information."""


def grading(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError(f"gradings must be exact, got float {x!r}")
    return Fraction(x)


# --- F2 matrix helpers -------------------------------------------------------


def gf2(m) -> np.ndarray:
    return np.asarray(m, dtype=np.uint8) % 2


def gf2_rank(m) -> int:
    a = gf2(m).copy()
    if a.ndim != 2 or 0 in a.shape:
        return 0
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if a[r, c]), None)
        if pivot is None:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        hit = a[:, c].astype(bool)
        hit[rank] = False
        a[hit] ^= a[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def gf2_solve(a, b) -> np.ndarray | None:
    """One solution x of a @ x = b over F2, or None."""
    a = gf2(a)
    b = gf2(b).reshape(-1)
    rows, cols = a.shape
    aug = np.concatenate([a, b.reshape(-1, 1)], axis=1)
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if aug[i, c]), None)
        if pivot is None:
            continue
        aug[[r, pivot]] = aug[[pivot, r]]
        hit = aug[:, c].astype(bool)
        hit[r] = False
        aug[hit] ^= aug[r]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if aug[r:, cols].any():
        return None
    x = np.zeros(cols, dtype=np.uint8)
    for i, c in enumerate(pivots):
        x[c] = aug[i, cols]
    return x


# --- windows and spaces ------------------------------------------------------


@dataclass(frozen=True)
class Window:
    lo: Fraction
    hi: Fraction
    guard: Fraction = Fraction(4)

    def __post_init__(self):
        object.__setattr__(self, "lo", grading(self.lo))
        object.__setattr__(self, "hi", grading(self.hi))
        object.__setattr__(self, "guard", grading(self.guard))
        if not self.lo < self.hi:
            raise StructuralError(f"empty window [{self.lo}, {self.hi}]")
        if self.guard < 0:
            raise StructuralError("guard must be non-negative")

    @classmethod
    def parse(cls, text: str, guard=4) -> "Window":
        lo, sep, hi = text.partition(":")
        if not sep:
            raise ValueError(f"window must look like LO:HI, got {text!r}")
        return cls(Fraction(lo), Fraction(hi), Fraction(guard))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def aligned(self, offset) -> "Window":
        """Shrink to the gradings congruent to ``offset`` modulo 1."""
        offset = grading(offset)
        lo = self.lo + (offset - self.lo) % 1
        hi = self.hi - (self.hi - offset) % 1
        return Window(lo, hi, self.guard)

    def shifted(self, d) -> "Window":
        d = grading(d)
        return Window(self.lo + d, self.hi + d, self.guard)

    def gradings(self) -> Iterator[Fraction]:
        g = self.lo
        while g <= self.hi:
            yield g
            g += 1

    def contains(self, g) -> bool:
        g = grading(g)
        return self.lo <= g <= self.hi and (g - self.lo).denominator == 1

    def covers(self, lo, hi) -> bool:
        return self.lo <= grading(lo) and grading(hi) <= self.hi


@dataclass(frozen=True)
class GradedSpace:
    """Labelled basis per grading; dimension tables are derived from it."""

    window: Window
    basis: tuple[tuple[Fraction, tuple[Label, ...]], ...]
    extends_below: bool = False
    extends_above: bool = False
    name: str = ""
    _index: dict = field(default=None, compare=False, repr=False)
    _by_grading: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        by_grading = {}
        index = {}
        for g, labels in self.basis:
            if not self.window.contains(g):
                raise StructuralError(f"{self.name or 'space'}: grading {g} outside {self.window}")
            if g in by_grading:
                raise StructuralError(f"grading {g} listed twice")
            by_grading[g] = labels
            for i, lab in enumerate(labels):
                if lab in index:
                    raise StructuralError(f"duplicate basis label {lab!r}")
                index[lab] = (g, i)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_by_grading", by_grading)

    @classmethod
    def from_labels(cls, window: Window, items: Iterable[tuple[Label, Fraction]], **kw) -> "GradedSpace":
        """Keep the (label, grading) pairs that fall inside the window."""
        grouped: dict[Fraction, list] = {}
        for lab, g in items:
            g = grading(g)
            if window.contains(g):
                grouped.setdefault(g, []).append(lab)
        basis = tuple((g, tuple(labs)) for g, labs in sorted(grouped.items()))
        return cls(window, basis, **kw)

    @classmethod
    def from_dims(cls, window: Window, dims: Mapping, **kw) -> "GradedSpace":
        items = [((grading(g), i), g) for g, n in dims.items() for i in range(n)]
        return cls.from_labels(window, items, **kw)

    @classmethod
    def zero(cls, window: Window, name: str = "") -> "GradedSpace":
        return cls(window, (), name=name)

    @property
    def dims(self) -> dict[Fraction, int]:
        return {g: len(labs) for g, labs in self._by_grading.items() if labs}

    def dim(self, g) -> int:
        return len(self._by_grading.get(grading(g), ()))

    def labels(self, g) -> tuple[Label, ...]:
        return self._by_grading.get(grading(g), ())

    def locate(self, label: Label) -> tuple[Fraction, int]:
        return self._index[label]

    def __contains__(self, label) -> bool:
        return label in self._index

    def gradings(self) -> Iterator[Fraction]:
        return self.window.gradings()

    def unit(self, label: Label) -> np.ndarray:
        g, i = self._index[label]
        v = np.zeros(self.dim(g), dtype=np.uint8)
        v[i] = 1
        return v

    def known(self, g) -> bool:
        """True when dim(g) is exact (inside the window or past a real end)."""
        g = grading(g)
        if (g - self.window.lo).denominator != 1:
            return True
        if g < self.window.lo:
            return not self.extends_below
        if g > self.window.hi:
            return not self.extends_above
        return True

    def checkable(self, g) -> bool:
        g = grading(g)
        if not self.known(g):
            return False
        w = self.window
        if self.extends_below and w.lo <= g < w.lo + w.guard:
            return False
        if self.extends_above and w.hi - w.guard < g <= w.hi:
            return False
        return True

    def interior(self) -> list[Fraction]:
        return [g for g in self.gradings() if self.checkable(g)]


def dim_at(space: GradedSpace, g) -> int:
    return space.dim(g)


# --- maps --------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GradedMap:
    source: GradedSpace
    target: GradedSpace
    degree: Fraction
    blocks: Mapping[Fraction, np.ndarray]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "degree", grading(self.degree))
        clean = {}
        for g, m in self.blocks.items():
            g = grading(g)
            m = gf2(m)
            shape = (self.target.dim(g + self.degree), self.source.dim(g))
            if m.shape != shape:
                raise StructuralError(
                    f"{self.name or 'map'}: block at {g} has shape {m.shape}, expected {shape}"
                )
            if m.any():
                m.setflags(write=False)
                clean[g] = m
        object.__setattr__(self, "blocks", clean)

    @classmethod
    def from_rule(
        cls,
        source: GradedSpace,
        target: GradedSpace,
        degree,
        rule: Callable[[Label], Iterable[Label] | None],
        name: str = "",
    ) -> "GradedMap":
        """Build a map from the images of basis labels (summed over F2).

        Image labels falling outside the target window are dropped; image
        labels inside the window must exist in the target.
        """
        degree = grading(degree)
        blocks = {}
        for g in source.gradings():
            src = source.labels(g)
            if not src:
                continue
            tg = g + degree
            m = np.zeros((target.dim(tg), len(src)), dtype=np.uint8)
            for j, lab in enumerate(src):
                for img in rule(lab) or ():
                    if img in target:
                        gi, i = target.locate(img)
                        if gi != tg:
                            raise StructuralError(f"{name}: {lab!r} -> {img!r} lands at {gi}, not {tg}")
                        m[i, j] ^= 1
                    elif target.window.contains(tg):
                        raise StructuralError(f"{name}: image {img!r} of {lab!r} not in target")
            blocks[g] = m
        return cls(source, target, degree, blocks, name)

    def block(self, g) -> np.ndarray:
        g = grading(g)
        m = self.blocks.get(g)
        if m is not None:
            return m
        return np.zeros((self.target.dim(g + self.degree), self.source.dim(g)), dtype=np.uint8)

    def apply(self, g, v) -> np.ndarray:
        return (self.block(g).astype(np.int64) @ gf2(v).astype(np.int64)) % 2

    def with_block(self, g, m) -> "GradedMap":
        blocks = dict(self.blocks)
        blocks[grading(g)] = m
        return GradedMap(self.source, self.target, self.degree, blocks, self.name)

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        return compose(self, other)

    def is_zero(self) -> bool:
        return not self.blocks


def zero_map(source: GradedSpace, target: GradedSpace, degree=0, name: str = "0") -> GradedMap:
    return GradedMap(source, target, degree, {}, name)


def identity(space: GradedSpace) -> GradedMap:
    blocks = {g: np.eye(n, dtype=np.uint8) for g, n in space.dims.items()}
    return GradedMap(space, space, 0, blocks, "id")


def compose(f: GradedMap, g: GradedMap) -> GradedMap:
    """f after g."""
    if g.target != f.source:
        raise StructuralError(f"cannot compose {f.name or 'f'} after {g.name or 'g'}: spaces differ")
    blocks = {}
    for gs in g.source.gradings():
        gb = g.block(gs)
        if gb.size == 0:
            continue
        fb = f.block(gs + g.degree)
        blocks[gs] = (fb.astype(np.int64) @ gb.astype(np.int64)) % 2
    name = f"{f.name}∘{g.name}" if f.name and g.name else ""
    return GradedMap(g.source, f.target, f.degree + g.degree, blocks, name)


def is_exact_at(f: GradedMap, g: GradedMap, g0) -> bool:
    """Exactness of A -f-> B -g-> C at B in grading g0."""
    g0 = grading(g0)
    if f.target != g.source:
        raise StructuralError("is_exact_at: f and g are not composable")
    touched = (
        (g.source, g0),
        (f.source, g0 - f.degree),
        (g.target, g0 + g.degree),
    )
    for space, gr in touched:
        if not space.checkable(gr):
            raise BoundaryError(f"grading {gr} of {space.name or 'space'} is inside the guard band")
    fb = f.block(g0 - f.degree).astype(np.int64)
    gb = g.block(g0).astype(np.int64)
    if fb.size and gb.size and ((gb @ fb) % 2).any():
        return False
    return gf2_rank(fb) == g.source.dim(g0) - gf2_rank(gb)


def square_gradings(top: GradedMap, bottom: GradedMap, left: GradedMap, right: GradedMap) -> list[Fraction]:
    """Gradings of the corner space where every touched grading is checkable."""
    out = []
    for g in top.source.gradings():
        if (
            top.source.checkable(g)
            and top.target.checkable(g + top.degree)
            and left.target.checkable(g + left.degree)
            and right.target.checkable(g + top.degree + right.degree)
        ):
            out.append(g)
    return out


def square_defects(top: GradedMap, bottom: GradedMap, left: GradedMap, right: GradedMap) -> list[Fraction]:
    """Gradings where right∘top and bottom∘left disagree.

    Corner layout: top A->B, left A->C, right B->D, bottom C->D.
    """
    if top.source != left.source or top.target != right.source:
        raise StructuralError("square: top/left/right do not share corners")
    if left.target != bottom.source or right.target != bottom.target:
        raise StructuralError("square: bottom does not close the square")
    if top.degree + right.degree != left.degree + bottom.degree:
        raise StructuralError("square: the two paths have different degrees")
    upper = compose(right, top)
    lower = compose(bottom, left)
    return [g for g in square_gradings(top, bottom, left, right)
            if not np.array_equal(upper.block(g), lower.block(g))]


def check_square(top: GradedMap, bottom: GradedMap, left: GradedMap, right: GradedMap) -> bool:
    return not square_defects(top, bottom, left, right)


def maps_agree(f: GradedMap, g: GradedMap, gradings: Iterable | None = None) -> bool:
    if f.source != g.source or f.target != g.target or f.degree != g.degree:
        return False
    if gradings is None:
        gradings = f.source.gradings()
    return all(np.array_equal(f.block(x), g.block(x)) for x in gradings)


__all__ = [
    "BoundaryError",
    "GradedMap",
    "GradedSpace",
    "Grading",
    "StructuralError",
    "Window",
    "check_square",
    "compose",
    "dim_at",
    "gf2_rank",
    "gf2_solve",
    "grading",
    "identity",
    "is_exact_at",
    "maps_agree",
    "square_defects",
    "zero_map",
]
