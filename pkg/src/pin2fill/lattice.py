"""Indefinite even unimodular lattices and exact Gram-matrix invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class ClassificationError(ValueError):
    pass


# E8 Dynkin diagram: chain 0-1-2-3-4-5-6 with node 7 hanging off node 4.
E8_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]


@dataclass(frozen=True)
class LatticeForm:
    """p copies of H plus q copies of E8 scaled by eps."""

    p: int
    q: int
    eps: int = 1

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("multiplicities are non-negative")
        if self.eps not in (1, -1):
            raise ValueError("eps is +1 or -1")
        if self.q == 0 and self.eps != 1:
            object.__setattr__(self, "eps", 1)

    @property
    def rank(self) -> int:
        return 2 * self.p + 8 * self.q

    @property
    def signature(self) -> int:
        return 8 * self.eps * self.q

    def _parts(self, signed: bool) -> list[str]:
        parts = []
        if self.p:
            parts.append("H" if self.p == 1 else f"{self.p}H")
        if self.q:
            e8 = "E8" if self.q == 1 else f"{self.q}E8"
            if signed and self.eps < 0:
                e8 += "(-1)"
            parts.append(e8)
        return parts

    @property
    def name(self) -> str:
        """Unsigned name as commonly written, e.g. ``2H⊕2E8``."""
        return "⊕".join(self._parts(False)) or "0"

    def __str__(self):
        return "⊕".join(self._parts(True)) or "0"


def classify_even_indefinite(b2plus: int, b2minus: int) -> LatticeForm:
    if b2plus < 1 or b2minus < 1:
        raise ClassificationError(
            f"classification inapplicable: (b2+, b2-) = ({b2plus}, {b2minus}) is definite"
        )
    sigma = b2plus - b2minus
    if sigma % 8:
        raise ClassificationError(
            f"no even unimodular lattice exists with signature {sigma} (not divisible by 8)"
        )
    return LatticeForm(min(b2plus, b2minus), abs(sigma) // 8, -1 if sigma < 0 else 1)


def e8_gram(eps: int = 1) -> list[list[int]]:
    m = [[2 * eps if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in E8_EDGES:
        m[i][j] = m[j][i] = eps
    return m


def gram(form: LatticeForm) -> list[list[int]]:
    blocks = [[[0, 1], [1, 0]]] * form.p + [e8_gram(form.eps)] * form.q
    n = form.rank
    out = [[0] * n for _ in range(n)]
    at = 0
    for b in blocks:
        for i, row in enumerate(b):
            out[at + i][at:at + len(row)] = row
        at += len(b)
    return out


@dataclass(frozen=True)
class Invariants:
    rank: int
    signature: int
    even: bool
    det: int


def _congruence_diagonal(g: Sequence[Sequence[int]]) -> list[Fraction]:
    """Diagonal of P^T g P for some rational P with det P = +-1."""
    a = [[Fraction(x) for x in row] for row in g]
    n = len(a)
    diag = []
    for i in range(n):
        if a[i][i] == 0:
            j = next((j for j in range(i + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[i], a[j] = a[j], a[i]
                for row in a:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((j for j in range(i + 1, n) if a[i][j] != 0), None)
                if j is not None:
                    # add basis vector j to i: new a_ii = 2 a_ij
                    for c in range(n):
                        a[i][c] += a[j][c]
                    for r in range(n):
                        a[r][i] += a[r][j]
        piv = a[i][i]
        diag.append(piv)
        if piv == 0:
            continue
        for j in range(i + 1, n):
            f = a[j][i] / piv
            if f:
                for c in range(n):
                    a[j][c] -= f * a[i][c]
                for r in range(n):
                    a[r][j] -= f * a[r][i]
    return diag


def invariants(g: Sequence[Sequence[int]]) -> Invariants:
    n = len(g)
    if any(len(row) != n for row in g):
        raise ValueError("Gram matrix must be square")
    if any(g[i][j] != g[j][i] for i in range(n) for j in range(i)):
        raise ValueError("Gram matrix must be symmetric")
    diag = _congruence_diagonal(g)
    det = Fraction(1)
    for d in diag:
        det *= d
    pos = sum(d > 0 for d in diag)
    neg = sum(d < 0 for d in diag)
    # v.v for integral v is sum v_i^2 g_ii + 2 (cross terms)
    even = all(g[i][i] % 2 == 0 for i in range(n))
    return Invariants(pos + neg, pos - neg, even, int(det))


__all__ = [
    "ClassificationError",
    "Invariants",
    "LatticeForm",
    "classify_even_indefinite",
    "e8_gram",
    "gram",
    "invariants",
]
