"""Catalog of manifold invariants, with the built-in examples and a JSON format.

File layout::

    {"schema_version": 1,
     "entries": [{"name": str, "h": "p/q", "reduced_rank": int | "unknown",
                  "type": "I" | "II" | null,
                  "contact": {"d": "p/q", "tower": "alpha" | "beta" | "gamma" | null,
                              "j_invariant": bool} | null,
                  "notes": str}]}

Rationals are strings so they survive the round trip exactly.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .floer import ContactClass, TowerName, TypeClass

SCHEMA_VERSION = 1
_RATIONAL = re.compile(r"^\s*-?\d+(\s*/\s*\d+)?\s*$")
_ENTRY_KEYS = {"name", "h", "reduced_rank", "type", "contact", "notes"}
_CONTACT_KEYS = {"d", "tower", "j_invariant"}


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class ManifoldEntry:
    name: str
    h: Fraction
    reduced_rank: int | str = "unknown"
    type: TypeClass | None = None
    contact: ContactClass | None = None
    notes: str = ""

    def __post_init__(self):
        object.__setattr__(self, "h", Fraction(self.h))
        if self.reduced_rank != "unknown" and (not isinstance(self.reduced_rank, int) or self.reduced_rank < 0):
            raise CatalogError(f"{self.name}: reduced_rank must be a non-negative integer or 'unknown'")
        if self.type is not None and self.reduced_rank != 1:
            raise CatalogError(f"{self.name}: a Type is only defined when the reduced rank is 1")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.match(s):
        raise CatalogError(f"malformed rational {s!r} (expected a string like '3' or '-1/8')")
    try:
        return Fraction(s.replace(" ", ""))
    except ZeroDivisionError:
        raise CatalogError(f"malformed rational {s!r}: zero denominator") from None


def builtin() -> list[ManifoldEntry]:
    out = [
        ManifoldEntry("Sigma(2,3,11)", Fraction(-1), 1, TypeClass.II),
        ManifoldEntry("-Sigma(2,3,11)", Fraction(1), 1, TypeClass.I),
        ManifoldEntry("-Sigma(2,3,7)", Fraction(0), 1, TypeClass.I, notes="equals M(-1)"),
    ]
    for n in range(-1, -10, -1):
        out.append(ManifoldEntry(f"M({n})", Fraction(-(n + 1), 8), 1, TypeClass.I,
                                 notes=f"{n}-surgery on the figure-eight knot"))
    for k in (1, 2, 3):
        out.append(ManifoldEntry(
            f"Sigma(2,{8 * k + 3},{16 * k + 7})",
            Fraction(0),
            "unknown",
            None,
            ContactClass(Fraction(0), TowerName.gamma, True),
            notes=f"Y_(4k+1) with k={k}; h from the tower bottom of HM-to(-Y) at 0",
        ))
    return out


def entry_to_dict(e: ManifoldEntry) -> dict:
    contact = None
    if e.contact is not None:
        contact = {
            "d": format_rational(e.contact.d),
            "tower": None if e.contact.tower is None else e.contact.tower.value,
            "j_invariant": e.contact.j_invariant,
        }
    return {
        "name": e.name,
        "h": format_rational(e.h),
        "reduced_rank": e.reduced_rank,
        "type": None if e.type is None else e.type.value,
        "contact": contact,
        "notes": e.notes,
    }


def dumps(entries: Iterable[ManifoldEntry]) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "entries": [entry_to_dict(e) for e in entries]}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def save(entries: Iterable[ManifoldEntry], path) -> None:
    Path(path).write_text(dumps(entries), encoding="utf-8")


def _entry_from_dict(d) -> ManifoldEntry:
    if not isinstance(d, dict):
        raise CatalogError("entry must be an object")
    unknown = set(d) - _ENTRY_KEYS
    if unknown:
        raise CatalogError(f"unknown field(s) {sorted(unknown)}")
    missing = {"name", "h", "reduced_rank", "type", "contact"} - set(d)
    if missing:
        raise CatalogError(f"missing field(s) {sorted(missing)}")
    name = d["name"]
    if not isinstance(name, str) or not name:
        raise CatalogError("name must be a non-empty string")
    rank = d["reduced_rank"]
    if not (rank == "unknown" or (type(rank) is int and rank >= 0)):
        raise CatalogError(f"{name}: reduced_rank must be a non-negative integer or 'unknown', got {rank!r}")
    try:
        t = None if d["type"] is None else TypeClass(d["type"])
    except ValueError:
        raise CatalogError(f"{name}: unknown type {d['type']!r}") from None
    if t is not None and rank != 1:
        raise CatalogError(f"{name}: invariant violation: type {t} requires reduced_rank 1, got {rank!r}")
    contact = None
    c = d["contact"]
    if c is not None:
        if not isinstance(c, dict) or set(c) != _CONTACT_KEYS:
            raise CatalogError(f"{name}: contact must have exactly the fields {sorted(_CONTACT_KEYS)}")
        try:
            tower = None if c["tower"] is None else TowerName(c["tower"])
        except ValueError:
            raise CatalogError(f"{name}: unknown tower tag {c['tower']!r}") from None
        if not isinstance(c["j_invariant"], bool):
            raise CatalogError(f"{name}: j_invariant must be a boolean")
        contact = ContactClass(parse_rational(c["d"]), tower, c["j_invariant"])
    notes = d.get("notes", "")
    if not isinstance(notes, str):
        raise CatalogError(f"{name}: notes must be a string")
    return ManifoldEntry(name, parse_rational(d["h"]), rank, t, contact, notes)


def _entry_lines(text: str) -> list[int]:
    """Line number where each element of the top-level "entries" array starts."""
    dec = json.JSONDecoder()
    m = re.search(r'"entries"\s*:\s*\[', text)
    if m is None:
        return []
    lines, pos = [], m.end()
    while True:
        while pos < len(text) and text[pos] in " \t\r\n,":
            pos += 1
        if pos >= len(text) or text[pos] == "]":
            return lines
        lines.append(text.count("\n", 0, pos) + 1)
        _, pos = dec.raw_decode(text, pos)


def loads(text: str, source: str = "<string>") -> list[ManifoldEntry]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{source}:{exc.lineno}: invalid JSON: {exc.msg}") from None
    if not isinstance(doc, dict) or set(doc) != {"schema_version", "entries"}:
        raise CatalogError(f"{source}:1: top level must have exactly 'schema_version' and 'entries'")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise CatalogError(f"{source}:1: unsupported schema_version {doc['schema_version']!r}")
    if not isinstance(doc["entries"], list):
        raise CatalogError(f"{source}:1: 'entries' must be a list")
    lines = _entry_lines(text)
    out, seen = [], set()
    for i, raw in enumerate(doc["entries"]):
        line = lines[i] if i < len(lines) else 1
        try:
            e = _entry_from_dict(raw)
        except CatalogError as exc:
            raise CatalogError(f"{source}:{line}: entry {i}: {exc}") from None
        if e.name in seen:
            raise CatalogError(f"{source}:{line}: entry {i}: duplicate name {e.name!r}")
        seen.add(e.name)
        out.append(e)
    return out


def load(path) -> list[ManifoldEntry]:
    path = Path(path)
    return loads(path.read_text(encoding="utf-8"), str(path))


def find(entries: Iterable[ManifoldEntry], name: str) -> ManifoldEntry | None:
    return next((e for e in entries if e.name == name), None)


__all__ = [
    "CatalogError",
    "ManifoldEntry",
    "builtin",
    "dumps",
    "find",
    "load",
    "loads",
    "parse_rational",
    "save",
]
