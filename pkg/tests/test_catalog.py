import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pin2fill.catalog import (
    CatalogError,
    ManifoldEntry,
    builtin,
    dumps,
    find,
    load,
    loads,
    parse_rational,
    save,
)
from pin2fill.floer import ContactClass, TowerName, TypeClass
from pin2fill.obstruct import theorem_main


def doc(*entries):
    return json.dumps({"schema_version": 1, "entries": list(entries)}, indent=2)


def entry(**kw):
    base = {"name": "X", "h": "0", "reduced_rank": 1, "type": "I", "contact": None, "notes": ""}
    base.update(kw)
    return base


def test_builtin_contents():
    es = builtin()
    assert [e.name for e in es][:3] == ["Sigma(2,3,11)", "-Sigma(2,3,11)", "-Sigma(2,3,7)"]
    e = find(es, "-Sigma(2,3,7)")
    assert (e.h, e.type) == (0, TypeClass.I)
    e = find(es, "M(-9)")
    assert (e.h, e.type) == (1, TypeClass.I)
    e = find(es, "Sigma(2,11,23)")
    assert e.contact == ContactClass(Fraction(0), TowerName.gamma, True)
    assert e.reduced_rank == "unknown"
    assert {e.name for e in es} >= {"Sigma(2,19,39)", "Sigma(2,27,55)"}
    assert find(es, "nope") is None
    assert len(es) == 15


def test_builtin_reproduces_expected_betti():
    expected = {"Sigma(2,3,11)": (2, 18), "-Sigma(2,3,11)": (1, 1), "-Sigma(2,3,7)": (1, 9)}
    expected.update({f"M({n})": (1, 10 + n) for n in range(-1, -10, -1)})
    for e in builtin():
        if e.type is not None:
            fc = theorem_main(e.h, e.type)
            assert (fc.b2plus, fc.b2minus) == expected[e.name]


def test_round_trip(tmp_path):
    path = tmp_path / "cat.json"
    save(builtin(), path)
    assert load(path) == builtin()
    assert dumps(load(path)) == path.read_text(encoding="utf-8")


def test_rational_h_exact():
    (e,) = loads(doc(entry(h="1/3")))
    assert e.h == Fraction(1, 3)


@pytest.mark.parametrize("bad,msg", [
    (entry(reduced_rank=2), "invariant violation"),
    (entry(h="0.5"), "malformed rational"),
    (entry(h=1), "malformed rational"),
    (entry(h="1/0"), "zero denominator"),
    (entry(type=None, contact={"d": "0", "tower": "delta", "j_invariant": True}), "unknown tower"),
    (entry(type=None, contact={"d": "0", "tower": "gamma"}), "exactly the fields"),
    (entry(type="III"), "unknown type"),
    (entry(extra=1), "unknown field"),
    ({"name": "X", "h": "0"}, "missing field"),
    (entry(reduced_rank=-1, type=None), "reduced_rank"),
    (entry(name=""), "name"),
])
def test_rejections(bad, msg):
    with pytest.raises(CatalogError, match=msg):
        loads(doc(entry(name="ok"), bad), "f.json")


def test_line_level_diagnostics():
    text = doc(entry(name="A"), entry(name="B", reduced_rank=2))
    line = next(i for i, l in enumerate(text.splitlines(), 1) if '"B"' in l) - 1  # the opening brace
    with pytest.raises(CatalogError) as exc:
        loads(text, "f.json")
    assert str(exc.value).startswith(f"f.json:{line}: entry 1:")


def test_top_level_errors():
    with pytest.raises(CatalogError, match="invalid JSON"):
        loads("{", "f.json")
    with pytest.raises(CatalogError, match="schema_version"):
        loads(json.dumps({"schema_version": 2, "entries": []}))
    with pytest.raises(CatalogError, match="duplicate"):
        loads(doc(entry(), entry()))


def test_entry_invariant():
    with pytest.raises(CatalogError):
        ManifoldEntry("X", Fraction(0), 2, TypeClass.I)


def test_parse_rational():
    assert parse_rational("-1/8") == Fraction(-1, 8)
    assert parse_rational(" 3 ") == 3
    with pytest.raises(CatalogError):
        parse_rational("1e3")


names = st.text(st.characters(blacklist_categories=("Cs",)), min_size=1, max_size=12)


@given(st.lists(st.tuples(names, st.fractions(max_denominator=64), st.booleans(),
                          st.sampled_from([None, *TowerName]), st.integers(-20, 20)),
                max_size=6, unique_by=lambda t: t[0]))
def test_round_trip_property(rows):
    es = []
    for name, h, typed, tower, d in rows:
        if typed:
            es.append(ManifoldEntry(name, h, 1, TypeClass.I))
        else:
            es.append(ManifoldEntry(name, h, "unknown", None, ContactClass(Fraction(d, 2), tower, True), "n"))
    assert loads(dumps(es)) == es
    assert dumps(loads(dumps(es))) == dumps(es)
