"""Command line front end: ``pin2fill obstruct | catalog | gysin | cobmap | lattice``.

Exit codes: 0 success, 2 hypothesis or consistency error, 3 name not found,
64 usage error.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from . import catalog as cat
from .cobordism import CobordismData, Mono, grading_shift, hs_bar_map
from .floer import (
    ContactClass,
    TowerName,
    TypeClass,
    build_rank_one,
    build_s3,
    build_y4k1,
    ladder,
    verify_model,
)
from .graded import StructuralError, Window
from .lattice import ClassificationError, classify_even_indefinite, gram, invariants
from .obstruct import HypothesisError, euler_bounds, theorem_contact, theorem_main

EXIT_OK, EXIT_HYPOTHESIS, EXIT_NOT_FOUND, EXIT_USAGE = 0, 2, 3, 64


class Rational(click.ParamType):
    name = "RATIONAL"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return cat.parse_rational(str(value))
        except cat.CatalogError:
            self.fail(f"{value!r} is not a rational number like 3 or -1/8", param, ctx)


RATIONAL = Rational()


def _fmt(x) -> str:
    return cat.format_rational(x)


def _emit(report: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        click.echo(json.dumps(report, sort_keys=True, ensure_ascii=False))
    else:
        for line in lines:
            click.echo(line)


def _lattice_line(form) -> str:
    if form.eps < 0:
        return f"lattice: {form.name} (E8 summands negative definite)"
    return f"lattice: {form.name}"


def _lattice_dict(form) -> dict:
    return {"name": form.name, "signed": str(form), "p": form.p, "q": form.q, "eps": form.eps}


def _verdict_lines(fc) -> list[str]:
    lines = [f"verdict: {fc.scope.value}"]
    if fc.b2plus is not None:
        lines += [f"parity: {fc.parity}", f"b2+ = {fc.b2plus}, b2- = {fc.b2minus}"]
        lines.append(_lattice_line(fc.lattice) if fc.lattice is not None else "lattice: not classified")
    if fc.note:
        lines.append(f"note: {fc.note}")
    return lines


def _euler_lines(eb) -> list[str]:
    if eb is None:
        return []
    neg = "n/a" if eb.chi_negdef_max is None else str(eb.chi_negdef_max)
    ind = "n/a" if eb.chi_indefinite is None else str(eb.chi_indefinite)
    return [f"euler: chi(indefinite) = {ind}, chi(negative definite) <= {neg}, finite = {str(eb.finite).lower()}"]


def _fail(command: str, inp: dict, msg: str, as_json: bool, code: int) -> int:
    if as_json:
        click.echo(json.dumps({"command": command, "input": inp, "error": msg}, sort_keys=True, ensure_ascii=False))
    else:
        click.echo(f"error: {msg}", err=True)
    return code


@click.group(context_settings={"help_option_names": ["--help"]})
def cli():
    """Obstructions to indefinite Stein fillings from Pin(2)-monopole Floer data."""


@cli.command()
@click.option("--type", "type_", type=click.Choice(["I", "II"]), help="Type of the rank-one manifold.")
@click.option("--h", "h", type=RATIONAL, help="Froyshov invariant.")
@click.option("--contact-d", "contact_d", type=RATIONAL, help="Grading of the contact class.")
@click.option("--tower", type=click.Choice([t.value for t in TowerName]), help="Tower containing pi_* c.")
@click.option("--not-j-invariant", is_flag=True, help="The contact class is not j-invariant.")
@click.option("--C", "C", type=RATIONAL, help="Constant with 3 sigma + 2 chi >= C for all fillings.")
@click.option("--json", "as_json", is_flag=True)
def obstruct(type_, h, contact_d, tower, not_j_invariant, C, as_json):
    """Forced intersection form of indefinite Stein fillings."""
    main_group = type_ is not None or h is not None
    contact_group = contact_d is not None or tower is not None
    if main_group == contact_group:
        raise click.UsageError("give exactly one of (--type, --h) or (--contact-d, --tower)")
    if main_group and (type_ is None or h is None):
        raise click.UsageError("--type and --h go together")
    if contact_group and (contact_d is None or tower is None):
        raise click.UsageError("--contact-d and --tower go together")

    if main_group:
        inp = {"type": type_, "h": _fmt(h)}
        head = f"input: type={type_} h={_fmt(h)}"
    else:
        inp = {"contact_d": _fmt(contact_d), "tower": tower, "j_invariant": not not_j_invariant}
        head = f"input: contact d={_fmt(contact_d)} tower={tower}"
    if C is not None:
        inp["C"] = _fmt(C)
    try:
        if main_group:
            fc = theorem_main(h, TypeClass(type_))
        else:
            fc = theorem_contact(ContactClass(contact_d, TowerName(tower), not not_j_invariant))
    except HypothesisError as exc:
        return _fail("obstruct", inp, str(exc), as_json, EXIT_HYPOTHESIS)
    eb = euler_bounds(fc, C) if C is not None else None
    report = {
        "command": "obstruct",
        "input": inp,
        "verdict": fc.to_dict(),
        "euler": None if eb is None else eb.to_dict(),
    }
    _emit(report, as_json, [head] + _verdict_lines(fc) + _euler_lines(eb))
    return EXIT_OK


@cli.group()
@click.option("--file", "path", type=click.Path(dir_okay=False), envvar="PIN2FILL_CATALOG",
              help="Extra catalog file (default: $PIN2FILL_CATALOG).")
@click.pass_context
def catalog(ctx, path):
    """Built-in and user-supplied manifold records."""
    entries = cat.builtin()
    if path:
        try:
            extra = cat.load(path)
        except (OSError, cat.CatalogError) as exc:
            raise click.UsageError(str(exc))
        names = {e.name for e in extra}
        entries = [e for e in entries if e.name not in names] + extra
    ctx.obj = entries


def _lookup(ctx, name, as_json, command):
    entry = cat.find(ctx.obj, name)
    if entry is None:
        _fail(command, {"name": name}, f"unknown manifold {name!r}", as_json, EXIT_NOT_FOUND)
    return entry


@catalog.command("list")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def catalog_list(ctx, as_json):
    entries = ctx.obj
    lines = [f"{e.name:<20} h={_fmt(e.h):<6} type={e.type or '-':<3} rank={e.reduced_rank}" for e in entries]
    report = {"command": "catalog list", "entries": [cat.entry_to_dict(e) for e in entries]}
    _emit(report, as_json, lines)
    return EXIT_OK


@catalog.command("show", context_settings={"ignore_unknown_options": True})
@click.argument("name")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def catalog_show(ctx, name, as_json):
    e = _lookup(ctx, name, as_json, "catalog show")
    if e is None:
        return EXIT_NOT_FOUND
    d = cat.entry_to_dict(e)
    lines = [f"name: {e.name}", f"h: {d['h']}", f"reduced_rank: {e.reduced_rank}", f"type: {e.type or 'none'}"]
    if e.contact is None:
        lines.append("contact: none")
    else:
        c = d["contact"]
        lines.append(f"contact: d={c['d']} tower={c['tower']} j_invariant={str(c['j_invariant']).lower()}")
    if e.notes:
        lines.append(f"notes: {e.notes}")
    _emit({"command": "catalog show", "entries": [d]}, as_json, lines)
    return EXIT_OK


@catalog.command("run", context_settings={"ignore_unknown_options": True})
@click.argument("name")
@click.option("--C", "C", type=RATIONAL)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def catalog_run(ctx, name, C, as_json):
    e = _lookup(ctx, name, as_json, "catalog run")
    if e is None:
        return EXIT_NOT_FOUND
    inp = {"name": name}
    try:
        if e.type is not None:
            fc = theorem_main(e.h, e.type)
            how = f"rank one, type={e.type} h={_fmt(e.h)}"
        elif e.contact is not None:
            fc = theorem_contact(e.contact)
            how = f"contact d={_fmt(e.contact.d)} tower={e.contact.tower}"
        else:
            raise HypothesisError(f"{name}: neither a Type nor contact data is recorded")
    except HypothesisError as exc:
        return _fail("catalog run", inp, str(exc), as_json, EXIT_HYPOTHESIS)
    eb = euler_bounds(fc, C) if C is not None else None
    report = {
        "command": "catalog run",
        "input": inp,
        "verdict": fc.to_dict(),
        "euler": None if eb is None else eb.to_dict(),
    }
    _emit(report, as_json, [f"{name}: {how}"] + _verdict_lines(fc) + _euler_lines(eb))
    return EXIT_OK


@cli.command()
@click.option("--model", required=True, type=click.Choice(["s3", "rank-one", "y4k1"]))
@click.option("--type", "type_", type=click.Choice(["I", "II"]))
@click.option("--h", "h", type=RATIONAL)
@click.option("--k", "k", type=int)
@click.option("--window", "window", required=True, help="LO:HI")
@click.option("--guard", type=int, default=4, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def gysin(model, type_, h, k, window, guard, as_json):
    """Dimension table and exactness checks of a Gysin triangle."""
    try:
        w = Window.parse(window, guard)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"bad --window: {exc}")
    try:
        if model == "s3":
            m = build_s3(w)
        elif model == "rank-one":
            if type_ is None or h is None:
                raise click.UsageError("--model rank-one needs --type and --h")
            m = build_rank_one(h, TypeClass(type_), w)
        else:
            if k is None:
                raise click.UsageError("--model y4k1 needs --k")
            m = build_y4k1(k, w)
    except (StructuralError, ValueError) as exc:
        raise click.UsageError(str(exc))

    rep = verify_model(m)
    rows = ladder(m)
    flavor = m.gysin.flavor
    table = [{"grading": _fmt(g), "hs": a, "hm": b} for g, a, b, _ in rows]
    failures = [{"check": r.check, "grading": _fmt(r.grading)} for r in rep.results if not r.ok]
    report = {
        "command": "gysin",
        "input": {"model": model, "type": type_, "h": None if h is None else _fmt(h), "k": k,
                  "window": window, "guard": guard},
        "model": m.name,
        "flavor": flavor,
        "table": table,
        "verification": {"ok": rep.ok, "skipped": rep.skipped, "checks": rep.summary(), "failures": failures},
    }
    dot = lambda n: "·" if n == 0 else str(n)  # noqa: E731
    lines = [f"model: {m.name} ({flavor} flavor), window [{_fmt(m.window.lo)}, {_fmt(m.window.hi)}], guard {guard}",
             f"{'grading':>8}  {'HS':>3} {'HM':>3} {'HS':>3}"]
    lines += [f"{_fmt(g):>8}  {dot(a):>3} {dot(b):>3} {dot(c):>3}" for g, a, b, c in rows]
    npass = sum(r.ok for r in rep.results)
    lines.append(f"checks: {npass} passed, {len(rep.results) - npass} failed, {rep.skipped} in guard band")
    for name, counts in rep.summary().items():
        lines.append(f"  {name}: {counts['passed']} passed, {counts['failed']} failed")
    lines += [f"  FAILED {f['check']} at {f['grading']}" for f in failures]
    _emit(report, as_json, lines)
    return EXIT_OK if rep.ok else EXIT_HYPOTHESIS


@cli.command()
@click.option("--b2plus", required=True, type=click.IntRange(min=0))
@click.option("--b2minus", required=True, type=click.IntRange(min=0))
@click.option("--json", "as_json", is_flag=True)
def cobmap(b2plus, b2minus, as_json):
    """Induced map on HS-bar of a spin cobordism with b1 = 0."""
    c = CobordismData(b2plus, b2minus)
    f = hs_bar_map(c)
    if isinstance(f, Mono):
        bar = {"kind": "mono", "qpow": f.qpow, "degree": _fmt(f.degree)}
        text = f"bar map: {f}"
    else:
        bar = {"kind": "zero", "qpow": None, "degree": None}
        text = "bar map: Zero"
    report = {"command": "cobmap", "input": {"b2plus": b2plus, "b2minus": b2minus},
              "grading_shift": _fmt(grading_shift(c)), "bar_map": bar}
    _emit(report, as_json, [f"input: b2+ = {b2plus}, b2- = {b2minus}", text])
    return EXIT_OK


@cli.command()
@click.option("--b2plus", required=True, type=click.IntRange(min=0))
@click.option("--b2minus", required=True, type=click.IntRange(min=0))
@click.option("--json", "as_json", is_flag=True)
def lattice(b2plus, b2minus, as_json):
    """Even unimodular lattice with the given b2+ and b2-."""
    inp = {"b2plus": b2plus, "b2minus": b2minus}
    try:
        form = classify_even_indefinite(b2plus, b2minus)
    except ClassificationError as exc:
        return _fail("lattice", inp, str(exc), as_json, EXIT_HYPOTHESIS)
    inv = invariants(gram(form))
    report = {
        "command": "lattice",
        "input": inp,
        "lattice": _lattice_dict(form),
        "invariants": {"rank": inv.rank, "signature": inv.signature, "even": inv.even, "det": inv.det},
    }
    lines = [_lattice_line(form),
             f"rank {inv.rank}, signature {inv.signature}, {'even' if inv.even else 'odd'}, det {inv.det}"]
    _emit(report, as_json, lines)
    return EXIT_OK


def main(argv=None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="pin2fill", standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        return 1
    return rv if isinstance(rv, int) else EXIT_OK


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
