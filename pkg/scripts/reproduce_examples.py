"""Run every built-in catalog entry through the matching theorem and print the verdicts."""

import argparse
from dataclasses import dataclass

from pin2fill.catalog import builtin, format_rational
from pin2fill.obstruct import theorem_contact, theorem_main


@dataclass
class Config:
    show_notes: bool = False


def main(cfg: Config) -> None:
    print(f"{'manifold':<16} {'h':>5} {'input':<14} {'b2+':>3} {'b2-':>4}  lattice")
    for e in builtin():
        if e.type is not None:
            fc, how = theorem_main(e.h, e.type), f"type {e.type}"
        else:
            fc, how = theorem_contact(e.contact), f"d={format_rational(e.contact.d)} {e.contact.tower}"
        lat = fc.lattice.name if fc.lattice is not None else "-"
        print(f"{e.name:<16} {format_rational(e.h):>5} {how:<14} {fc.b2plus!s:>3} {fc.b2minus!s:>4}  {lat}")
        if cfg.show_notes and (e.notes or fc.note):
            print(f"{'':<16} {e.notes} {fc.note}".rstrip())


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--show-notes", action="store_true")
    main(Config(**vars(ap.parse_args())))
