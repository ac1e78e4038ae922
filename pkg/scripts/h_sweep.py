"""Sweep h over a grid of eighths and compare the theorem output with the model-level replay.

For each (h, Type) the script builds the rank-one model, replays the filling
argument (forced Q-power) and places the contact class of the reversed model.
Both must agree with the closed-form theorems.
"""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from pin2fill.floer import TypeClass, build_rank_one, reduced_contact_class, reverse, verify_model
from pin2fill.graded import Window
from pin2fill.obstruct import Scope, forced_qpower, theorem_contact, theorem_main


@dataclass
class Config:
    lo: int = -16  # in eighths
    hi: int = 16
    step: int = 4
    depth: int = 28


def main(cfg: Config) -> int:
    disagreements = 0
    print(f"{'h':>6} {'type':>4} {'q':>2} {'d':>5} {'tower':>6} {'b2+':>4} {'b2-':>4}  lattice          checks")
    for n in range(cfg.lo, cfg.hi + 1, cfg.step):
        h = Fraction(n, 8)
        for t in TypeClass:
            g0 = -2 * h
            m = build_rank_one(h, t, Window(g0 - cfg.depth, g0 + 2))
            q = forced_qpower(m)
            c = reduced_contact_class(reverse(m))
            fc = theorem_main(h, t)
            agree = fc == theorem_contact(c) and (fc.scope is not Scope.indefinite or fc.b2plus == q)
            ok = verify_model(m).ok and agree
            disagreements += not ok
            lat = str(fc.lattice) if fc.lattice else ("negative definite" if fc.b2plus is None else "-")
            print(f"{str(h):>6} {t.value:>4} {q:>2} {str(c.d):>5} {c.tower.value:>6} "
                  f"{fc.b2plus!s:>4} {fc.b2minus!s:>4}  {lat:<16} {'ok' if ok else 'MISMATCH'}")
    return disagreements


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in vars(Config()).items():
        ap.add_argument(f"--{k}", type=type(v), default=v)
    raise SystemExit(1 if main(Config(**vars(ap.parse_args()))) else 0)
