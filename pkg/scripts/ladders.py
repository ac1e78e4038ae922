"""Print the Gysin ladders of the four reference models side by side with their check counts."""

import argparse
from dataclasses import dataclass

from pin2fill.floer import TypeClass, build_rank_one, build_s3, build_y4k1, ladder, verify_model
from pin2fill.graded import Window


@dataclass
class Config:
    depth: int = 24
    k: int = 1


def show(model, top, bottom):
    rep = verify_model(model)
    print(f"{model.name}: {len(rep.results)} checks, {'all pass' if rep.ok else 'FAILURES'}")
    for g, a, b, c in ladder(model, bottom, top):
        cells = ["·" if x == 0 else "F" if x == 1 else "F" + "⊕F" * (x - 1) for x in (a, b, c)]
        print(f"  {str(g):>4}  {cells[0]:<6}{cells[1]:<6}{cells[2]}")


def main(cfg: Config) -> None:
    show(build_s3(Window(-cfg.depth - 1, -1)), 0, -4)
    show(build_rank_one(0, TypeClass.I, Window(-cfg.depth, 2)), 0, -5)
    show(build_rank_one(0, TypeClass.II, Window(-cfg.depth, 2)), -1, -5)
    show(build_y4k1(cfg.k, Window(-4, 4 * cfg.k + cfg.depth)), 4 * cfg.k + 4, 0)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=24)
    ap.add_argument("--k", type=int, default=1)
    main(Config(**vars(ap.parse_args())))
