"""Semiregularity and regularity of group actions before and after one or
two barycentric subdivisions."""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from itertools import combinations

from simpconf import (
    action_from_generators,
    barycentric_subdivision,
    build_from_facets,
    fat_diagonal,
    induced_action,
    is_regular,
    is_semiregular,
    ordered_power,
    simplicial_difference,
    symmetric_group_action,
)


@dataclass
class SurveyConfig:
    subdivisions: int = 2
    max_simplices: int = 20000  # skip subdivisions beyond this size


def actions():
    circle = build_from_facets([0, 1, 2], [[0, 1], [0, 2], [1, 2]])
    square = build_from_facets([0, 1, 2, 3], [[0, 1], [1, 2], [2, 3], [0, 3]])
    octa = build_from_facets(range(6), [[a, b, c] for a in (0, 1) for b in (2, 3) for c in (4, 5)])
    tetra = build_from_facets(range(4), [list(c) for c in combinations(range(4), 3)])
    yield "C3 on circle", action_from_generators(circle, [{0: 1, 1: 2, 2: 0}])
    yield "D4 on square", action_from_generators(square, [{0: 1, 1: 2, 2: 3, 3: 0}, {1: 3, 3: 1}])
    yield "antipode on octahedron", action_from_generators(
        octa, [{0: 1, 1: 0, 2: 3, 3: 2, 4: 5, 5: 4}])
    yield "A4 on tetrahedron boundary", action_from_generators(
        tetra, [{0: 1, 1: 2, 2: 0}, {0: 1, 1: 0, 2: 3, 3: 2}])
    for n in (2, 3):
        P = ordered_power(circle, n)
        S = symmetric_group_action(circle, n, P)
        yield f"S{n} on circle^{n}", S
        C = simplicial_difference(P, fat_diagonal(circle, n, P))
        yield f"S{n} on C(circle,{n})", induced_action(S, C, "difference")


def survey(cfg: SurveyConfig):
    for name, act in actions():
        cells = [f"semireg={is_semiregular(act)!s:<5}", f"reg={is_regular(act)!s:<5}"]
        cur = act
        for k in range(1, cfg.subdivisions + 1):
            B = barycentric_subdivision(cur.complex)
            if len(B) > cfg.max_simplices:
                cells.append(f"bs^{k}: skipped ({len(B)} simplices)")
                break
            cur = induced_action(cur, B, "bs")
            cells.append(f"bs^{k} reg={is_regular(cur)}")
        yield name, cells


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--subdivisions", type=int, default=SurveyConfig.subdivisions)
    ap.add_argument("--max-simplices", type=int, default=SurveyConfig.max_simplices)
    args = ap.parse_args()
    cfg = SurveyConfig(args.subdivisions, args.max_simplices)
    for name, cells in survey(cfg):
        print(f"{name:<28}" + "  ".join(cells))


if __name__ == "__main__":
    main()
