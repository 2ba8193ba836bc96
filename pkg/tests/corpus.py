"""Shared test corpus: small complexes, their subcomplexes, and actions."""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

from simpconf.actions import (
    action_from_generators,
    induced_action,
    symmetric_group_action,
)
from simpconf.complex import SimplicialComplex, build_from_facets
from simpconf.constructions import fat_diagonal, ordered_power, simplicial_difference


def boundary_triangle(order=(0, 1, 2)):
    a, b, c = order
    return build_from_facets(order, [[a, b], [a, c], [b, c]])


def triangle():
    return build_from_facets([0, 1, 2], [[0, 1, 2]])


def sd_triangle():
    """Triangle coned from an interior vertex c onto its boundary."""
    return build_from_facets([0, 1, 2, "c"], [[0, 1, "c"], [0, 2, "c"], [1, 2, "c"]])


def rp2():
    return build_from_facets(range(1, 7), [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6]])


NAMED = {
    "point": lambda: build_from_facets([0], []),
    "edge": lambda: build_from_facets([0, 1], [[0, 1]]),
    "two_points": lambda: build_from_facets([0, 1], []),
    "path3": lambda: build_from_facets([0, 1, 2, 3], [[0, 1], [1, 2], [2, 3]]),
    "circle3": boundary_triangle,
    "triangle": triangle,
    "sd_triangle": sd_triangle,
    "square": lambda: build_from_facets([0, 1, 2, 3], [[0, 1], [1, 2], [2, 3], [0, 3]]),
    "two_triangles": lambda: build_from_facets([0, 1, 2, 3], [[0, 1, 2], [1, 2, 3]]),
    "tetra_boundary": lambda: build_from_facets([0, 1, 2, 3], [list(c) for c in combinations(range(4), 3)]),
    "tetra": lambda: build_from_facets([0, 1, 2, 3], [[0, 1, 2, 3]]),
    "edge_plus_point": lambda: build_from_facets([0, 1, 2], [[0, 1]]),
    "bowtie": lambda: build_from_facets([0, 1, 2, 3, 4], [[0, 1, 2], [0, 3, 4]]),
    "octahedron": lambda: build_from_facets(range(6), [
        [a, b, c] for a in (0, 1) for b in (2, 3) for c in (4, 5)]),
    "rp2": rp2,
}


def named(name: str) -> SimplicialComplex:
    return NAMED[name]()


def subcomplexes(K: SimplicialComplex):
    """Every subcomplex of K (including the empty one), by backtracking."""
    simplices = [frozenset(s) for s in K]  # sorted by dimension
    out = []

    def rec(i, chosen):
        if i == len(simplices):
            out.append(frozenset(chosen))
            return
        s = simplices[i]
        rec(i + 1, chosen)
        if len(s) == 1 or all(s - {v} in chosen for v in s):
            chosen.add(s)
            rec(i + 1, chosen)
            chosen.discard(s)

    rec(0, set())
    return [_sub(K, faces) for faces in out]


def random_subcomplex(K: SimplicialComplex, rng: random.Random, p: float = 0.5):
    chosen = set()
    for s in K:
        fs = frozenset(s)
        if (len(fs) == 1 or all(fs - {v} in chosen for v in fs)) and rng.random() < p:
            chosen.add(fs)
    return _sub(K, chosen)


def random_complex(rng: random.Random, n: int) -> SimplicialComplex:
    """Complex on n vertices generated by up to n random facets of size 1 to 4."""
    facets = [rng.sample(range(n), rng.randint(1, 4)) for _ in range(rng.randint(1, n))]
    return build_from_facets(range(n), facets)


def _sub(K, faces):
    used = {v for s in faces for v in s}
    return SimplicialComplex([v for v in K.vertices if v in used], faces)


@lru_cache(maxsize=None)
def pair_corpus():
    """(name, X, A) pairs: all subcomplexes of the named complexes with at
    most 5 vertices, seeded samples for the 6-vertex ones, random complexes
    on 6 vertices with random subcomplexes, plus the worked examples."""
    pairs = []
    rng = random.Random(20240607)
    for name in NAMED:
        X = named(name)
        if len(X.vertices) <= 5:
            subs = subcomplexes(X)
        else:
            subs = [random_subcomplex(X, rng, p) for p in (0.3, 0.5, 0.7, 0.9) for _ in range(6)]
            subs.append(_sub(X, set()))
            subs.append(X)
        pairs.extend((name, X, A) for A in subs)
    for i in range(12):
        X = random_complex(rng, 6)
        pairs.extend((f"random{i}", X, random_subcomplex(X, rng, p)) for p in (0.3, 0.6, 0.9))
    X = boundary_triangle()
    P = ordered_power(X, 2)
    pairs.append(("power2", P, fat_diagonal(X, 2, P)))
    pairs.append(("triangle/boundary", triangle(), boundary_triangle()))
    pairs.append(("sd/boundary", sd_triangle(), boundary_triangle()))
    return tuple(pairs)


def action_corpus():
    """(name, action) pairs of small simplicial actions."""
    acts = []
    c3 = boundary_triangle()
    acts.append(("C3 on circle3", action_from_generators(c3, [{0: 1, 1: 2, 2: 0}])))
    t = triangle()
    acts.append(("S3 on triangle", action_from_generators(t, [{0: 1, 1: 0}, {1: 2, 2: 1}])))
    e = named("edge")
    acts.append(("flip on edge", action_from_generators(e, [{0: 1, 1: 0}])))
    p3 = named("path3")
    acts.append(("flip on path3", action_from_generators(p3, [{0: 3, 3: 0, 1: 2, 2: 1}])))
    sq = named("square")
    acts.append(("D4 on square", action_from_generators(sq, [{0: 1, 1: 2, 2: 3, 3: 0}, {1: 3, 3: 1}])))
    octa = named("octahedron")
    acts.append(("antipode on octahedron",
                 action_from_generators(octa, [{0: 1, 1: 0, 2: 3, 3: 2, 4: 5, 5: 4}])))
    for name in ("edge", "circle3", "triangle"):
        X = named(name)
        P = ordered_power(X, 2)
        S = symmetric_group_action(X, 2, P)
        if name != "triangle":  # its double subdivision has ~570k simplices
            acts.append((f"S2 on {name}^2", S))
        C = simplicial_difference(P, fat_diagonal(X, 2, P))
        acts.append((f"S2 on C({name},2)", induced_action(S, C, "difference")))
    return acts
