"""Nerves of the minimal-non-face cover and of covers by subcomplexes."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .complex import (
    ComplexError,
    SimplicialComplex,
    is_subcomplex,
    minimal_nonfaces,
)
from .constructions import bs_vertex_order, simplicial_difference
from .labels import VertexLabel, atom, bary


@dataclass(frozen=True)
class CoverIndex:
    """Index set of a cover: one label per member plus what generated it."""

    labels: tuple[VertexLabel, ...]
    sources: tuple[Any, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ComplexError("cover indices must be distinct")


def open_star_cover(X: SimplicialComplex, A: SimplicialComplex) -> CoverIndex:
    """Index the open stars U_s of the minimal non-faces s of A in X."""
    mins = minimal_nonfaces(X, A)
    return CoverIndex(tuple(bary(s) for s in mins), tuple(frozenset(s) for s in mins))


def stars_intersect(X: SimplicialComplex, simplices: Sequence[frozenset]) -> bool:
    """The open stars of the given simplices meet iff their union is a simplex."""
    return frozenset().union(*simplices) in X.faces


def minimal_nonface_nerve(X: SimplicialComplex, A: SimplicialComplex) -> SimplicialComplex:
    """Nerve of the open-star cover of |X| - |A|, built by growing cliques.

    A set of minimal non-faces spans a simplex iff their union lies in X.
    """
    cover = open_star_cover(X, A)
    source = dict(zip(cover.labels, cover.sources))
    items = [(lab, source[lab]) for lab in bs_vertex_order(cover.labels)]
    n = len(items)
    faces = set()
    frontier = [((i,), items[i][1]) for i in range(n)]
    while frontier:
        nxt = []
        for idx, union in frontier:
            faces.add(frozenset(items[i][0] for i in idx))
            for j in range(idx[-1] + 1, n):
                u = union | items[j][1]
                if u in X.faces:
                    nxt.append((idx + (j,), u))
        frontier = nxt
    return SimplicialComplex([lab for lab, _ in items], faces, check=False)


def nerve_of_subcomplex_cover(K: SimplicialComplex, parts: Sequence[SimplicialComplex],
                              names: Sequence[Any] | None = None) -> SimplicialComplex:
    """Nerve of a cover of K by subcomplexes.

    Indices span a simplex iff the parts share a simplex, i.e. a common
    vertex. Nerve vertices are atoms named by ``names`` (default 0, 1, ...).
    """
    labels = [atom(x) for x in (names if names is not None else range(len(parts)))]
    if len(set(labels)) != len(labels):
        raise ComplexError("cover indices must be distinct")
    covered = set()
    for i, part in enumerate(parts):
        if not is_subcomplex(K, part):
            raise ComplexError(f"cover member {labels[i]} is not a subcomplex")
        covered |= part.faces
    if covered != K.faces:
        missing = next(iter(K.faces - covered))
        raise ComplexError("cover misses the simplex {"
                           + ",".join(map(str, K.sort_simplex(missing))) + "}")
    vsets = [frozenset(p.vertices) for p in parts]
    faces = set()
    frontier = [((i,), vsets[i]) for i in range(len(parts)) if vsets[i]]
    while frontier:
        nxt = []
        for idx, common in frontier:
            faces.add(frozenset(labels[i] for i in idx))
            for j in range(idx[-1] + 1, len(parts)):
                c = common & vsets[j]
                if c:
                    nxt.append((idx + (j,), c))
        frontier = nxt
    used = {v for f in faces for v in f}
    return SimplicialComplex([v for v in labels if v in used], faces, check=False)


def nerve_matches_difference(X: SimplicialComplex, A: SimplicialComplex) -> bool:
    N = minimal_nonface_nerve(X, A)
    D = simplicial_difference(X, A)
    return N == D and N.vertices == D.vertices
