"""Ordered powers, fat diagonals, barycentric subdivision, simplicial
difference, complement models and the configuration-space models."""
from __future__ import annotations

import warnings
from itertools import combinations, product
from typing import Any, Iterable, Sequence

from .complex import (
    ComplexError,
    SimplicialComplex,
    _require_subcomplex,
    closure,
    induced_subcomplex,
    is_full_subcomplex,
    minimal_nonfaces,
    relabel,
)
from .labels import BARY, TUPLE, VertexLabel, as_label, bary, sort_key, tup


class NotFullWarning(UserWarning):
    """complement_model was asked for a non-full subcomplex."""


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ComplexError(f"number of factors must be a positive integer, got {n!r}")


def _staircases(chains: Sequence[Sequence[int]]):
    """Maximal chains in a product of finite chains, as column lists.

    Each step advances exactly one coordinate, so every path from the
    bottom corner to the top corner is one staircase.
    """
    n = len(chains)
    pos = [0] * n
    path = [tuple(c[0] for c in chains)]

    def rec():
        moved = False
        for i in range(n):
            if pos[i] + 1 < len(chains[i]):
                moved = True
                pos[i] += 1
                path.append(tuple(chains[j][pos[j]] for j in range(n)))
                yield from rec()
                path.pop()
                pos[i] -= 1
        if not moved:
            yield tuple(path)

    yield from rec()


def ordered_power(X: SimplicialComplex, n: int) -> SimplicialComplex:
    """Order-product triangulation of the n-fold power of X.

    Vertices are n-tuples (lexicographic in X's order). A vertex set is a
    simplex iff its columns can be ordered so that every row is
    non-decreasing and spans a simplex of X.
    """
    _check_n(n)
    idx_facets = [tuple(X.index(v) for v in f) for f in X.facets()]
    verts = list(product(range(len(X.vertices)), repeat=n))
    labels = {t: tup(X.vertices[i] for i in t) for t in verts}
    maximal = set()
    for combo in product(idx_facets, repeat=n):
        for stair in _staircases(combo):
            maximal.add(frozenset(stair))
    faces = closure(maximal)
    return SimplicialComplex([labels[t] for t in verts],
                             (frozenset(labels[c] for c in s) for s in faces), check=False)


def _coords(X: SimplicialComplex, col: Any, n: int) -> tuple[int, ...]:
    lab = as_label(col)
    if lab.kind != TUPLE or len(lab.value) != n:
        raise ComplexError(f"{lab} is not an {n}-tuple")
    try:
        return tuple(X.index(v) for v in lab.value)
    except KeyError as exc:
        raise ComplexError(f"{lab} has a coordinate outside the base complex") from exc


def is_power_simplex(X: SimplicialComplex, n: int, columns: Iterable[Any]) -> bool:
    """Direct membership test for ordered_power(X, n).

    If any column order makes all rows non-decreasing, the lexicographic
    order does, so only that order is tried.
    """
    _check_n(n)
    cols = [_coords(X, c, n) for c in columns]
    if not cols or len(set(cols)) != len(cols):
        return False
    cols.sort()
    for i in range(n):
        row = [c[i] for c in cols]
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if {X.vertices[j] for j in row} not in X:
            return False
    return True


def _has_equal_rows(s: Iterable[VertexLabel], n: int) -> bool:
    cols = [c.value for c in s]
    return any(all(c[i] == c[j] for c in cols) for i, j in combinations(range(n), 2))


def fat_diagonal(X: SimplicialComplex, n: int, power: SimplicialComplex | None = None) -> SimplicialComplex:
    """Subcomplex of X^n of simplices having two identical rows."""
    _check_n(n)
    P = ordered_power(X, n) if power is None else power
    faces = {s for s in P.faces if _has_equal_rows(s, n)}
    used = {v for s in faces for v in s}
    return SimplicialComplex([v for v in P.vertices if v in used], faces, check=False)


def bs_vertex_order(labels: Iterable[VertexLabel]) -> list[VertexLabel]:
    """Barycenters by dimension of the underlying simplex, then canonically."""
    return sorted(labels, key=lambda b: (len(b.value), sort_key(b)))


def barycentric_subdivision(X: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the face poset of X; one Bary vertex per simplex."""
    label = {fs: bary(fs) for fs in X.faces}
    memo: dict[frozenset, list[tuple]] = {}

    def chains(fs):
        # strictly decreasing chains starting at fs
        if fs in memo:
            return memo[fs]
        out = [(fs,)]
        members = list(fs)
        for r in range(1, len(members)):
            for sub in combinations(members, r):
                out.extend((fs,) + c for c in chains(frozenset(sub)))
        memo[fs] = out
        return out

    faces = set()
    for fs in X.faces:
        for c in chains(fs):
            faces.add(frozenset(label[x] for x in c))
    return SimplicialComplex(bs_vertex_order(label.values()), faces, check=False)


def simplicial_difference(X: SimplicialComplex, A: SimplicialComplex) -> SimplicialComplex:
    """X minus A: vertices are the minimal non-faces of A in X; a set of
    them is a simplex iff their union is a simplex of X."""
    mins = [frozenset(m) for m in minimal_nonfaces(X, A)]
    label = {m: bary(m) for m in mins}
    # a union lies in X iff it lies in some facet, so the maximal simplices
    # are the sets of minimal non-faces inside each facet
    groups = set()
    for f in X.facets():
        fs = frozenset(f)
        g = frozenset(label[m] for m in mins if m <= fs)
        if g:
            groups.add(g)
    return SimplicialComplex(bs_vertex_order(label.values()), closure(groups), check=False)


def complement_model(X: SimplicialComplex, A: SimplicialComplex) -> SimplicialComplex:
    """Subcomplex of X spanned by the vertices not in A.

    Emits NotFullWarning when A is not full in X; the result is still
    computed.
    """
    if not is_full_subcomplex(X, A):
        warnings.warn("subcomplex is not full; the complement model need not "
                      "be a deformation retract of the complement", NotFullWarning, stacklevel=2)
    va = set(A.vertices)
    return induced_subcomplex(X, [v for v in X.vertices if v not in va])


def conf_model(X: SimplicialComplex, n: int) -> SimplicialComplex:
    """Simplicial difference of X^n and its fat diagonal."""
    P = ordered_power(X, n)
    return simplicial_difference(P, fat_diagonal(X, n, power=P))


def conf_model_bs(X: SimplicialComplex, n: int) -> SimplicialComplex:
    """Complement of bs(F_n) in bs(X^n)."""
    P = ordered_power(X, n)
    F = fat_diagonal(X, n, power=P)
    return complement_model(barycentric_subdivision(P), barycentric_subdivision(F))


def unwrap_vertex_barycenters(K: SimplicialComplex) -> SimplicialComplex:
    """Relabel Bary({v}) to v; every vertex must be such a barycenter."""
    def f(b: VertexLabel) -> VertexLabel:
        if b.kind != BARY or len(b.value) != 1:
            raise ComplexError(f"{b} is not the barycenter of a vertex")
        return b.value[0]
    return relabel(K, f)


def power_matrix(columns: Iterable[Any]) -> list[list[VertexLabel]]:
    """Rows of the n x k matrix whose columns are the given tuples, in lex order."""
    cols = sorted((as_label(c) for c in columns), key=sort_key)
    n = len(cols[0].value)
    return [[c.value[i] for c in cols] for i in range(n)]
