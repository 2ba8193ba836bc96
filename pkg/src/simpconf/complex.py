"""Finite abstract simplicial complexes with a linear vertex order."""
from __future__ import annotations

from itertools import combinations
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

from .labels import VertexLabel, as_label, sort_key

Simplex = tuple  # tuple[VertexLabel, ...], sorted by the owning complex's vertex order


class ComplexError(ValueError):
    pass


class NotASubcomplexError(ComplexError):
    pass


class SimplicialComplex:
    """Immutable simplicial complex storing its full, closed simplex family.

    ``vertices`` fixes the linear order used for orientation and for
    normalizing simplices. Equality compares vertex sets and simplex
    families, not the order; use ``vertices`` to compare orders.
    """

    __slots__ = ("vertices", "_index", "_faces", "_by_dim")

    def __init__(self, vertices: Iterable[Any], simplices: Iterable[Iterable[Any]] = (),
                 *, check: bool = True):
        verts = tuple(as_label(v) for v in vertices)
        index = {v: i for i, v in enumerate(verts)}
        if len(index) != len(verts):
            dup = next(v for v in verts if verts.count(v) > 1)
            raise ComplexError(f"duplicate vertex {dup} in vertex order")
        faces = {frozenset((v,)) for v in verts}
        for s in simplices:
            fs = frozenset(as_label(x) for x in s)
            if not fs:
                continue
            faces.add(fs)
        if check:
            for fs in faces:
                for v in fs:
                    if v not in index:
                        raise ComplexError(f"simplex uses unknown vertex {v}")
                if len(fs) > 1:
                    for v in fs:
                        if fs - {v} not in faces:
                            missing = sorted(fs - {v}, key=index.__getitem__)
                            raise ComplexError(
                                "simplex family is not closed: missing "
                                + "{" + ",".join(map(str, missing)) + "}")
        by_dim: dict[int, list[tuple]] = {}
        for fs in faces:
            by_dim.setdefault(len(fs) - 1, []).append(tuple(sorted(fs, key=index.__getitem__)))
        for k, lst in by_dim.items():
            lst.sort(key=lambda s: tuple(index[v] for v in s))
        self.vertices = verts
        self._index = index
        self._faces = frozenset(faces)
        self._by_dim = {k: tuple(v) for k, v in by_dim.items()}

    # -- basic queries -------------------------------------------------
    @property
    def dim(self) -> int:
        return max(self._by_dim, default=-1)

    @property
    def faces(self) -> frozenset:
        """All simplices as frozensets of labels."""
        return self._faces

    def index(self, v: VertexLabel) -> int:
        return self._index[v]

    def has_vertex(self, v: Any) -> bool:
        return as_label(v) in self._index

    def simplices(self, k: int | None = None) -> tuple[Simplex, ...] | list[Simplex]:
        if k is None:
            return [s for d in range(self.dim + 1) for s in self._by_dim[d]]
        return self._by_dim.get(k, ())

    def __iter__(self) -> Iterator[Simplex]:
        for d in range(self.dim + 1):
            yield from self._by_dim[d]

    def __len__(self) -> int:
        return len(self._faces)

    def __contains__(self, s: Iterable[Any]) -> bool:
        return frozenset(as_label(x) for x in s) in self._faces

    def facets(self) -> list[Simplex]:
        covered = {fs - {v} for fs in self._faces if len(fs) > 1 for v in fs}
        return [s for d in range(self.dim, -1, -1) for s in self._by_dim[d]
                if frozenset(s) not in covered]

    def sort_simplex(self, s: Iterable[Any]) -> Simplex:
        return tuple(sorted((as_label(x) for x in s), key=self._index.__getitem__))

    def is_empty(self) -> bool:
        return not self.vertices

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._faces == other._faces and set(self.vertices) == set(other.vertices)

    def __hash__(self):
        return hash(self._faces)

    def __repr__(self):
        return f"SimplicialComplex(f={f_vector(self)})"


def build_from_facets(vertex_order: Sequence[Any], facets: Iterable[Iterable[Any]]) -> SimplicialComplex:
    """Close ``facets`` downward and add every listed vertex as a 0-simplex."""
    verts = [as_label(v) for v in vertex_order]
    known = set(verts)
    if len(known) != len(verts):
        dup = next(v for v in verts if verts.count(v) > 1)
        raise ComplexError(f"duplicate vertex {dup} in vertex order")
    closed: set[frozenset] = set()
    for facet in facets:
        labels = [as_label(x) for x in facet]
        fs = frozenset(labels)
        if len(fs) != len(labels):
            raise ComplexError(f"facet {[str(x) for x in labels]} repeats a vertex")
        for v in labels:
            if v not in known:
                raise ComplexError(f"facet uses unknown vertex {v}")
        if fs in closed:
            continue
        members = sorted(fs, key=sort_key)
        for r in range(1, len(members) + 1):
            closed.update(frozenset(c) for c in combinations(members, r))
    return SimplicialComplex(verts, closed, check=False)


def closure(simplices: Iterable[Iterable[Any]]) -> set[frozenset]:
    out: set[frozenset] = set()
    for s in simplices:
        fs = frozenset(s)
        if fs in out:
            continue
        members = list(fs)
        for r in range(1, len(members) + 1):
            out.update(frozenset(c) for c in combinations(members, r))
    return out


def empty_complex() -> SimplicialComplex:
    return SimplicialComplex((), ())


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    return tuple(len(K.simplices(k)) for k in range(K.dim + 1))


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** (len(s) - 1) for s in K.faces)


def contains_simplex(K: SimplicialComplex, s: Iterable[Any]) -> bool:
    return s in K


def induced_subcomplex(K: SimplicialComplex, W: Iterable[Any]) -> SimplicialComplex:
    """All simplices of K spanned by vertices in W."""
    keep = {as_label(w) for w in W}
    for w in keep:
        if not K.has_vertex(w):
            raise ComplexError(f"unknown vertex {w}")
    verts = [v for v in K.vertices if v in keep]
    return SimplicialComplex(verts, (s for s in K.faces if s <= keep), check=False)


def subcomplex_from_simplices(K: SimplicialComplex, simplices: Iterable[frozenset]) -> SimplicialComplex:
    """Subcomplex of K with the given (already closed) simplex family, order inherited."""
    faces = set(simplices)
    used = {v for s in faces for v in s}
    return SimplicialComplex([v for v in K.vertices if v in used], faces, check=False)


def is_subcomplex(K: SimplicialComplex, A: SimplicialComplex) -> bool:
    return A.faces <= K.faces


def _require_subcomplex(K: SimplicialComplex, A: SimplicialComplex) -> None:
    if not is_subcomplex(K, A):
        bad = next(s for s in A if frozenset(s) not in K.faces)
        raise NotASubcomplexError(
            "not a subcomplex: {" + ",".join(map(str, bad)) + "} is missing from the ambient complex")


def is_full_subcomplex(K: SimplicialComplex, A: SimplicialComplex) -> bool:
    _require_subcomplex(K, A)
    va = set(A.vertices)
    return all(s in A.faces for s in K.faces if s <= va)


def minimal_nonfaces(K: SimplicialComplex, A: SimplicialComplex) -> list[Simplex]:
    """Simplices of K outside A whose proper faces all lie in A."""
    _require_subcomplex(K, A)
    out = []
    for s in K:
        fs = frozenset(s)
        if fs in A.faces:
            continue
        if len(fs) == 1 or all(fs - {v} in A.faces for v in fs):
            out.append(s)
    return out


def relabel(K: SimplicialComplex, mapping: Mapping[VertexLabel, VertexLabel] | Callable) -> SimplicialComplex:
    """Rename vertices by an injective map, keeping the vertex order."""
    f = mapping if callable(mapping) else mapping.__getitem__
    new = {v: as_label(f(v)) for v in K.vertices}
    if len(set(new.values())) != len(new):
        raise ComplexError("relabeling is not injective")
    return SimplicialComplex([new[v] for v in K.vertices],
                             (frozenset(new[v] for v in s) for s in K.faces), check=False)


def is_closed(K: SimplicialComplex) -> bool:
    """Re-verify closure from the stored family (used by tests)."""
    return all(fs - {v} in K.faces for fs in K.faces if len(fs) > 1 for v in fs)
