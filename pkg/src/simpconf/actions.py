"""Finite simplicial group actions: symmetric-group actions on powers,
induced actions on derived complexes, orbits, regularity and quotients."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Any, Callable, Iterable, Mapping, Sequence

from .complex import ComplexError, SimplicialComplex, Simplex
from .constructions import ordered_power
from .labels import BARY, TUPLE, VertexLabel, as_label, orbit, sort_key, tup

Perm = tuple  # tuple[int, ...]: vertex index i -> index perm[i]


class ActionError(ValueError):
    pass


class NotRegularError(ActionError):
    """Raised when a quotient is requested for a non-regular action."""

    def __init__(self, witness):
        self.witness = witness
        simplex, image = witness
        super().__init__(
            "action is not regular: {" + ",".join(map(str, simplex)) + "} and {"
            + ",".join(map(str, image)) + "} are vertexwise translates but not a single translate")


def _compose(g: Perm, h: Perm) -> Perm:
    """(g*h)(i) = g(h(i))."""
    return tuple(g[i] for i in h)


def _inverse(g: Perm) -> Perm:
    inv = [0] * len(g)
    for i, j in enumerate(g):
        inv[j] = i
    return tuple(inv)


@dataclass(frozen=True)
class SimplicialAction:
    """A finite group acting on a complex by simplicial vertex permutations.

    Elements are stored as index permutations of ``complex.vertices``;
    ``elements[0]`` is the identity.
    """

    complex: SimplicialComplex
    elements: tuple[Perm, ...]
    names: tuple[str, ...]

    def __post_init__(self):
        m = len(self.complex.vertices)
        ident = tuple(range(m))
        if not self.elements or self.elements[0] != ident:
            raise ActionError("first element must be the identity")
        if len(set(self.elements)) != len(self.elements):
            raise ActionError("repeated group element")
        if len(self.names) != len(self.elements):
            raise ActionError("one name per element required")
        elems = set(self.elements)
        for g in self.elements:
            if sorted(g) != list(range(m)):
                raise ActionError("element is not a permutation of the vertices")
        for g in self.elements:
            if _inverse(g) not in elems:
                raise ActionError("element list is not closed under inverses")
            for h in self.elements:
                if _compose(g, h) not in elems:
                    raise ActionError("element list is not closed under composition")
        for g, name in zip(self.elements, self.names):
            bad = _first_non_simplicial(self.complex, g)
            if bad is not None:
                raise ActionError(f"element {name} is not simplicial: image of "
                                  + "{" + ",".join(map(str, bad)) + "} is not a simplex")

    @property
    def order(self) -> int:
        return len(self.elements)

    def apply(self, g: int | Perm, v: Any) -> VertexLabel:
        """Image of the vertex v under the element g (index or permutation)."""
        perm = self.elements[g] if isinstance(g, int) else g
        K = self.complex
        return K.vertices[perm[K.index(as_label(v))]]

    def apply_simplex(self, g: int | Perm, s: Iterable[Any]) -> Simplex:
        perm = self.elements[g] if isinstance(g, int) else g
        K = self.complex
        return K.sort_simplex(K.vertices[perm[K.index(as_label(v))]] for v in s)

    def label_map(self, g: int) -> dict[VertexLabel, VertexLabel]:
        K = self.complex
        perm = self.elements[g]
        return {v: K.vertices[perm[i]] for i, v in enumerate(K.vertices)}

    def vertex_orbit(self, v: Any) -> frozenset:
        i = self.complex.index(as_label(v))
        return frozenset(self.complex.vertices[g[i]] for g in self.elements)


def _first_non_simplicial(K: SimplicialComplex, g: Perm):
    verts = K.vertices
    for fs in K.faces:
        if frozenset(verts[g[K.index(v)]] for v in fs) not in K.faces:
            return K.sort_simplex(fs)
    return None


def generate_group(generators: Sequence[Perm], degree: int,
                   names: Sequence[str] | None = None) -> tuple[list[Perm], list[str]]:
    """Close a set of permutations under composition; returns elements and words."""
    ident = tuple(range(degree))
    gen_names = list(names) if names is not None else [f"g{i}" for i in range(len(generators))]
    elements = [ident]
    words = ["e"]
    seen = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for gname, g in zip(gen_names, generators):
                gh = _compose(g, h)
                if gh not in seen:
                    seen[gh] = len(elements)
                    elements.append(gh)
                    base = words[seen[h]]
                    words.append(gname if base == "e" else f"{gname}*{base}")
                    nxt.append(gh)
        frontier = nxt
    return elements, words


def action_from_generators(K: SimplicialComplex,
                           generators: Iterable[Mapping[Any, Any]],
                           names: Sequence[str] | None = None) -> SimplicialAction:
    """Complete label-map generators to the full group they generate.

    Vertices missing from a map are fixed.
    """
    perms = []
    for gen in generators:
        m = {as_label(k): as_label(v) for k, v in gen.items()}
        for k, v in m.items():
            if not K.has_vertex(k) or not K.has_vertex(v):
                raise ActionError(f"generator maps {k} to {v}, outside the complex")
        perm = tuple(K.index(m.get(v, v)) for v in K.vertices)
        if len(set(perm)) != len(perm):
            raise ActionError("generator is not a bijection on the vertices")
        perms.append(perm)
    elements, words = generate_group(perms, len(K.vertices), names)
    return SimplicialAction(K, tuple(elements), tuple(words))


def trivial_action(K: SimplicialComplex) -> SimplicialAction:
    return SimplicialAction(K, (tuple(range(len(K.vertices))),), ("e",))


def _cycle_name(p: Sequence[int]) -> str:
    seen, cycles = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        c, j = [], i
        while j not in seen:
            seen.add(j)
            c.append(j + 1)
            j = p[j]
        cycles.append("(" + " ".join(map(str, c)) + ")")
    return "".join(cycles) or "e"


def symmetric_group_action(X: SimplicialComplex, n: int,
                           power: SimplicialComplex | None = None) -> SimplicialAction:
    """All n! coordinate permutations acting on ordered_power(X, n).

    The permutation p sends (v_1, ..., v_n) to (v_p(1), ..., v_p(n)).
    """
    P = ordered_power(X, n) if power is None else power
    perms = sorted(permutations(range(n)))  # identity first
    elements, names = [], []
    for p in perms:
        g = tuple(P.index(tup(v.value[p[i]] for i in range(n))) for v in P.vertices)
        elements.append(g)
        names.append(_cycle_name(p))
    return SimplicialAction(P, tuple(elements), tuple(names))


def _derived_image(kind: str, parent_map: Callable[[VertexLabel], VertexLabel], v: VertexLabel) -> VertexLabel:
    if kind in ("bs", "difference", "nerve"):
        if v.kind != BARY:
            raise ActionError(f"{v} is not a barycenter label")
        return as_label({"bary": [parent_map(m) for m in v.value]})
    if kind == "power":
        if v.kind != TUPLE:
            raise ActionError(f"{v} is not a tuple label")
        return tup(parent_map(m) for m in v.value)
    if kind in ("induced-subcomplex", "subcomplex", "restriction"):
        return parent_map(v)
    raise ActionError(f"unknown derivation kind {kind!r}")


def induced_action(parent: SimplicialAction, derived: SimplicialComplex, kind: str) -> SimplicialAction:
    """Transport ``parent`` to a complex built from ``parent.complex``.

    ``kind`` is ``bs``, ``difference`` (also ``nerve``), ``induced-subcomplex``
    (any invariant subcomplex) or ``power`` (diagonal action on X^n).
    Barycenters map by g.Bary(s) = Bary(g.s).
    """
    base = parent.complex
    elements = []
    for gi in range(parent.order):
        gmap = parent.label_map(gi)

        def pm(v, gmap=gmap):
            try:
                return gmap[v]
            except KeyError as exc:
                raise ActionError(f"{v} is not a vertex of the parent complex") from exc

        img = []
        for v in derived.vertices:
            w = _derived_image(kind, pm, v)
            if not derived.has_vertex(w):
                raise ActionError(f"element {parent.names[gi]} sends {v} to {w}, "
                                  "which is not a vertex of the derived complex")
            img.append(derived.index(w))
        elements.append(tuple(img))
    if kind in ("bs", "difference", "nerve"):
        for v in derived.vertices:
            if frozenset(v.value) not in base.faces:
                raise ActionError(f"{v} is not the barycenter of a simplex of the parent complex")
    # the parent may have non-faithful images on the derived complex
    uniq, names = [], []
    seen = set()
    for g, name in zip(elements, parent.names):
        if g not in seen:
            seen.add(g)
            uniq.append(g)
            names.append(name)
    return SimplicialAction(derived, tuple(uniq), tuple(names))


def restrict_action(parent: SimplicialAction, sub: SimplicialComplex) -> SimplicialAction:
    return induced_action(parent, sub, "induced-subcomplex")


def is_invariant(act: SimplicialAction, A: SimplicialComplex) -> bool:
    """True iff every element maps the subcomplex A into itself."""
    return all(frozenset(act.apply(g, v) for v in s) in A.faces
               for g in range(act.order) for s in A.faces)


def orbit_partition(act: SimplicialAction, dim: int) -> list[list[Simplex]]:
    """The dim-simplices split into orbits; orbits sorted internally and by least element."""
    K = act.complex
    key = lambda s: tuple(K.index(v) for v in s)
    seen = set()
    orbits = []
    for s in K.simplices(dim):
        fs = frozenset(s)
        if fs in seen:
            continue
        members = {frozenset(act.apply_simplex(g, s)) for g in act.elements}
        seen |= members
        orbits.append(sorted((K.sort_simplex(m) for m in members), key=key))
    orbits.sort(key=lambda o: key(o[0]))
    return orbits


def is_semiregular(act: SimplicialAction) -> bool:
    """No edge joins two vertices of one orbit."""
    K = act.complex
    for u, v in K.simplices(1):
        i, j = K.index(u), K.index(v)
        if any(g[i] == j for g in act.elements):
            return False
    return True


def regularity_witness(act: SimplicialAction):
    """A pair (simplex, image) violating regularity, or None.

    For each simplex {v_0..v_d}, search vertexwise images w_i = g_i v_i
    that again form a simplex (collapsed images count) while no single g
    realizes all of them at once.
    """
    K = act.complex
    faces = K.faces
    verts = K.vertices
    elements = act.elements
    # images[i] maps a target index to the elements sending i there
    images: dict[int, dict[int, frozenset]] = {}

    def moves(i):
        if i not in images:
            d: dict[int, set] = {}
            for gi, g in enumerate(elements):
                d.setdefault(g[i], set()).add(gi)
            images[i] = {t: frozenset(s) for t, s in d.items()}
        return images[i]

    def search(idx, chosen, common):
        # chosen: image vertices so far; common: elements realizing all of them
        if len(chosen) == len(idx):
            return None
        for t, gs in moves(idx[len(chosen)]).items():
            path = chosen + [verts[t]]
            if frozenset(path) not in faces:
                continue
            c = common & gs
            if not c:
                return path
            found = search(idx, path, c)
            if found is not None:
                return found
        return None

    everything = frozenset(range(len(elements)))
    for d in range(1, K.dim + 1):
        for s in K.simplices(d):
            bad = search([K.index(v) for v in s], [], everything)
            if bad is not None:
                return tuple(s[:len(bad)]), tuple(bad)
    return None


def realizes_translate(act: SimplicialAction, simplex: Sequence[Any], image: Sequence[Any]) -> bool:
    """True iff a single element sends simplex[i] to image[i] for every i."""
    pairs = [(as_label(v), as_label(w)) for v, w in zip(simplex, image)]
    return any(all(act.apply(g, v) == w for v, w in pairs) for g in range(act.order))


def is_regular(act: SimplicialAction) -> bool:
    return regularity_witness(act) is None


@dataclass(frozen=True)
class IsotropySubgroup:
    simplex: Simplex
    elements: tuple[int, ...]  # indices into the parent action's element list


def isotropy_subgroup(act: SimplicialAction, s: Iterable[Any]) -> IsotropySubgroup:
    K = act.complex
    fs = frozenset(as_label(v) for v in s)
    if fs not in K.faces:
        raise ComplexError("{" + ",".join(map(str, fs)) + "} is not a simplex of the complex")
    stab = tuple(gi for gi in range(act.order)
                 if frozenset(act.apply(gi, v) for v in fs) == fs)
    return IsotropySubgroup(K.sort_simplex(fs), stab)


@dataclass(frozen=True)
class Quotient:
    complex: SimplicialComplex
    projection: dict  # vertex label -> Orbit label


def quotient_complex(act: SimplicialAction) -> Quotient:
    """Orbit complex of a regular action.

    Vertices are Orbit labels of vertex orbits; simplices are projections
    of simplices. Raises NotRegularError with a witness otherwise.
    """
    witness = regularity_witness(act)
    if witness is not None:
        raise NotRegularError(witness)
    K = act.complex
    proj = {}
    for v in K.vertices:
        if v not in proj:
            o = orbit(act.vertex_orbit(v))
            for w in o.value:
                proj[w] = o
    # orbits ordered by their first member in the parent order
    qverts = sorted(set(proj.values()), key=lambda o: min(K.index(w) for w in o.value))
    faces = {frozenset(proj[v] for v in fs) for fs in K.faces}
    return Quotient(SimplicialComplex(qverts, faces, check=False), proj)
