import random

import pytest
from hypothesis import given, settings, strategies as st

from corpus import action_corpus, boundary_triangle, named, pair_corpus, triangle
from simpconf.actions import (
    induced_action,
    is_invariant,
    isotropy_subgroup,
)
from simpconf.complex import (
    ComplexError,
    build_from_facets,
    closure,
    f_vector,
    induced_subcomplex,
    minimal_nonfaces,
    subcomplex_from_simplices,
)
from simpconf.constructions import conf_model, fat_diagonal, ordered_power, simplicial_difference
from simpconf.labels import atom, bary
from simpconf.nerve import (
    CoverIndex,
    minimal_nonface_nerve,
    nerve_matches_difference,
    nerve_of_subcomplex_cover,
    open_star_cover,
    stars_intersect,
)

X3 = boundary_triangle()
EMPTY = build_from_facets([], [])


def test_nerve_examples():
    N = minimal_nonface_nerve(triangle(), X3)
    assert f_vector(N) == (1,)
    P = ordered_power(X3, 2)
    F = fat_diagonal(X3, 2, P)
    N2 = minimal_nonface_nerve(P, F)
    assert N2 == conf_model(X3, 2) and f_vector(N2) == (6, 8, 2)
    assert minimal_nonface_nerve(X3, X3).is_empty()


def test_matches_difference_examples():
    P = ordered_power(X3, 2)
    assert nerve_matches_difference(triangle(), X3)
    assert nerve_matches_difference(P, fat_diagonal(X3, 2, P))
    assert nerve_matches_difference(named("octahedron"), EMPTY)


def test_matches_difference_on_corpus():
    bad = [name for name, X, A in pair_corpus() if not nerve_matches_difference(X, A)]
    assert bad == []


def test_not_a_subcomplex():
    with pytest.raises(ComplexError):
        minimal_nonface_nerve(X3, triangle())


def test_cover_index_injective():
    cov = open_star_cover(triangle(), X3)
    assert cov.labels == (bary([0, 1, 2]),)
    with pytest.raises(ComplexError):
        CoverIndex((atom(0), atom(0)), (1, 2))


def test_subcomplex_cover_examples():
    edge = named("edge")
    star0 = induced_subcomplex(edge, [0, 1])
    star1 = induced_subcomplex(edge, [0, 1])
    assert f_vector(nerve_of_subcomplex_cover(edge, [star0, star1])) == (2, 1)
    parts = [induced_subcomplex(X3, e) for e in ([0, 1], [0, 2], [1, 2])]
    N = nerve_of_subcomplex_cover(X3, parts)
    assert f_vector(N) == (3, 3)
    K = named("bowtie")
    assert f_vector(nerve_of_subcomplex_cover(K, [K])) == (1,)


def test_subcomplex_cover_errors():
    with pytest.raises(ComplexError):
        nerve_of_subcomplex_cover(X3, [induced_subcomplex(X3, [0, 1])])
    with pytest.raises(ComplexError):
        nerve_of_subcomplex_cover(X3, [triangle()])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_intersection_rule(seed):
    """Stars of random simplex tuples meet iff the union is a simplex; the
    nerve predicate agrees on tuples of minimal non-faces."""
    rng = random.Random(seed)
    name, X, A = rng.choice(pair_corpus())
    simplices = list(X.faces)
    tup_ = [rng.choice(simplices) for _ in range(rng.randint(1, 4))]
    union = frozenset().union(*tup_)
    assert stars_intersect(X, tup_) == (union in X.faces)
    mins = [frozenset(m) for m in minimal_nonfaces(X, A)]
    if mins:
        pick = rng.sample(mins, rng.randint(1, min(4, len(mins))))
        N = minimal_nonface_nerve(X, A)
        assert (frozenset(bary(m) for m in pick) in N.faces) == stars_intersect(X, pick)


def _equivariant_pairs():
    for name, act in action_corpus():
        K = act.complex
        if len(K) > 80:
            continue
        subs = [EMPTY]
        for d in range(K.dim):
            subs.append(subcomplex_from_simplices(K, {s for s in K.faces if len(s) <= d + 1}))
        for v in K.vertices:
            orb = act.vertex_orbit(v)
            subs.append(subcomplex_from_simplices(K, closure([[w] for w in orb])))
        for A in subs:
            if is_invariant(act, A):
                yield name, act, A


def test_cover_equivariance_and_isotropy():
    count = 0
    for name, act, A in _equivariant_pairs():
        K = act.complex
        mins = {frozenset(m) for m in minimal_nonfaces(K, A)}
        for g in range(act.order):
            assert {frozenset(act.apply_simplex(g, m)) for m in mins} == mins
        N = minimal_nonface_nerve(K, A)
        D = simplicial_difference(K, A)
        if N.is_empty():
            continue
        nact = induced_action(act, N, "nerve")
        dact = induced_action(act, D, "difference")
        assert nact.elements == dact.elements and nact.names == dact.names
        for s in N:
            members = {frozenset(b.value) for b in s}
            union = frozenset().union(*members)
            stab_nerve = {i for i in range(act.order)
                          if {frozenset(act.apply(i, w) for w in m) for m in members} == members}
            stab_union = set(isotropy_subgroup(act, union).elements)
            assert stab_nerve <= stab_union, name
        count += 1
    assert count > 0
