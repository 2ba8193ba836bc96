import warnings
from itertools import combinations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from corpus import NAMED, boundary_triangle, named, pair_corpus, sd_triangle, triangle
from simpconf.complex import (
    ComplexError,
    build_from_facets,
    euler_characteristic,
    f_vector,
    is_full_subcomplex,
    is_subcomplex,
    minimal_nonfaces,
)
from simpconf.constructions import (
    NotFullWarning,
    barycentric_subdivision,
    complement_model,
    conf_model,
    conf_model_bs,
    fat_diagonal,
    is_power_simplex,
    ordered_power,
    simplicial_difference,
    unwrap_vertex_barycenters,
)
from simpconf.labels import atom, bary, tup

X3 = boundary_triangle()


@pytest.fixture(scope="module")
def P2():
    return ordered_power(X3, 2)


@pytest.fixture(scope="module")
def F2(P2):
    return fat_diagonal(X3, 2, P2)


# -- ordered power ---------------------------------------------------------

def test_power_of_circle_matches_oracle(P2):
    oracle = oracles.power_oracle_faces(X3, 2)
    assert oracles.counts(oracle) == (9, 27, 18)
    assert P2.faces == oracle
    assert f_vector(P2) == (9, 27, 18)
    assert euler_characteristic(P2) == 0


def test_power_is_closed_surface(P2):
    for e in P2.simplices(1):
        assert sum(1 for t in P2.simplices(2) if set(e) <= set(t)) == 2


def test_power_small_cases():
    assert f_vector(ordered_power(X3, 1)) == (3, 3)
    assert ordered_power(X3, 1) == build_from_facets([tup([v]) for v in range(3)],
                                                     [[tup([a]), tup([b])] for a, b in
                                                      combinations(range(3), 2)])
    sq = ordered_power(named("edge"), 2)
    assert f_vector(sq) == (4, 5, 2)
    assert [tup([0, 0]), tup([1, 1])] in sq and [tup([0, 1]), tup([1, 0])] not in sq
    with pytest.raises(ComplexError):
        ordered_power(X3, 0)


def test_power_vertex_order_is_lexicographic(P2):
    assert [tuple(int(str(x)) for x in v.value) for v in P2.vertices] == \
        [(a, b) for a in range(3) for b in range(3)]


def test_is_power_simplex_examples():
    assert is_power_simplex(X3, 2, [tup([0, 0]), tup([2, 1])])
    assert not is_power_simplex(X3, 2, [tup([0, 1]), tup([1, 0])])
    assert is_power_simplex(X3, 2, [tup([0, 0])])
    with pytest.raises(ComplexError):
        is_power_simplex(X3, 2, [tup([0, 0, 0])])


@pytest.mark.parametrize("name,n", [("circle3", 2), ("edge", 3), ("triangle", 2), ("path3", 2)])
def test_power_membership_exhaustive(name, n):
    """Every vertex subset up to size dim+2 agrees with the permutation oracle."""
    X = named(name)
    P = ordered_power(X, n)
    verts = oracles.power_vertices(X, n)
    for r in range(1, P.dim + 3):
        for cols in combinations(verts, r):
            expected = oracles.brute_power_simplex(X, n, cols)
            assert (frozenset(cols) in P.faces) == expected
            assert is_power_simplex(X, n, cols) == expected


@pytest.mark.parametrize("name", sorted(NAMED))
def test_power_matches_oracle_on_corpus(name):
    X = named(name)
    assert ordered_power(X, 2).faces == oracles.power_oracle_faces(X, 2)


# -- fat diagonal ------------------------------------------------------------

def test_fat_diagonal_examples(P2, F2):
    assert f_vector(F2) == (3, 3)
    assert [tup([0, 0]), tup([1, 1])] in F2
    assert fat_diagonal(X3, 1).is_empty()
    assert is_full_subcomplex(P2, F2)


@pytest.mark.parametrize("name", ["edge", "circle3", "triangle", "path3", "two_points"])
def test_fat_diagonal_structure(name):
    X = named(name)
    for n in (2, 3):
        P = ordered_power(X, n)
        F = fat_diagonal(X, n, P)
        assert is_subcomplex(P, F)
        pairs = list(combinations(range(n), 2))
        expected = {s for s in P.faces
                    if any(all(c.value[i] == c.value[j] for c in s) for i, j in pairs)}
        assert F.faces == expected
        if n == 2:
            assert is_full_subcomplex(P, F)


# -- barycentric subdivision ------------------------------------------------

def test_bs_examples(P2):
    assert f_vector(barycentric_subdivision(named("edge"))) == (3, 2)
    assert f_vector(barycentric_subdivision(X3)) == (6, 6)
    B = barycentric_subdivision(P2)
    assert oracles.counts(oracles.subdivision_faces(P2.faces)) == (54, 162, 108)
    assert f_vector(B) == (54, 162, 108)
    assert euler_characteristic(B) == 0


def test_bs_vertex_order_ascending_dimension():
    B = barycentric_subdivision(triangle())
    assert [len(v.value) for v in B.vertices] == [1, 1, 1, 2, 2, 2, 3]
    assert B.vertices[0] == bary([0]) and B.vertices[-1] == bary([0, 1, 2])


@pytest.mark.parametrize("name", sorted(NAMED))
def test_bs_laws(name):
    K = named(name)
    B = barycentric_subdivision(K)
    assert B.faces == oracles.subdivision_faces(K.faces)
    assert euler_characteristic(B) == euler_characteristic(K)
    fk = f_vector(K)
    assert f_vector(B)[0] == sum(fk)
    assert f_vector(B)[-1] == fk[-1] * factorial(K.dim + 1)


# -- simplicial difference and complement model -----------------------------

def test_difference_examples(P2, F2):
    D = simplicial_difference(triangle(), boundary_triangle())
    assert f_vector(D) == (1,) and D.vertices == (bary([0, 1, 2]),)
    assert f_vector(simplicial_difference(P2, F2)) == (6, 8, 2)
    E = build_from_facets([], [])
    for name in ("circle3", "two_triangles", "bowtie"):
        X = named(name)
        assert unwrap_vertex_barycenters(simplicial_difference(X, E)) == X


def test_complement_examples(P2, F2):
    C = complement_model(sd_triangle(), boundary_triangle())
    assert C.vertices == (atom("c"),) and f_vector(C) == (1,)
    C2 = complement_model(P2, F2)
    assert f_vector(C2) == (6, 8, 2)
    assert unwrap_vertex_barycenters(simplicial_difference(P2, F2)) == C2
    X = named("bowtie")
    assert complement_model(X, build_from_facets([], [])) == X


def test_complement_warns_when_not_full():
    with pytest.warns(NotFullWarning):
        C = complement_model(triangle(), boundary_triangle())
    assert C.is_empty()
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        complement_model(sd_triangle(), boundary_triangle())


def test_difference_rejects_non_subcomplex():
    with pytest.raises(ComplexError):
        simplicial_difference(boundary_triangle(), triangle())


def test_difference_matches_brute_force_on_corpus():
    for _, X, A in pair_corpus():
        mins = [frozenset(m) for m in minimal_nonfaces(X, A)]
        assert simplicial_difference(X, A).faces == oracles.difference_faces(X, mins)


def test_full_collapse_and_bs_pair_fullness():
    for _, X, A in pair_corpus():
        if is_full_subcomplex(X, A):
            assert unwrap_vertex_barycenters(simplicial_difference(X, A)) == complement_model(X, A)
        if len(X) <= 60:
            assert is_full_subcomplex(barycentric_subdivision(X), barycentric_subdivision(A))


# -- configuration models ---------------------------------------------------

def test_conf_model_circle():
    C = conf_model(X3, 2)
    assert f_vector(C) == (6, 8, 2) and euler_characteristic(C) == 0
    assert f_vector(conf_model(named("point"), 1)) == (1,)
    assert f_vector(conf_model_bs(named("point"), 1)) == (1,)


def test_conf_model_bs_circle(P2, F2):
    C = conf_model_bs(X3, 2)
    expected = oracles.subdivision_faces(P2.faces - F2.faces)
    assert C.faces == expected
    assert f_vector(C) == oracles.counts(expected) == (48, 112, 64)


def test_five_matrices_span_a_four_simplex():
    X = boundary_triangle((1, 2, 3))
    C = conf_model(X, 3)
    mats = [[(1, 1), (1, 2), (2, 2)], [(1, 3), (1, 2), (2, 2)], [(1, 3), (1, 2), (2, 3)],
            [(1, 3), (2, 2), (2, 3)], [(3, 3), (2, 2), (2, 3)]]
    # each matrix is listed row by row; its two columns are vertices of X^3
    sims = [frozenset(tup([row[j] for row in m]) for j in range(2)) for m in mats]
    assert all(bary(s) in C.vertices for s in sims)
    assert [bary(s) for s in sims] in C
    assert C.dim >= 4


def test_conf_model_bs_dimension_bound():
    assert conf_model_bs(X3, 3).dim <= 3


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sets(st.integers(0, 4), min_size=1, max_size=3), min_size=1, max_size=5))
def test_random_complex_bs_euler(facets):
    K = build_from_facets(range(5), facets)
    assert euler_characteristic(barycentric_subdivision(K)) == euler_characteristic(K)
