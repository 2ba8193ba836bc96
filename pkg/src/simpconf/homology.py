"""Exact integer simplicial homology via Smith normal form."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .complex import SimplicialComplex, Simplex, euler_characteristic

Matrix = list  # list[list[int]], row-major


@dataclass(frozen=True)
class ChainComplex:
    """Boundary maps of the oriented simplicial chain complex.

    ``bases[k]`` lists the k-simplices (sorted in the complex's vertex
    order); ``columns[k][j]`` is the sparse column {row: coefficient} of
    the boundary of ``bases[k][j]`` in terms of ``bases[k-1]``.
    """

    bases: tuple[tuple[Simplex, ...], ...]
    columns: tuple[tuple[dict, ...], ...]

    def matrix(self, k: int) -> Matrix:
        """Dense boundary matrix d_k: C_k -> C_{k-1}."""
        if k <= 0 or k >= len(self.bases):
            rows = len(self.bases[k - 1]) if 0 < k <= len(self.bases) else 0
            cols = len(self.bases[k]) if 0 <= k < len(self.bases) else 0
            return [[0] * cols for _ in range(rows)]
        M = [[0] * len(self.bases[k]) for _ in range(len(self.bases[k - 1]))]
        for j, col in enumerate(self.columns[k]):
            for i, v in col.items():
                M[i][j] = v
        return M

    def rows(self, k: int) -> dict[int, dict[int, int]]:
        """Sparse row form of d_k."""
        out: dict[int, dict[int, int]] = {}
        if 0 < k < len(self.bases):
            for j, col in enumerate(self.columns[k]):
                for i, v in col.items():
                    out.setdefault(i, {})[j] = v
        return out

    def squares_to_zero(self) -> bool:
        for k in range(2, len(self.bases)):
            lower = self.columns[k - 1]
            for col in self.columns[k]:
                acc: dict[int, int] = {}
                for i, v in col.items():
                    for r, w in lower[i].items():
                        acc[r] = acc.get(r, 0) + v * w
                if any(acc.values()):
                    return False
        return True


def chain_complex(K: SimplicialComplex) -> ChainComplex:
    bases = tuple(tuple(K.simplices(k)) for k in range(K.dim + 1))
    columns = [()]
    for k in range(1, len(bases)):
        pos = {s: i for i, s in enumerate(bases[k - 1])}
        cols = []
        for s in bases[k]:
            cols.append({pos[s[:i] + s[i + 1:]]: (-1) ** i for i in range(len(s))})
        columns.append(tuple(cols))
    return ChainComplex(bases, tuple(columns))


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return (D, U, V) with D = U M V diagonal, d_1 | d_2 | ..., U, V unimodular.

    Pivot: smallest nonzero absolute value in the active block, ties broken
    by row-major position.
    """
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = abs(A[i][j])
                if a and (best is None or a < best[0]):
                    best = (a, i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
                    clean = clean and not A[i][t]
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
                    clean = clean and not A[t][j]
            if not clean:
                # move the smallest leftover in row/column t onto the pivot
                best = (abs(A[t][t]), t, t)
                for i in range(t + 1, m):
                    if A[i][t] and abs(A[i][t]) < best[0]:
                        best = (abs(A[i][t]), i, t)
                for j in range(t + 1, n):
                    if A[t][j] and abs(A[t][j]) < best[0]:
                        best = (abs(A[t][j]), t, j)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return A, U, V


def _normalize_diagonal(diag: list[int]) -> list[int]:
    """Invariant factors of a diagonal matrix (divisibility chain)."""
    d = sorted(abs(x) for x in diag if x)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return sorted(d)


def invariant_factors(rows: dict[int, dict[int, int]]) -> list[int]:
    """Nonzero invariant factors of a sparse integer matrix {row: {col: value}}.

    Elimination without transforms; the rank is the length of the result.
    """
    R = {r: dict(row) for r, row in rows.items() if any(row.values())}
    for row in R.values():
        for c in [c for c, v in row.items() if not v]:
            del row[c]
    C: dict[int, set] = {}
    for r, row in R.items():
        for c in row:
            C.setdefault(c, set()).add(r)

    def row_op(dst, src, q):  # row_dst -= q * row_src
        rd = R[dst]
        for c, v in R[src].items():
            nv = rd.get(c, 0) - q * v
            if nv:
                if c not in rd:
                    C[c].add(dst)
                rd[c] = nv
            elif c in rd:
                del rd[c]
                C[c].discard(dst)

    def col_op(dst, src, q):  # col_dst -= q * col_src
        for r in list(C[src]):
            row = R[r]
            nv = row.get(dst, 0) - q * row[src]
            if nv:
                if dst not in row:
                    C.setdefault(dst, set()).add(r)
                row[dst] = nv
            elif dst in row:
                del row[dst]
                C[dst].discard(r)

    diag = []
    for c0 in sorted(C):
        while C.get(c0):
            r, c = min(((r, c0) for r in C[c0]), key=lambda rc: (abs(R[rc[0]][c0]), len(R[rc[0]]), rc[0]))
            while True:
                p = R[r][c]
                for r2 in sorted(C[c] - {r}):
                    row_op(r2, r, R[r2][c] // p)
                for c2 in sorted(set(R[r]) - {c}):
                    col_op(c2, c, R[r][c2] // p)
                rest = [(abs(R[r2][c]), r2, c) for r2 in C[c] if r2 != r]
                rest += [(abs(v), r, c2) for c2, v in R[r].items() if c2 != c]
                if not rest:
                    break
                _, r, c = min(rest)
            diag.append(abs(R[r][c]))
            del R[r]
            C[c].discard(r)
            del C[c]
            if c != c0 and not C.get(c0):
                break
    return _normalize_diagonal(diag)


def _rank_mod2(rows: dict[int, dict[int, int]]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows.values():
        x = 0
        for c, v in row.items():
            if v % 2:
                x |= 1 << c
        while x:
            top = x.bit_length() - 1
            if top in pivots:
                x ^= pivots[top]
            else:
                pivots[top] = x
                rank += 1
                break
    return rank


@dataclass(frozen=True, eq=False)
class HomologyProfile:
    """Betti numbers and torsion per dimension.

    Equality ignores trailing zero groups, so complexes of different
    dimension with isomorphic homology compare equal.
    """

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    euler: int
    reduced: bool = False

    def _normal(self):
        n = len(self.betti)
        while n and not self.betti[n - 1] and not self.torsion[n - 1]:
            n -= 1
        return self.betti[:n], self.torsion[:n], self.reduced

    def __eq__(self, other):
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        return self._normal() == other._normal()

    def __hash__(self):
        return hash(self._normal())

    def to_json(self) -> dict:
        return {"betti": list(self.betti), "torsion": [list(t) for t in self.torsion],
                "euler": self.euler}


def homology_profile(K: SimplicialComplex, reduced: bool = False) -> HomologyProfile:
    """Betti numbers and torsion coefficients of K over the integers."""
    cc = chain_complex(K)
    top = K.dim
    factors = {k: invariant_factors(cc.rows(k)) for k in range(1, top + 1)}
    ranks = {k: len(f) for k, f in factors.items()}
    betti = []
    torsion = []
    for k in range(top + 1):
        betti.append(len(cc.bases[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0))
        torsion.append(tuple(d for d in factors.get(k + 1, ()) if d > 1))
    if reduced and betti:
        betti[0] -= 1
    return HomologyProfile(tuple(betti), tuple(torsion), euler_characteristic(K), reduced)


def betti_mod2(K: SimplicialComplex) -> tuple[int, ...]:
    """Betti numbers over GF(2); a cross-check for the integer computation."""
    cc = chain_complex(K)
    ranks = {k: _rank_mod2(cc.rows(k)) for k in range(1, K.dim + 1)}
    return tuple(len(cc.bases[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(K.dim + 1))
