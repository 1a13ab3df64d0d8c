"""Isometric embeddings into the diagonal lattice (Z^k, Id) and the
equivariant automorphism search.

The obstruction: if the equivariant 4-genus equals -sigma/2 then the
Gordon-Litherland lattice embeds into (Z^k, Id), k = -sigma + b_1, with a
signed permutation delta of the ambient lattice satisfying
delta . iota = iota . rho_* and order(delta) = order(rho). Exhausting all
embedding classes and finding no such delta obstructs the genus value.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import lcm
from typing import Optional, Sequence

import numpy as np

from .checkerboard import LatticeIsometry
from .lattice import GramLattice, Matrix, is_positive_definite, mat_mul, transpose


@dataclass(frozen=True)
class Embedding:
    """A k x m integer matrix E with E^T E = G; column j is the image of
    the j-th basis vector of the source lattice."""

    k: int
    matrix: Matrix

    def __init__(self, k: int, matrix: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in matrix)
        if len(rows) != k:
            raise ValueError("embedding matrix must have k rows")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "matrix", rows)

    @property
    def source_rank(self) -> int:
        return len(self.matrix[0]) if self.k else 0

    def gram(self) -> GramLattice:
        return GramLattice(mat_mul(transpose(self.matrix), self.matrix))


@dataclass(frozen=True)
class SignedPermutation:
    """An automorphism of (Z^k, Id): e_{perm[i]} |-> signs[i] * e_i."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __init__(self, perm: Sequence[int], signs: Sequence[int]):
        perm = tuple(perm)
        signs = tuple(signs)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError("not a permutation")
        if len(signs) != len(perm) or any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +/-1 of matching length")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "signs", signs)

    @property
    def k(self) -> int:
        return len(self.perm)

    def matrix(self) -> Matrix:
        k = self.k
        M = [[0] * k for _ in range(k)]
        for i in range(k):
            M[i][self.perm[i]] = self.signs[i]
        return tuple(tuple(row) for row in M)

    def order(self) -> int:
        """Exact multiplicative order, from cycle lengths and the product
        of signs around each cycle."""
        seen = [False] * self.k
        out = 1
        for start in range(self.k):
            if seen[start]:
                continue
            length, sign_prod, i = 0, 1, start
            while not seen[i]:
                seen[i] = True
                sign_prod *= self.signs[i]
                i = self.perm[i]
                length += 1
            out = lcm(out, length if sign_prod == 1 else 2 * length)
        return out


@dataclass(frozen=True)
class ObstructionReport:
    k: int
    class_count: int
    per_class: tuple[tuple[Embedding, Optional[SignedPermutation]], ...]
    obstructed: bool
    conclusion: str


def enumerate_vectors(k: int, norm: int) -> list[tuple[int, ...]]:
    """All v in Z^k with v.v = norm, in lexicographic order."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out: list[tuple[int, ...]] = []
    prefix = [0] * k

    def rec(i: int, rem: int):
        if i == k:
            if rem == 0:
                out.append(tuple(prefix))
            return
        b = math.isqrt(rem)
        for x in range(-b, b + 1):
            prefix[i] = x
            rec(i + 1, rem - x * x)
        prefix[i] = 0

    rec(0, norm)
    return out


def enumerate_embeddings(G: GramLattice | Sequence[Sequence[int]], k: int,
                         threads: int = 1) -> list[Embedding]:
    """All integer matrices E with E^T E = G, G positive definite.

    Depth-first over columns: column j ranges over the norm-G[j][j]
    vectors whose inner products with already-placed columns match G.
    Candidate filtering is vectorized; the output order is deterministic
    (lexicographic in the column vectors) regardless of thread count.
    """
    if not isinstance(G, GramLattice):
        G = GramLattice(G)
    if not is_positive_definite(G):
        raise ValueError("embedding target (Z^k, Id) requires a positive "
                         "definite source form")
    g = G.gram
    m = G.rank
    if m == 0:
        return [Embedding(k, [() for _ in range(k)])]
    cand0 = [np.array(enumerate_vectors(k, g[j][j]), dtype=np.int64
                      ).reshape(-1, k) for j in range(m)]

    results: list[tuple] = []

    def dfs(j: int, chosen: list, future: list[np.ndarray], sink: list):
        cand = future[0]
        if j == m - 1:
            for v in cand:
                sink.append(tuple(chosen) + (tuple(int(x) for x in v),))
            return
        for v in cand:
            nxt = []
            ok = True
            for t, arr in enumerate(future[1:], start=j + 1):
                arr = arr[arr @ v == g[j][t]]
                if arr.shape[0] == 0:
                    ok = False
                    break
                nxt.append(arr)
            if ok:
                chosen.append(tuple(int(x) for x in v))
                dfs(j + 1, chosen, nxt, sink)
                chosen.pop()

    first = cand0[0]
    if threads > 1 and m > 1 and first.shape[0] > 1:
        def work(v):
            sink: list = []
            nxt = []
            for t in range(1, m):
                arr = cand0[t][cand0[t] @ v == g[0][t]]
                if arr.shape[0] == 0:
                    return sink
                nxt.append(arr)
            dfs(1, [tuple(int(x) for x in v)], nxt, sink)
            return sink
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(work, list(first)):
                results.extend(part)
    else:
        dfs(0, [], cand0, results)

    out = []
    for cols in results:
        rows = tuple(tuple(col[i] for col in cols) for i in range(k))
        out.append(Embedding(k, rows))
    return out


def _normalize_row(row: tuple[int, ...]) -> tuple[int, ...]:
    neg = tuple(-x for x in row)
    return row if row <= neg else neg


def canonical_form(E: Embedding) -> Embedding:
    """The lexicographically smallest (row-major) matrix in the orbit of E
    under row permutations and row negations, i.e. under Aut(Z^k, Id).

    Rows are compared independently in the row-major order, so the minimum
    is achieved by sign-normalizing each row and sorting. Idempotent.
    """
    rows = sorted(_normalize_row(r) for r in E.matrix)
    return Embedding(E.k, rows)


def orbit_classes(embeddings: Sequence[Embedding]
                  ) -> list[tuple[Embedding, int]]:
    """Bucket embeddings by canonical form; representatives in sorted
    (deterministic) order with orbit sizes."""
    buckets: dict[Matrix, int] = {}
    for E in embeddings:
        key = canonical_form(E).matrix
        buckets[key] = buckets.get(key, 0) + 1
    return [(Embedding(len(key), key), cnt)
            for key, cnt in sorted(buckets.items())]


def equivariant_delta(E: Embedding, R: LatticeIsometry | Sequence[Sequence[int]],
                      required_order: int) -> Optional[SignedPermutation]:
    """A signed permutation P with P.E = E.R of exact multiplicative order
    required_order, or None.

    Each row i of P must send some row of E to row i of E.R up to sign;
    zero rows of E.R are matched by zero rows of E with a free sign, and
    the search backtracks over those subject only to the order condition.
    """
    Rm = R.matrix if isinstance(R, LatticeIsometry) else tuple(
        tuple(int(x) for x in row) for row in R)
    m = E.source_rank
    if len(Rm) != m or any(len(row) != m for row in Rm):
        raise ValueError("isometry dimension does not match embedding source")
    k = E.k
    T = mat_mul(E.matrix, Rm)
    # candidates[i]: list of (j, sign) with sign*E_row[j] == T_row[i]
    row_index: dict[tuple[int, ...], list[int]] = {}
    for j, row in enumerate(E.matrix):
        row_index.setdefault(row, []).append(j)
    candidates: list[list[tuple[int, int]]] = []
    for i in range(k):
        t = T[i]
        opts = []
        if all(x == 0 for x in t):
            for j in row_index.get(t, []):
                opts.extend([(j, 1), (j, -1)])
        else:
            for j in row_index.get(t, []):
                opts.append((j, 1))
            neg = tuple(-x for x in t)
            for j in row_index.get(neg, []):
                opts.append((j, -1))
        if not opts:
            return None
        candidates.append(opts)

    perm = [-1] * k
    signs = [0] * k
    used = [False] * k
    order_rows = sorted(range(k), key=lambda i: len(candidates[i]))

    def search(pos: int) -> Optional[SignedPermutation]:
        if pos == k:
            P = SignedPermutation(tuple(perm), tuple(signs))
            return P if P.order() == required_order else None
        i = order_rows[pos]
        for j, s in candidates[i]:
            if used[j]:
                continue
            used[j] = True
            perm[i], signs[i] = j, s
            hit = search(pos + 1)
            if hit is not None:
                return hit
            used[j] = False
        perm[i], signs[i] = -1, 0
        return None

    return search(0)


def donaldson_obstruction(G: GramLattice | Sequence[Sequence[int]],
                          R: LatticeIsometry,
                          sigma_K: int,
                          order: int,
                          sign_mode: str = "strict",
                          threads: int = 1) -> ObstructionReport:
    """Decide the equivariant embedding obstruction.

    Sets k = -sigma_K + rank(G), enumerates all embedding classes into
    (Z^k, Id), and searches each class representative for a delta of exact
    order `order` intertwining R. With sign_mode="both", -R is also tried,
    so "obstructed" is only reported when both sign conventions fail.
    """
    if not isinstance(G, GramLattice):
        G = GramLattice(G)
    if sigma_K > 0:
        raise ValueError("stated for sigma(K) <= 0; mirror the knot first")
    if sigma_K % 2 != 0:
        raise ValueError("-sigma(K) must be even")
    if sign_mode not in ("strict", "both"):
        raise ValueError("sign_mode must be 'strict' or 'both'")
    k = -sigma_K + G.rank
    embeddings = enumerate_embeddings(G, k, threads=threads)
    classes = orbit_classes(embeddings)
    per_class = []
    any_delta = False
    for rep, _size in classes:
        delta = equivariant_delta(rep, R, order)
        if delta is None and sign_mode == "both":
            delta = equivariant_delta(rep, R.negated().matrix, order)
        per_class.append((rep, delta))
        any_delta = any_delta or delta is not None
    obstructed = not any_delta
    if obstructed:
        conclusion = (f"no equivariant embedding into (Z^{k}, Id): "
                      f"equivariant 4-genus > {-sigma_K // 2}")
    else:
        conclusion = (f"equivariant embedding exists into (Z^{k}, Id): "
                      "no obstruction")
    return ObstructionReport(k=k, class_count=len(classes),
                             per_class=tuple(per_class),
                             obstructed=obstructed, conclusion=conclusion)
