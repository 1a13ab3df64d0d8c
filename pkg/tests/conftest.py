"""Shared oracles and random generators for the test suite.

The oracles here are deliberately independent of the library code paths
they check: inertia via the characteristic polynomial and Descartes' rule
(exact for matrices with all-real spectrum), embeddings via undirected
brute force over column tuples, and delta via exhaustive search over all
signed permutations.
"""

import itertools
import random
from fractions import Fraction

import pytest

from eqknot import CheckerboardGraph, Embedding, enumerate_vectors
from eqknot.lattice import mat_mul, transpose


def char_poly(M):
    """Coefficients [c_0, ..., c_n] of det(xI - M), exact, by the
    Faddeev-LeVerrier recursion."""
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    out = [Fraction(1)] + [Fraction(0)] * n
    Bk = [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
          for i in range(n)]
    for k in range(1, n + 1):
        AB = [[sum(A[i][t] * Bk[t][j] for t in range(n)) for j in range(n)]
              for i in range(n)]
        c = -Fraction(sum(AB[i][i] for i in range(n)), k)
        out[k] = c
        Bk = [[AB[i][j] + (c if i == j else 0) for j in range(n)]
              for i in range(n)]
    return out  # out[k] is the coefficient of x^(n-k)


def inertia_by_descartes(M):
    """(n_pos, n_neg, n_zero) of a symmetric matrix from sign changes in
    the characteristic polynomial. Exact because the spectrum is real."""
    n = len(M)
    coeffs = char_poly(M)  # x^n + c1 x^(n-1) + ... + cn
    # strip zero roots
    n_zero = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        n_zero += 1
    if n_zero == n:
        return (0, 0, n)

    def sign_changes(cs):
        signs = [c for c in cs if c != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))

    n_pos = sign_changes(coeffs)
    neg_coeffs = [c if (len(coeffs) - 1 - i) % 2 == 0 else -c
                  for i, c in enumerate(coeffs)]
    n_neg = sign_changes(neg_coeffs)
    return (n_pos, n_neg, n_zero)


def brute_force_embeddings(G, k):
    """All E with E^T E = G by unpruned brute force over column tuples."""
    gram = G.gram if hasattr(G, "gram") else G
    m = len(gram)
    pools = [enumerate_vectors(k, gram[j][j]) for j in range(m)]
    out = []
    for cols in itertools.product(*pools):
        ok = True
        for i in range(m):
            for j in range(i + 1, m):
                if sum(a * b for a, b in zip(cols[i], cols[j])) != gram[i][j]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            rows = tuple(tuple(col[r] for col in cols) for r in range(k))
            out.append(Embedding(k, rows))
    return out


def signed_perm_order(perm, signs):
    from math import lcm
    k = len(perm)
    seen = [False] * k
    out = 1
    for s in range(k):
        if seen[s]:
            continue
        length, prod, i = 0, 1, s
        while not seen[i]:
            seen[i] = True
            prod *= signs[i]
            i = perm[i]
            length += 1
        out = lcm(out, length if prod == 1 else 2 * length)
    return out


def exhaustive_delta_exists(E, R, required_order):
    """Existence of P with P.E = E.R and exact order, by scanning all
    2^k * k! signed permutations. Only sensible for k <= 5."""
    k = E.k
    T = mat_mul(E.matrix, R)
    for perm in itertools.permutations(range(k)):
        for signs in itertools.product((1, -1), repeat=k):
            if all(tuple(signs[i] * x for x in E.matrix[perm[i]]) == tuple(T[i])
                   for i in range(k)):
                if signed_perm_order(perm, signs) == required_order:
                    return True
    return False


def random_unimodular(rng, n, steps=6):
    """Product of elementary shears and signed swaps; determinant +/-1."""
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        a, b = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if n > 1 and rng.random() < 0.7:
            c = rng.choice([-2, -1, 1, 2])
            for row in U:
                row[b] += c * row[a]
        else:
            s = rng.choice([1, -1])
            for row in U:
                row[a], row[b] = s * row[b], row[a]
    return tuple(tuple(row) for row in U)


def random_connected_graph(rng, max_vertices=6, weights=(-1, 1)):
    n = rng.randint(1, max_vertices)
    edges = []
    for v in range(1, n):  # spanning tree keeps it connected
        u = rng.randrange(v)
        edges.append((u, v, rng.choice(weights)))
    for _ in range(rng.randint(0, n)):
        if n < 2:
            break
        u, v = rng.sample(range(n), 2)
        edges.append((u, v, rng.choice(weights)))
    return CheckerboardGraph(n, edges)


def conjugate(U, G):
    """U^T G U."""
    return mat_mul(mat_mul(transpose(U), G), U)


@pytest.fixture
def rng():
    return random.Random(20260826)
