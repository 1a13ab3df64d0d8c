import random
from fractions import Fraction

import pytest

from eqknot import (GramLattice, eigenspace_basis, is_positive_definite,
                    restrict_form, signature)
from conftest import conjugate, inertia_by_descartes, random_unimodular

GRAM_946 = [[0, 2, -1, 0], [2, 0, 0, -1], [-1, 0, 0, 2], [0, -1, 2, 0]]
TAU_946 = [[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]]
GRAM_940_QUOTIENT = [[4, -1, -1, -1], [-1, 3, -1, 0],
                     [-1, -1, 4, -1], [-1, 0, -1, 3]]


class TestSignature:
    def test_negative_definite_2x2(self):
        s = signature([[-4, -2], [-2, -4]])
        assert (s.n_pos, s.n_neg, s.n_zero) == (0, 2, 0)
        assert s.sigma == -2

    def test_positive_definite_2x2(self):
        s = signature([[4, -2], [-2, 4]])
        assert (s.n_pos, s.n_neg, s.n_zero) == (2, 0, 0)
        assert s.sigma == 2

    def test_empty_form(self):
        s = signature([])
        assert (s.n_pos, s.n_neg, s.n_zero) == (0, 0, 0)

    def test_hyperbolic_plane(self):
        s = signature([[0, 1], [1, 0]])
        assert (s.n_pos, s.n_neg, s.n_zero) == (1, 1, 0)

    def test_zero_block_with_radical(self):
        s = signature([[0, 0], [0, 0]])
        assert (s.n_pos, s.n_neg, s.n_zero) == (0, 0, 2)

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            signature([[0, 1], [2, 0]])

    def test_sylvester_oracle(self, rng):
        # inertia from congruence diagonalization vs char-poly Descartes
        for _ in range(200):
            m = rng.randint(1, 6)
            M = [[0] * m for _ in range(m)]
            for i in range(m):
                for j in range(i, m):
                    M[i][j] = M[j][i] = rng.randint(-5, 5)
            s = signature(M)
            assert (s.n_pos, s.n_neg, s.n_zero) == inertia_by_descartes(M)

    def test_congruence_invariance(self, rng):
        for _ in range(200):
            m = rng.randint(1, 5)
            M = [[0] * m for _ in range(m)]
            for i in range(m):
                for j in range(i, m):
                    M[i][j] = M[j][i] = rng.randint(-5, 5)
            U = random_unimodular(rng, m)
            assert signature(conjugate(U, M)) == signature(M)


class TestDefiniteness:
    def test_identity(self):
        assert is_positive_definite([[1, 0, 0, 0], [0, 1, 0, 0],
                                     [0, 0, 1, 0], [0, 0, 0, 1]])

    def test_zero_form(self):
        assert not is_positive_definite([[0]])

    def test_9_40_quotient_gram(self):
        # independent check: all leading principal minors positive
        def det(M):
            M = [row[:] for row in M]
            n = len(M)
            out = Fraction(1)
            for c in range(n):
                piv = next((r for r in range(c, n) if M[r][c] != 0), None)
                if piv is None:
                    return Fraction(0)
                if piv != c:
                    M[c], M[piv] = M[piv], M[c]
                    out = -out
                out *= M[c][c]
                for r in range(c + 1, n):
                    f = Fraction(M[r][c], 1) / M[c][c]
                    M[r] = [a - f * b for a, b in zip(M[r], M[c])]
            return out

        minors = [det([row[:k] for row in GRAM_940_QUOTIENT[:k]])
                  for k in range(1, 5)]
        assert all(d > 0 for d in minors)
        assert is_positive_definite(GRAM_940_QUOTIENT)
        assert signature(GRAM_940_QUOTIENT).sigma == 4


class TestEigenspaces:
    def test_identity_plus(self):
        basis = eigenspace_basis([[1, 0], [0, 1]], 1)
        assert len(basis) == 2

    def test_identity_minus(self):
        assert eigenspace_basis([[1, 0], [0, 1]], -1) == []

    def test_946_plus_eigenspace(self):
        # tau: a <-> -b, c <-> -d; the +1 space is spanned by a-b, c-d
        basis = eigenspace_basis(TAU_946, 1)
        assert len(basis) == 2
        for v in basis:
            img = tuple(sum(TAU_946[i][j] * v[j] for j in range(4))
                        for i in range(4))
            assert img == v
            assert v[0] == -v[1] and v[2] == -v[3]

    def test_dimension_sum(self, rng):
        for _ in range(50):
            n = rng.randint(1, 5)
            # random involution: signed permutation with paired swaps
            perm = list(range(n))
            idx = list(range(n))
            rng.shuffle(idx)
            for a, b in zip(idx[::2], idx[1::2]):
                perm[a], perm[b] = perm[b], perm[a]
            signs = [rng.choice([1, -1]) for _ in range(n)]
            # force involution: sign consistency on 2-cycles
            R = [[0] * n for _ in range(n)]
            for i in range(n):
                R[i][perm[i]] = signs[i] if perm[i] != i else rng.choice([1, -1])
            for i in range(n):
                if perm[i] > i:
                    R[perm[i]][i] = R[i][perm[i]]
            plus = eigenspace_basis(R, 1)
            minus = eigenspace_basis(R, -1)
            assert len(plus) + len(minus) == n

    def test_rejects_non_involution(self):
        with pytest.raises(ValueError):
            eigenspace_basis([[1, 1], [0, 1]], 1)


class TestRestrictForm:
    def test_standard_basis(self):
        G = GramLattice(GRAM_946)
        B = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
        assert restrict_form(G, B).gram == G.gram

    def test_946_plus_restriction(self):
        B = [(1, -1, 0, 0), (0, 0, 1, -1)]
        assert restrict_form(GRAM_946, B).gram == ((-4, -2), (-2, -4))

    def test_946_minus_restriction(self):
        B = [(1, 1, 0, 0), (0, 0, 1, 1)]
        assert restrict_form(GRAM_946, B).gram == ((4, -2), (-2, 4))

    def test_eigenbases_block_diagonalize(self):
        plus = eigenspace_basis(TAU_946, 1)
        minus = eigenspace_basis(TAU_946, -1)
        both = restrict_form(GRAM_946, plus + minus).gram
        p = len(plus)
        for i in range(p):
            for j in range(p, p + len(minus)):
                assert both[i][j] == 0
