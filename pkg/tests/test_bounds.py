from fractions import Fraction

import pytest

from eqknot import (BoundsInput, aggregate, crossing_change_upper,
                    gsig_genus_bound, gsig_periodic, gsig_periodic_bound,
                    rh_bound)
from eqknot.embedsearch import ObstructionReport


def _obstructed(k=6, classes=2):
    return ObstructionReport(k=k, class_count=classes, per_class=(),
                             obstructed=True, conclusion="obstructed")


class TestRhBound:
    def test_montesinos_t3(self):
        assert rh_bound(2, 1, 9) == 6

    def test_22_crossing_example(self):
        assert rh_bound(2, 1, 1) == 2

    def test_trivial(self):
        assert rh_bound(2, 0, 1) == 0

    def test_half_integral(self):
        assert rh_bound(2, 0, 2) == Fraction(1, 2)

    def test_monotone(self, rng):
        for _ in range(100):
            n = rng.randint(2, 5)
            g = rng.randint(0, 4)
            lam = rng.randint(-6, 6)
            assert rh_bound(n, g + 1, lam) >= rh_bound(n, g, lam)
            assert rh_bound(n, g, abs(lam) + 1) >= rh_bound(n, g, lam)
            assert rh_bound(n, g, -lam) == rh_bound(n, g, lam)


class TestGsigPeriodicBound:
    def test_22_crossing(self):
        assert gsig_periodic_bound(2, -4, 2) == 4

    def test_montesinos_family(self):
        for t in (1, 3, 5, 7):
            assert gsig_periodic_bound(2, -2, t - 1) == t

    def test_zero(self):
        assert gsig_periodic_bound(3, 6, 2) == 0

    def test_matches_gsig_formula(self, rng):
        for _ in range(100):
            n = rng.randint(2, 6)
            sk = rng.randint(-8, 8)
            sq = rng.randint(-8, 8)
            assert (gsig_periodic_bound(n, sk, sq)
                    == abs(gsig_periodic(n, sk, sq)) / 2)


class TestGsigGenusBound:
    def test_946(self):
        assert gsig_genus_bound(-4) == 2

    def test_connect_sums(self):
        for n in range(1, 5):
            assert gsig_genus_bound(-4 * n) == 2 * n

    def test_zero(self):
        assert gsig_genus_bound(0) == 0


class TestCrossingChangeUpper:
    def test_unknot_base(self):
        assert crossing_change_upper(0, 2) == 2

    def test_zero(self):
        assert crossing_change_upper(0, 0) == 0

    def test_step(self):
        assert crossing_change_upper(3, 1) == 4

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            crossing_change_upper(-1, 0)


class TestAggregate:
    def test_9_40_pinned(self):
        inp = BoundsInput(sigma_K=-2, g4_K=1, equivariant_unknotting_moves=2)
        rep = aggregate(inp, obstruction=_obstructed())
        assert rep.best_lower == 2
        assert rep.best_upper == 2
        assert rep.consistent

    def test_montesinos_t3(self):
        inp = BoundsInput(period_n=2, sigma_K=-2, sigma_quotient=2,
                          g4top_quotient=1, linking_lambda=9, genus_upper=6)
        rep = aggregate(inp)
        assert rep.best_lower == 6
        assert rep.best_upper == 6
        names = {b.name: b.value for b in rep.lower_bounds}
        assert names["g-signature (periodic)"] == 3
        assert names["riemann-hurwitz"] == 6

    def test_example_6_12(self):
        inp = BoundsInput(period_n=2, sigma_K=-4, sigma_quotient=2,
                          g4top_quotient=1, linking_lambda=1)
        rep = aggregate(inp)
        names = {b.name: b.value for b in rep.lower_bounds}
        assert names["riemann-hurwitz"] == 2
        assert names["g-signature (periodic)"] == 4
        assert rep.best_lower == 4

    def test_empty(self):
        rep = aggregate(BoundsInput())
        assert rep.lower_bounds == ()
        assert rep.upper_bounds == ()
        assert rep.best_lower is None and rep.best_upper is None
        assert rep.consistent

    def test_inconsistent_reported_not_rejected(self):
        rep = aggregate(BoundsInput(gsig=10, genus_upper=1))
        assert not rep.consistent

    def test_monotone(self, rng):
        for _ in range(100):
            base = BoundsInput(period_n=2, sigma_K=rng.randint(-6, 0) * 2,
                               sigma_quotient=rng.randint(-4, 4))
            more = BoundsInput(period_n=base.period_n, sigma_K=base.sigma_K,
                               sigma_quotient=base.sigma_quotient,
                               g4top_quotient=rng.randint(0, 3),
                               linking_lambda=rng.randint(-5, 5))
            a, b = aggregate(base), aggregate(more)
            assert (b.best_lower or 0) >= (a.best_lower or 0)

    def test_ceiling_of_half_integers(self):
        rep = aggregate(BoundsInput(gsig=-3))
        assert rep.lower_bounds[0].value == Fraction(3, 2)
        assert rep.lower_bounds[0].ceiling == 2
