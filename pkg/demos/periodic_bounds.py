"""Walkthrough: lower bounds on the equivariant 4-genus of periodic knots.

Two ingredients, both exact rationals:

  * the g-signature bound |n*sigma(quotient) - sigma(K)| / (2(n-1)),
    computed purely from the signatures of the knot and its quotient;
  * the Riemann-Hurwitz bound n*g4top(quotient) + (n-1)(|lambda|-1)/2,
    from the topological 4-genus of the quotient and the linking number
    with the symmetry axis.

The 2-periodic Montesinos family M(1; -t, 2t+2, -t) for odd t has
sigma = -2, quotient the left-handed (2,t) torus knot (sigma = t-1),
lambda = 2t+3, and a genus-2t equivariant Seifert surface. The two
bounds give t and 2t respectively; with the Seifert upper bound the
equivariant 4-genus is pinned at 2t even though the ordinary 4-genus
stays 1.

A 22-crossing 2-periodic knot with sigma = -4 and trefoil quotient shows
the opposite ranking: g-signature gives 4 where Riemann-Hurwitz only
gives 2.
"""

from eqknot import (BoundsInput, aggregate, gsig_periodic,
                    gsig_periodic_bound, rh_bound)

print("Montesinos family, odd t:")
for t in (1, 3, 5, 7):
    gsig = gsig_periodic(2, -2, t - 1)
    low_sig = gsig_periodic_bound(2, -2, t - 1)
    low_rh = rh_bound(2, (t - 1) // 2, 2 * t + 3)
    rep = aggregate(BoundsInput(period_n=2, sigma_K=-2, sigma_quotient=t - 1,
                                g4top_quotient=(t - 1) // 2,
                                linking_lambda=2 * t + 3, genus_upper=2 * t))
    print(f"  t={t}: g-signature {gsig}, bounds sig>={low_sig} rh>={low_rh},"
          f" pinned genus {rep.best_lower}")

print("\n22-crossing 2-periodic knot, trefoil quotient:")
print("  g-signature bound:", gsig_periodic_bound(2, -4, 2))
print("  riemann-hurwitz bound:", rh_bound(2, 1, 1))
