"""Walkthrough: the g-signature of the directed strongly invertible knot
9_46 (antipodal direction) from a butterfly surface.

The butterfly surface has H_1 basis {a, b, c, d}; the strong inversion
exchanges a with -b and c with -d. Restricting the Gordon-Litherland
pairing to the two eigenspaces of the involution gives signatures -2 and
+2, so the g-signature is -4 and the butterfly 4-genus is at least 2.
Equivariant connect sums multiply this: the n-fold sum has g-signature
-4n, butterfly 4-genus exactly 2n, while staying (non-equivariantly)
slice.
"""

from eqknot import (GramLattice, eigenspace_basis, gsig_direct_sum,
                    gsig_genus_bound, gsig_involution, restrict_form)

gram = GramLattice([[0, 2, -1, 0],
                    [2, 0, 0, -1],
                    [-1, 0, 0, 2],
                    [0, -1, 2, 0]])
tau = [[0, -1, 0, 0],
       [-1, 0, 0, 0],
       [0, 0, 0, -1],
       [0, 0, -1, 0]]

plus = eigenspace_basis(tau, +1)
minus = eigenspace_basis(tau, -1)
print("restriction to the (+1)-eigenspace:", restrict_form(gram, plus).gram)
print("restriction to the (-1)-eigenspace:", restrict_form(gram, minus).gram)

report = gsig_involution(gram, tau)
print(f"\nsigma on H(+1) = {report.sigma_plus}, "
      f"sigma on H(-1) = {report.sigma_minus}")
print("g-signature:", report.gsig)
print("butterfly 4-genus >=", gsig_genus_bound(report.gsig))

double = gsig_direct_sum(gram, tau, gram, tau)
print("\ntwo-fold equivariant connect sum: g-signature", double.gsig,
      "-> butterfly 4-genus >=", gsig_genus_bound(double.gsig))
