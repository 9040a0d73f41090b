"""
Rank-one operators on the Witt pseudoalgebra
============================================

W(1) is the rank-one Lie pseudoalgebra over k[d] with
``[e * e] = (d (x) 1 - 1 (x) d) (x)_H e``.  An H-linear operator on it is
``P(e) = h e`` for a single ``h`` in H, so asking which operators are
averaging, Nijenhuis or Reynolds is a polynomial system in the
coefficients of ``h``.  Run with ``python demos/witt_rank_one.py``.
"""

from fractions import Fraction

from hopfpseudo.corpus import k_d, u_delta2, w1
from hopfpseudo.hopf import TensorElem
from hopfpseudo.operators import HLinearOp, check_operator
from hopfpseudo.pseudoalgebra import check_structure, rank_one_alpha, rank_one
from hopfpseudo.rank1 import classify, residual_system

H = k_d()
W = w1(H)
print(W.name, "is Lie:", check_structure(W, "lie").status)
print()

# The unknowns are the coefficients of h in the divided-power basis
# 1, d, d^(2), d^(3).  Here is the start of the averaging system at cap 3.
system = residual_system("averaging", H, W.coefficient(0, 0, 0), 3)
lines = system.render().splitlines()
print("\n".join(lines[:8]))
print(f"... {len(system.nonzero_equations())} equations in total")
print()

###############################################################################
# Solving it.  Every reported point is re-checked against the identity, and
# adding any monomial of positive degree to a solution must break it.

for kind, weight in [("averaging", None), ("nijenhuis", None), ("reynolds", 2), ("reynolds", Fraction(-1, 3))]:
    sol = classify(kind, H, W.coefficient(0, 0, 0), 3, weight)
    print(f"{str(sol.kind):16s} {sol.description:12s} {sol.status}")
print()

###############################################################################
# The Reynolds answer by hand: P = mu id is Reynolds of weight 2 exactly
# when mu is 0 or -1/2.

for mu in (0, Fraction(-1, 2), Fraction(1, 2), 1):
    ok = check_operator("reynolds(2)", HLinearOp.scalar(H, 1, mu), W).status
    print(f"mu = {str(mu):5s} reynolds(2): {ok}")
print()

###############################################################################
# The same classification over U(d1, d2) with [d1, d2] = d2, for a rank-one
# Lie pseudoalgebra built from r = 0 and s = d1.

U = u_delta2()
L = rank_one(U, rank_one_alpha(U, TensorElem.zero(U, 2), U.gen(0)), "lie", "rank one over U")
print(L.name, "is Lie:", check_structure(L, "lie").status)
for kind, weight in [("averaging", None), ("reynolds", 2)]:
    sol = classify(kind, U, L.coefficient(0, 0, 0), 2, weight)
    print(f"{str(sol.kind):16s} {sol.description:12s} {sol.status}")
