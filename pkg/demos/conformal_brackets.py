"""
x-brackets of the Witt pseudoalgebra
====================================

A Lie pseudoalgebra L over H induces a conformal algebra: for x in the dual
X = H*, the x-bracket ``[a_x b]`` pairs x against the first slot of the
pseudobracket.  For W(1) only x_0 and x_1 give nonzero brackets.
"""

from fractions import Fraction

from hopfpseudo.conformal import ConformalAlgebra, check_conformal_axioms, check_conformal_operator, x_bracket
from hopfpseudo.corpus import cur_lie_ax_b, group_zn, w1
from hopfpseudo.dual import DualSpace
from hopfpseudo.operators import HLinearOp, check_operator

L = w1()
H = L.H
C = ConformalAlgebra(L, DualSpace(H, 6))
e = C.e(0)

for n in range(4):
    key = H.key((n,))
    print(f"[e x[{H.format_key(key)}] e] = {x_bracket(e, e, C.X.x(key), C)}")
print("locality degree:", C.locality_degree)
print("axioms up to degree 3:", check_conformal_axioms(C, 3, 2).status)
print()

###############################################################################
# Operators carry over: anything passing its identity on L passes the matching
# conformal identity for every x up to the chosen degree.

for kind, mu in [("averaging", 3), ("reynolds(2)", Fraction(-1, 2)), ("reynolds(2)", Fraction(1, 2))]:
    R = HLinearOp.scalar(H, 1, mu)
    plain = check_operator(kind, R, L).status
    conformal = check_conformal_operator(kind, R, C, 3).status
    print(f"{kind:12s} mu = {str(mu):5s} pseudoalgebra {plain:4s} conformal {conformal}")
print()

###############################################################################
# Over a group algebra the dual is finite and every x is checked.

G = group_zn(3)
K = cur_lie_ax_b(G)
CK = ConformalAlgebra(K, DualSpace(G))
M = HLinearOp.from_rows(G, [[1, 0], [0, 0]])
print("Cur(ax+b) over k[Z/3], axioms:", check_conformal_axioms(CK).status)
print("projection nijenhuis:", check_operator("nijenhuis", M, K).status, check_conformal_operator("nijenhuis", M, CK).status)
