"""
Lifting an averaging operator to the annihilation algebra
=========================================================

Over a finite group algebra H = k[Z/3] the dual X = H* is finite, so the
annihilation algebra X (x)_H A is an ordinary finite-dimensional algebra.
An averaging H-operator T on A together with a suitable map xi on X gives an
averaging operator xi (x) T on it.  The integral ``t = 1 + g + g^2`` of H
provides such a xi.
"""

import itertools
from fractions import Fraction

from hopfpseudo.annihilation import (
    AnnihilationElem,
    DualMap,
    annihilation_basis,
    annihilation_product,
    check_lift,
    integral_map,
)
from hopfpseudo.corpus import commutator_alpha, example_averaging, example_nijenhuis_one, example_two_two, group_zn
from hopfpseudo.dual import DualSpace
from hopfpseudo.operators import check_operator

H = group_zn(3)
X = DualSpace(H)
g = H.group_element(1)

# rank two, e2 * e2 = (1 (x) 1) (x)_H e2 and every product with e1 zero
A = example_two_two(H, commutator_alpha(H), "associative")
T = example_averaging(H, g * 2 - 1, Fraction(3, 2))
print(T)
print("T averaging on A:", check_operator("averaging", T, A).status)
print()

###############################################################################
# The annihilation algebra has basis x_a (x) e_i for a in Z/3.  Products of
# dual basis elements are idempotent-like: x_a x_b = delta_ab x_a.

basis = annihilation_basis(X, A.rank)
print("dimension:", len(basis))
x0, x1 = X.x(H.basis(0)[0]), X.x(H.basis(0)[1])
u = AnnihilationElem.basis_elem(X, 2, x0, 1)
v = AnnihilationElem.basis_elem(X, 2, x1, 1)
print("(x0 e2)(x0 e2) =", annihilation_product(u, u, A))
print("(x0 e2)(x1 e2) =", annihilation_product(u, v, A))

mul_ok = all(
    annihilation_product(annihilation_product(a, b, A), c, A).agrees(annihilation_product(a, annihilation_product(b, c, A), A))
    for a, b, c in itertools.product(basis, repeat=3)
)
print("associative:", mul_ok)
print()

###############################################################################
# Lifting.  The report checks the hypotheses on xi first and then the plain
# averaging identity on the annihilation algebra.

rep = check_lift("averaging", integral_map(X), T, A, X)
print(rep.render())
print()

# A Nijenhuis lift needs xi to be multiplicative; the integral is not group-like
# but the zero map qualifies.
N = example_nijenhuis_one(H, g, 2)
print("integral, nijenhuis hypotheses:", check_lift("nijenhuis", integral_map(X), N, A, X).data["hypotheses"])
print("zero map, nijenhuis lift:", check_lift("nijenhuis", DualMap.zero(X), N, A, X).status)
