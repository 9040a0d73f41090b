"""Ready-made Hopf algebras, pseudoalgebras and operators used in demos and tests."""

from __future__ import annotations

from fractions import Fraction

from .hopf import GroupSpec, HElem, HopfAlgebra, LieAlgebraSpec, TensorElem, as_fraction
from .operators import HLinearOp
from .pseudoalgebra import Pseudoalgebra, current, rank_one_alpha, rank_one

__all__ = [
    "k_d",
    "u_delta2",
    "u_abelian",
    "group_zn",
    "smash_kd_z2",
    "w1",
    "example_two_two",
    "example_averaging",
    "example_nijenhuis_one",
    "example_nijenhuis_two",
    "example_reynolds",
    "cur_kxk",
    "cur_dual_numbers",
    "cur_upper_triangular",
    "cur_lie_ax_b",
    "standard_alpha",
    "commutator_alpha",
    "rank_one_from_pair",
    "averaging_kxk",
    "left_multiplication_t2",
]


def k_d(degree_cap: int = 8) -> HopfAlgebra:
    """``k[d] = U(k d)``, the one-variable case."""
    return HopfAlgebra.enveloping(LieAlgebraSpec(1), degree_cap)


def u_delta2(degree_cap: int = 8) -> HopfAlgebra:
    """``U(g)`` for the two-dimensional nonabelian Lie algebra ``[d1, d2] = d2``."""
    return HopfAlgebra.enveloping(LieAlgebraSpec(2, {(0, 1): {1: 1}}), degree_cap)


def u_abelian(dim: int, degree_cap: int = 8) -> HopfAlgebra:
    return HopfAlgebra.enveloping(LieAlgebraSpec.abelian(dim), degree_cap)


def group_zn(n: int) -> HopfAlgebra:
    return HopfAlgebra.group_algebra(GroupSpec.cyclic(n))


def smash_kd_z2(degree_cap: int = 8) -> HopfAlgebra:
    """``k[d] # k[Z/2]`` with the generator acting by ``d -> -d``."""
    return HopfAlgebra.smash(LieAlgebraSpec(1), GroupSpec.cyclic(2), {(1, 0): {0: -1}}, degree_cap)


def standard_alpha(H: HopfAlgebra, i: int = 0) -> TensorElem:
    """``d_i (x) 1 - 1 (x) d_i``."""
    one = H.one()
    d = H.gen(i)
    return TensorElem.pure(d, one) - TensorElem.pure(one, d)


def commutator_alpha(H: HopfAlgebra) -> TensorElem:
    """``1 (x) 1``, the table of a current algebra of ``k``."""
    return TensorElem.one(H, 2)


def w1(H: HopfAlgebra | None = None) -> Pseudoalgebra:
    """The rank-one Lie pseudoalgebra with ``[e * e] = (d (x) 1 - 1 (x) d) (x)_H e``."""
    H = H if H is not None else k_d()
    return rank_one(H, standard_alpha(H), "lie", "W(1)")


def example_two_two(H: HopfAlgebra, alpha: TensorElem, flavor: str = "unchecked") -> Pseudoalgebra:
    """Rank two, the only nonzero product being ``e2 * e2 = alpha (x)_H e2``."""
    return Pseudoalgebra(H, 2, {(1, 1): {1: alpha}}, flavor, "two-generator example")


def _elem(H: HopfAlgebra, v) -> HElem:
    return v if isinstance(v, HElem) else H.scalar(v)


def example_averaging(H: HopfAlgebra, h, lam) -> HLinearOp:
    """``T(e1) = h e1``, ``T(e2) = lam e2``."""
    return HLinearOp.diagonal(H, [_elem(H, h), H.scalar(lam)], "T")


def example_nijenhuis_one(H: HopfAlgebra, h, lam) -> HLinearOp:
    """``N1(e1) = h e1``, ``N1(e2) = lam e2``."""
    return HLinearOp.diagonal(H, [_elem(H, h), H.scalar(lam)], "N1")


def example_nijenhuis_two(H: HopfAlgebra, g, lam) -> HLinearOp:
    """``N2(e1) = lam e1``, ``N2(e2) = g e1 + lam e2`` with ``g`` central."""
    g = _elem(H, g)
    return HLinearOp.from_rows(H, [[H.scalar(lam), H.zero()], [g, H.scalar(lam)]], "N2")


def example_reynolds(H: HopfAlgebra, h, mu) -> HLinearOp:
    """``R(e1) = h e1``, ``R(e2) = mu e2``; Reynolds of weight ``w`` exactly when ``mu`` is 0 or ``-1/w``."""
    return HLinearOp.diagonal(H, [_elem(H, h), H.scalar(mu)], "R")


def cur_kxk(H: HopfAlgebra) -> Pseudoalgebra:
    """Current algebra of ``k x k`` (orthogonal idempotents)."""
    return current(2, {(0, 0): {0: 1}, (1, 1): {1: 1}}, H, "associative", "Cur(k x k)")


def cur_dual_numbers(H: HopfAlgebra) -> Pseudoalgebra:
    """Current algebra of ``k[t]/(t^2)`` with basis ``1, t``."""
    return current(2, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}, H, "associative", "Cur(k[t]/t^2)")


def cur_upper_triangular(H: HopfAlgebra) -> Pseudoalgebra:
    """Current algebra of upper triangular 2x2 matrices, basis ``E11, E12, E22``."""
    table = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 2): {1: 1}, (2, 2): {2: 1}}
    return current(3, table, H, "associative", "Cur(T2)")


def cur_lie_ax_b(H: HopfAlgebra) -> Pseudoalgebra:
    """Current algebra of the Lie algebra ``[x, y] = y``."""
    return current(2, {(0, 1): {1: 1}, (1, 0): {1: -1}}, H, "lie", "Cur(ax+b)")


def rank_one_from_pair(H: HopfAlgebra, r: TensorElem, s: HElem) -> Pseudoalgebra:
    return rank_one(H, rank_one_alpha(H, r, s), "lie", "rank one (r, s)")


def averaging_kxk(H: HopfAlgebra) -> HLinearOp:
    """Lift of ``E(x, y) = ((x + y)/2, (x + y)/2)``, an idempotent averaging operator on ``k x k``."""
    half = Fraction(1, 2)
    return HLinearOp.from_rows(H, [[half, half], [half, half]], "E")


def left_multiplication_t2(H: HopfAlgebra, u=(1, 2, 3)) -> HLinearOp:
    """Lift of ``x -> u x`` on upper triangular matrices, ``u = a E11 + b E12 + c E22``."""
    a, b, c = (as_fraction(v) for v in u)
    # u E11 = a E11, u E12 = a E12, u E22 = b E12 + c E22
    return HLinearOp.from_rows(H, [[a, 0, 0], [0, a, 0], [0, b, c]], "L_u")
