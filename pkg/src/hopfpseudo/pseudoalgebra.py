"""Free finite-rank H-pseudoalgebras.

A pseudoalgebra of rank ``r`` is stored through the products of basis vectors
``e_i * e_j = sum_k alpha_k^{ij} (x)_H e_k`` with ``alpha_k^{ij}`` in
``H (x) H``.  Everything else follows from H-bilinearity
``h a * g b = (h (x) g (x)_H 1)(a * b)``, so every axiom check quantifies over
basis vectors only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .hopf import HElem, HopfAlgebra, TensorElem, as_fraction
from .pseudo import PseudoElem, permute
from .report import Report

__all__ = [
    "ModuleElem",
    "Pseudoalgebra",
    "pseudoproduct",
    "compose_left",
    "compose_right",
    "check_structure",
    "current",
    "rank1_lie_conditions",
    "extend_left",
    "extend_right",
    "rank_one",
    "rank_one_alpha",
    "bilinear",
]

FLAVORS = ("associative", "lie", "unchecked")
SIGMA2 = (1, 0)
SIGMA12 = (1, 0, 2)


@dataclass(frozen=True)
class ModuleElem:
    """``sum_i coeffs[i] e_i`` in the free module ``H^r``."""

    H: HopfAlgebra
    coeffs: tuple[HElem, ...]

    @classmethod
    def basis(cls, H: HopfAlgebra, rank: int, i: int, coef: HElem | None = None) -> ModuleElem:
        coeffs = [H.zero()] * rank
        coeffs[i] = H.one() if coef is None else coef
        return cls(H, tuple(coeffs))

    @classmethod
    def zero(cls, H: HopfAlgebra, rank: int) -> ModuleElem:
        return cls(H, tuple(H.zero() for _ in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: ModuleElem) -> ModuleElem:
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        return ModuleElem(self.H, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> ModuleElem:
        return ModuleElem(self.H, tuple(-a for a in self.coeffs))

    def __sub__(self, other: ModuleElem) -> ModuleElem:
        return self + (-other)

    def __rmul__(self, h):
        """Left action by a scalar or an element of ``H``."""
        if isinstance(h, (int, Fraction)):
            return ModuleElem(self.H, tuple(a * h for a in self.coeffs))
        if isinstance(h, HElem):
            return ModuleElem(self.H, tuple(h * a for a in self.coeffs))
        return NotImplemented

    def scale(self, c) -> ModuleElem:
        c = as_fraction(c)
        return ModuleElem(self.H, tuple(a * c for a in self.coeffs))

    @property
    def is_zero(self) -> bool:
        return all(a.is_zero for a in self.coeffs)

    def __str__(self):
        parts = []
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            text = str(a)
            if text == "1":
                parts.append(f"e{i + 1}")
            else:
                parts.append(f"({text}) e{i + 1}")
        return " + ".join(parts) if parts else "0"


ProductFn = Callable[[int, int], PseudoElem]


def bilinear(prod: ProductFn, a: ModuleElem, b: ModuleElem, H: HopfAlgebra, rank: int) -> PseudoElem:
    """Extend a basis product by H-bilinearity."""
    full: dict[int, TensorElem] = {}
    for i, h in enumerate(a.coeffs):
        if h.is_zero:
            continue
        for j, g in enumerate(b.coeffs):
            if g.is_zero:
                continue
            p = prod(i, j)
            if p.is_zero:
                continue
            left = TensorElem.pure(h, g)
            for m, beta in p.full.items():
                piece = left * beta
                full[m] = full[m] + piece if m in full else piece
    return PseudoElem.from_full(H, 2, rank, full)


def extend_left(p: PseudoElem, c: ModuleElem, prod: ProductFn) -> PseudoElem:
    """``(sum beta_k (x)_H e_k) * c = sum (beta_k (x) 1)(Delta (x) id)(e_k * c)``."""
    H, rank = p.H, p.rank
    full: dict[int, TensorElem] = {}
    for k, beta in p.full.items():
        inner = bilinear(prod, ModuleElem.basis(H, rank, k), c, H, rank)
        left = beta.insert_unit(2)
        for m, gamma in inner.full.items():
            piece = left * gamma.apply_coproduct(0)
            full[m] = full[m] + piece if m in full else piece
    return PseudoElem.from_full(H, 3, rank, full)


def extend_right(a: ModuleElem, p: PseudoElem, prod: ProductFn) -> PseudoElem:
    """``a * (sum beta_k (x)_H e_k) = sum (1 (x) beta_k)(id (x) Delta)(a * e_k)``."""
    H, rank = p.H, p.rank
    full: dict[int, TensorElem] = {}
    for k, beta in p.full.items():
        inner = bilinear(prod, a, ModuleElem.basis(H, rank, k), H, rank)
        left = beta.insert_unit(0)
        for m, gamma in inner.full.items():
            piece = left * gamma.apply_coproduct(1)
            full[m] = full[m] + piece if m in full else piece
    return PseudoElem.from_full(H, 3, rank, full)


class Pseudoalgebra:
    """A free H-pseudoalgebra of finite rank.

    ``table[(i, j)]`` maps ``k`` to ``alpha_k^{ij}`` (0-based indices); missing
    entries are zero.  ``flavor`` records what the table is meant to be and
    is only verified by :meth:`check_structure`.
    """

    def __init__(
        self,
        H: HopfAlgebra,
        rank: int,
        table: Mapping[tuple[int, int], Mapping[int, TensorElem]] | None = None,
        flavor: str = "unchecked",
        name: str = "",
    ):
        if rank < 1:
            raise ValueError("rank must be positive")
        if flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {flavor!r}")
        self.H, self.rank, self.flavor, self.name = H, rank, flavor, name
        products = {}
        for (i, j), row in (table or {}).items():
            if not (0 <= i < rank and 0 <= j < rank):
                raise ValueError(f"table entry e{i + 1} * e{j + 1} outside rank {rank}")
            full = {}
            for k, alpha in row.items():
                if not 0 <= k < rank:
                    raise ValueError(f"table entry e{i + 1} * e{j + 1} references e{k + 1} outside rank {rank}")
                if alpha.H is not H or alpha.arity != 2:
                    raise ValueError("table coefficients must lie in H (x) H over the declared Hopf algebra")
                full[k] = alpha
            p = PseudoElem.from_full(H, 2, rank, full)
            if p:
                products[(i, j)] = p
        self._products = products
        self._cache: dict = {}

    @classmethod
    def from_products(cls, H, rank, products: Mapping[tuple[int, int], PseudoElem], flavor="unchecked", name=""):
        table = {ij: dict(p.full) for ij, p in products.items()}
        return cls(H, rank, table, flavor, name)

    # -- access ----------------------------------------------------------------------

    def basis_product(self, i: int, j: int) -> PseudoElem:
        p = self._products.get((i, j))
        if p is None:
            p = PseudoElem.zero(self.H, 2, self.rank)
        return p

    def coefficient(self, i: int, j: int, k: int) -> TensorElem:
        """``alpha_k^{ij}`` in its unique full form."""
        return self.basis_product(i, j).full.get(k, TensorElem.zero(self.H, 2))

    @property
    def table(self) -> dict:
        return {ij: dict(p.full) for ij, p in sorted(self._products.items())}

    def e(self, i: int, coef: HElem | None = None) -> ModuleElem:
        return ModuleElem.basis(self.H, self.rank, i, coef)

    def basis(self) -> list[ModuleElem]:
        return [self.e(i) for i in range(self.rank)]

    def max_table_degree(self) -> int:
        """Largest PBW degree in the canonical form of any basis product."""
        return max((p.max_degree() for p in self._products.values()), default=-1)

    def is_zero(self) -> bool:
        return not self._products

    def _check_elem(self, *elems: ModuleElem) -> None:
        for a in elems:
            if a.H is not self.H or a.rank != self.rank:
                raise ValueError("module element does not belong to this pseudoalgebra")

    # -- products ---------------------------------------------------------------------

    def product(self, a: ModuleElem, b: ModuleElem) -> PseudoElem:
        self._check_elem(a, b)
        return bilinear(self.basis_product, a, b, self.H, self.rank)

    def compose_left(self, a: ModuleElem, b: ModuleElem, c: ModuleElem) -> PseudoElem:
        """``(a * b) * c`` in ``H^{(x) 3} (x)_H A``."""
        self._check_elem(c)
        return extend_left(self.product(a, b), c, self.basis_product)

    def compose_right(self, a: ModuleElem, b: ModuleElem, c: ModuleElem) -> PseudoElem:
        """``a * (b * c)`` in ``H^{(x) 3} (x)_H A``."""
        self._check_elem(a)
        return extend_right(a, self.product(b, c), self.basis_product)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"Pseudoalgebra{label}(rank={self.rank}, flavor={self.flavor!r}, H={self.H!r})"

    def describe(self) -> str:
        lines = []
        for (i, j), p in sorted(self._products.items()):
            lines.append(f"e{i + 1} * e{j + 1} = {p}")
        return "\n".join(lines) if lines else "(zero pseudoproduct)"


def pseudoproduct(a: ModuleElem, b: ModuleElem, A: Pseudoalgebra) -> PseudoElem:
    return A.product(a, b)


def compose_left(a: ModuleElem, b: ModuleElem, c: ModuleElem, A: Pseudoalgebra) -> PseudoElem:
    return A.compose_left(a, b, c)


def compose_right(a: ModuleElem, b: ModuleElem, c: ModuleElem, A: Pseudoalgebra) -> PseudoElem:
    return A.compose_right(a, b, c)


# ---------------------------------------------------------------------------
# Axiom checks
# ---------------------------------------------------------------------------


def _label(*idx: int) -> str:
    return "(" + ", ".join(f"e{i + 1}" for i in idx) + ")"


def associativity_report(A: Pseudoalgebra, title: str = "associativity") -> Report:
    rep = Report(title)
    basis = A.basis()
    for i, j, k in itertools.product(range(A.rank), repeat=3):
        a, b, c = basis[i], basis[j], basis[k]
        residual = A.compose_left(a, b, c) - A.compose_right(a, b, c)
        rep.tick()
        if residual:
            rep.fail(_label(i, j, k), residual)
    return rep


def skew_report(A: Pseudoalgebra) -> Report:
    rep = Report("skew-commutativity")
    for i, j in itertools.product(range(A.rank), repeat=2):
        if j < i:
            continue
        residual = A.basis_product(j, i) + permute(SIGMA2, A.basis_product(i, j))
        rep.tick()
        if residual:
            rep.fail(_label(i, j), residual)
    return rep


def jacobi_residual(A: Pseudoalgebra, a: ModuleElem, b: ModuleElem, c: ModuleElem) -> PseudoElem:
    """``[a*[b*c]] - [[a*b]*c] - ((sigma (x) id) (x)_H id)[b*[a*c]]``."""
    return A.compose_right(a, b, c) - A.compose_left(a, b, c) - permute(SIGMA12, A.compose_right(b, a, c))


def jacobi_report(A: Pseudoalgebra) -> Report:
    rep = Report("Jacobi identity")
    basis = A.basis()
    for i, j, k in itertools.product(range(A.rank), repeat=3):
        residual = jacobi_residual(A, basis[i], basis[j], basis[k])
        rep.tick()
        if residual:
            rep.fail(_label(i, j, k), residual)
    return rep


def check_structure(A: Pseudoalgebra, flavor: str | None = None) -> Report:
    """Verify the associative or Lie axioms on all basis pairs and triples."""
    flavor = flavor or A.flavor
    if flavor == "associative":
        rep = Report(f"associative structure of {A.name or 'pseudoalgebra'}")
        rep.add(associativity_report(A))
        return rep
    if flavor == "lie":
        rep = Report(f"Lie structure of {A.name or 'pseudoalgebra'}")
        rep.add(skew_report(A))
        rep.add(jacobi_report(A))
        return rep
    raise ValueError("check_structure needs flavor 'associative' or 'lie'")


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def current(
    base_dim: int,
    base_table: Mapping[tuple[int, int], Mapping[int, object]],
    H: HopfAlgebra,
    flavor: str = "unchecked",
    name: str = "",
) -> Pseudoalgebra:
    """The current pseudoalgebra ``H (x) A`` of a k-algebra with ``e_i e_j = sum m_ij^k e_k``."""
    one = TensorElem.one(H, 2)
    table = {}
    for (i, j), row in base_table.items():
        entry = {}
        for k, c in row.items():
            c = as_fraction(c)
            if c:
                entry[k] = one.scale(c)
        if entry:
            table[(i, j)] = entry
    return Pseudoalgebra(H, base_dim, table, flavor, name or "current")


def rank_one(H: HopfAlgebra, alpha: TensorElem, flavor: str = "lie", name: str = "") -> Pseudoalgebra:
    """Rank-1 pseudoalgebra with ``[e * e] = alpha (x)_H e``."""
    return Pseudoalgebra(H, 1, {(0, 0): {0: alpha}}, flavor, name or "rank one")


def rank_one_alpha(H: HopfAlgebra, r: TensorElem, s: HElem) -> TensorElem:
    """``alpha = r + s (x) 1 - 1 (x) s``."""
    one = H.one()
    return r + TensorElem.pure(s, one) - TensorElem.pure(one, s)


def _validate_rs(H: HopfAlgebra, r: TensorElem, s: HElem) -> None:
    if r.H is not H or s.H is not H or r.arity != 2:
        raise ValueError("r must lie in H (x) H and s in H over the same Hopf algebra")
    for keys in r.terms:
        for I, g in keys:
            if sum(I) != 1 or g != H.group.identity:
                raise ValueError("r must be built from Lie algebra generators in both slots")
    if r.flip() != -r:
        raise ValueError("r must be antisymmetric")
    if H.filtration_degree(s) > 1 or H.counit(s) != 0:
        raise ValueError("s must be an element of the Lie algebra (degree <= 1, zero counit)")


def rank1_lie_conditions(r: TensorElem, s: HElem, H: HopfAlgebra) -> Report:
    """The two conditions on ``(r, s)`` making ``r + s (x) 1 - 1 (x) s`` a Lie bracket."""
    _validate_rs(H, r, s)
    rep = Report("rank-one Lie conditions on (r, s)")
    cond1 = Report("[r, Delta(s)] = 0")
    ds = H.coproduct(s)
    res1 = r * ds - ds * r
    cond1.tick()
    if res1:
        cond1.fail("r", res1)
    rep.add(cond1)

    cond2 = Report("six-term identity in H^3")
    r12, r13, r23 = r.insert_unit(2), r.insert_unit(1), r.insert_unit(0)
    one = H.one()
    s1 = TensorElem.pure(s, one, one)
    s2 = TensorElem.pure(one, s, one)
    s3 = TensorElem.pure(one, one, s)

    def br(x, y):
        return x * y - y * x

    res2 = br(r12, r13) + r12 * s3 + br(r12, r23) + r23 * s1 + br(r13, r23) - r13 * s2
    cond2.tick()
    if res2:
        cond2.fail("r, s", res2)
    rep.add(cond2)
    return rep
