"""The annihilation algebra ``X (x)_H L`` and lifts of pseudoalgebra operators.

Elements are kept as ``sum_k x_k (x)_H e_k``: an H-coefficient on a module
slot moves into the dual slot through ``x (x)_H h a = (x . h) (x)_H a``, so
a free module of rank ``r`` gives ``X^r``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .dual import DualElem, DualSpace, dual_left_act, dual_product, dual_right_act
from .hopf import HElem, HopfAlgebra, TensorElem, as_fraction
from .operators import HLinearOp, OperatorKind, check_operator, parse_kind
from .pseudo import PseudoElem
from .pseudoalgebra import ModuleElem, Pseudoalgebra
from .report import Report

__all__ = [
    "AnnihilationElem",
    "DualMap",
    "annihilation_basis",
    "annihilation_product",
    "product_from_representatives",
    "lift_operator",
    "check_dual_map_linearity",
    "check_xi_hypotheses",
    "check_lift",
    "check_plain_identity",
    "integral_map",
]


@dataclass(frozen=True, eq=False)
class AnnihilationElem:
    """``sum_k parts[k] (x)_H e_k``."""

    X: DualSpace
    rank: int
    parts: Mapping  # module index -> DualElem

    def __post_init__(self):
        clean = {k: x for k, x in self.parts.items() if not x.is_zero}
        if any(not 0 <= k < self.rank for k in clean):
            raise ValueError("module index out of range")
        object.__setattr__(self, "parts", dict(sorted(clean.items())))

    @classmethod
    def zero(cls, X: DualSpace, rank: int) -> AnnihilationElem:
        return cls(X, rank, {})

    @classmethod
    def make(cls, X: DualSpace, x: DualElem, a: ModuleElem) -> AnnihilationElem:
        """``x (x)_H a`` for a module element ``a = sum h_k e_k``."""
        parts = {}
        for k, h in enumerate(a.coeffs):
            if not h.is_zero:
                parts[k] = dual_right_act(x, h)
        return cls(X, a.rank, parts)

    @classmethod
    def basis_elem(cls, X: DualSpace, rank: int, x: DualElem, k: int) -> AnnihilationElem:
        return cls(X, rank, {k: x})

    def part(self, k: int) -> DualElem:
        return self.parts.get(k, self.X.zero())

    def __add__(self, other: AnnihilationElem) -> AnnihilationElem:
        parts = dict(self.parts)
        for k, x in other.parts.items():
            parts[k] = parts[k] + x if k in parts else x
        return AnnihilationElem(self.X, self.rank, parts)

    def __neg__(self) -> AnnihilationElem:
        return self.scale(-1)

    def __sub__(self, other: AnnihilationElem) -> AnnihilationElem:
        return self + (-other)

    def scale(self, c) -> AnnihilationElem:
        return AnnihilationElem(self.X, self.rank, {k: x.scale(c) for k, x in self.parts.items()})

    def left_act(self, h: HElem) -> AnnihilationElem:
        """``h (x (x)_H a) = (h . x) (x)_H a``."""
        return AnnihilationElem(self.X, self.rank, {k: dual_left_act(h, x) for k, x in self.parts.items()})

    @property
    def is_zero(self) -> bool:
        return all(x.is_zero for x in self.parts.values())

    def agrees(self, other: AnnihilationElem) -> bool:
        keys = set(self.parts) | set(other.parts)
        return all(self.part(k).agrees(other.part(k)) for k in keys)

    __eq__ = agrees

    def __hash__(self):
        return hash(tuple((k, hash(x)) for k, x in self.parts.items()))

    def validity(self) -> int | None:
        vs = [x.validity for x in self.parts.values() if x.validity is not None]
        return min(vs) if vs else None

    def __str__(self):
        items = [(k, x) for k, x in self.parts.items() if not x.is_zero]
        if not items:
            return "0"
        return " + ".join(f"({x}) (x)_H e{k + 1}" for k, x in items)


def annihilation_basis(X: DualSpace, rank: int, max_degree: int | None = None) -> list[AnnihilationElem]:
    return [AnnihilationElem.basis_elem(X, rank, x, k) for k in range(rank) for x in X.basis(max_degree)]


# ---------------------------------------------------------------------------
# Product
# ---------------------------------------------------------------------------


Representative = Iterable[tuple[TensorElem, HElem, int]]


def product_from_representatives(x: DualElem, y: DualElem, reps: Representative, X: DualSpace, rank: int) -> AnnihilationElem:
    """``(x (x)_H a)(y (x)_H b)`` from any ``a * b = sum (f (x) g) (x)_H h e_m``."""
    parts: dict[int, DualElem] = {}
    for t, h, m in reps:
        for (kf, kg), c in t.terms.items():
            H = t.H
            xf = dual_right_act(x, H.elem({kf: Fraction(1)}))
            yg = dual_right_act(y, H.elem({kg: Fraction(1)}))
            z = dual_right_act(dual_product(xf, yg), h).scale(c)
            parts[m] = parts[m] + z if m in parts else z
    return AnnihilationElem(X, rank, parts)


def _full_reps(p: PseudoElem) -> list:
    one = p.H.one()
    return [(t, one, m) for m, t in sorted(p.full.items())]


def annihilation_product(u: AnnihilationElem, v: AnnihilationElem, A: Pseudoalgebra, form: str = "full") -> AnnihilationElem:
    """Product on ``X (x)_H L`` induced by the pseudoproduct.

    ``form`` picks the representative of each basis product that is fed to
    the formula: ``"full"`` (last slot carries all of ``H (x) H``) or
    ``"canonical"`` (Fourier normal form).  Both give the same answer.
    """
    if u.rank != A.rank or v.rank != A.rank:
        raise ValueError("rank mismatch")
    X = u.X
    out = AnnihilationElem.zero(X, A.rank)
    for i, x in u.parts.items():
        for j, y in v.parts.items():
            p = A.basis_product(i, j)
            if p.is_zero:
                continue
            reps = _full_reps(p) if form == "full" else p.representative()
            out = out + product_from_representatives(x, y, reps, X, A.rank)
    return out


# ---------------------------------------------------------------------------
# Dual maps and lifted operators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DualMap:
    """A linear map ``X -> X`` given as a Python function."""

    X: DualSpace
    fn: Callable[[DualElem], DualElem]
    name: str = "xi"

    def __call__(self, x: DualElem) -> DualElem:
        return self.fn(x)

    @classmethod
    def identity(cls, X: DualSpace) -> DualMap:
        return cls(X, lambda x: x, "id")

    @classmethod
    def zero(cls, X: DualSpace) -> DualMap:
        return cls(X, lambda x: x.scale(0) if x.is_exact else X.zero(), "0")

    @classmethod
    def left_mult(cls, X: DualSpace, h: HElem, name: str | None = None) -> DualMap:
        """``x -> h . x``."""
        return cls(X, lambda x: dual_left_act(h, x), name or f"({h}).")


def integral_map(X: DualSpace, scale=1) -> DualMap:
    """``x -> (c t) . x`` for the left integral ``t``; ``None`` when there is none."""
    t = X.H.left_integral()
    if t is None:
        raise ValueError("this Hopf algebra has no nonzero left integral")
    c = as_fraction(scale)
    return DualMap.left_mult(X, t * c, f"{c}*t" if c != 1 else "t")


@dataclass(frozen=True)
class LiftedOperator:
    """``xi (x)_H P`` acting on the annihilation algebra."""

    xi: DualMap
    P: HLinearOp

    def __call__(self, u: AnnihilationElem) -> AnnihilationElem:
        parts: dict[int, DualElem] = {}
        for i, x in u.parts.items():
            xx = self.xi(x)
            for t in range(self.P.rank):
                g = self.P.entry(i, t)
                if g.is_zero:
                    continue
                z = dual_right_act(xx, g)
                parts[t] = parts[t] + z if t in parts else z
        return AnnihilationElem(u.X, u.rank, parts)


def lift_operator(xi: DualMap, P: HLinearOp) -> LiftedOperator:
    return LiftedOperator(xi, P)


def _pairs(items):
    return itertools.product(items, repeat=2)


def check_dual_map_linearity(xi: DualMap, X: DualSpace, degree: int | None = None) -> Report:
    """Left and right H-linearity of ``xi`` on dual basis elements and basis monomials."""
    H = X.H
    d = X.truncation if degree is None else degree
    rep = Report(f"H-bilinearity of {xi.name}")
    hs = [H.elem({k: Fraction(1)}) for k in H.basis(min(d, 1) if H.kind != "group" else 0)]
    for x in X.basis(d):
        for h in hs:
            rep.tick()
            if not xi(dual_left_act(h, x)).agrees(dual_left_act(h, xi(x))):
                rep.fail(f"left, x={x}, h={h}", "xi(h.x) != h.xi(x)")
            if not xi(dual_right_act(x, h)).agrees(dual_right_act(xi(x), h)):
                rep.fail(f"right, x={x}, h={h}", "xi(x.h) != xi(x).h")
    return rep


def check_xi_hypotheses(kind, xi: DualMap, X: DualSpace, weight=None, degree: int | None = None) -> Report:
    """The conditions on ``xi`` under which lifts inherit the identity."""
    kind = parse_kind(kind, weight)
    rep = Report(f"hypotheses on {xi.name} for {kind}")
    if kind.name == "rota_baxter":
        rep.undecided("no lifting hypothesis is available for Rota-Baxter operators")
        return rep
    for x, y in _pairs(X.basis(degree)):
        xx, xy = xi(x), xi(y)
        mid = dual_product(xx, xy)
        rep.tick()
        if not xi(dual_product(xx, y)).agrees(mid):
            rep.fail(f"({x}, {y})", "xi(xi(x) y) != xi(x) xi(y)")
        if not xi(dual_product(x, xy)).agrees(mid):
            rep.fail(f"({x}, {y})", "xi(x xi(y)) != xi(x) xi(y)")
        if kind.name == "nijenhuis" and not xi(xi(dual_product(x, y))).agrees(mid):
            rep.fail(f"({x}, {y})", "xi^2(x y) != xi(x) xi(y)")
        if kind.name == "reynolds" and not xi(mid).agrees(mid):
            rep.fail(f"({x}, {y})", "xi(xi(x) xi(y)) != xi(x) xi(y)")
    return rep


def plain_residuals(kind: OperatorKind, Q, mul, u, v) -> list:
    """Residuals of the operator identity for a plain (non-pseudo) algebra."""
    Qu, Qv = Q(u), Q(v)
    QuQv = mul(Qu, Qv)
    if kind.name == "averaging":
        return [Q(mul(Qu, v)) - QuQv, Q(mul(u, Qv)) - QuQv]
    if kind.name == "nijenhuis":
        return [QuQv - Q(mul(Qu, v) + mul(u, Qv) - Q(mul(u, v)))]
    if kind.name == "reynolds":
        return [QuQv - Q(mul(Qu, v) + mul(u, Qv) + QuQv.scale(kind.weight))]
    return [QuQv - Q(mul(Qu, v) + mul(u, Qv) + mul(u, v).scale(kind.weight))]


def check_plain_identity(kind, Q, A: Pseudoalgebra, X: DualSpace, weight=None, degree: int | None = None) -> Report:
    """The operator identity for ``Q`` on basis pairs of the annihilation algebra."""
    kind = parse_kind(kind, weight)
    rep = Report(f"{kind} identity on the annihilation algebra")

    def mul(u, v):
        return annihilation_product(u, v, A)

    basis = annihilation_basis(X, A.rank, degree)
    for u, v in _pairs(basis):
        rep.tick()
        for n, res in enumerate(plain_residuals(kind, Q, mul, u, v)):
            if not res.agrees(AnnihilationElem.zero(X, A.rank)):
                rep.fail(f"({u}, {v}) part {n + 1}", res)
    return rep


def check_lift(kind, xi: DualMap, P: HLinearOp, A: Pseudoalgebra, X: DualSpace, weight=None, degree: int | None = None) -> Report:
    """Check the hypotheses on ``xi`` and ``P``, then the identity for the lift.

    Failed hypotheses are reported, and the lift is still evaluated so the
    outcome stays visible.  The verdict is that of the lifted identity when
    the hypotheses hold and ``FAIL`` otherwise.
    """
    kind = parse_kind(kind, weight)
    rep = Report(f"lift {xi.name} (x) {P.name or 'P'} as {kind}")
    hyp = Report("hypotheses")
    hyp.add(check_dual_map_linearity(xi, X, degree))
    hyp.add(check_xi_hypotheses(kind, xi, X, degree=degree))
    hyp.add(check_operator(kind, P, A))
    rep.add(hyp)
    lifted = check_plain_identity(kind, lift_operator(xi, P), A, X, degree=degree)
    rep.add(lifted)
    rep.data["hypotheses"] = hyp.passed
    rep.data["lift"] = lifted.passed
    return rep
