"""x-brackets and the conformal algebra induced by a Lie pseudoalgebra.

For ``[a * b] = sum f_i (x) g_i (x)_H c_i`` the x-bracket is
``[a_x b] = sum <S*(x), f_i S(g_i(1))> g_i(2) c_i``.  The sesqui-linearity
rules are written with the actions ``h x`` and ``x h`` of ``H`` on ``X`` given
by ``<h x, f> = <x, S(h) f>`` and ``<x h, f> = <x, f S(h)>``; see
:func:`bdk_left` and :func:`bdk_right`.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .dual import DualElem, DualSpace, ValidityError, dual_coproduct, dual_left_act, dual_product, dual_right_act
from .hopf import HElem, HopfAlgebra, Key, TensorElem
from .operators import HLinearOp, OperatorKind, parse_kind
from .pseudo import PseudoElem
from .pseudoalgebra import ModuleElem, Pseudoalgebra, check_structure
from .report import Report

__all__ = [
    "eta",
    "bdk_left",
    "bdk_right",
    "ConformalAlgebra",
    "x_bracket",
    "check_conformal_axioms",
    "check_conformal_operator",
    "conformal_residuals",
]


def _pair_antipode(x: DualElem, h: HElem) -> Fraction:
    """``<S*(x), h> = <x, S(h)>``."""
    return x.pair(h.H.antipode(h))


def eta(x: DualElem, t: TensorElem) -> HElem:
    """``eta_x(f (x) g) = <S*(x), f S(g_(1))> g_(2)``, extended linearly."""
    if t.arity != 2:
        raise ValueError("eta takes an element of H (x) H")
    H = t.H
    out = {}
    for (kf, kg), c in t.terms.items():
        for (k1, k2), c2 in H.coproduct_basis(kg).items():
            prod = H.mul(H.elem({kf: Fraction(1)}), H.antipode(H.elem({k1: Fraction(1)})))
            val = _pair_antipode(x, prod)
            if val:
                out[k2] = out.get(k2, Fraction(0)) + c * c2 * val
    return H.elem(out)


def bdk_left(h: HElem, x: DualElem) -> DualElem:
    """``h x`` with ``<h x, f> = <x, S(h) f>``."""
    return dual_right_act(x, h.antipode())


def bdk_right(x: DualElem, h: HElem) -> DualElem:
    """``x h`` with ``<x h, f> = <x, f S(h)>``."""
    return dual_left_act(h.antipode(), x)


def _is_basis(a: ModuleElem) -> int | None:
    nz = [(k, h) for k, h in enumerate(a.coeffs) if not h.is_zero]
    if len(nz) == 1 and nz[0][1] == a.H.one():
        return nz[0][0]
    return None


class ConformalAlgebra:
    """The x-brackets of a Lie pseudoalgebra.

    Brackets of basis elements at dual basis functionals live in ``cache``,
    keyed by ``(i, j, key)``; brackets at other functionals are expanded over
    the cache.  Brackets of non-basis elements are evaluated directly from the
    pseudoproduct.  Dual basis functionals beyond ``locality_degree`` give zero
    brackets, which :func:`check_conformal_axioms` verifies.
    """

    def __init__(self, L: Pseudoalgebra, X: DualSpace | None = None, name: str = ""):
        if X is None:
            X = DualSpace(L.H)
        if X.H is not L.H:
            raise ValueError("dual space over a different Hopf algebra")
        self.L = L
        self.X = X
        self.H = L.H
        self.name = name or f"conformal({L.name})"
        self.cache: dict[tuple[int, int, Key], ModuleElem] = {}
        self.locality_degree = self._head_degree()

    def _head_degree(self) -> int:
        """Largest degree of a first slot in the canonical forms of basis products."""
        M = 0
        for i, j in itertools.product(range(self.L.rank), repeat=2):
            for t, _h, _m in self.L.basis_product(i, j).representative():
                for (k1, _k2) in t.terms:
                    M = max(M, self.H.key_degree(k1))
        return M

    def e(self, i: int) -> ModuleElem:
        return self.L.e(i)

    def _basis_bracket(self, i: int, j: int, key: Key) -> ModuleElem:
        hit = self.cache.get((i, j, key))
        if hit is None:
            # canonical form sum h (x) 1 (x)_H c gives sum <S*(x), h> c
            x = DualElem(self.X, {key: Fraction(1)})
            rank = self.L.rank
            out = ModuleElem.zero(self.H, rank)
            for t, coef, m in self.L.basis_product(i, j).representative():
                val = Fraction(0)
                for (k1, _k2), c in t.terms.items():
                    val += c * _pair_antipode(x, self.H.elem({k1: Fraction(1)}))
                if val:
                    out = out + ModuleElem.basis(self.H, rank, m, coef * val)
            self.cache[(i, j, key)] = hit = out
        return hit

    def fill_cache(self) -> None:
        for i, j in itertools.product(range(self.L.rank), repeat=2):
            for key in self.H.basis(self.locality_degree):
                self._basis_bracket(i, j, key)

    def direct(self, a: ModuleElem, b: ModuleElem, x: DualElem) -> ModuleElem:
        """Evaluate the x-bracket from the full form of the pseudoproduct."""
        p = self.L.product(a, b)
        out = ModuleElem.zero(self.H, self.L.rank)
        for m, t in sorted(p.full.items()):
            h = eta(x, t)
            if not h.is_zero:
                out = out + ModuleElem.basis(self.H, self.L.rank, m, h)
        return out

    def bracket(self, a: ModuleElem, b: ModuleElem, x: DualElem) -> ModuleElem:
        i, j = _is_basis(a), _is_basis(b)
        if i is None or j is None:
            return self.direct(a, b, x)
        out = ModuleElem.zero(self.H, self.L.rank)
        for key in self.H.basis(self.locality_degree):
            c = x.value(key)
            if c:
                out = out + self._basis_bracket(i, j, key).scale(c)
        return out

    def full_degree(self) -> int:
        """Largest ``deg f + deg g`` over full forms of basis products."""
        D = 0
        for i, j in itertools.product(range(self.L.rank), repeat=2):
            for t in self.L.basis_product(i, j).full.values():
                for k1, k2 in t.terms:
                    D = max(D, self.H.key_degree(k1) + self.H.key_degree(k2))
        return D

    def max_value_degree(self) -> int:
        self.fill_cache()
        return max((h.degree() for v in self.cache.values() for h in v.coeffs if not h.is_zero), default=0)


def x_bracket(a: ModuleElem, b: ModuleElem, x: DualElem, C: ConformalAlgebra) -> ModuleElem:
    """``[a_x b]``."""
    return C.bracket(a, b, x)


def _mod_eq(u: ModuleElem, v: ModuleElem) -> bool:
    return (u - v).is_zero


def _x_keys(C: ConformalAlgebra, degree: int | None) -> list[Key]:
    if C.H.kind == "group":
        return C.H.basis(0)
    return C.H.basis(3 if degree is None else degree)


def _check_sesquilinearity(C: ConformalAlgebra, xs, hs) -> Report:
    rep = Report("H-sesqui-linearity")
    L, H = C.L, C.H
    for i, j in itertools.product(range(L.rank), repeat=2):
        for x, h in itertools.product(xs, hs):
            rep.tick()
            lhs = C.bracket(h * C.e(i), C.e(j), x)
            rhs = C.bracket(C.e(i), C.e(j), bdk_right(x, h))
            if not _mod_eq(lhs, rhs):
                rep.fail(f"[h a_x b], a=e{i + 1}, b=e{j + 1}, x={x}, h={h}", lhs - rhs)
            lhs = C.bracket(C.e(i), h * C.e(j), x)
            rhs = ModuleElem.zero(H, L.rank)
            for (k1, k2), c in H.coproduct_basis(next(iter(h.terms))).items():
                h1 = H.elem({k1: Fraction(1)})
                h2 = H.elem({k2: Fraction(1)})
                inner = C.bracket(C.e(i), C.e(j), bdk_left(h1.antipode(), x))
                rhs = rhs + (h2 * c) * inner
            if not _mod_eq(lhs, rhs):
                rep.fail(f"[a_x h b], a=e{i + 1}, b=e{j + 1}, x={x}, h={h}", lhs - rhs)
    return rep


def _check_skew(C: ConformalAlgebra, xs) -> Report:
    rep = Report("skew-commutativity")
    L, H = C.L, C.H
    M = C.locality_degree
    for i, j in itertools.product(range(L.rank), repeat=2):
        for x in xs:
            rep.tick()
            lhs = C.bracket(C.e(i), C.e(j), x)
            rhs = ModuleElem.zero(H, L.rank)
            for key in H.basis(M):
                inner = C.bracket(C.e(j), C.e(i), DualElem(C.X, {key: Fraction(1)}))
                if inner.is_zero:
                    continue
                coef = H.zero()
                for (k1, k2), c in H.coproduct_basis(key).items():
                    val = x.pair(H.antipode(H.elem({k1: Fraction(1)})))
                    if val:
                        coef = coef + H.antipode(H.elem({k2: c * val}))
                if not coef.is_zero:
                    rhs = rhs - coef * inner
            if not _mod_eq(lhs, rhs):
                rep.fail(f"a=e{i + 1}, b=e{j + 1}, x={x}", lhs - rhs)
    return rep


def _check_jacobi(C: ConformalAlgebra, xs) -> Report:
    rep = Report("Jacobi identity")
    L = C.L
    # x_(1) is only probed by brackets [u_z c] with deg u <= max_value_degree
    bound = max(C.locality_degree, C.full_degree() + C.max_value_degree())
    for i, j, k in itertools.product(range(L.rank), repeat=3):
        a, b, c = C.e(i), C.e(j), C.e(k)
        for x, y in itertools.product(xs, repeat=2):
            rep.tick()
            lhs = C.bracket(a, C.bracket(b, c, y), x) - C.bracket(b, C.bracket(a, c, x), y)
            rhs = ModuleElem.zero(C.H, L.rank)
            for x1, x2 in dual_coproduct(x, bound):
                u = C.bracket(a, b, x2)
                if u.is_zero:
                    continue
                rhs = rhs + C.bracket(u, c, dual_product(y, x1))
            if not _mod_eq(lhs, rhs):
                rep.fail(f"a=e{i + 1}, b=e{j + 1}, c=e{k + 1}, x={x}, y={y}", lhs - rhs)
    return rep


def _check_locality(C: ConformalAlgebra, margin: int = 2) -> Report:
    M = C.locality_degree
    rep = Report(f"locality: [a_x b] = 0 when x vanishes on F^{M} H")
    H = C.H
    if H.kind == "group":
        rep.note("X is finite-dimensional")
        return rep
    L = C.L
    for i, j in itertools.product(range(L.rank), repeat=2):
        for key in H.basis(M + margin):
            if H.key_degree(key) <= M:
                continue
            rep.tick()
            val = C.direct(C.e(i), C.e(j), DualElem(C.X, {key: Fraction(1)}))
            if not val.is_zero:
                rep.fail(f"a=e{i + 1}, b=e{j + 1}, x=x[{H.format_key(key)}]", val)
    return rep


def check_conformal_axioms(C: ConformalAlgebra, degree: int | None = None, jacobi_degree: int | None = None) -> Report:
    """Locality, sesqui-linearity, skew-commutativity and Jacobi on dual basis elements.

    ``degree`` bounds the dual basis for the two-variable axioms (default 3
    for enveloping algebras, everything for group algebras); the Jacobi
    identity quantifies over pairs ``x, y`` up to ``jacobi_degree``, which
    defaults to ``degree``.
    """
    rep = Report(f"conformal axioms for {C.name}")
    keys = _x_keys(C, degree)
    xs = [DualElem(C.X, {k: Fraction(1)}) for k in keys]
    jkeys = keys if jacobi_degree is None else _x_keys(C, jacobi_degree)
    ys = [DualElem(C.X, {k: Fraction(1)}) for k in jkeys]
    H = C.H
    hs = [H.elem({k: Fraction(1)}) for k in H.basis(1 if H.kind != "group" else 0)]
    try:
        rep.add(_check_locality(C))
        rep.add(_check_sesquilinearity(C, xs, hs))
        rep.add(_check_skew(C, xs))
        rep.add(_check_jacobi(C, ys))
    except ValidityError as exc:
        rep.undecided(f"truncation {C.X.truncation} too small: {exc}")
    return rep


def conformal_residuals(kind: OperatorKind, R: HLinearOp, C: ConformalAlgebra, a: ModuleElem, b: ModuleElem, x: DualElem) -> list[ModuleElem]:
    Ra, Rb = R(a), R(b)
    RaRb = C.bracket(Ra, Rb, x)
    if kind.name == "averaging":
        return [R(C.bracket(Ra, b, x)) - RaRb, R(C.bracket(a, Rb, x)) - RaRb]
    inner = C.bracket(Ra, b, x) + C.bracket(a, Rb, x)
    if kind.name == "nijenhuis":
        inner = inner - R(C.bracket(a, b, x))
    elif kind.name == "reynolds":
        inner = inner + RaRb.scale(kind.weight)
    else:
        inner = inner + C.bracket(a, b, x).scale(kind.weight)
    return [RaRb - R(inner)]


def check_conformal_operator(kind, R: HLinearOp, C: ConformalAlgebra, degree: int | None = None, weight=None) -> Report:
    """The conformal form of the operator identity on basis pairs and dual basis ``x``."""
    kind = parse_kind(kind, weight)
    if R.H is not C.H or R.rank != C.L.rank:
        raise ValueError("operator does not act on this conformal algebra")
    label = f" {R.name}" if R.name else ""
    rep = Report(f"conformal {kind} identity for operator{label}")
    xs = [DualElem(C.X, {k: Fraction(1)}) for k in _x_keys(C, degree)]
    try:
        for i, j in itertools.product(range(C.L.rank), repeat=2):
            for x in xs:
                rep.tick()
                for n, res in enumerate(conformal_residuals(kind, R, C, C.e(i), C.e(j), x)):
                    if not res.is_zero:
                        rep.fail(f"a=e{i + 1}, b=e{j + 1}, x={x} part {n + 1}", res)
    except ValidityError as exc:
        rep.undecided(f"truncation {C.X.truncation} too small: {exc}")
    return rep
