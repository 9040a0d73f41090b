"""The dual ``X = H*`` with the actions and (co)products induced by the pairing.

A :class:`DualElem` stores the values of a functional on the PBW basis.  Its
``validity`` is the filtration degree up to which those values are known;
``None`` means the stored values are the whole functional (zero elsewhere).
Group algebras and graded (abelian) enveloping algebras keep finitely
supported functionals exact under every operation.  Otherwise the left and
right actions and the antipode only produce values on ``F^v H`` for a finite
``v``, and reading beyond ``v`` raises :class:`ValidityError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .hopf import HElem, HopfAlgebra, Key, _format_coef, as_fraction

__all__ = [
    "ValidityError",
    "DualSpace",
    "DualElem",
    "dual_product",
    "dual_left_act",
    "dual_right_act",
    "dual_antipode",
    "dual_coproduct",
]


class ValidityError(ValueError):
    """A value was requested beyond the degree up to which it is known."""


def _min_validity(*vs):
    known = [v for v in vs if v is not None]
    return min(known) if known else None


class DualSpace:
    """``X = H*`` seen through the basis ``x_k`` dual to the basis keys of ``H``.

    ``truncation`` bounds how far non-exact results are computed; it plays no
    role for group algebras, whose dual is finite-dimensional.
    """

    def __init__(self, H: HopfAlgebra, truncation: int | None = None):
        self.H = H
        if H.kind == "group":
            truncation = 0
        elif truncation is None:
            truncation = H.degree_cap
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        self.truncation = int(truncation)

    def __repr__(self):
        return f"DualSpace({self.H!r}, truncation={self.truncation})"

    @property
    def exact(self) -> bool:
        """Whether finitely supported functionals stay exact under all operations."""
        return self.H.kind == "group" or self.H.is_graded

    def basis_keys(self, max_degree: int | None = None) -> list[Key]:
        d = self.truncation if max_degree is None else max_degree
        return self.H.basis(d)

    def basis(self, max_degree: int | None = None) -> list["DualElem"]:
        return [self.x(k) for k in self.basis_keys(max_degree)]

    def x(self, key) -> "DualElem":
        """The functional dual to a basis key; group elements may be given by name or index."""
        H = self.H
        if isinstance(key, str):
            key = (H._zero_index, H.group.index(key))
        elif isinstance(key, int):
            key = H.key((key,)) if H.kind == "enveloping" and H.N == 1 else (H._zero_index, key)
        elif key and not isinstance(key[0], tuple):
            key = H.key(tuple(key))
        return DualElem(self, {key: Fraction(1)})

    def elem(self, coeffs: Mapping, validity: int | None = None) -> "DualElem":
        return DualElem(self, coeffs, validity)

    def zero(self) -> "DualElem":
        return DualElem(self, {})

    def unit(self) -> "DualElem":
        """The counit, which is the unit of ``X``."""
        H = self.H
        if H.kind == "enveloping":
            return DualElem(self, {H.unit_key: Fraction(1)})
        # counit is 1 on every group element
        return DualElem(self, {(H._zero_index, g): Fraction(1) for g in range(H.group.order)})

    def functional(self, fn, validity: int | None = None) -> "DualElem":
        """Tabulate ``key -> fn(key)`` on ``F^validity H`` (default: the truncation)."""
        v = self.truncation if validity is None else validity
        coeffs = {k: as_fraction(fn(k)) for k in self.H.basis(v)}
        return DualElem(self, coeffs, None if self.H.kind == "group" else v)


@dataclass(frozen=True, eq=False)
class DualElem:
    X: DualSpace
    coeffs: Mapping
    validity: int | None = None
    _hash: int = field(default=0, repr=False, compare=False)

    def __post_init__(self):
        clean = {}
        for k, c in self.coeffs.items():
            c = as_fraction(c)
            if c and (self.validity is None or self.X.H.key_degree(k) <= self.validity):
                clean[k] = c
        object.__setattr__(self, "coeffs", clean)

    @property
    def H(self) -> HopfAlgebra:
        return self.X.H

    @property
    def is_exact(self) -> bool:
        return self.validity is None

    def support_degree(self) -> int:
        return max((self.H.key_degree(k) for k in self.coeffs), default=-1)

    def known_degree(self) -> float:
        return float("inf") if self.validity is None else self.validity

    def value(self, key: Key) -> Fraction:
        if self.validity is not None and self.H.key_degree(key) > self.validity:
            raise ValidityError(f"value at degree {self.H.key_degree(key)} requested, known up to {self.validity}")
        return self.coeffs.get(key, Fraction(0))

    def pair(self, h: HElem) -> Fraction:
        """``<x, h>``."""
        return sum((c * self.value(k) for k, c in h.terms.items()), Fraction(0))

    def restrict(self, validity: int) -> "DualElem":
        if self.validity is not None and validity > self.validity:
            raise ValidityError(f"cannot extend validity {self.validity} to {validity}")
        return DualElem(self.X, self.coeffs, validity)

    def _same(self, other: "DualElem") -> None:
        if other.X is not self.X and other.H is not self.H:
            raise ValueError("dual elements over different Hopf algebras")

    def __add__(self, other: "DualElem") -> "DualElem":
        self._same(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + c
        return DualElem(self.X, out, _min_validity(self.validity, other.validity))

    def __neg__(self) -> "DualElem":
        return self.scale(-1)

    def __sub__(self, other: "DualElem") -> "DualElem":
        return self + (-other)

    def scale(self, c) -> "DualElem":
        c = as_fraction(c)
        return DualElem(self.X, {k: c * v for k, v in self.coeffs.items()}, self.validity)

    def __rmul__(self, c):
        if isinstance(c, HElem):
            return dual_left_act(c, self)
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, DualElem):
            return dual_product(self, other)
        if isinstance(other, HElem):
            return dual_right_act(self, other)
        return self.scale(other)

    def agrees(self, other: "DualElem") -> bool:
        """Equality on the common known range."""
        self._same(other)
        v = _min_validity(self.validity, other.validity)
        keys = set(self.coeffs) | set(other.coeffs)
        for k in keys:
            if v is not None and self.H.key_degree(k) > v:
                continue
            if self.coeffs.get(k, Fraction(0)) != other.coeffs.get(k, Fraction(0)):
                return False
        return True

    __eq__ = agrees

    def __hash__(self):
        # equality only looks at the common known range, which always holds degree 0
        H = self.H
        return hash(frozenset((k, c) for k, c in self.coeffs.items() if H.key_degree(k) == 0))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            text = "0"
        else:
            H = self.H
            parts = []
            for k in sorted(self.coeffs, key=lambda k: (H.key_degree(k), k[1], tuple(-i for i in k[0]))):
                c = self.coeffs[k]
                name = f"x[{H.format_key(k)}]"
                if c == 1:
                    parts.append(name)
                elif c == -1:
                    parts.append("-" + name)
                else:
                    parts.append(f"{_format_coef(c)}*{name}")
            text = parts[0]
            for p in parts[1:]:
                text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        if self.validity is not None:
            text += f" [deg<={self.validity}]"
        return text

    def __repr__(self):
        return f"DualElem({self})"


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def _scan_bound(x: DualElem, shift: int) -> tuple[int, int | None]:
    """Degree range to tabulate and the validity of the result."""
    X = x.X
    if x.is_exact and X.exact:
        return max(x.support_degree(), 0), None
    known = x.known_degree()
    v = int(min(X.truncation, known - shift))
    if v < 0:
        raise ValidityError(f"operation of degree {shift} exhausts validity {x.validity}")
    return v, v


def dual_product(x: DualElem, y: DualElem) -> DualElem:
    """``<xy, h> = <x, h_(1)> <y, h_(2)>``."""
    x._same(y)
    H = x.H
    if x.is_exact and y.is_exact:
        bound, validity = max(x.support_degree() + y.support_degree(), 0), None
    else:
        validity = _min_validity(x.validity, y.validity)
        bound = validity
    out = {}
    for k in H.basis(bound):
        total = Fraction(0)
        for (k1, k2), c in H.coproduct_basis(k).items():
            a = x.coeffs.get(k1)
            if a:
                b = y.coeffs.get(k2)
                if b:
                    total += c * a * b
        if total:
            out[k] = total
    return DualElem(x.X, out, validity)


def _act(x: DualElem, h: HElem, left: bool) -> DualElem:
    H = x.H
    if h.H is not H:
        raise ValueError("element of a different Hopf algebra")
    if h.is_zero:
        return DualElem(x.X, {}, None if x.X.exact and x.is_exact else x.validity)
    bound, validity = _scan_bound(x, h.degree())
    out = {}
    for f in H.basis(bound):
        total = Fraction(0)
        for k, c in h.terms.items():
            prod = H.mul_basis(f, k) if left else H.mul_basis(k, f)
            for kk, cc in prod.items():
                total += c * cc * x.value(kk)
        if total:
            out[f] = total
    return DualElem(x.X, out, validity)


def dual_left_act(h: HElem, x: DualElem) -> DualElem:
    """``<h.x, f> = <x, f h>``."""
    return _act(x, h, left=True)


def dual_right_act(x: DualElem, h: HElem) -> DualElem:
    """``<x.h, f> = <x, h f>``."""
    return _act(x, h, left=False)


def dual_antipode(x: DualElem) -> DualElem:
    """``<S*(x), h> = <x, S(h)>``."""
    H = x.H
    bound, validity = _scan_bound(x, 0)
    out = {}
    for f in H.basis(bound):
        total = sum((c * x.value(k) for k, c in H.antipode_basis(f).items()), Fraction(0))
        if total:
            out[f] = total
    return DualElem(x.X, out, validity)


def dual_coproduct(x: DualElem, bound: int | None = None) -> list[tuple[DualElem, DualElem]]:
    """``Delta(x) = sum x_(1) (x) x_(2)`` with ``<Delta x, f (x) g> = <x, f g>``.

    The sum is infinite in general; only pairs whose factors are probed on
    ``F^bound H`` are kept and both factors carry validity ``bound``.  That
    needs ``x`` on ``F^{2 bound} H``.  Exact finitely supported ``x`` in the
    exact cases need no bound.
    """
    H = x.H
    X = x.X
    if x.is_exact and X.exact and bound is None:
        bound, validity = max(x.support_degree(), 0), None
    else:
        if bound is None:
            raise ValueError("a degree bound is needed for a non-exact coproduct")
        if x.known_degree() < 2 * bound:
            raise ValidityError(f"coproduct up to degree {bound} needs validity {2 * bound}, have {x.validity}")
        validity = bound
    keys = H.basis(bound)
    out = []
    for k1 in keys:
        coeffs = {}
        for k2 in keys:
            val = sum((c * x.value(kk) for kk, c in H.mul_basis(k1, k2).items()), Fraction(0))
            if val:
                coeffs[k2] = val
        if coeffs:
            out.append((DualElem(X, {k1: Fraction(1)}, validity), DualElem(X, coeffs, validity)))
    return out
