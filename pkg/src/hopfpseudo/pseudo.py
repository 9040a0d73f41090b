"""Elements of ``H^{(x) n} (x)_H M`` for a free module ``M`` of finite rank.

Two unique descriptions of such an element exist when ``M`` is free with basis
``e_1 .. e_r``:

* the *full form* ``sum_m beta_m (x)_H e_m`` with ``beta_m`` in ``H^{(x) n}``,
* the *canonical form* ``sum h^1 (x) .. (x) h^{n-1} (x) 1 (x)_H (b e_m)``, in
  which the last tensor slot is ``1`` and the module coefficient ``b`` is a
  basis monomial of ``H``.

The Fourier transform ``F(f (x) g) = f S(g_1) (x) g_2`` (and its arity-3
analogue) maps the full form to the canonical one.  Both are bijections, so
equality can be decided on either; :class:`PseudoElem` stores canonical terms
and caches the full form, which is what all operations work on.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .hopf import HElem, HopfAlgebra, TensorElem, _add_into, _format_sum, _paren, as_fraction

__all__ = [
    "fourier",
    "fourier_inv",
    "fourier_n",
    "fourier_n_inv",
    "PseudoElem",
    "normalize",
    "act",
    "permute",
    "equal",
]


def fourier_n(t: TensorElem) -> TensorElem:
    """``F_n(f_1 (x) .. (x) f_n) = f_1 S(f_{n,1}) (x) .. (x) f_{n-1} S(f_{n,n-1}) (x) f_{n,n}``.

    For ``n = 2`` this is the usual Fourier transform.  The last slot of the
    result carries the part of ``f_n`` that is absorbed into the module.
    """
    H, n = t.H, t.arity
    if n < 2:
        raise ValueError("the Fourier transform needs arity at least 2")
    out: dict = {}
    for keys, c in t.terms.items():
        head = keys[:-1]
        split = H.iterated_coproduct(H.elem({keys[-1]: 1}), n)
        for parts, z in split.terms.items():
            slot_lists = []
            for f, p in zip(head, parts[:-1]):
                prod: dict = {}
                for q, w in H.antipode_basis(p).items():
                    for r, v in H.mul_basis(f, q).items():
                        _add_into(prod, r, w * v)
                slot_lists.append(prod)
            _accumulate_product(out, slot_lists, parts[-1], c * z)
    return TensorElem(H, n, out, _trusted=True)


def fourier_n_inv(t: TensorElem) -> TensorElem:
    """Inverse of :func:`fourier_n`: ``a_1 (x) .. (x) l -> a_1 l_1 (x) .. (x) a_{n-1} l_{n-1} (x) l_n``."""
    H, n = t.H, t.arity
    if n < 2:
        raise ValueError("the Fourier transform needs arity at least 2")
    out: dict = {}
    for keys, c in t.terms.items():
        head = keys[:-1]
        split = H.iterated_coproduct(H.elem({keys[-1]: 1}), n)
        for parts, z in split.terms.items():
            slot_lists = [H.mul_basis(f, p) for f, p in zip(head, parts[:-1])]
            _accumulate_product(out, slot_lists, parts[-1], c * z)
    return TensorElem(H, n, out, _trusted=True)


def _accumulate_product(out: dict, slot_lists: list, last_key, coef) -> None:
    partial = {(): coef}
    for slot in slot_lists:
        nxt: dict = {}
        for prefix, c in partial.items():
            for k, v in slot.items():
                _add_into(nxt, prefix + (k,), c * v)
        partial = nxt
    for prefix, c in partial.items():
        _add_into(out, prefix + (last_key,), c)


def fourier(t: TensorElem) -> TensorElem:
    if t.arity != 2:
        raise ValueError("fourier expects an element of H (x) H")
    return fourier_n(t)


def fourier_inv(t: TensorElem) -> TensorElem:
    if t.arity != 2:
        raise ValueError("fourier_inv expects an element of H (x) H")
    return fourier_n_inv(t)


class PseudoElem:
    """An element of ``H^{(x) n} (x)_H M`` with ``M`` free of rank ``rank``.

    ``terms`` maps ``(k_1, .., k_{n-1}, b, m)`` to a rational, standing for
    ``d^{k_1} (x) .. (x) d^{k_{n-1}} (x) 1 (x)_H d^b e_m``.
    """

    __slots__ = ("H", "arity", "rank", "terms", "_full", "_hash")

    def __init__(self, H: HopfAlgebra, arity: int, rank: int, terms: Mapping, _full=None, _trusted=False):
        if arity < 2:
            raise ValueError("pseudo-tensors need arity at least 2")
        self.H, self.arity, self.rank = H, arity, rank
        if _trusted:
            self.terms = terms
        else:
            clean: dict = {}
            for k, c in terms.items():
                if len(k) != arity + 1 or not 0 <= k[-1] < rank:
                    raise ValueError(f"malformed canonical key {k}")
                _add_into(clean, tuple(k), as_fraction(c))
            self.terms = clean
        self._full = _full
        self._hash = None

    # -- conversions -----------------------------------------------------------

    @classmethod
    def zero(cls, H: HopfAlgebra, arity: int, rank: int) -> PseudoElem:
        return cls(H, arity, rank, {}, _full={}, _trusted=True)

    @classmethod
    def from_full(cls, H: HopfAlgebra, arity: int, rank: int, full: Mapping[int, TensorElem]) -> PseudoElem:
        """Build from ``sum_m beta_m (x)_H e_m``."""
        clean = {}
        for m, beta in full.items():
            if not 0 <= m < rank:
                raise ValueError(f"module index {m} out of range for rank {rank}")
            if beta.arity != arity:
                raise ValueError(f"arity mismatch: expected {arity}, got {beta.arity}")
            if beta.H is not H:
                raise ValueError("coefficient over a different Hopf algebra")
            if beta.terms:
                clean[m] = beta
        terms: dict = {}
        for m in sorted(clean):
            for keys, c in fourier_n(clean[m]).terms.items():
                terms[keys + (m,)] = c
        return cls(H, arity, rank, terms, _full=clean, _trusted=True)

    @property
    def full(self) -> dict[int, TensorElem]:
        """The unique full form ``{m: beta_m}``."""
        if self._full is None:
            grouped: dict = {}
            for k, c in self.terms.items():
                grouped.setdefault(k[-1], {})[k[:-1]] = c
            full = {}
            for m, d in grouped.items():
                beta = fourier_n_inv(TensorElem(self.H, self.arity, d, _trusted=True))
                if beta.terms:
                    full[m] = beta
            self._full = full
        return self._full

    def representative(self) -> list[tuple[TensorElem, HElem, int]]:
        """Canonical terms as raw triples ``(h^1 (x) .. (x) 1, module coefficient, m)``."""
        out = []
        grouped: dict = {}
        for k, c in self.terms.items():
            grouped.setdefault((k[:-2], k[-1]), {})[k[-2]] = c
        u = self.H.unit_key
        for (head, m), coeffs in sorted(grouped.items(), key=lambda kv: repr(kv[0])):
            t = TensorElem(self.H, self.arity, {head + (u,): Fraction(1)}, _trusted=True)
            out.append((t, HElem(self.H, coeffs), m))
        return out

    def coefficients(self) -> dict:
        """``{(k_1, .., k_{n-1}): module element as list of HElem}`` read off the canonical form."""
        out: dict = {}
        for k, c in self.terms.items():
            head, b, m = k[:-2], k[-2], k[-1]
            vec = out.setdefault(head, [dict() for _ in range(self.rank)])
            vec[m][b] = c
        return {h: [HElem(self.H, d) for d in vec] for h, vec in out.items()}

    # -- arithmetic -----------------------------------------------------------------

    def _same(self, other: PseudoElem) -> None:
        if not isinstance(other, PseudoElem):
            raise TypeError("expected a PseudoElem")
        if other.H is not self.H or other.arity != self.arity or other.rank != self.rank:
            raise ValueError("pseudo-tensors differ in Hopf algebra, arity or rank")

    def __add__(self, other: PseudoElem) -> PseudoElem:
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        full = None
        if self._full is not None and other._full is not None:
            full = dict(self._full)
            for m, beta in other._full.items():
                total = full[m] + beta if m in full else beta
                if total.terms:
                    full[m] = total
                else:
                    full.pop(m, None)
        return PseudoElem(self.H, self.arity, self.rank, out, _full=full, _trusted=True)

    def __neg__(self) -> PseudoElem:
        return self.scale(-1)

    def __sub__(self, other: PseudoElem) -> PseudoElem:
        return self + (-other)

    def scale(self, s) -> PseudoElem:
        s = as_fraction(s)
        if not s:
            return PseudoElem.zero(self.H, self.arity, self.rank)
        full = None
        if self._full is not None:
            full = {m: b.scale(s) for m, b in self._full.items()}
        return PseudoElem(
            self.H, self.arity, self.rank, {k: c * s for k, c in self.terms.items()}, _full=full, _trusted=True
        )

    def __mul__(self, s):
        if isinstance(s, (int, Fraction)):
            return self.scale(s)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PseudoElem):
            return NotImplemented
        return (
            self.H is other.H
            and self.arity == other.arity
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, self.rank, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def max_degree(self) -> int:
        """Largest PBW degree in any slot of the canonical form (module slot included)."""
        if not self.terms:
            return -1
        return max(sum(k[0]) for key in self.terms for k in key[:-1])

    def __str__(self):
        f = self.H.format_key
        items = []
        for k, c in sorted(self.terms.items(), key=lambda kv: _canon_order(kv[0])):
            head = " (x) ".join(_paren(f(x)) for x in k[:-2]) + " (x) 1"
            coef = f(k[-2])
            mod = f"e{k[-1] + 1}" if coef == "1" else f"{_paren(coef)} e{k[-1] + 1}"
            items.append((c, f"({head}) (x)_H {mod}"))
        return _format_sum(items)

    def __repr__(self):
        return f"PseudoElem({self})"


def _canon_order(key):
    from .hopf import _key_order

    return (key[-1],) + tuple(_key_order(k) for k in key[:-1])


def normalize(raw, rank: int, arity: int | None = None, H: HopfAlgebra | None = None) -> PseudoElem:
    """Canonical form of a raw representative.

    ``raw`` is either a :class:`PseudoElem` (returned unchanged) or an
    iterable of ``(t, m)`` or ``(t, h, m)`` items meaning ``t (x)_H h e_m``
    with ``t`` a :class:`TensorElem`, ``h`` an :class:`HElem` (default 1).
    """
    if isinstance(raw, PseudoElem):
        if raw.rank != rank:
            raise ValueError("rank mismatch")
        return raw
    items = list(raw)
    if not items:
        if arity is None or H is None:
            raise ValueError("an empty representative needs explicit arity and Hopf algebra")
        return PseudoElem.zero(H, arity, rank)
    full: dict[int, TensorElem] = {}
    for item in items:
        if len(item) == 2:
            t, m = item
            h = None
        else:
            t, h, m = item
        if t.arity < 2:
            raise ValueError("normalize needs arity at least 2")
        if arity is None:
            arity = t.arity
        if t.arity != arity:
            raise ValueError("mixed arities in representative")
        if not 0 <= m < rank:
            raise ValueError(f"module index {m} out of range for rank {rank}")
        beta = t if h is None else t * t.H.iterated_coproduct(h, arity)
        full[m] = full[m] + beta if m in full else beta
    Hh = items[0][0].H
    return PseudoElem.from_full(Hh, arity, rank, full)


def act(left: TensorElem, p: PseudoElem) -> PseudoElem:
    """Left multiplication by ``left`` in ``H^{(x) n}``."""
    if left.arity != p.arity:
        raise ValueError(f"arity mismatch: {left.arity} vs {p.arity}")
    full = {m: left * beta for m, beta in p.full.items()}
    return PseudoElem.from_full(p.H, p.arity, p.rank, full)


def permute(perm: Sequence[int], p: PseudoElem) -> PseudoElem:
    """Permute the ``H`` slots: slot ``s`` of the result is slot ``perm[s]`` of ``p``."""
    if len(perm) != p.arity:
        raise ValueError("permutation length must equal the arity")
    full = {m: beta.permute(perm) for m, beta in p.full.items()}
    return PseudoElem.from_full(p.H, p.arity, p.rank, full)


def apply_module_map(p: PseudoElem, matrix: Sequence[Sequence[HElem]], rank: int | None = None) -> PseudoElem:
    """``(id (x)_H P)`` for the H-linear map ``P(e_m) = sum_t matrix[m][t] e_t``."""
    target = len(matrix[0]) if rank is None else rank
    full: dict[int, TensorElem] = {}
    for m, beta in p.full.items():
        for t, g in enumerate(matrix[m]):
            if g.is_zero:
                continue
            piece = beta * p.H.iterated_coproduct(g, p.arity)
            full[t] = full[t] + piece if t in full else piece
    return PseudoElem.from_full(p.H, p.arity, target, full)


def equal(p: PseudoElem, q: PseudoElem) -> bool:
    if p.arity != q.arity or p.rank != q.rank:
        raise ValueError("cannot compare pseudo-tensors of different arity or rank")
    return p == q


def sum_pseudo(items: Iterable[PseudoElem], H: HopfAlgebra, arity: int, rank: int) -> PseudoElem:
    out = PseudoElem.zero(H, arity, rank)
    for p in items:
        out = out + p
    return out
