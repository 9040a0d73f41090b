"""Exact arithmetic in cocommutative Hopf algebras.

Three families are supported, all handled by one smash-product engine:

* ``U(g)`` for a finite-dimensional Lie algebra ``g`` (enveloping kind),
* ``k[G]`` for a finite group ``G`` (group kind),
* ``U(g) # k[G]`` where ``G`` acts on ``g`` by Lie automorphisms (smash kind).

A basis key is a pair ``(I, g)`` where ``I`` is a multi-index of the
divided-power PBW monomial ``d^I = d_1^{i_1} ... d_N^{i_N} / (i_1! ... i_N!)``
and ``g`` is a group index.  Pure enveloping algebras use the trivial group,
pure group algebras use ``N = 0``.  All coefficients are ``Fraction``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Key = tuple  # (multi-index tuple, group index)

__all__ = [
    "LieAlgebraSpec",
    "GroupSpec",
    "HopfAlgebra",
    "HElem",
    "TensorElem",
    "as_fraction",
]


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(value)


def _add_into(target: dict, key, coef) -> None:
    value = target.get(key, 0) + coef
    if value:
        target[key] = value
    else:
        target.pop(key, None)


# ---------------------------------------------------------------------------
# Lie algebras and groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LieAlgebraSpec:
    """Structure constants ``[d_i, d_j] = sum_k c[(i, j)][k] d_k`` for ``i < j``.

    Indices are 0-based.  Only pairs with ``i < j`` are stored; the bracket
    is extended by antisymmetry.  The Jacobi identity is verified on
    construction.
    """

    dim: int
    structure_constants: Mapping[tuple[int, int], Mapping[int, Fraction]] = field(
        default_factory=dict
    )

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be non-negative")
        clean = {}
        for (i, j), row in dict(self.structure_constants).items():
            if not (0 <= i < j < self.dim):
                raise ValueError(f"structure constant index ({i}, {j}) must satisfy 0 <= i < j < dim")
            entries = {}
            for k, c in dict(row).items():
                if not 0 <= k < self.dim:
                    raise ValueError(f"structure constant target {k} out of range")
                c = as_fraction(c)
                if c:
                    entries[k] = c
            if entries:
                clean[(i, j)] = entries
        object.__setattr__(self, "structure_constants", clean)
        self._check_jacobi()

    @classmethod
    def abelian(cls, dim: int) -> LieAlgebraSpec:
        return cls(dim, {})

    def bracket(self, i: int, j: int) -> dict[int, Fraction]:
        if i == j:
            return {}
        if i < j:
            return dict(self.structure_constants.get((i, j), {}))
        return {k: -c for k, c in self.structure_constants.get((j, i), {}).items()}

    def bracket_vectors(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.bracket(i, j).items():
                    _add_into(out, k, a * b * c)
        return out

    @property
    def is_abelian(self) -> bool:
        return not self.structure_constants

    def _check_jacobi(self) -> None:
        for i, j, k in itertools.combinations(range(self.dim), 3):
            total: dict[int, Fraction] = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                inner = self.bracket(a, b)
                for m, v in self.bracket_vectors(inner, {c: Fraction(1)}).items():
                    _add_into(total, m, v)
            if total:
                raise ValueError(f"Jacobi identity fails on generators ({i}, {j}, {k})")


@dataclass(frozen=True)
class GroupSpec:
    """A finite group given by its multiplication table (0-based indices)."""

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    inverse: tuple[int, ...] | None = None
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise ValueError("group order must be positive")
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        if len(table) != n or any(len(row) != n for row in table):
            raise ValueError("multiplication table must be order x order")
        if any(not 0 <= v < n for row in table for v in row):
            raise ValueError("multiplication table entries out of range")
        object.__setattr__(self, "table", table)
        e = self.identity
        if any(table[e][g] != g or table[g][e] != g for g in range(n)):
            raise ValueError("identity index does not act as identity")
        for a, b, c in itertools.product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise ValueError(f"multiplication table is not associative at ({a}, {b}, {c})")
        if self.inverse is None:
            inv = []
            for g in range(n):
                candidates = [h for h in range(n) if table[g][h] == e]
                if not candidates:
                    raise ValueError(f"element {g} has no inverse")
                inv.append(candidates[0])
            object.__setattr__(self, "inverse", tuple(inv))
        else:
            inv = tuple(int(v) for v in self.inverse)
            if len(inv) != n or any(table[g][inv[g]] != e or table[inv[g]][g] != e for g in range(n)):
                raise ValueError("inverse table is inconsistent")
            object.__setattr__(self, "inverse", inv)
        names = self.names if self.names is not None else tuple(str(g) for g in range(n))
        names = tuple(str(v) for v in names)
        if len(names) != n or len(set(names)) != n:
            raise ValueError("group element names must be distinct, one per element")
        object.__setattr__(self, "names", names)

    @classmethod
    def cyclic(cls, n: int) -> GroupSpec:
        table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
        return cls(n, table, 0)

    @classmethod
    def trivial(cls) -> GroupSpec:
        return cls(1, ((0,),), 0)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown group element {name!r}") from None


# ---------------------------------------------------------------------------
# The Hopf algebra
# ---------------------------------------------------------------------------


class HopfAlgebra:
    """A cocommutative Hopf algebra ``U(g) # k[G]`` with exact structure maps.

    ``action`` maps ``(group index, generator index)`` to the image of the
    generator as a dict ``{generator: coefficient}`` (an element of ``g``).
    Missing entries mean the generator is fixed.

    ``degree_cap`` bounds enumeration of bases (dual spaces, axiom sweeps);
    it never truncates products, coproducts or antipodes.
    """

    def __init__(
        self,
        lie: LieAlgebraSpec | None = None,
        group: GroupSpec | None = None,
        action: Mapping[tuple[int, int], Mapping[int, object]] | None = None,
        degree_cap: int = 8,
    ):
        self.lie = lie if lie is not None else LieAlgebraSpec(0)
        self.group = group if group is not None else GroupSpec.trivial()
        self.degree_cap = int(degree_cap)
        if self.lie.dim == 0 and self.group.order == 1 and group is None:
            raise ValueError("a Hopf algebra needs a Lie algebra, a group, or both")
        self._action = self._build_action(action or {})
        self.N = self.lie.dim
        self._zero_index = (0,) * self.N
        self._unit_key = (self._zero_index, self.group.identity)
        self._gen_cache: dict = {}
        self._pmul_cache: dict = {}
        self._dmul_cache: dict = {}
        self._act_cache: dict = {}
        self._mul_cache: dict = {}
        self._anti_cache: dict = {}
        self._cop_cache: dict = {}

    # -- construction helpers ------------------------------------------------

    @classmethod
    def enveloping(cls, lie: LieAlgebraSpec, degree_cap: int = 8) -> HopfAlgebra:
        return cls(lie=lie, degree_cap=degree_cap)

    @classmethod
    def group_algebra(cls, group: GroupSpec) -> HopfAlgebra:
        return cls(group=group)

    @classmethod
    def smash(cls, lie: LieAlgebraSpec, group: GroupSpec, action, degree_cap: int = 8) -> HopfAlgebra:
        return cls(lie=lie, group=group, action=action, degree_cap=degree_cap)

    def _build_action(self, action) -> dict:
        N, G = self.lie.dim, self.group
        images: dict[tuple[int, int], dict[int, Fraction]] = {}
        for g in range(G.order):
            for i in range(N):
                raw = action.get((g, i))
                if raw is None:
                    images[(g, i)] = {i: Fraction(1)}
                    continue
                if isinstance(raw, HElem):
                    raw = self._primitive_coords(raw)
                vec = {}
                for k, c in dict(raw).items():
                    if not 0 <= k < N:
                        raise ValueError(f"action image of d{i + 1} references unknown generator")
                    c = as_fraction(c)
                    if c:
                        vec[k] = c
                images[(g, i)] = vec
        for (g, i) in action:
            if not (0 <= g < G.order and 0 <= i < N):
                raise ValueError(f"action entry {(g, i)} out of range")

        def act_vec(g, v):
            out: dict[int, Fraction] = {}
            for i, a in v.items():
                for k, c in images[(g, i)].items():
                    _add_into(out, k, a * c)
            return out

        for i in range(N):
            if images[(G.identity, i)] != {i: 1}:
                raise ValueError("the group identity must act trivially")
        for g, h in itertools.product(range(G.order), repeat=2):
            for i in range(N):
                if act_vec(g, images[(h, i)]) != images[(G.mul(g, h), i)]:
                    raise ValueError("the action is not a group homomorphism")
        for g in range(G.order):
            for i, j in itertools.combinations(range(N), 2):
                lhs = self.lie.bracket_vectors(images[(g, i)], images[(g, j)])
                rhs = act_vec(g, self.lie.bracket(i, j))
                if lhs != rhs:
                    raise ValueError(f"group element {g} does not act by a Lie automorphism")
        return images

    def _primitive_coords(self, h: HElem) -> dict[int, Fraction]:
        out = {}
        for (I, g), c in h.terms.items():
            if g != self.group.identity or sum(I) != 1:
                raise ValueError("action images must be elements of the Lie algebra (degree 1, no constant)")
            out[I.index(1)] = c
        return out

    # -- descriptive ---------------------------------------------------------

    @property
    def kind(self) -> str:
        if self.group.order == 1:
            return "enveloping"
        if self.N == 0:
            return "group"
        return "smash"

    @property
    def is_graded(self) -> bool:
        """True when multiplication is homogeneous for the PBW degree."""
        return self.lie.is_abelian

    def __repr__(self) -> str:
        return f"HopfAlgebra(kind={self.kind!r}, dim={self.N}, group_order={self.group.order})"

    # -- basis ---------------------------------------------------------------

    def key(self, index: Sequence[int] | None = None, group: int | None = None) -> Key:
        I = tuple(index) if index is not None else self._zero_index
        if len(I) != self.N or any(v < 0 for v in I):
            raise ValueError(f"multi-index {I} invalid for dimension {self.N}")
        g = self.group.identity if group is None else group
        if not 0 <= g < self.group.order:
            raise ValueError(f"group index {g} out of range")
        return (I, g)

    @property
    def unit_key(self) -> Key:
        return self._unit_key

    @staticmethod
    def key_degree(key: Key) -> int:
        return sum(key[0])

    def multi_indices(self, max_degree: int) -> list[tuple[int, ...]]:
        out = []
        for d in range(max_degree + 1):
            out.extend(_compositions(d, self.N))
        return out

    def basis(self, max_degree: int | None = None) -> list[Key]:
        """Basis keys of ``F^n H`` for ``n = max_degree`` (default: the degree cap)."""
        d = self.degree_cap if max_degree is None else max_degree
        if d < 0:
            return []
        return [(I, g) for I in self.multi_indices(d) for g in range(self.group.order)]

    def format_key(self, key: Key) -> str:
        I, g = key
        parts = []
        for i, e in enumerate(I):
            if e == 1:
                parts.append(f"d{i + 1}")
            elif e > 1:
                parts.append(f"d{i + 1}^{e}")
        if self.group.order > 1 and (g != self.group.identity or not parts):
            parts.append(f"g:{self.group.names[g]}")
        return " ".join(parts) if parts else "1"

    # -- element constructors -------------------------------------------------

    def elem(self, terms: Mapping | None = None) -> HElem:
        return HElem(self, terms or {})

    def zero(self) -> HElem:
        return HElem(self, {})

    def one(self) -> HElem:
        return HElem(self, {self._unit_key: Fraction(1)})

    def scalar(self, c) -> HElem:
        return HElem(self, {self._unit_key: as_fraction(c)})

    def gen(self, i: int) -> HElem:
        """The generator ``d_{i+1}`` (0-based index ``i``)."""
        I = [0] * self.N
        I[i] = 1
        return HElem(self, {self.key(I): Fraction(1)})

    def monomial(self, index: Sequence[int] | None = None, group: int | None = None, coef=1) -> HElem:
        """``coef * d^I # g`` with divided-power ``d^I``."""
        return HElem(self, {self.key(index, group): as_fraction(coef)})

    def group_element(self, g: int | str) -> HElem:
        if isinstance(g, str):
            g = self.group.index(g)
        return HElem(self, {(self._zero_index, g): Fraction(1)})

    # -- PBW straightening ----------------------------------------------------

    def _gen_times(self, i: int, B: tuple[int, ...]) -> dict:
        """``d_i`` times the plain ordered monomial ``d_1^{b_1} ... d_N^{b_N}``."""
        ck = (i, B)
        cached = self._gen_cache.get(ck)
        if cached is not None:
            return cached
        j = next((t for t, b in enumerate(B) if b), None)
        if j is None or i <= j:
            C = list(B)
            C[i] += 1
            out = {tuple(C): Fraction(1)}
        else:
            # d_i d_j B' = d_j (d_i B') + [d_i, d_j] B'
            Bp = list(B)
            Bp[j] -= 1
            Bp = tuple(Bp)
            out: dict = {}
            for C, c in self._gen_times(i, Bp).items():
                for D, d in self._gen_times(j, C).items():
                    _add_into(out, D, c * d)
            for m, c in self.lie.bracket(i, j).items():
                for D, d in self._gen_times(m, Bp).items():
                    _add_into(out, D, c * d)
        self._gen_cache[ck] = out
        return out

    def _pmul(self, A: tuple[int, ...], B: tuple[int, ...]) -> dict:
        """Product of plain ordered monomials, expanded in plain ordered monomials."""
        ck = (A, B)
        cached = self._pmul_cache.get(ck)
        if cached is not None:
            return cached
        if self.lie.is_abelian:
            out = {tuple(a + b for a, b in zip(A, B)): Fraction(1)}
        else:
            current = {B: Fraction(1)}
            for i in reversed(range(self.N)):
                for _ in range(A[i]):
                    nxt: dict = {}
                    for C, c in current.items():
                        for D, d in self._gen_times(i, C).items():
                            _add_into(nxt, D, c * d)
                    current = nxt
            out = current
        self._pmul_cache[ck] = out
        return out

    def _dmul(self, I: tuple[int, ...], J: tuple[int, ...]) -> dict:
        """Product of divided-power monomials ``d^I d^J`` in the divided basis."""
        ck = (I, J)
        cached = self._dmul_cache.get(ck)
        if cached is not None:
            return cached
        denom = _multifact(I) * _multifact(J)
        out = {}
        for K, c in self._pmul(I, J).items():
            out[K] = c * _multifact(K) / denom
        self._dmul_cache[ck] = out
        return out

    def _umul_dicts(self, a: Mapping, b: Mapping) -> dict:
        out: dict = {}
        for I, x in a.items():
            for J, y in b.items():
                for K, z in self._dmul(I, J).items():
                    _add_into(out, K, x * y * z)
        return out

    def _act_index(self, g: int, J: tuple[int, ...]) -> dict:
        """``g . d^J`` expanded in divided-power monomials."""
        ck = (g, J)
        cached = self._act_cache.get(ck)
        if cached is not None:
            return cached
        if g == self.group.identity or not any(J):
            out = {J: Fraction(1)}
        else:
            current = {self._zero_index: Fraction(1)}
            for i, e in enumerate(J):
                image = {}
                for k, c in self._action[(g, i)].items():
                    K = [0] * self.N
                    K[k] = 1
                    image[tuple(K)] = c
                for _ in range(e):
                    current = self._umul_dicts(current, image)
            scale = Fraction(1, _multifact(J))
            out = {K: c * scale for K, c in current.items()}
        self._act_cache[ck] = out
        return out

    def mul_basis(self, k1: Key, k2: Key) -> dict:
        """``(d^I # g)(d^J # h) = d^I (g . d^J) # gh`` as a dict over basis keys."""
        ck = (k1, k2)
        cached = self._mul_cache.get(ck)
        if cached is not None:
            return cached
        (I, g), (J, h) = k1, k2
        gh = self.group.mul(g, h)
        out: dict = {}
        for K, c in self._act_index(g, J).items():
            for L, d in self._dmul(I, K).items():
                _add_into(out, (L, gh), c * d)
        self._mul_cache[ck] = out
        return out

    def coproduct_basis(self, key: Key) -> dict:
        """``Delta(d^I # g) = sum_{J+K=I} (d^J # g) (x) (d^K # g)``."""
        cached = self._cop_cache.get(key)
        if cached is not None:
            return cached
        I, g = key
        out = {}
        for J in itertools.product(*(range(e + 1) for e in I)):
            K = tuple(e - j for e, j in zip(I, J))
            out[((J, g), (K, g))] = Fraction(1)
        self._cop_cache[key] = out
        return out

    def antipode_basis(self, key: Key) -> dict:
        """``S(d^I # g) = g^{-1} S(d^I)`` with ``S(d_i) = -d_i`` extended anti-multiplicatively."""
        cached = self._anti_cache.get(key)
        if cached is not None:
            return cached
        I, g = key
        sign = -1 if sum(I) % 2 else 1
        # reversed word d_N^{i_N} ... d_1^{i_1}, each block a plain monomial
        word: dict = {self._zero_index: Fraction(1)}
        for i in reversed(range(self.N)):
            if I[i]:
                block = [0] * self.N
                block[i] = I[i]
                nxt: dict = {}
                for C, c in word.items():
                    for D, d in self._pmul(C, tuple(block)).items():
                        _add_into(nxt, D, c * d)
                word = nxt
        scale = Fraction(sign, _multifact(I))
        s_h = {K: c * _multifact(K) * scale for K, c in word.items()}
        ginv = self.group.inverse[g]
        out: dict = {}
        for K, c in s_h.items():
            for L, d in self._act_index(ginv, K).items():
                _add_into(out, (L, ginv), c * d)
        self._anti_cache[key] = out
        return out

    # -- structure maps on elements -------------------------------------------

    def _check(self, *elems) -> None:
        for e in elems:
            if e.H is not self:
                raise ValueError("operands belong to different Hopf algebras")

    def mul(self, a: HElem, b: HElem) -> HElem:
        self._check(a, b)
        out: dict = {}
        for k1, x in a.terms.items():
            for k2, y in b.terms.items():
                for k3, z in self.mul_basis(k1, k2).items():
                    _add_into(out, k3, x * y * z)
        return HElem(self, out, _trusted=True)

    def coproduct(self, a: HElem) -> TensorElem:
        self._check(a)
        out: dict = {}
        for k, x in a.terms.items():
            for pair, z in self.coproduct_basis(k).items():
                _add_into(out, pair, x * z)
        return TensorElem(self, 2, out, _trusted=True)

    def iterated_coproduct(self, a: HElem, arity: int) -> TensorElem:
        """``Delta^{(arity-1)}(a)`` in ``H^{(x) arity}``."""
        self._check(a)
        if arity < 1:
            raise ValueError("arity must be positive")
        out = {(k,): c for k, c in a.terms.items()}
        for _ in range(arity - 1):
            nxt: dict = {}
            for keys, c in out.items():
                for (k1, k2), z in self.coproduct_basis(keys[-1]).items():
                    _add_into(nxt, keys[:-1] + (k1, k2), c * z)
            out = nxt
        return TensorElem(self, arity, out, _trusted=True)

    def antipode(self, a: HElem) -> HElem:
        self._check(a)
        out: dict = {}
        for k, x in a.terms.items():
            for k2, z in self.antipode_basis(k).items():
                _add_into(out, k2, x * z)
        return HElem(self, out, _trusted=True)

    def counit(self, a: HElem) -> Fraction:
        self._check(a)
        return sum((c for (I, g), c in a.terms.items() if not any(I)), Fraction(0))

    def filtration_degree(self, a: HElem) -> int:
        """Max PBW degree of a nonzero element; ``-1`` for zero."""
        self._check(a)
        if not a.terms:
            return -1
        return max(sum(I) for I, _ in a.terms)

    def is_group_like(self, a: HElem) -> bool:
        return self.counit(a) == 1 and self.coproduct(a) == TensorElem.pure(a, a)

    def left_integral(self) -> HElem | None:
        """``sum_g g`` for group algebras; ``None`` when ``g`` is nonzero.

        A nonzero Lie algebra rules out integrals: ``d t = epsilon(d) t = 0``
        forces ``t = 0`` because ``H`` has no zero divisors along ``U(g)``.
        """
        if self.N > 0:
            return None
        t = HElem(self, {(self._zero_index, g): Fraction(1) for g in range(self.group.order)})
        for key in self.basis(0):
            h = HElem(self, {key: Fraction(1)})
            if h * t != self.counit(h) * t:
                raise AssertionError("sum of group elements failed the integral property")
        return t


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _multifact(I: Iterable[int]) -> int:
    out = 1
    for e in I:
        out *= math.factorial(e)
    return out


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------


def _coerce_scalar(value):
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return None


class HElem:
    """A sparse exact linear combination of basis keys of ``H``.

    Treated as immutable; arithmetic returns new elements.
    """

    __slots__ = ("H", "terms", "_hash")

    def __init__(self, H: HopfAlgebra, terms: Mapping, _trusted: bool = False):
        self.H = H
        if _trusted:
            self.terms = terms
        else:
            clean = {}
            for k, c in terms.items():
                c = as_fraction(c)
                if c:
                    clean[k] = clean.get(k, 0) + c
            self.terms = {k: c for k, c in clean.items() if c}
        self._hash = None

    # arithmetic
    def __add__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            other = self.H.scalar(s)
        if not isinstance(other, HElem):
            return NotImplemented
        self.H._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return HElem(self.H, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return HElem(self.H, {k: -c for k, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            other = self.H.scalar(s)
        if not isinstance(other, HElem):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            if not s:
                return HElem(self.H, {}, _trusted=True)
            return HElem(self.H, {k: c * s for k, c in self.terms.items()}, _trusted=True)
        if isinstance(other, HElem):
            return self.H.mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            return self * s
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = self.H.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            other = self.H.scalar(s)
        if not isinstance(other, HElem):
            return NotImplemented
        return self.H is other.H and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return self.H.filtration_degree(self)

    def counit(self) -> Fraction:
        return self.H.counit(self)

    def antipode(self) -> HElem:
        return self.H.antipode(self)

    def coproduct(self) -> TensorElem:
        return self.H.coproduct(self)

    def coefficient(self, key: Key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: _key_order(kv[0]))

    def __repr__(self):
        return f"HElem({self})"

    def __str__(self):
        return _format_sum(
            [(c, self.H.format_key(k)) for k, c in self.sorted_terms()]
        )


def _key_order(key):
    I, g = key
    return (sum(I), tuple(-v for v in I), g)


def _format_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_sum(items: list[tuple[Fraction, str]]) -> str:
    if not items:
        return "0"
    pieces = []
    for n, (c, body) in enumerate(items):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if body == "1":
            text = _format_coef(a)
        elif a == 1:
            text = body
        else:
            text = f"{_format_coef(a)}*{body}"
        if n == 0:
            pieces.append(("-" if sign == "-" else "") + text)
        else:
            pieces.append(f" {sign} {text}")
    return "".join(pieces)


class TensorElem:
    """A sparse exact element of ``H^{(x) n}``; keys are tuples of basis keys."""

    __slots__ = ("H", "arity", "terms", "_hash")

    def __init__(self, H: HopfAlgebra, arity: int, terms: Mapping, _trusted: bool = False):
        if arity < 1:
            raise ValueError("tensor arity must be at least 1")
        self.H = H
        self.arity = arity
        if _trusted:
            self.terms = terms
        else:
            clean: dict = {}
            for k, c in terms.items():
                if len(k) != arity:
                    raise ValueError("tensor key has wrong arity")
                _add_into(clean, tuple(k), as_fraction(c))
            self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, H: HopfAlgebra, arity: int) -> TensorElem:
        return cls(H, arity, {}, _trusted=True)

    @classmethod
    def pure(cls, *factors: HElem) -> TensorElem:
        """The elementary tensor ``a_1 (x) ... (x) a_n``."""
        H = factors[0].H
        out: dict = {}
        for combo in itertools.product(*(f.terms.items() for f in factors)):
            keys = tuple(k for k, _ in combo)
            coef = Fraction(1)
            for _, c in combo:
                coef *= c
            _add_into(out, keys, coef)
        return cls(H, len(factors), out, _trusted=True)

    @classmethod
    def one(cls, H: HopfAlgebra, arity: int) -> TensorElem:
        return cls(H, arity, {(H.unit_key,) * arity: Fraction(1)}, _trusted=True)

    def _same(self, other: TensorElem) -> None:
        if other.H is not self.H:
            raise ValueError("tensors over different Hopf algebras")
        if other.arity != self.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return TensorElem(self.H, self.arity, out, _trusted=True)

    def __neg__(self):
        return TensorElem(self.H, self.arity, {k: -c for k, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self + (-other)

    def scale(self, s) -> TensorElem:
        s = as_fraction(s)
        if not s:
            return TensorElem.zero(self.H, self.arity)
        return TensorElem(self.H, self.arity, {k: c * s for k, c in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            return self.scale(s)
        if not isinstance(other, TensorElem):
            return NotImplemented
        self._same(other)
        H = self.H
        out: dict = {}
        for ka, x in self.terms.items():
            for kb, y in other.terms.items():
                slots = [H.mul_basis(a, b).items() for a, b in zip(ka, kb)]
                for combo in itertools.product(*slots):
                    coef = x * y
                    for _, c in combo:
                        coef *= c
                    _add_into(out, tuple(k for k, _ in combo), coef)
        return TensorElem(H, self.arity, out, _trusted=True)

    def __rmul__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            return self.scale(s)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self.H is other.H and self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def permute(self, perm: Sequence[int]) -> TensorElem:
        """Slot ``s`` of the result is slot ``perm[s]`` of ``self``."""
        if sorted(perm) != list(range(self.arity)):
            raise ValueError(f"{perm} is not a permutation of {self.arity} slots")
        out = {tuple(k[p] for p in perm): c for k, c in self.terms.items()}
        return TensorElem(self.H, self.arity, out, _trusted=True)

    def flip(self) -> TensorElem:
        return self.permute((1, 0))

    def apply_coproduct(self, slot: int) -> TensorElem:
        """Apply ``Delta`` to one slot, raising the arity by one."""
        H = self.H
        out: dict = {}
        for k, c in self.terms.items():
            for (a, b), z in H.coproduct_basis(k[slot]).items():
                _add_into(out, k[:slot] + (a, b) + k[slot + 1:], c * z)
        return TensorElem(H, self.arity + 1, out, _trusted=True)

    def map_slot(self, slot: int, fn) -> TensorElem:
        """Apply a linear map ``basis key -> dict`` to one slot."""
        out: dict = {}
        for k, c in self.terms.items():
            for k2, z in fn(k[slot]).items():
                _add_into(out, k[:slot] + (k2,) + k[slot + 1:], c * z)
        return TensorElem(self.H, self.arity, out, _trusted=True)

    def antipode_slot(self, slot: int) -> TensorElem:
        return self.map_slot(slot, self.H.antipode_basis)

    def insert_unit(self, slot: int) -> TensorElem:
        """Insert ``1`` as a new slot at position ``slot``."""
        u = self.H.unit_key
        out = {k[:slot] + (u,) + k[slot:]: c for k, c in self.terms.items()}
        return TensorElem(self.H, self.arity + 1, out, _trusted=True)

    def tensor(self, other: TensorElem) -> TensorElem:
        """Outer tensor product ``self (x) other``."""
        out: dict = {}
        for ka, x in self.terms.items():
            for kb, y in other.terms.items():
                _add_into(out, ka + kb, x * y)
        return TensorElem(self.H, self.arity + other.arity, out, _trusted=True)

    def contract_last(self, fn) -> dict:
        """Group terms by all but the last slot: ``{prefix: HElem}``."""
        groups: dict = {}
        for k, c in self.terms.items():
            groups.setdefault(k[:-1], {})[k[-1]] = c
        return {p: HElem(self.H, d, _trusted=True) for p, d in groups.items()}

    def max_slot_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(k[0]) for key in self.terms for k in key)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: tuple(_key_order(k) for k in kv[0]))

    def __str__(self):
        f = self.H.format_key
        return _format_sum(
            [(c, " (x) ".join(_paren(f(k)) for k in keys)) for keys, c in self.sorted_terms()]
        )

    def __repr__(self):
        return f"TensorElem({self})"


def _paren(text: str) -> str:
    return f"({text})" if " " in text else text
