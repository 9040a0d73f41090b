"""Shared strategies and random generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from hopfpseudo.corpus import group_zn, k_d, smash_kd_z2, u_abelian, u_delta2
from hopfpseudo.hopf import HElem, HopfAlgebra, TensorElem

# one instance per family, shared so that caches warm up once
HOPF = {
    "k_d": k_d(6),
    "u_delta2": u_delta2(6),
    "u_abelian2": u_abelian(2, 6),
    "z2": group_zn(2),
    "z3": group_zn(3),
    "smash": smash_kd_z2(6),
}

COEFS = [Fraction(n, d) for n in range(-3, 4) if n for d in (1, 2, 3)]


def coefs():
    return st.sampled_from(COEFS)


def elements(H: HopfAlgebra, degree: int, max_terms: int = 3):
    keys = H.basis(degree)
    return st.lists(st.tuples(st.sampled_from(keys), coefs()), min_size=0, max_size=max_terms).map(
        lambda items: _sum_elem(H, items)
    )


def tensors(H: HopfAlgebra, arity: int, degree: int, max_terms: int = 3):
    keys = H.basis(degree)
    term = st.tuples(st.tuples(*[st.sampled_from(keys)] * arity), coefs())
    return st.lists(term, min_size=0, max_size=max_terms).map(lambda items: _sum_tensor(H, arity, items))


def _sum_elem(H: HopfAlgebra, items) -> HElem:
    out: dict = {}
    for k, c in items:
        out[k] = out.get(k, 0) + c
    return H.elem(out)


def _sum_tensor(H: HopfAlgebra, arity: int, items) -> TensorElem:
    out: dict = {}
    for k, c in items:
        out[k] = out.get(k, 0) + c
    return TensorElem(H, arity, out)


def random_elem(rng: random.Random, H: HopfAlgebra, degree: int, terms: int = 3) -> HElem:
    keys = H.basis(degree)
    return _sum_elem(H, [(rng.choice(keys), rng.choice(COEFS)) for _ in range(rng.randint(1, terms))])


def random_tensor(rng: random.Random, H: HopfAlgebra, arity: int, degree: int, terms: int = 3) -> TensorElem:
    keys = H.basis(degree)
    items = [(tuple(rng.choice(keys) for _ in range(arity)), rng.choice(COEFS)) for _ in range(rng.randint(1, terms))]
    return _sum_tensor(H, arity, items)


def contract(H: HopfAlgebra, t: TensorElem, fn) -> HElem:
    """``sum fn(h1, h2)`` over the terms of a two-fold tensor."""
    out = H.zero()
    for (k1, k2), c in t.terms.items():
        out = out + fn(H.elem({k1: 1}), H.elem({k2: 1})) * c
    return out
