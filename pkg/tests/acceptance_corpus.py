"""Named fixtures, brute-force oracles and the suites behind criteria 3 to 8.

Each suite reads its fixtures from a :class:`Corpus` mapping.  Reads are
recorded, so a mutated fixture only re-runs the suites that depend on it.
The oracles here recompute structure and operator identities from the raw
tables with plain tensor arithmetic; they share no code with
``hopfpseudo.operators`` or ``check_structure``.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from helpers import HOPF, random_elem, random_tensor
from hopfpseudo.annihilation import check_lift, integral_map, product_from_representatives
from hopfpseudo.conformal import ConformalAlgebra, check_conformal_axioms, check_conformal_operator, x_bracket
from hopfpseudo.corpus import (
    averaging_kxk,
    commutator_alpha,
    cur_kxk,
    cur_lie_ax_b,
    cur_upper_triangular,
    example_averaging,
    example_nijenhuis_one,
    example_nijenhuis_two,
    example_reynolds,
    example_two_two,
    left_multiplication_t2,
    standard_alpha,
    w1,
)
from hopfpseudo.dual import DualSpace
from hopfpseudo.hopf import TensorElem
from hopfpseudo.operators import (
    HLinearOp,
    OperatorKind,
    check_homomorphism,
    check_inverse,
    check_ns,
    check_operator,
    check_power_identity,
    check_square_branches,
    derive,
    op_conjugate,
    op_polynomial,
    op_power,
    op_scale,
    parse_kind,
)
from hopfpseudo.pseudo import PseudoElem
from hopfpseudo.pseudoalgebra import ModuleElem, Pseudoalgebra, check_structure, rank_one_alpha, rank_one
from hopfpseudo.rank1 import classify, operator_from_h

ALL_H = ["k_d", "u_delta2", "z2", "z3", "smash"]
ENVELOPING = ["k_d", "u_delta2", "smash"]
GROUPS = ["z2", "z3"]


# (criterion, passed, detail) lines collected by test_acceptance.py
RESULTS: list = []


class SuiteFailure(AssertionError):
    pass


def expect(cond, label: str) -> None:
    if not cond:
        raise SuiteFailure(label)


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------


class Corpus(dict):
    """Fixture name -> Pseudoalgebra or HLinearOp, recording reads."""

    def __init__(self, *args, **kw):
        super().__init__(*args, **kw)
        self.reads: set = set()

    def __getitem__(self, key):
        self.reads.add(key)
        return super().__getitem__(key)

    def copy_with(self, key, value) -> "Corpus":
        out = Corpus(dict.items(self))
        dict.__setitem__(out, key, value)
        return out


def _central(H):
    if H.kind == "group":
        return H.group_element(1) * 2 + 1
    if H.lie.is_abelian and H.kind == "enveloping":
        return H.gen(0) + 3
    return H.scalar(4)


def _params(name):
    """Deterministic pseudo-random (h, lambda) for the averaging example."""
    rng = random.Random(f"example-{name}")
    H = HOPF[name]
    h = random_elem(rng, H, 2)
    lam = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2, 3]))
    return h, lam


def build_corpus() -> tuple[Corpus, list]:
    """Fixtures plus the claims ``(operator, algebra, kind, verdict)`` made about them."""
    c = Corpus()
    claims = []
    for name in ALL_H:
        H = HOPF[name]
        h, lam = _params(name)
        g = H.gen(0) + 2 if H.N else H.group_element(1) + 2
        c[f"A22/{name}"] = example_two_two(H, commutator_alpha(H), "associative")
        c[f"T/{name}"] = example_averaging(H, h, lam)
        c[f"N1/{name}"] = example_nijenhuis_one(H, g, 5)
        c[f"N2/{name}"] = example_nijenhuis_two(H, _central(H), -2)
        c[f"R-/{name}"] = example_reynolds(H, g, Fraction(-1, 2))
        c[f"R+/{name}"] = example_reynolds(H, g, Fraction(1, 2))
        c[f"KK/{name}"] = cur_kxk(H)
        c[f"E/{name}"] = averaging_kxk(H)
        c[f"D/{name}"] = HLinearOp.diagonal(H, [2, -1], "D")
        c[f"RK/{name}"] = HLinearOp.diagonal(H, [Fraction(-1, 2), 0], "RK")
        c[f"T2/{name}"] = cur_upper_triangular(H)
        c[f"L/{name}"] = left_multiplication_t2(H)
        c[f"AXB/{name}"] = cur_lie_ax_b(H)
        c[f"M/{name}"] = HLinearOp.from_rows(H, [[1, 0], [0, 0]], "M")
        claims += [
            (f"T/{name}", f"A22/{name}", "averaging", True),
            (f"N1/{name}", f"A22/{name}", "nijenhuis", True),
            (f"N2/{name}", f"A22/{name}", "nijenhuis", True),
            (f"R-/{name}", f"A22/{name}", "reynolds(2)", True),
            (f"R+/{name}", f"A22/{name}", "reynolds(2)", False),
            (f"E/{name}", f"KK/{name}", "averaging", True),
            (f"E/{name}", f"KK/{name}", "reynolds(-1)", True),
            (f"D/{name}", f"KK/{name}", "nijenhuis", True),
            (f"RK/{name}", f"KK/{name}", "reynolds(2)", True),
            (f"L/{name}", f"T2/{name}", "nijenhuis", True),
            (f"M/{name}", f"AXB/{name}", "nijenhuis", True),
        ]
        if H.N:
            c[f"L22/{name}"] = example_two_two(H, standard_alpha(H), "lie")
            claims += [
                (f"T/{name}", f"L22/{name}", "averaging", True),
                (f"N1/{name}", f"L22/{name}", "nijenhuis", True),
                (f"R-/{name}", f"L22/{name}", "reynolds(2)", True),
            ]
    for name in ("k_d", "z2"):
        H = HOPF[name]
        # one operator per branch that is Nijenhuis, one that is not
        c[f"P0/{name}"] = HLinearOp.from_rows(H, [[0, 0, 0], [0, 0, 0], [1, 0, 0]], "P0")
        c[f"Q0/{name}"] = HLinearOp.from_rows(H, [[0, 1, 0], [0, 0, 0], [0, 0, 0]], "Q0")
        c[f"P1/{name}"] = HLinearOp.from_rows(H, [[1, 1, 0], [0, 0, 0], [0, 0, 0]], "P1")
        c[f"Q1/{name}"] = HLinearOp.from_rows(H, [[1, 0, 0], [0, 0, 0], [1, 0, 0]], "Q1")
        c[f"P2/{name}"] = HLinearOp.from_rows(H, [[1, 0, 0], [0, -1, 0], [0, 2, 1]], "P2")
        c[f"Q2/{name}"] = HLinearOp.diagonal(H, [1, -1, 1], "Q2")
        claims += [
            (f"P0/{name}", f"T2/{name}", "nijenhuis", False),
            (f"Q0/{name}", f"T2/{name}", "nijenhuis", True),
            (f"P1/{name}", f"T2/{name}", "nijenhuis", True),
            (f"Q1/{name}", f"T2/{name}", "nijenhuis", False),
            (f"P2/{name}", f"T2/{name}", "nijenhuis", False),
            (f"Q2/{name}", f"T2/{name}", "nijenhuis", True),
        ]
    H = HOPF["k_d"]
    c["W1"] = w1(H)
    c["TW"] = HLinearOp.scalar(H, 1, 3, "TW")
    c["RW"] = HLinearOp.scalar(H, 1, Fraction(-1, 2), "RW")
    claims += [
        ("TW", "W1", "averaging", True),
        ("TW", "W1", "nijenhuis", True),
        ("RW", "W1", "reynolds(2)", True),
        ("RW", "W1", "reynolds(-2)", False),
    ]
    U = HOPF["u_delta2"]
    c["R1/u_delta2"] = rank_one(U, rank_one_alpha(U, TensorElem.zero(U, 2), U.gen(0)), "lie", "rank one")
    return c, claims


def flavors(c: Corpus) -> dict:
    return {k: v.flavor for k, v in dict.items(c) if isinstance(v, Pseudoalgebra)}


# ---------------------------------------------------------------------------
# Brute-force oracles
# ---------------------------------------------------------------------------


def _add(full: dict, m: int, t: TensorElem) -> None:
    full[m] = full[m] + t if m in full else t


def _prod_full(A: Pseudoalgebra, a: list, b: list) -> dict:
    """Full form ``{m: beta_m}`` of ``a * b`` for coefficient lists ``a``, ``b``."""
    full: dict = {}
    for i, f in enumerate(a):
        if f.is_zero:
            continue
        for j, g in enumerate(b):
            if g.is_zero:
                continue
            for m, beta in A.table.get((i, j), {}).items():
                _add(full, m, TensorElem.pure(f, g) * beta)
    return full


def _op_module(P: HLinearOp, a: list) -> list:
    H = P.H
    out = [H.zero() for _ in range(P.rank)]
    for i, f in enumerate(a):
        for t in range(P.rank):
            out[t] = out[t] + f * P.entry(i, t)
    return out


def _op_full(P: HLinearOp, full: dict) -> dict:
    """``(id (x) id (x)_H P)`` on a full form; ``beta (x)_H p e_t = beta Delta(p) (x)_H e_t``."""
    out: dict = {}
    H = P.H
    for m, beta in full.items():
        for t in range(P.rank):
            p = P.entry(m, t)
            if not p.is_zero:
                _add(out, t, beta * H.coproduct(p))
    return out


def _lin(*parts) -> dict:
    out: dict = {}
    for coef, full in parts:
        for m, t in full.items():
            _add(out, m, t.scale(coef))
    return out


def _vanishes(full: dict) -> bool:
    return all(t.is_zero for t in full.values())


def oracle_operator(kind, P: HLinearOp, A: Pseudoalgebra) -> bool:
    kind = parse_kind(kind)
    H = A.H
    if P.rank != A.rank:
        return False
    for i, j in itertools.product(range(A.rank), repeat=2):
        a = [H.one() if k == i else H.zero() for k in range(A.rank)]
        b = [H.one() if k == j else H.zero() for k in range(A.rank)]
        Pa, Pb = _op_module(P, a), _op_module(P, b)
        lhs = _prod_full(A, Pa, Pb)
        if kind.name == "averaging":
            if not _vanishes(_lin((1, lhs), (-1, _op_full(P, _prod_full(A, Pa, b))))):
                return False
            if not _vanishes(_lin((1, lhs), (-1, _op_full(P, _prod_full(A, a, Pb))))):
                return False
            continue
        inner = _lin((1, _prod_full(A, Pa, b)), (1, _prod_full(A, a, Pb)))
        if kind.name == "nijenhuis":
            inner = _lin((1, inner), (-1, _op_full(P, _prod_full(A, a, b))))
        elif kind.name == "reynolds":
            inner = _lin((1, inner), (kind.weight, lhs))
        else:
            inner = _lin((1, inner), (kind.weight, _prod_full(A, a, b)))
        if not _vanishes(_lin((1, lhs), (-1, _op_full(P, inner)))):
            return False
    return True


def _triple(A: Pseudoalgebra, i: int, j: int, k: int, left: bool) -> dict:
    out: dict = {}
    for m in range(A.rank):
        beta = A.table.get((i, j) if left else (j, k), {}).get(m)
        if beta is None or beta.is_zero:
            continue
        for l in range(A.rank):
            gamma = A.table.get((m, k) if left else (i, m), {}).get(l)
            if gamma is None or gamma.is_zero:
                continue
            if left:
                piece = beta.tensor(TensorElem.one(A.H, 1)) * gamma.apply_coproduct(0)
            else:
                piece = TensorElem.one(A.H, 1).tensor(beta) * gamma.apply_coproduct(1)
            _add(out, l, piece)
    return out


def _swap12(full: dict) -> dict:
    return {m: t.permute((1, 0, 2)) for m, t in full.items()}


def oracle_structure(A: Pseudoalgebra, flavor: str) -> bool:
    r = range(A.rank)
    if flavor == "associative":
        return all(
            _vanishes(_lin((1, _triple(A, i, j, k, True)), (-1, _triple(A, i, j, k, False))))
            for i, j, k in itertools.product(r, repeat=3)
        )
    for i, j in itertools.product(r, repeat=2):
        fwd = A.table.get((i, j), {})
        back = A.table.get((j, i), {})
        for m in set(fwd) | set(back):
            s = fwd.get(m, TensorElem.zero(A.H, 2)) + back.get(m, TensorElem.zero(A.H, 2)).flip()
            if not s.is_zero:
                return False
    for i, j, k in itertools.product(r, repeat=3):
        jac = _lin(
            (1, _triple(A, i, j, k, False)),
            (-1, _triple(A, i, j, k, True)),
            (-1, _swap12(_triple(A, j, i, k, False))),
        )
        if not _vanishes(jac):
            return False
    return True


def claim_verdicts(c: Corpus, claims: list, flavor_map: dict) -> dict:
    """Oracle verdicts for every structure and operator claim."""
    out = {}
    for name, flavor in flavor_map.items():
        out[("structure", name)] = oracle_structure(dict.__getitem__(c, name), flavor)
    for op, alg, kind, _ in claims:
        out[(op, alg, kind)] = oracle_operator(kind, dict.__getitem__(c, op), dict.__getitem__(c, alg))
    return out


# ---------------------------------------------------------------------------
# Mutations
# ---------------------------------------------------------------------------


def table_mutants(A: Pseudoalgebra):
    for (i, j), row in sorted(A.table.items()):
        for m, t in sorted(row.items()):
            for key in sorted(t.terms, key=repr):
                terms = dict(t.terms)
                terms[key] = -terms[key]
                table = {ij: dict(r) for ij, r in A.table.items()}
                table[(i, j)][m] = TensorElem(A.H, t.arity, terms)
                yield f"e{i + 1}*e{j + 1}->e{m + 1} term {key}", Pseudoalgebra(A.H, A.rank, table, A.flavor, A.name)


def matrix_mutants(P: HLinearOp):
    rows = [list(r) for r in P.matrix]
    for i, row in enumerate(rows):
        for t, h in enumerate(row):
            for key in sorted(h.terms, key=repr):
                terms = dict(h.terms)
                terms[key] = -terms[key]
                new = [list(r) for r in rows]
                new[i][t] = P.H.elem(terms)
                yield f"entry ({i + 1},{t + 1}) term {key}", HLinearOp.from_rows(P.H, new, P.name)


def mutants(c: Corpus):
    for name, obj in sorted(dict.items(c)):
        gen = table_mutants(obj) if isinstance(obj, Pseudoalgebra) else matrix_mutants(obj)
        for label, m in gen:
            yield name, label, m


# ---------------------------------------------------------------------------
# Suites 3 to 8
# ---------------------------------------------------------------------------


def _check(kind, P, A):
    return check_operator(kind, P, A).passed is True


def suite_examples(c: Corpus, claims: list) -> int:
    """Criterion 3: the worked examples, including the corrected Reynolds sign."""
    n = 0
    for name in ALL_H:
        A = c[f"A22/{name}"]
        expect(check_structure(A, "associative").passed, f"A22/{name} associative")
        expect(_check("averaging", c[f"T/{name}"], A), f"T/{name} averaging")
        expect(_check("nijenhuis", c[f"N1/{name}"], A), f"N1/{name} nijenhuis")
        expect(_check("nijenhuis", c[f"N2/{name}"], A), f"N2/{name} nijenhuis")
        expect(_check("reynolds(2)", c[f"R-/{name}"], A), f"R-/{name} reynolds(2)")
        expect(check_operator("reynolds(2)", c[f"R+/{name}"], A).passed is False, f"R+/{name} must fail")
        n += 6
    return n


def _averaging_pairs(c):
    for name in ALL_H:
        yield c[f"A22/{name}"], c[f"T/{name}"]
        yield c[f"KK/{name}"], c[f"E/{name}"]


def _nijenhuis_pairs(c):
    for name in ALL_H:
        yield c[f"A22/{name}"], c[f"N1/{name}"]
        yield c[f"A22/{name}"], c[f"N2/{name}"]
        yield c[f"KK/{name}"], c[f"D/{name}"]
        yield c[f"T2/{name}"], c[f"L/{name}"]


def suite_closure(c: Corpus, claims: list) -> int:
    """Criterion 4: powers, polynomials, scaling, conjugation, power identities, square branches."""
    n = 0
    for A, T in _averaging_pairs(c):
        expect(_check("averaging", T, A), "averaging base case")
        for k in range(1, 5):
            expect(_check("averaging", op_power(T, k), A), f"T^{k}")
        for coeffs in ([0, 1], [0, 2, -1], [0, Fraction(1, 2), 3, -2]):
            expect(_check("averaging", op_polynomial(T, coeffs, "averaging"), A), f"polynomial {coeffs}")
        expect(_check("averaging", op_scale(T, -3), A), "scaled averaging")
        n += 9
    for A, N in _nijenhuis_pairs(c):
        expect(_check("nijenhuis", N, A), "nijenhuis base case")
        for coeffs in ([3], [1, 1], [2, -1, 1], [-1, 0, Fraction(1, 2), 4]):
            expect(_check("nijenhuis", op_polynomial(N, coeffs), A), f"polynomial {coeffs}")
        expect(_check("nijenhuis", op_scale(N, Fraction(2, 3)), A), "scaled nijenhuis")
        expect(check_power_identity(N, A, 3, 3).passed, "power identity i, j <= 3")
        n += 7
    for name in ALL_H:
        H = HOPF[name]
        A = c[f"A22/{name}"]
        R = c[f"R-/{name}"]
        expect(_check("reynolds(2)", R, A), "reynolds base case")
        expect(_check(OperatorKind("reynolds", Fraction(2, 5)), op_scale(R, 5), A), "kR has weight lambda/k")
        tau = HLinearOp.diagonal(H, [3, 1])
        tau_inv = HLinearOp.diagonal(H, [Fraction(1, 3), 1])
        expect(check_inverse(tau, tau_inv), "tau invertible")
        expect(_check("averaging", op_conjugate(c[f"T/{name}"], tau, tau_inv, A), A), "conjugated averaging")
        expect(_check("nijenhuis", op_conjugate(c[f"N1/{name}"], tau, tau_inv, A), A), "conjugated nijenhuis")
        expect(_check("reynolds(2)", op_conjugate(R, tau, tau_inv, A), A), "conjugated reynolds")
        K = c[f"KK/{name}"]
        swap = HLinearOp.from_rows(H, [[0, 1], [1, 0]])
        expect(_check("averaging", op_conjugate(c[f"E/{name}"], swap, swap, K), K), "swap-conjugated averaging")
        expect(_check("nijenhuis", op_conjugate(c[f"D/{name}"], swap, swap, K), K), "swap-conjugated nijenhuis")
        n += 7
    for op, alg, kind, verdict in claims:
        if alg.startswith("T2/") and op[0] in "PQ":
            rep = check_square_branches(c[op], c[alg])
            branch = {"0": "N^2 = 0", "1": "N^2 = N", "2": "N^2 = id"}[op[1]]
            expect(rep.data.get("branch") == branch, f"{op} branch {branch}")
            expect(rep.passed is True, f"{op} equivalence")
            expect(check_operator(kind, c[op], c[alg]).passed is verdict, f"claim {op} {kind} {verdict}")
            n += 1
    return n


def suite_derive(c: Corpus, claims: list) -> int:
    """Criterion 5: the derived structures on at least two bases each."""
    n = 0
    for A, T in _averaging_pairs(c):
        expect(check_structure(derive("lie_from_averaging", T, A), "lie").passed, "lie_from_averaging")
        for side in ("assoc_twist_right", "assoc_twist_left"):
            B = derive(side, T, A)
            expect(check_structure(B, "associative").passed, side)
            expect(_check("averaging", T, B), f"{side} re-admits T")
        n += 3
    for A, N in _nijenhuis_pairs(c):
        expect(check_ns(derive("ns_from_nijenhuis", N, A)).passed, "ns_from_nijenhuis")
        n += 1
    lie_pairs = [(c["W1"], c["TW"])]
    for name in ALL_H:
        lie_pairs.append((c[f"AXB/{name}"], c[f"M/{name}"]))
        if HOPF[name].N:
            lie_pairs.append((c[f"L22/{name}"], c[f"N1/{name}"]))
    for L, N in lie_pairs:
        LN = derive("lie_deform_nijenhuis", N, L)
        expect(check_structure(LN, "lie").passed, "lie_deform_nijenhuis")
        expect(check_homomorphism(N, LN, L).passed, "N is a homomorphism")
        n += 2
    for name in ALL_H:
        for A, R in ((c[f"A22/{name}"], c[f"R-/{name}"]), (c[f"KK/{name}"], c[f"RK/{name}"])):
            D = derive("reynolds_double", R, A, 2)
            expect(check_structure(D, "associative").passed, "reynolds_double")
            expect(_check("reynolds(2)", R, D), "R is Reynolds on the double")
            n += 2
    return n


CLASSIFY_CASES = [
    ("W1", 3, "averaging", None, "{c·1}", None),
    ("W1", 3, "nijenhuis", None, "{c·1}", None),
    ("W1", 3, "reynolds", Fraction(2), "{0, -1/2}", {0, Fraction(-1, 2)}),
    ("W1", 3, "reynolds", Fraction(-1, 3), "{0, 3}", {0, 3}),
    ("W1", 3, "reynolds", Fraction(0), "{0}", {0}),
    ("R1/u_delta2", 2, "averaging", None, "{c·1}", None),
    ("R1/u_delta2", 2, "nijenhuis", None, "{c·1}", None),
    ("R1/u_delta2", 2, "reynolds", Fraction(2), "{0, -1/2}", {0, Fraction(-1, 2)}),
    ("R1/u_delta2", 2, "reynolds", Fraction(0), "{0}", {0}),
]


def suite_classify(c: Corpus, claims: list) -> int:
    """Criterion 6: rank-one classification, re-checked and falsified independently."""
    n = 0
    for name, cap, kind, weight, expected, scalars in CLASSIFY_CASES:
        A = c[name]
        H = A.H
        full_kind = OperatorKind(kind, weight)
        try:
            sol = classify(kind, H, A.coefficient(0, 0, 0), cap, weight)
        except ValueError as exc:
            raise SuiteFailure(f"{name} {kind}: {exc}") from None
        expect(sol.description == expected, f"{name} {full_kind}: {sol.description} != {expected}")
        expect(sol.passed is True, f"{name} {full_kind} verification")
        monomials = [H.elem({k: 1}) for k in H.basis(cap) if H.key_degree(k) >= 1]
        for family in sol.solutions:
            for point in family.samples():
                h = sol.system.h_of(point)
                expect(all(H.key_degree(k) == 0 for k in h.terms), f"{name} {full_kind}: non-scalar solution {h}")
                if scalars is not None:
                    expect(h.counit() in scalars, f"{name} {full_kind}: unexpected point {h}")
                expect(_check(full_kind, operator_from_h(H, h), A), f"{name} {full_kind}: {h} fails")
                for mono in monomials:
                    spurious = operator_from_h(H, h + mono)
                    expect(not _check(full_kind, spurious, A), f"{name} {full_kind}: {h} + {mono} passes")
                    n += 1
        n += 1
    return n


def suite_annihilation(c: Corpus, claims: list) -> int:
    """Criterion 7: integral lift of the averaging example and independence of the representative."""
    n = 0
    for name in GROUPS:
        H = HOPF[name]
        X = DualSpace(H)
        A = c[f"A22/{name}"]
        rep = check_lift("averaging", integral_map(X), c[f"T/{name}"], A, X)
        expect(rep.data["hypotheses"] is True and rep.data["lift"] is True, f"integral lift over {name}")
        n += 1
        rng = random.Random(f"representatives-{name}")
        algebras = [A, c[f"KK/{name}"], c[f"T2/{name}"]]
        changes = 0
        while changes < 100:
            B = rng.choice(algebras)
            i, j = rng.randrange(B.rank), rng.randrange(B.rank)
            p = B.basis_product(i, j)
            if p.is_zero:
                continue
            full = sorted(p.full.items())
            x, y = X.x(rng.choice(H.basis(0))), X.x(rng.choice(H.basis(0)))
            ref = product_from_representatives(x, y, [(t, H.one(), m) for m, t in full], X, B.rank)
            m0, beta = rng.choice(full)
            t, h = random_tensor(rng, H, 2, 0), random_elem(rng, H, 0)
            reps = [(tt, H.one(), m) for m, tt in full if m != m0]
            reps += [(beta - t * H.coproduct(h), H.one(), m0), (t, h, m0)]
            expect(product_from_representatives(x, y, reps, X, B.rank).agrees(ref), "representative change")
            changes += 1
        n += changes
    return n


KINDS_64 = ["averaging", "nijenhuis", "reynolds(2)", "reynolds(-1)", "rota_baxter(0)", "rota_baxter(1)"]


def _lie_algebras(c):
    out = ["W1", "R1/u_delta2"]
    for name in ALL_H:
        out.append(f"AXB/{name}")
        if HOPF[name].N:
            out.append(f"L22/{name}")
    return out


def suite_conformal(c: Corpus, claims: list) -> int:
    """Criterion 8: operators passing their pseudoalgebra check pass the conformal check."""
    n = 0
    L = c["W1"]
    H = L.H
    C = ConformalAlgebra(L, DualSpace(H, 6))
    e = C.e(0)
    expect(x_bracket(e, e, C.X.x(1), C) == ModuleElem.basis(H, 1, 0, H.scalar(-2)), "[e_x1 e] = -2e")
    expect(x_bracket(e, e, C.X.x(0), C) == ModuleElem.basis(H, 1, 0, -H.gen(0)), "[e_x0 e] = -de")
    ops_on = {}
    for op, alg, kind, verdict in claims:
        ops_on.setdefault(alg, set()).add(op)
        if alg in _lie_algebras(c) and verdict is not None:
            expect(check_operator(kind, c[op], c[alg]).passed is verdict, f"claim {op} on {alg} as {kind}")
    for alg in _lie_algebras(c):
        L = c[alg]
        expect(check_structure(L, "lie").passed, f"{alg} is Lie")
        Hh = L.H
        C = ConformalAlgebra(L, DualSpace(Hh, 6))
        degree = 3 if Hh.kind != "group" else None
        expect(check_conformal_axioms(C, degree, 2).passed is True, f"conformal axioms for {alg}")
        candidates = [c[op] for op in sorted(ops_on.get(alg, ()))]
        candidates += [HLinearOp.scalar(Hh, L.rank, k) for k in (0, 1, Fraction(-1, 2))]
        for R in candidates:
            for kind in KINDS_64:
                if check_operator(kind, R, L).passed:
                    expect(check_conformal_operator(kind, R, C, degree).passed is True, f"{R.name} on {alg} as {kind}")
                    n += 1
    return n


SUITES = {
    3: suite_examples,
    4: suite_closure,
    5: suite_derive,
    6: suite_classify,
    7: suite_annihilation,
    8: suite_conformal,
}


def run_suite(number: int, c: Corpus, claims: list) -> tuple[bool, str, int]:
    """Run one suite; returns ``(passed, message, checks)``."""
    try:
        n = SUITES[number](c, claims)
    except SuiteFailure as exc:
        return False, str(exc), 0
    except ValueError as exc:
        return False, f"{type(exc).__name__}: {exc}", 0
    return True, "", n
