import itertools
import random
from fractions import Fraction

import pytest

from helpers import HOPF, random_elem, random_tensor
from hopfpseudo.annihilation import (
    AnnihilationElem,
    DualMap,
    annihilation_basis,
    annihilation_product,
    check_lift,
    check_plain_identity,
    integral_map,
    lift_operator,
    product_from_representatives,
)
from hopfpseudo.corpus import (
    averaging_kxk,
    commutator_alpha,
    cur_kxk,
    cur_lie_ax_b,
    cur_upper_triangular,
    example_averaging,
    example_nijenhuis_one,
    example_reynolds,
    example_two_two,
    w1,
)
from hopfpseudo.dual import DualSpace, dual_right_act
from hopfpseudo.hopf import TensorElem
from hopfpseudo.operators import HLinearOp, OperatorKind
from hopfpseudo.pseudoalgebra import ModuleElem

GROUPS = ["z2", "z3"]


def _corpus(H):
    return [
        example_two_two(H, commutator_alpha(H), "associative"),
        cur_kxk(H),
        cur_upper_triangular(H),
        cur_lie_ax_b(H),
    ]


def test_w1_annihilation_algebra_is_a_witt_algebra():
    A = w1()
    X = DualSpace(A.H, 6)
    for m in range(4):
        for n in range(4):
            u = AnnihilationElem.basis_elem(X, 1, X.x(m), 0)
            v = AnnihilationElem.basis_elem(X, 1, X.x(n), 0)
            expected = AnnihilationElem.basis_elem(X, 1, X.x(m + n - 1).scale(m - n), 0) if m + n else AnnihilationElem.zero(X, 1)
            assert annihilation_product(u, v, A).agrees(expected)


@pytest.mark.parametrize("name", ["k_d", "z2", "z3", "smash"])
def test_product_does_not_depend_on_the_representative(name):
    H = HOPF[name]
    X = DualSpace(H, 4)
    rng = random.Random(f"reps-{name}")
    algebras = _corpus(H)
    changes = 0
    while changes < 100:
        A = rng.choice(algebras)
        i, j = rng.randrange(A.rank), rng.randrange(A.rank)
        p = A.basis_product(i, j)
        if p.is_zero:
            continue
        full = sorted(p.full.items())
        x = X.x(rng.choice(H.basis(2)))
        y = X.x(rng.choice(H.basis(2)))
        reference = product_from_representatives(x, y, [(t, H.one(), m) for m, t in full], X, A.rank)
        m0, beta = rng.choice(full)
        t = random_tensor(rng, H, 2, 2)
        h = random_elem(rng, H, 2)
        shifted = beta - t * H.coproduct(h)
        reps = [(tt, H.one(), m) for m, tt in full if m != m0]
        reps += [(shifted, H.one(), m0), (t, h, m0)]
        assert product_from_representatives(x, y, reps, X, A.rank).agrees(reference)
        changes += 1


@pytest.mark.parametrize("name", ["k_d", "z3", "smash"])
def test_coefficients_move_across_the_tensor_sign(name):
    H = HOPF[name]
    X = DualSpace(H, 4)
    rng = random.Random(f"move-{name}")
    for A in _corpus(H):
        for _ in range(10):
            i, j = rng.randrange(A.rank), rng.randrange(A.rank)
            h = random_elem(rng, H, 1)
            x, y = X.x(rng.choice(H.basis(2))), X.x(rng.choice(H.basis(2)))
            reps = [(t * TensorElem.pure(h, H.one()), H.one(), m) for m, t in A.basis_product(i, j).full.items()]
            lhs = product_from_representatives(x, y, reps, X, A.rank)
            u = AnnihilationElem.basis_elem(X, A.rank, dual_right_act(x, h), i)
            v = AnnihilationElem.basis_elem(X, A.rank, y, j)
            assert lhs.agrees(annihilation_product(u, v, A))
            assert AnnihilationElem.make(X, x, ModuleElem.basis(H, A.rank, i, h)).agrees(u)


@pytest.mark.parametrize("name", ["k_d", "z2", "z3", "smash"])
def test_full_and_canonical_forms_agree(name):
    H = HOPF[name]
    X = DualSpace(H, 4)
    for A in _corpus(H):
        basis = annihilation_basis(X, A.rank, 1)
        for u, v in itertools.product(basis, repeat=2):
            assert annihilation_product(u, v, A, "full").agrees(annihilation_product(u, v, A, "canonical"))


@pytest.mark.parametrize("name", GROUPS)
def test_associative_and_lie_structures_transfer(name):
    H = HOPF[name]
    X = DualSpace(H)
    for A in _corpus(H):
        basis = annihilation_basis(X, A.rank)

        def mul(u, v):
            return annihilation_product(u, v, A)

        for u, v, w in itertools.product(basis, repeat=3):
            if A.flavor == "associative":
                assert mul(mul(u, v), w).agrees(mul(u, mul(v, w)))
            elif A.flavor == "lie":
                jac = mul(u, mul(v, w)) - mul(mul(u, v), w) - mul(v, mul(u, w))
                assert jac.is_zero
        if A.flavor == "lie":
            for u, v in itertools.product(basis, repeat=2):
                assert (mul(u, v) + mul(v, u)).is_zero


def _group_operators(H):
    h = H.group_element(1) * 2 + 1
    A = example_two_two(H, commutator_alpha(H))
    yield "averaging", example_averaging(H, h, 3), A
    yield "averaging", averaging_kxk(H), cur_kxk(H)
    yield "nijenhuis", example_nijenhuis_one(H, h, 2), A
    yield OperatorKind("reynolds", Fraction(2)), example_reynolds(H, h, Fraction(-1, 2)), A


@pytest.mark.parametrize("name", GROUPS)
def test_integral_lift_of_the_averaging_example(name):
    H = HOPF[name]
    X = DualSpace(H)
    A = example_two_two(H, commutator_alpha(H))
    P = example_averaging(H, H.group_element(1) - 2, Fraction(1, 2))
    rep = check_lift("averaging", integral_map(X), P, A, X)
    assert rep.passed is True, rep.render()
    assert rep.data["lift"] is True


@pytest.mark.parametrize("name", GROUPS)
def test_lifts_inherit_the_identity_whenever_the_hypotheses_hold(name):
    H = HOPF[name]
    X = DualSpace(H)
    n = H.group.order
    maps = [DualMap.zero(X), DualMap.identity(X)]
    maps += [integral_map(X, c) for c in (1, 2, Fraction(1, n), Fraction(-1, 3))]
    seen = set()
    for kind, P, A in _group_operators(H):
        for xi in maps:
            rep = check_lift(kind, xi, P, A, X)
            seen.add((str(kind), rep.data["hypotheses"]))
            if rep.data["hypotheses"]:
                assert rep.data["lift"] is True, rep.render()
    # every kind meets at least one admissible map
    assert {k for k, ok in seen if ok} == {"averaging", "nijenhuis", "reynolds(2)"}


@pytest.mark.parametrize("name", GROUPS)
def test_integral_is_not_group_like_so_nijenhuis_uses_zero(name):
    H = HOPF[name]
    X = DualSpace(H)
    A = example_two_two(H, commutator_alpha(H))
    P = example_nijenhuis_one(H, H.group_element(1), 2)
    assert check_lift("nijenhuis", integral_map(X), P, A, X).data["hypotheses"] is False
    assert check_lift("nijenhuis", DualMap.zero(X), P, A, X).passed is True


@pytest.mark.parametrize("name", GROUPS)
def test_reynolds_needs_the_normalized_integral(name):
    H = HOPF[name]
    X = DualSpace(H)
    A = example_two_two(H, commutator_alpha(H))
    P = example_reynolds(H, H.group_element(1), Fraction(-1, 2))
    rep = check_lift("reynolds(2)", integral_map(X, 1), P, A, X)
    assert rep.data["hypotheses"] is False
    assert rep.passed is False


def test_lift_of_a_bad_operator_fails():
    H = HOPF["z2"]
    X = DualSpace(H)
    A = cur_upper_triangular(H)
    bad = HLinearOp.from_rows(H, [[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    rep = check_lift("nijenhuis", DualMap.identity(X), bad, A, X)
    assert rep.data["hypotheses"] is False
    assert check_plain_identity("nijenhuis", lift_operator(DualMap.identity(X), bad), A, X).passed is False


def test_rota_baxter_hypotheses_are_undecided():
    H = HOPF["z2"]
    X = DualSpace(H)
    A = cur_kxk(H)
    rep = check_lift("rota_baxter(0)", DualMap.zero(X), HLinearOp.zero(H, 2), A, X)
    assert rep.data["hypotheses"] is None


def test_enveloping_algebras_have_no_integral():
    with pytest.raises(ValueError):
        integral_map(DualSpace(HOPF["k_d"], 3))


def test_bad_shapes():
    X = DualSpace(HOPF["z2"])
    with pytest.raises(ValueError):
        AnnihilationElem(X, 1, {1: X.x(0)})
    u = AnnihilationElem.basis_elem(X, 1, X.x(0), 0)
    with pytest.raises(ValueError):
        annihilation_product(u, u, cur_kxk(HOPF["z2"]))
