"""Classification of Rota-Baxter type operators on rank-one Lie pseudoalgebras.

On ``L = He`` with ``[e * e] = alpha (x)_H e`` every H-linear operator is
``P(e) = h e``.  Writing ``h = sum_I u_I d^I`` up to a degree cap turns the
operator identity into polynomial equations in the ``u_I``, one per basis
monomial of ``H (x) H``.  Those are solved exactly by linear elimination and
rational factorization; anything else is reported as undecided.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .hopf import HElem, HopfAlgebra, Key, TensorElem, _format_coef
from .linalg import from_sympy, solve_in_span, to_sympy
from .operators import HLinearOp, OperatorKind, check_operator, parse_kind
from .pseudoalgebra import Pseudoalgebra, check_structure, rank_one
from .report import Report

__all__ = [
    "ResidualSystem",
    "Solution",
    "SolutionReport",
    "residual_system",
    "solve_system",
    "classify",
    "operator_from_h",
]

MIDDOT = "·"
_SAMPLES = (Fraction(0), Fraction(1), Fraction(-2), Fraction(1, 3))


@dataclass
class ResidualSystem:
    """Unknown coefficients of ``h`` and the equations they must satisfy.

    ``equations`` maps a label ``(side, key of H (x) H)`` to a polynomial in
    ``unknowns``; the identity holds for ``h`` iff all of them vanish.
    """

    kind: OperatorKind
    H: HopfAlgebra
    alpha: TensorElem
    cap: int
    keys: list[Key]
    unknowns: list[sympy.Symbol]
    equations: dict

    def h_of(self, values) -> HElem:
        """``h`` for a point given as a sequence of rationals or a symbol map."""
        if isinstance(values, dict):
            values = [values.get(u, Fraction(0)) for u in self.unknowns]
        return self.H.elem({k: Fraction(v) for k, v in zip(self.keys, values)})

    def evaluate(self, values) -> dict:
        """Nonzero equation values at a point."""
        if not isinstance(values, dict):
            values = dict(zip(self.unknowns, values))
        subs = {u: to_sympy(v) for u, v in values.items()}
        out = {}
        for label, eq in self.equations.items():
            val = eq.subs(subs)
            if val != 0:
                out[label] = val
        return out

    def nonzero_equations(self) -> list:
        return [eq for eq in self.equations.values() if eq != 0]

    def render(self) -> str:
        lines = [f"unknowns: {', '.join(str(u) for u in self.unknowns)}"]
        for (side, key), eq in sorted(self.equations.items(), key=lambda kv: repr(kv[0])):
            if eq != 0:
                k1, k2 = key
                mono = f"{self.H.format_key(k1)} (x) {self.H.format_key(k2)}"
                lines.append(f"side {side} [{mono}]: {sympy.sstr(eq)} = 0")
        return "\n".join(lines)


@dataclass
class Solution:
    """An affine family ``u = point + sum_c c * direction`` of solutions."""

    values: dict  # unknown -> sympy expression in the free unknowns
    free: list

    def sample(self, params) -> dict:
        subs = {f: to_sympy(p) for f, p in zip(self.free, params)}
        return {u: from_sympy(e.subs(subs)) for u, e in self.values.items()}

    def samples(self) -> list[dict]:
        if not self.free:
            return [self.sample(())]
        out = []
        for n, c in enumerate(_SAMPLES):
            params = [_SAMPLES[(n + m) % len(_SAMPLES)] for m in range(len(self.free))]
            out.append(self.sample(params))
        return out

    def directions(self, unknowns) -> list[dict]:
        out = []
        for f in self.free:
            vec = {u: from_sympy(sympy.diff(self.values[u], f)) for u in unknowns}
            out.append({u: c for u, c in vec.items() if c})
        return out

    def contains(self, other: "Solution") -> bool:
        """Whether ``other`` lies inside this family."""
        subs = dict(other.values)
        for u, e in self.values.items():
            if u in self.free:
                continue
            if sympy.expand(e.subs(subs) - subs[u]) != 0:
                return False
        return True


@dataclass
class SolutionReport:
    """Outcome of :func:`classify`.

    ``passed`` is ``None`` when the solver left part of the system unresolved;
    the residual system is attached in that case.
    """

    kind: OperatorKind
    cap: int
    system: ResidualSystem
    solutions: list[Solution]
    passed: bool | None
    verification: Report
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return {True: "PASS", False: "FAIL", None: "UNDECIDED"}[self.passed]

    def h_text(self, sol: Solution) -> str:
        return _format_solution(self.system, sol)

    @property
    def description(self) -> str:
        if self.passed is None:
            return "undecided"
        return "{" + ", ".join(self.h_text(s) for s in self.solutions) + "}"

    def points(self) -> list[HElem]:
        """Isolated solutions as elements of ``H``."""
        return [self.system.h_of(s.sample(())) for s in self.solutions if not s.free]

    def render(self) -> str:
        H = self.system.H
        lines = [
            f"rank-one classification: {self.kind}",
            f"hopf algebra: {H!r}",
            f"alpha: {self.system.alpha}",
            f"degree cap: {self.cap}",
            f"unknowns: {len(self.system.unknowns)}, equations: {len(self.system.nonzero_equations())}",
            f"solutions: {self.description}",
        ]
        lines.extend(f"note: {n}" for n in self.notes)
        lines.append(self.verification.render())
        if self.passed is None:
            lines.append("residual system:")
            lines.append(self.system.render())
        lines.append(f"verdict: {self.status}")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()


# ---------------------------------------------------------------------------
# Building the system
# ---------------------------------------------------------------------------


def _symbol_name(H: HopfAlgebra, I: tuple[int, ...]) -> str:
    if not any(I):
        return "u_1"
    parts = []
    for n, e in enumerate(I):
        if e:
            parts.append(f"d{n + 1}" + (f"^{e}" if e > 1 else ""))
    return "u_" + "_".join(p.replace("^", "") for p in parts)


class _Poly:
    """Sparse polynomial coefficients, keyed by sorted unknown-index tuples."""

    def __init__(self):
        self.data: dict = {}

    def add(self, label, mono: tuple[int, ...], t: TensorElem, coef: Fraction = Fraction(1)) -> None:
        for key, c in t.terms.items():
            slot = self.data.setdefault((label, key), {})
            slot[mono] = slot.get(mono, Fraction(0)) + c * coef


def residual_system(kind, H: HopfAlgebra, alpha: TensorElem, d: int, weight=None, check_lie: bool = True) -> ResidualSystem:
    """Expand the rank-one operator identity with ``h = sum_{|I| <= d} u_I d^I``."""
    kind = parse_kind(kind, weight)
    if H.kind != "enveloping":
        raise ValueError("rank-one classification needs an enveloping algebra")
    if alpha.H is not H or alpha.arity != 2:
        raise ValueError("alpha must be an element of H (x) H")
    if alpha.is_zero:
        raise ValueError("alpha = 0: the rank-one bracket must be nonzero")
    if d < 0:
        raise ValueError("degree cap must be nonnegative")
    if check_lie:
        rep = check_structure(rank_one(H, alpha), "lie")
        if not rep:
            raise ValueError("alpha does not define a Lie pseudoalgebra:\n" + rep.render())

    indices = H.multi_indices(d)
    keys = [H.key(I) for I in indices]
    unknowns = [sympy.Symbol(_symbol_name(H, I)) for I in indices]
    mons = [H.monomial(I) for I in indices]
    deltas = [H.coproduct(m) for m in mons]
    one = H.one()
    n = len(mons)
    acc = _Poly()
    w = kind.weight

    def hh(a, b):  # (h_a (x) h_b) alpha
        return TensorElem.pure(mons[a], mons[b]) * alpha

    # residual = lhs - rhs, each side a sum of multilinear terms in copies of h
    for a, b in itertools.product(range(n), repeat=2):
        mono = tuple(sorted((a, b)))
        lhs = hh(a, b)
        left = TensorElem.pure(mons[a], one) * alpha * deltas[b]
        right = TensorElem.pure(one, mons[a]) * alpha * deltas[b]
        if kind.name == "averaging":
            acc.add(1, mono, lhs - left)
            acc.add(2, mono, lhs - right)
        else:
            acc.add(1, mono, lhs - left - right)
            if kind.name == "nijenhuis":
                acc.add(1, mono, alpha * deltas[a] * deltas[b])
    if kind.name == "reynolds" and w:
        for a, b, c in itertools.product(range(n), repeat=3):
            acc.add(1, tuple(sorted((a, b, c))), hh(a, b) * deltas[c], -w)
    if kind.name == "rota_baxter" and w:
        for c in range(n):
            acc.add(1, (c,), alpha * deltas[c], -w)

    equations = {}
    for label, coeffs in acc.data.items():
        expr = sympy.Integer(0)
        for mono, c in coeffs.items():
            if c:
                term = to_sympy(c)
                for idx in mono:
                    term *= unknowns[idx]
                expr += term
        equations[label] = sympy.expand(expr)
    return ResidualSystem(kind, H, alpha, d, keys, unknowns, equations)


# ---------------------------------------------------------------------------
# Solving
# ---------------------------------------------------------------------------


class _Undecided(Exception):
    pass


def _free_symbols(eq, order) -> list:
    present = eq.free_symbols
    return [u for u in order if u in present]


def _solve(eqs: list, assign: dict, order: list, notes: list, depth: int = 0) -> list[dict]:
    if depth > 4 * len(order) + 8:
        raise _Undecided("branching depth exceeded")
    live = []
    seen = set()
    for eq in eqs:
        e = sympy.expand(eq.subs(assign)) if assign else eq
        if e == 0:
            continue
        if e.is_number:
            return []
        e = sympy.factor_terms(e)
        # drop rational content so duplicates collapse
        _, prim = sympy.Poly(e, *_free_symbols(e, order)).primitive()
        e = sympy.expand(prim.as_expr())
        if e not in seen:
            seen.add(e)
            live.append(e)
    if not live:
        return [assign]

    def rank(e):
        syms = _free_symbols(e, order)
        return (sympy.Poly(e, *syms).total_degree(), len(syms), sympy.count_ops(e))

    live.sort(key=lambda e: (rank(e), sympy.sstr(e)))
    first = live[0]
    syms = _free_symbols(first, order)
    if sympy.Poly(first, *syms).total_degree() == 1:
        pivot = syms[-1]  # eliminate the highest-degree unknown first
        value = sympy.solve(first, pivot)[0]
        new = {u: sympy.expand(e.subs(pivot, value)) for u, e in assign.items()}
        new[pivot] = value
        return _solve(live[1:], new, order, notes, depth + 1)

    for eq in live:
        syms = _free_symbols(eq, order)
        _, factors = sympy.factor_list(eq, *syms)
        if all(sympy.Poly(f, *syms).total_degree() == 1 for f, _ in factors):
            out = []
            for f, _ in factors:
                out.extend(_solve(live + [f], dict(assign), order, notes, depth + 1))
            return out
    for eq in live:
        syms = _free_symbols(eq, order)
        if len(syms) == 1:
            _, factors = sympy.factor_list(eq, *syms)
            raise _Undecided(
                "irrational roots over Q: " + " * ".join(f"({sympy.sstr(f)})" for f, _ in factors) + " = 0"
            )
    raise _Undecided("no linear or linearly factoring equation left: " + sympy.sstr(live[0]))


def _finish(system: ResidualSystem, assign: dict) -> Solution:
    # assignments are kept fully substituted, so values only involve free unknowns
    values = {u: sympy.expand(assign.get(u, u)) for u in system.unknowns}
    free = [u for u in system.unknowns if u not in assign]
    return Solution(values, free)


def solve_system(system: ResidualSystem) -> tuple[list[Solution] | None, list[str]]:
    """Exact solution families, or ``None`` with notes when out of scope."""
    notes: list[str] = []
    try:
        raw = _solve(system.nonzero_equations(), {}, system.unknowns, notes)
    except _Undecided as exc:
        if str(exc) not in notes:
            notes.append(str(exc))
        return None, notes
    sols = [_finish(system, a) for a in raw]
    kept: list[Solution] = []
    # bigger families first so points inside them get absorbed
    for s in sorted(sols, key=lambda s: (-len(s.free), _solution_sort_key(system, s))):
        if not any(k.contains(s) for k in kept):
            kept.append(s)
    kept.sort(key=lambda s: (len(s.free) > 0, _solution_sort_key(system, s)))
    return kept, notes


def _solution_sort_key(system: ResidualSystem, sol: Solution):
    out = [any(sol.values[u] != 0 for u in system.unknowns)]
    for u in system.unknowns:
        e = sol.values[u]
        out.append((0, from_sympy(e), "") if e.is_number else (1, Fraction(0), sympy.sstr(e)))
    return tuple(out)


def _format_solution(system: ResidualSystem, sol: Solution) -> str:
    H = system.H
    names = {}
    for n, f in enumerate(sol.free):
        names[f] = sympy.Symbol("c" if n == 0 else f"c{n + 1}")
    parts = []
    for u, key in zip(system.unknowns, system.keys):
        e = sympy.expand(sol.values[u].subs(names))
        if e == 0:
            continue
        mono = H.format_key(key)
        if e.is_number:
            c = from_sympy(e)
            if mono == "1":
                parts.append(_format_coef(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{_format_coef(c)}*{mono}")
        else:
            text = sympy.sstr(e)
            if len(e.args) > 1 and e.is_Add:
                text = f"({text})"
            parts.append(f"{text}{MIDDOT}{mono}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


# ---------------------------------------------------------------------------
# Classification with verification
# ---------------------------------------------------------------------------


def operator_from_h(H: HopfAlgebra, h: HElem, name: str = "P") -> HLinearOp:
    return HLinearOp.from_rows(H, [[h]], name)


def classify(kind, H: HopfAlgebra, alpha: TensorElem, d: int, weight=None) -> SolutionReport:
    """Solve the rank-one identity up to degree cap ``d`` and verify the answer.

    Every reported family is re-checked with :func:`check_operator` at sample
    parameters, and the falsification sweep adds each monomial of degree
    ``1..d`` outside the family to a sample and expects the identity to break.
    """
    kind = parse_kind(kind, weight)
    system = residual_system(kind, H, alpha, d)
    A = rank_one(H, alpha, "lie", "L")
    solutions, notes = solve_system(system)
    verification = Report("verification")
    if solutions is None:
        verification.undecided("solver scope exceeded; no verdict")
        return SolutionReport(kind, d, system, [], None, verification, notes)

    sound = Report("soundness: samples pass the operator identity")
    sweep = Report("falsification sweep: perturbations break the identity")
    high = [(u, key) for u, key in zip(system.unknowns, system.keys) if H.key_degree(key) >= 1]
    for sol in solutions:
        dirs = sol.directions(system.unknowns)
        for point in sol.samples():
            h = system.h_of(point)
            sound.tick()
            rep = check_operator(kind, operator_from_h(H, h), A)
            if not rep:
                sound.fail(f"h = {h}", rep.failures[0][1])
            for u, key in high:
                if dirs and solve_in_span(dirs, {u: Fraction(1)}) is not None:
                    continue
                h2 = h + H.elem({key: Fraction(1)})
                sweep.tick()
                if check_operator(kind, operator_from_h(H, h2), A):
                    sweep.fail(f"h = {h2}", "identity still holds")
    verification.add(sound)
    verification.add(sweep)
    return SolutionReport(kind, d, system, solutions, verification.passed, verification, notes)
