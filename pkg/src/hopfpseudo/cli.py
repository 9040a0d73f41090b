"""``python -m hopfpseudo <subcommand> FILE``.

Exit codes: 0 every check passed, 1 a check failed, 2 usage or parse error,
3 undecided.  Output depends only on the file contents and the flags.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .annihilation import annihilation_basis, annihilation_product, check_lift
from .conformal import ConformalAlgebra, check_conformal_axioms, check_conformal_operator
from .dual import DualElem, ValidityError
from .operators import (
    DERIVE_KINDS,
    NSPseudoalgebra,
    OperatorKind,
    PreconditionError,
    check_ns,
    check_operator,
    derive,
    parse_kind,
)
from .pseudoalgebra import Pseudoalgebra, check_structure
from .rank1 import classify
from .report import Report
from .textformat import SUBCOMMANDS, DefinitionError, DefinitionFile, parse

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_UNDECIDED = 0, 1, 2, 3


class UsageError(Exception):
    """The file lacks what the subcommand needs, or the flags conflict."""


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational p/q, got {text!r}") from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        v = -1
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfpseudo", description="Exact checks on Hopf pseudoalgebras and their operators.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "check": "verify the pseudoalgebra axioms and every claimed operator identity",
        "derive": "build the structures induced by the claimed operators and verify them",
        "classify": "classify rank-one operators of one kind up to a degree cap",
        "annihilate": "check the annihilation algebra product and lifted operators",
        "conformal": "check the conformal axioms, x-brackets and conformal operator identities",
    }
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, help=helps[name])
        p.add_argument("file")
        p.add_argument("--cap", type=_nonneg, default=None, help="degree cap (classify: 3, others: 2)")
        p.add_argument("--truncation", type=_nonneg, default=None, help="dual truncation degree")
        p.add_argument("--weight", type=_fraction, default=None, help="weight p/q for reynolds / rota_baxter")
        p.add_argument("--parallel", type=_nonneg, default=0, help="worker processes (0 runs serially)")
        p.add_argument("--report", default=None, help="also write the report to this path")
        if name == "classify":
            p.add_argument("--kind", required=True, help="averaging, nijenhuis, reynolds(w) or rota_baxter(w)")
        elif name == "derive":
            p.add_argument("--kind", choices=DERIVE_KINDS, default=None, help="restrict to one derived structure")
    return parser


# ---------------------------------------------------------------------------
# Jobs
# ---------------------------------------------------------------------------
# A job is a small picklable tuple; each subcommand lists its jobs in a fixed
# order and the verdict is the weakest job verdict.


def _need_algebra(df: DefinitionFile) -> Pseudoalgebra:
    if df.algebra is None:
        raise UsageError("the file has no pseudoalgebra section")
    return df.algebra


def _kind_with_weight(kind: OperatorKind, weight) -> OperatorKind:
    if weight is None or kind.weight is None:
        return kind
    return OperatorKind(kind.name, weight)


def _table_lines(A: Pseudoalgebra) -> list[str]:
    lines = []
    for (i, j), row in A.table.items():
        for k, t in sorted(row.items()):
            lines.append(f"  e{i + 1} * e{j + 1} -> e{k + 1}: {t}")
    return lines or ["  (all products vanish)"]


def _derive_targets(kind: OperatorKind, flavor: str) -> list[str]:
    if kind.name == "averaging" and flavor == "associative":
        return ["lie_from_averaging", "assoc_twist_right", "assoc_twist_left"]
    if kind.name == "nijenhuis":
        return {"associative": ["ns_from_nijenhuis"], "lie": ["lie_deform_nijenhuis"]}.get(flavor, [])
    if kind.name == "reynolds" and flavor == "associative":
        return ["reynolds_double"]
    return []


def list_jobs(df: DefinitionFile, command: str, opts: dict) -> list[tuple]:
    A = _need_algebra(df)
    ops = list(enumerate(df.operators))
    if command == "check":
        jobs = [("structure",)]
        jobs += [("operator", n, str(k)) for n, spec in ops for k in spec.kinds]
        return jobs
    if command == "derive":
        jobs = []
        for n, spec in ops:
            for k in spec.kinds:
                for target in _derive_targets(k, A.flavor):
                    if opts["kind"] in (None, target):
                        jobs.append(("derive", n, str(k), target))
        if not jobs:
            raise UsageError("no claimed operator kind induces a derived structure on this algebra")
        return jobs
    if command == "classify":
        if A.rank != 1:
            raise UsageError("classification needs a rank-one pseudoalgebra")
        return [("classify",)]
    if command == "annihilate":
        if df.dual is None:
            raise UsageError("the file has no dual section")
        jobs = [("product",)]
        jobs += [("lift", n, str(k)) for n, spec in ops for k in spec.kinds]
        return jobs
    if A.flavor == "associative":
        raise UsageError("conformal algebras come from Lie pseudoalgebras, this one is associative")
    jobs = [("axioms",), ("brackets",)]
    jobs += [("conformal_operator", n, str(k)) for n, spec in ops for k in spec.kinds]
    return jobs


def _dual_space(df: DefinitionFile, opts: dict):
    if df.dual is not None:
        return df.dual.space(df.H, opts["truncation"])
    from .dual import DualSpace

    return DualSpace(df.H, opts["truncation"])


def run_job(df: DefinitionFile, command: str, opts: dict, job: tuple) -> tuple[str, bool | None]:
    """Execute one job; returns the rendered text and its verdict."""
    A = _need_algebra(df)
    cap = opts["cap"]
    tag = job[0]
    if tag == "structure":
        if A.flavor == "unchecked":
            return "[PASS] structure: flavor 'unchecked', no axioms to verify", True
        rep = check_structure(A)
        return rep.render(), rep.passed
    if tag in ("operator", "derive", "lift", "conformal_operator"):
        spec = df.operators[job[1]]
        kind = _kind_with_weight(parse_kind(job[2]), opts["weight"])
    if tag == "operator":
        rep = check_operator(kind, spec.op, A)
        rep.title = f"operator {spec.name}: {rep.title}"
        return rep.render(), rep.passed
    if tag == "derive":
        target = job[3]
        head = f"derive {target} from {spec.name} ({kind})"
        weight = kind.weight if target == "reynolds_double" else None
        try:
            out = derive(target, spec.op, A, weight)
        except PreconditionError as exc:
            rep = exc.report or Report(str(exc), passed=False)
            return f"[FAIL] {head}: {exc}\n{rep.render(1)}", False
        if isinstance(out, NSPseudoalgebra):
            lines = [f"{head}", "succ:"] + _table_lines(out.succ) + ["prec:"] + _table_lines(out.prec)
            lines += ["diamond:"] + _table_lines(out.diamond)
            rep = check_ns(out)
        else:
            lines = [head] + _table_lines(out)
            rep = check_structure(out)
        return "\n".join(lines + [rep.render()]), rep.passed
    if tag == "classify":
        kind = parse_kind(opts["kind"], opts["weight"])
        sol = classify(kind, df.H, A.coefficient(0, 0, 0), 3 if cap is None else cap)
        return sol.render().rsplit("\n", 1)[0], sol.passed
    X = _dual_space(df, opts)
    degree = 2 if cap is None else cap
    if tag == "product":
        rep = Report(f"annihilation product: full and canonical forms agree up to degree {degree}")
        lines = []
        basis = annihilation_basis(X, A.rank, degree)
        try:
            for u, v in itertools.product(basis, repeat=2):
                full = annihilation_product(u, v, A, "full")
                canon = annihilation_product(u, v, A, "canonical")
                rep.tick()
                if not full.agrees(canon):
                    rep.fail(f"({u}) ({v})", f"{full} versus {canon}")
                lines.append(f"  ({u}) ({v}) = {full}")
        except ValidityError as exc:
            rep.undecided(f"truncation {X.truncation} too small: {exc}")
        return "\n".join([rep.render()] + lines), rep.passed
    if tag == "lift":
        try:
            xi = df.dual.dual_map(X)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        rep = check_lift(kind, xi, spec.op, A, X, degree=degree)
        rep.title = f"operator {spec.name}: {rep.title}"
        return rep.render(), rep.passed
    C = ConformalAlgebra(A, X, A.name)
    if tag == "axioms":
        rep = check_conformal_axioms(C, degree)
        return rep.render(), rep.passed
    if tag == "brackets":
        lines = [f"x-brackets up to degree {degree}"]
        keys = X.basis_keys(degree if df.H.kind != "group" else None)
        try:
            for i, j in itertools.product(range(A.rank), repeat=2):
                for key in keys:
                    val = C.bracket(C.e(i), C.e(j), DualElem(X, {key: Fraction(1)}))
                    lines.append(f"  [e{i + 1} x[{df.H.format_key(key)}] e{j + 1}] = {val}")
        except ValidityError as exc:
            lines.append(f"  note: truncation {X.truncation} too small: {exc}")
            return "\n".join(lines), None
        return "\n".join(lines), True
    rep = check_conformal_operator(kind, spec.op, C, degree)
    rep.title = f"operator {spec.name}: {rep.title}"
    return rep.render(), rep.passed


_WORKER_CACHE: dict = {}


def _worker(path: str, command: str, opts: dict, job: tuple):
    df = _WORKER_CACHE.get(path)
    if df is None:
        df = _WORKER_CACHE[path] = parse(path)
    return run_job(df, command, opts, job)


def _combine(verdicts) -> bool | None:
    verdicts = list(verdicts)
    if any(v is False for v in verdicts):
        return False
    if any(v is None for v in verdicts):
        return None
    return True


def execute(path: str, command: str, opts: dict) -> tuple[str, int]:
    """Run a subcommand on a file; returns the report text and the exit code."""
    df = parse(path)
    jobs = list_jobs(df, command, opts)
    if opts["parallel"] > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=opts["parallel"]) as pool:
            results = list(pool.map(_worker, *zip(*[(path, command, opts, job) for job in jobs])))
    else:
        results = [run_job(df, command, opts, job) for job in jobs]
    verdict = _combine(v for _, v in results)
    status = {True: "PASS", False: "FAIL", None: "UNDECIDED"}[verdict]
    lines = [f"hopfpseudo {command} {path}"]
    for text, _ in results:
        lines.append(text)
    lines.append(f"verdict: {status}")
    code = {True: EXIT_PASS, False: EXIT_FAIL, None: EXIT_UNDECIDED}[verdict]
    return "\n".join(lines) + "\n", code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    opts = {
        "cap": args.cap,
        "truncation": args.truncation,
        "weight": args.weight,
        "parallel": args.parallel,
        "kind": getattr(args, "kind", None),
    }
    try:
        if opts["kind"] is not None and args.command == "classify":
            parse_kind(opts["kind"], opts["weight"])
        text, code = execute(args.file, args.command, opts)
    except DefinitionError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, OSError, ValueError) as exc:
        print(f"hopfpseudo {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code
