"""Definition files: a TOML document whose strings hold algebra literals.

Literal grammar (EBNF, whitespace-insensitive)::

    h_elem   = [sign] h_term { sign h_term } ;
    h_term   = coef [ ["*"] h_factor ] | h_factor ;
    h_factor = monomial ;
    monomial = atom { atom } ;
    atom     = "1" | "d" digits [ "^" digits ] | "g:" name | "(" h_elem ")" ;
    tensor   = "0" | [sign] t_term { sign t_term } ;
    t_term   = [ coef ["*"] ] h_factor { "(x)" h_factor } ;
    dual     = "0" | [sign] d_term { sign d_term } ;
    d_term   = [ coef ["*"] ] "x[" monomial "]" ;
    coef     = digits [ "/" digits ] ;
    sign     = "+" | "-" ;

``d_i^a`` is the divided power ``d_i^a / a!``; juxtaposition is the product
in ``H``, so ``d1 d1 = 2 d1^2``.  ``g:name`` is a group element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

try:
    import tomllib as tomli
except ModuleNotFoundError:  # Python < 3.11
    import tomli

from .annihilation import DualMap, integral_map
from .dual import DualElem, DualSpace
from .hopf import GroupSpec, HElem, HopfAlgebra, LieAlgebraSpec, TensorElem, _format_coef, _format_sum
from .operators import HLinearOp, OperatorKind, parse_kind
from .pseudoalgebra import FLAVORS, Pseudoalgebra

__all__ = [
    "DefinitionError",
    "HopfSection",
    "OperatorSpec",
    "DualSection",
    "DefinitionFile",
    "parse_h",
    "parse_tensor",
    "parse_dual",
    "format_h",
    "format_tensor",
    "format_dual",
    "parse",
    "parse_text",
    "emit",
    "SUBCOMMANDS",
]

SUBCOMMANDS = ("check", "derive", "classify", "annihilate", "conformal")


class DefinitionError(ValueError):
    """One or more positioned errors in a definition file."""

    def __init__(self, errors: list[str]):
        self.errors = list(errors)
        super().__init__("\n".join(self.errors))


# ---------------------------------------------------------------------------
# Literals
# ---------------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<tensor>\(x\))|(?P<num>\d+(?:/\d+)?)|(?P<gen>d\d+)|(?P<group>g:[A-Za-z0-9_]+)"
    r"|(?P<xopen>x\[)|(?P<op>[-+*^()\]]))"
)


class _Lexer:
    def __init__(self, text: str, where: str):
        self.text = text
        self.where = where
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
                raise self.error(col, f"unexpected character {text[col - 1]!r}")
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind) + 1))
            pos = m.end()
        self.i = 0

    def error(self, col: int, msg: str) -> DefinitionError:
        return DefinitionError([f"{self.where}: column {col}: {msg}"])

    def peek(self, offset: int = 0):
        j = self.i + offset
        return self.tokens[j] if j < len(self.tokens) else ("end", "", len(self.text) + 1)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, col = self.take()
        if val != value:
            raise self.error(col, f"expected {value!r}, found {val or 'end of input'!r}")


def _atom_start(tok) -> bool:
    kind, val, _ = tok
    return kind in ("gen", "group") or (kind == "num" and val == "1") or val == "("


def _parse_monomial(lx: _Lexer, H: HopfAlgebra) -> HElem:
    out = None
    while True:
        kind, val, col = lx.peek()
        if kind == "gen":
            lx.take()
            i = int(val[1:])
            if not 1 <= i <= H.N:
                raise lx.error(col, f"unknown generator {val} (dimension {H.N})")
            exp = 1
            if lx.peek()[1] == "^":
                lx.take()
                k2, v2, c2 = lx.take()
                if k2 != "num" or "/" in v2:
                    raise lx.error(c2, "exponent must be a nonnegative integer")
                exp = int(v2)
            index = [0] * H.N
            index[i - 1] = exp
            atom = H.monomial(index)
        elif kind == "group":
            lx.take()
            try:
                atom = H.group_element(val[2:])
            except KeyError:
                raise lx.error(col, f"unknown group element {val}") from None
        elif kind == "num" and val == "1" and out is None:
            lx.take()
            atom = H.one()
        elif kind == "op" and val == "(":
            lx.take()
            atom = _parse_h_sum(lx, H)
            lx.expect(")")
        else:
            break
        out = atom if out is None else out * atom
    if out is None:
        kind, val, col = lx.peek()
        raise lx.error(col, f"expected a monomial, found {val or 'end of input'!r}")
    return out


def _parse_factor(lx: _Lexer, H: HopfAlgebra) -> HElem:
    return _parse_monomial(lx, H)


def _parse_coef(lx: _Lexer) -> Fraction | None:
    kind, val, col = lx.peek()
    if kind != "num":
        return None
    lx.take()
    num, _, den = val.partition("/")
    if den and int(den) == 0:
        raise lx.error(col, "zero denominator")
    return Fraction(int(num), int(den or 1))


def _sign(lx: _Lexer, first: bool) -> int | None:
    kind, val, col = lx.peek()
    if val in "+-" and kind == "op":
        lx.take()
        return -1 if val == "-" else 1
    if first:
        return 1
    return None


def _parse_h_term(lx: _Lexer, H: HopfAlgebra) -> HElem:
    c = _parse_coef(lx)
    if c is None:
        return _parse_factor(lx, H)
    if lx.peek()[1] == "*":
        lx.take()
        return _parse_factor(lx, H) * c
    if _atom_start(lx.peek()) and lx.peek()[1] != "1":
        return _parse_factor(lx, H) * c
    return H.scalar(c)


def _parse_h_sum(lx: _Lexer, H: HopfAlgebra) -> HElem:
    total = H.zero()
    first = True
    while True:
        s = _sign(lx, first)
        if s is None:
            break
        total = total + _parse_h_term(lx, H) * s
        first = False
        if lx.peek()[1] not in ("+", "-"):
            break
    return total


def _zero_literal(text: str, where: str) -> bool:
    """``True`` for the literal ``0``; empty literals are rejected."""
    stripped = text.strip()
    if not stripped:
        raise DefinitionError([f"{where}: empty literal"])
    return stripped == "0"


def parse_h(text: str, H: HopfAlgebra, where: str = "literal") -> HElem:
    _zero_literal(text, where)
    lx = _Lexer(text, where)
    out = _parse_h_sum(lx, H)
    kind, val, col = lx.peek()
    if kind != "end":
        raise lx.error(col, f"unexpected {val!r}")
    return out


def parse_tensor(text: str, H: HopfAlgebra, arity: int = 2, where: str = "literal") -> TensorElem:
    total = TensorElem.zero(H, arity)
    if _zero_literal(text, where):
        return total
    lx = _Lexer(text, where)
    first = True
    while lx.peek()[0] != "end":
        s = _sign(lx, first)
        if s is None:
            kind, val, col = lx.peek()
            raise lx.error(col, f"expected '+' or '-', found {val!r}")
        first = False
        c = _parse_coef(lx)
        if c is not None and lx.peek()[1] == "*":
            lx.take()
        elif c is not None and lx.peek()[0] == "tensor":
            # the coefficient was the unit monomial "1"
            lx.i -= 1
            c = None
        factors = [_parse_factor(lx, H)]
        while lx.peek()[0] == "tensor":
            lx.take()
            factors.append(_parse_factor(lx, H))
        if len(factors) != arity:
            col = lx.peek()[2]
            raise lx.error(col, f"term has {len(factors)} tensor factors, expected {arity}")
        term = TensorElem.pure(*factors)
        total = total + term.scale((c if c is not None else 1) * s)
    return total


def parse_dual(text: str, X: DualSpace, where: str = "literal") -> DualElem:
    H = X.H
    total = X.zero()
    if _zero_literal(text, where):
        return total
    lx = _Lexer(text, where)
    first = True
    while lx.peek()[0] != "end":
        s = _sign(lx, first)
        if s is None:
            kind, val, col = lx.peek()
            raise lx.error(col, f"expected '+' or '-', found {val!r}")
        first = False
        c = _parse_coef(lx)
        if c is not None and lx.peek()[1] == "*":
            lx.take()
        kind, val, col = lx.take()
        if kind != "xopen":
            raise lx.error(col, "expected x[...]")
        mono = _parse_monomial(lx, H)
        lx.expect("]")
        if len(mono.terms) != 1 or next(iter(mono.terms.values())) != 1:
            raise lx.error(col, "x[...] must name a basis monomial")
        key = next(iter(mono.terms))
        total = total + X.x(key).scale((c if c is not None else 1) * s)
    return total


def format_h(h: HElem) -> str:
    return str(h)


def format_tensor(t: TensorElem) -> str:
    return str(t)


def format_dual(x: DualElem) -> str:
    return str(DualElem(x.X, x.coeffs))


# ---------------------------------------------------------------------------
# Sections
# ---------------------------------------------------------------------------


@dataclass
class HopfSection:
    kind: str
    dim: int = 0
    brackets: dict = field(default_factory=dict)  # (i, j) -> {k: Fraction}, 0-based, i < j
    group_order: int = 1
    group_table: tuple | None = None  # None means cyclic
    group_names: tuple | None = None
    action: dict = field(default_factory=dict)  # (g, i) -> {k: Fraction}
    degree_cap: int = 8

    def build(self) -> HopfAlgebra:
        lie = LieAlgebraSpec(self.dim, self.brackets) if self.kind != "group" else None
        if self.kind == "enveloping":
            return HopfAlgebra.enveloping(lie, self.degree_cap)
        if self.group_table is None:
            table = tuple(tuple((a + b) % self.group_order for b in range(self.group_order)) for a in range(self.group_order))
        else:
            table = self.group_table
        group = GroupSpec(self.group_order, table, 0, None, self.group_names)
        if self.kind == "group":
            return HopfAlgebra.group_algebra(group)
        return HopfAlgebra.smash(lie, group, self.action, self.degree_cap)


@dataclass
class OperatorSpec:
    name: str
    op: HLinearOp
    kinds: list[OperatorKind]

    def signature(self):
        rows = tuple(tuple(tuple(self.op.entry(i, t).sorted_terms()) for t in range(self.op.rank)) for i in range(self.op.rank))
        return (self.name, rows, tuple(str(k) for k in self.kinds))


@dataclass
class DualSection:
    truncation: int | None = None
    xi: str = "integral"  # integral | identity | zero | explicit
    xi_scale: Fraction = Fraction(1)
    xi_images: dict = field(default_factory=dict)  # key -> DualElem (explicit only)

    def signature(self):
        images = tuple(sorted((k, tuple(sorted(v.coeffs.items()))) for k, v in self.xi_images.items()))
        return (self.truncation, self.xi, self.xi_scale, images)

    def space(self, H: HopfAlgebra, truncation: int | None = None) -> DualSpace:
        return DualSpace(H, truncation if truncation is not None else self.truncation)

    def dual_map(self, X: DualSpace) -> DualMap:
        if self.xi == "integral":
            return integral_map(X, self.xi_scale)
        if self.xi == "identity":
            m = DualMap.identity(X)
            return m if self.xi_scale == 1 else DualMap(X, lambda x: x.scale(self.xi_scale), f"{self.xi_scale}*id")
        if self.xi == "zero":
            return DualMap.zero(X)
        images = {k: DualElem(X, v.coeffs) for k, v in self.xi_images.items()}

        def apply(x: DualElem) -> DualElem:
            out = X.zero()
            for k, c in x.coeffs.items():
                if k in images:
                    out = out + images[k].scale(c)
            return out

        return DualMap(X, apply, "xi")


@dataclass
class DefinitionFile:
    hopf: HopfSection
    H: HopfAlgebra
    algebra: Pseudoalgebra | None
    operators: list[OperatorSpec]
    dual: DualSection | None
    tasks: list[str]

    def operator(self, name: str) -> OperatorSpec:
        for spec in self.operators:
            if spec.name == name:
                return spec
        raise KeyError(name)

    def signature(self):
        alg = None
        if self.algebra is not None:
            A = self.algebra
            table = tuple(
                sorted(((i, j, k), tuple(t.sorted_terms())) for (i, j), row in A.table.items() for k, t in row.items())
            )
            alg = (A.name, A.rank, A.flavor, table)
        return (
            self.hopf,
            alg,
            tuple(s.signature() for s in self.operators),
            self.dual.signature() if self.dual else None,
            tuple(self.tasks),
        )

    def __eq__(self, other):
        if not isinstance(other, DefinitionFile):
            return NotImplemented
        return self.signature() == other.signature()


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


_BRACKET = re.compile(r"^\s*\[\s*d(\d+)\s*,\s*d(\d+)\s*\]\s*=\s*(.+)$")
_ACTION = re.compile(r"^\s*g:([A-Za-z0-9_]+)\s*\.\s*d(\d+)\s*=\s*(.+)$")


class _Collector:
    def __init__(self):
        self.errors: list[str] = []

    def err(self, where: str, msg: str) -> None:
        self.errors.append(f"{where}: {msg}")

    def run(self, where: str, fn, *args):
        try:
            return fn(*args)
        except DefinitionError as exc:
            self.errors.extend(exc.errors)
        except (ValueError, KeyError, ZeroDivisionError) as exc:
            self.errors.append(f"{where}: {exc}")
        return None


def _linear_in_generators(text: str, dim: int, where: str) -> dict:
    H = HopfAlgebra.enveloping(LieAlgebraSpec(dim), 1)
    h = parse_h(text, H, where)
    out = {}
    for (I, _g), c in h.terms.items():
        if sum(I) != 1:
            raise DefinitionError([f"{where}: right-hand side must be a combination of generators"])
        out[I.index(1)] = c
    return out


def _expect(d: dict, key: str, typ, where: str, col: _Collector, default=None, required=True):
    if key not in d:
        if required:
            col.err(where, f"missing key {key!r}")
        return default
    v = d[key]
    if not isinstance(v, typ) or isinstance(v, bool) and typ is not bool:
        col.err(f"{where}.{key}", f"expected {getattr(typ, '__name__', typ)}")
        return default
    return v


def _parse_hopf(doc: dict, col: _Collector) -> HopfSection | None:
    if "hopf" not in doc:
        col.errors.append("missing hopf section")
        return None
    sec = doc["hopf"]
    where = "hopf"
    kind = _expect(sec, "kind", str, where, col)
    if kind not in ("enveloping", "group", "smash"):
        col.err(f"{where}.kind", f"unknown kind {kind!r}")
        return None
    hs = HopfSection(kind)
    hs.degree_cap = _expect(sec, "degree_cap", int, where, col, 8, required=False)
    if kind in ("enveloping", "smash"):
        hs.dim = _expect(sec, "dim", int, where, col, 0)
        for n, text in enumerate(_expect(sec, "brackets", list, where, col, [], required=False)):
            w = f"{where}.brackets[{n}]"
            m = _BRACKET.match(str(text))
            if not m:
                col.err(w, "expected '[di, dj] = <combination of generators>'")
                continue
            i, j = int(m.group(1)) - 1, int(m.group(2)) - 1
            if not (0 <= i < hs.dim and 0 <= j < hs.dim) or i == j:
                col.err(w, "generator index out of range")
                continue
            rhs = col.run(w, _linear_in_generators, m.group(3), hs.dim, w)
            if rhs is None:
                continue
            if i > j:
                i, j, rhs = j, i, {k: -c for k, c in rhs.items()}
            hs.brackets[(i, j)] = rhs
    if kind in ("group", "smash"):
        gtype = _expect(sec, "group", str, where, col, "cyclic", required=False)
        if gtype == "cyclic":
            hs.group_order = _expect(sec, "order", int, where, col, 1)
        elif gtype == "table":
            table = _expect(sec, "table", list, where, col, [[0]])
            hs.group_order = len(table)
            hs.group_table = tuple(tuple(row) for row in table)
        else:
            col.err(f"{where}.group", "expected 'cyclic' or 'table'")
        names = _expect(sec, "names", list, where, col, None, required=False)
        hs.group_names = tuple(str(v) for v in names) if names is not None else None
    if kind == "smash":
        names = hs.group_names or tuple(str(g) for g in range(hs.group_order))
        for n, text in enumerate(_expect(sec, "action", list, where, col, [], required=False)):
            w = f"{where}.action[{n}]"
            m = _ACTION.match(str(text))
            if not m or m.group(1) not in names:
                col.err(w, "expected 'g:<name> . di = <combination of generators>'")
                continue
            rhs = col.run(w, _linear_in_generators, m.group(3), hs.dim, w)
            if rhs is not None:
                hs.action[(names.index(m.group(1)), int(m.group(2)) - 1)] = rhs
    return hs


def _parse_pseudo(doc: dict, H: HopfAlgebra, col: _Collector) -> Pseudoalgebra | None:
    if "pseudoalgebra" not in doc:
        return None
    sec = doc["pseudoalgebra"]
    where = "pseudoalgebra"
    rank = _expect(sec, "rank", int, where, col, 1)
    flavor = _expect(sec, "flavor", str, where, col, "unchecked", required=False)
    if flavor not in FLAVORS:
        col.err(f"{where}.flavor", f"unknown flavor {flavor!r}")
        flavor = "unchecked"
    name = _expect(sec, "name", str, where, col, "", required=False)
    table: dict = {}
    for n, entry in enumerate(_expect(sec, "product", list, where, col, [], required=False)):
        w = f"{where}.product[{n}]"
        if not isinstance(entry, dict):
            col.err(w, "expected a table")
            continue
        idx = []
        for key in ("left", "right", "result"):
            v = _expect(entry, key, int, w, col, 0)
            if not 1 <= v <= rank:
                col.err(f"{w}.{key}", f"e{v} does not exist in a rank-{rank} algebra")
                v = None
            idx.append(v)
        text = _expect(entry, "coefficient", str, w, col, "0")
        t = col.run(f"{w}.coefficient", parse_tensor, text, H, 2, f"{w}.coefficient")
        if None in idx or t is None:
            continue
        i, j, k = (v - 1 for v in idx)
        row = table.setdefault((i, j), {})
        row[k] = row[k] + t if k in row else t
    if col.errors:
        return None
    try:
        return Pseudoalgebra(H, rank, table, flavor, name)
    except ValueError as exc:
        col.err(where, str(exc))
        return None


def _parse_operators(doc: dict, H: HopfAlgebra, rank: int | None, col: _Collector) -> list[OperatorSpec]:
    out = []
    for n, sec in enumerate(doc.get("operator", [])):
        w = f"operator[{n}]"
        if not isinstance(sec, dict):
            col.err(w, "expected a table")
            continue
        name = _expect(sec, "name", str, w, col, f"P{n + 1}")
        rows = _expect(sec, "matrix", list, w, col, [])
        if rank is not None and (len(rows) != rank or any(not isinstance(r, list) or len(r) != rank for r in rows)):
            col.err(f"{w}.matrix", f"expected a {rank}x{rank} matrix")
            continue
        parsed = []
        for i, row in enumerate(rows):
            parsed.append([col.run(f"{w}.matrix[{i}][{t}]", parse_h, str(v), H, f"{w}.matrix[{i}][{t}]") for t, v in enumerate(row)])
        kinds = []
        for m, k in enumerate(_expect(sec, "kinds", list, w, col, [], required=False)):
            kk = col.run(f"{w}.kinds[{m}]", parse_kind, str(k))
            if kk is not None:
                kinds.append(kk)
        if any(v is None for row in parsed for v in row):
            continue
        try:
            op = HLinearOp.from_rows(H, parsed, name)
        except ValueError as exc:
            col.err(f"{w}.matrix", str(exc))
            continue
        out.append(OperatorSpec(name, op, kinds))
    names = [s.name for s in out]
    for nm in sorted({n for n in names if names.count(n) > 1}):
        col.err("operator", f"duplicate operator name {nm!r}")
    return out


def _parse_dual(doc: dict, H: HopfAlgebra, col: _Collector) -> DualSection | None:
    if "dual" not in doc:
        return None
    sec = doc["dual"]
    w = "dual"
    ds = DualSection()
    ds.truncation = _expect(sec, "truncation", int, w, col, None, required=False)
    ds.xi = _expect(sec, "xi", str, w, col, "integral", required=False)
    if ds.xi not in ("integral", "identity", "zero", "explicit"):
        col.err(f"{w}.xi", "expected integral, identity, zero or explicit")
    scale = _expect(sec, "xi_scale", (str, int), w, col, "1", required=False)
    try:
        ds.xi_scale = Fraction(str(scale))
    except (ValueError, ZeroDivisionError):
        col.err(f"{w}.xi_scale", "expected a rational p/q")
    if ds.xi == "explicit":
        if H.kind != "group":
            col.err(f"{w}.xi", "explicit dual maps need a group algebra")
            return ds
        X = DualSpace(H)
        images = _expect(sec, "xi_images", dict, w, col, {})
        for key_text, img in images.items():
            kw = f"{w}.xi_images.{key_text}"
            mono = col.run(kw, parse_h, key_text, H, kw)
            val = col.run(kw, parse_dual, str(img), X, kw)
            if mono is None or val is None:
                continue
            if len(mono.terms) != 1:
                col.err(kw, "key must be a basis monomial")
                continue
            ds.xi_images[next(iter(mono.terms))] = val
    return ds


def parse_text(text: str, source: str = "<string>") -> DefinitionFile:
    try:
        doc = tomli.loads(text)
    except tomli.TOMLDecodeError as exc:
        raise DefinitionError([f"{source}: syntax error: {exc}"]) from None
    col = _Collector()
    known = {"hopf", "pseudoalgebra", "operator", "dual", "tasks"}
    for key in sorted(set(doc) - known):
        col.err(key, "unknown section")
    hs = _parse_hopf(doc, col)
    if hs is None or col.errors:
        raise DefinitionError([f"{source}: {e}" for e in col.errors])
    try:
        H = hs.build()
    except (ValueError, KeyError) as exc:
        raise DefinitionError([f"{source}: hopf: {exc}"]) from None
    algebra = _parse_pseudo(doc, H, col)
    operators = _parse_operators(doc, H, algebra.rank if algebra else None, col)
    dual = _parse_dual(doc, H, col)
    tasks = doc.get("tasks", [])
    if not isinstance(tasks, list) or any(t not in SUBCOMMANDS for t in tasks):
        col.err("tasks", f"tasks must be a list drawn from {', '.join(SUBCOMMANDS)}")
        tasks = []
    if col.errors:
        raise DefinitionError([f"{source}: {e}" for e in col.errors])
    return DefinitionFile(hs, H, algebra, operators, dual, list(tasks))


def parse(path) -> DefinitionFile:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_text(text, str(path))


# ---------------------------------------------------------------------------
# Emission
# ---------------------------------------------------------------------------


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _lin_text(coeffs: dict) -> str:
    return _format_sum([(c, f"d{k + 1}") for k, c in sorted(coeffs.items())])


def emit(df: DefinitionFile) -> str:
    """Canonical text of a definition; ``parse_text(emit(df)) == df``."""
    lines = []
    if df.tasks:
        lines.append(f"tasks = [{', '.join(_q(t) for t in df.tasks)}]")
        lines.append("")
    hs = df.hopf
    lines.append("[hopf]")
    lines.append(f"kind = {_q(hs.kind)}")
    if hs.degree_cap != 8:
        lines.append(f"degree_cap = {hs.degree_cap}")
    if hs.kind != "group":
        lines.append(f"dim = {hs.dim}")
        br = [f"[d{i + 1}, d{j + 1}] = {_lin_text(v)}" for (i, j), v in sorted(hs.brackets.items())]
        lines.append(f"brackets = [{', '.join(_q(b) for b in br)}]")
    if hs.kind != "enveloping":
        if hs.group_table is None:
            lines.append('group = "cyclic"')
            lines.append(f"order = {hs.group_order}")
        else:
            lines.append('group = "table"')
            lines.append("table = [" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in hs.group_table) + "]")
        if hs.group_names is not None:
            lines.append(f"names = [{', '.join(_q(n) for n in hs.group_names)}]")
    if hs.kind == "smash":
        names = hs.group_names or tuple(str(g) for g in range(hs.group_order))
        acts = [f"g:{names[g]} . d{i + 1} = {_lin_text(v)}" for (g, i), v in sorted(hs.action.items())]
        lines.append(f"action = [{', '.join(_q(a) for a in acts)}]")
    if df.algebra is not None:
        A = df.algebra
        lines += ["", "[pseudoalgebra]"]
        if A.name:
            lines.append(f"name = {_q(A.name)}")
        lines.append(f"rank = {A.rank}")
        lines.append(f"flavor = {_q(A.flavor)}")
        for (i, j), row in sorted(A.table.items()):
            for k, t in sorted(row.items()):
                if t.is_zero:
                    continue
                lines += ["", "[[pseudoalgebra.product]]", f"left = {i + 1}", f"right = {j + 1}", f"result = {k + 1}"]
                lines.append(f"coefficient = {_q(format_tensor(t))}")
    for spec in df.operators:
        lines += ["", "[[operator]]", f"name = {_q(spec.name)}"]
        rows = []
        for i in range(spec.op.rank):
            rows.append("[" + ", ".join(_q(format_h(spec.op.entry(i, t))) for t in range(spec.op.rank)) + "]")
        lines.append(f"matrix = [{', '.join(rows)}]")
        lines.append(f"kinds = [{', '.join(_q(str(k)) for k in spec.kinds)}]")
    if df.dual is not None:
        ds = df.dual
        lines += ["", "[dual]"]
        if ds.truncation is not None:
            lines.append(f"truncation = {ds.truncation}")
        lines.append(f"xi = {_q(ds.xi)}")
        if ds.xi_scale != 1:
            lines.append(f"xi_scale = {_q(_format_coef(ds.xi_scale))}")
        if ds.xi_images:
            lines += ["", "[dual.xi_images]"]
            for key, img in sorted(ds.xi_images.items()):
                lines.append(f"{_q(df.H.format_key(key))} = {_q(format_dual(img))}")
    return "\n".join(lines) + "\n"
