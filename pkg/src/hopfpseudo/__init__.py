"""Exact computations with cocommutative Hopf algebras, pseudoalgebras over
them, and averaging / Nijenhuis / Reynolds / Rota-Baxter operators.

All arithmetic is over the rationals.  Submodules:

- ``hopf``: enveloping, group and smash-product Hopf algebras.
- ``pseudo``: elements of ``H^(x)n (x)_H M`` and their normal form.
- ``pseudoalgebra``: free pseudoalgebras of finite rank and their axioms.
- ``operators``: operator identities, closure results, derived structures.
- ``rank1``: classification of rank-one operators up to a degree cap.
- ``dual``, ``annihilation``: the dual ``X = H*`` and annihilation algebras.
- ``conformal``: x-brackets and the conformal operator identities.
- ``textformat``, ``cli``: definition files and ``python -m hopfpseudo``.
"""

from .annihilation import (
    AnnihilationElem,
    DualMap,
    annihilation_basis,
    annihilation_product,
    check_lift,
    check_plain_identity,
    integral_map,
    lift_operator,
)
from .conformal import (
    ConformalAlgebra,
    check_conformal_axioms,
    check_conformal_operator,
    x_bracket,
)
from .dual import DualElem, DualSpace, ValidityError
from .hopf import GroupSpec, HElem, HopfAlgebra, LieAlgebraSpec, TensorElem
from .operators import (
    DERIVE_KINDS,
    HLinearOp,
    NSPseudoalgebra,
    OperatorKind,
    PreconditionError,
    check_operator,
    derive,
    parse_kind,
)
from .pseudo import PseudoElem, fourier, fourier_inv, normalize
from .pseudoalgebra import ModuleElem, Pseudoalgebra, check_structure, rank_one
from .rank1 import SolutionReport, classify
from .report import Report
from .textformat import DefinitionError, DefinitionFile, emit, parse, parse_text

__version__ = "0.1.0"

__all__ = [
    "AnnihilationElem",
    "ConformalAlgebra",
    "DERIVE_KINDS",
    "DefinitionError",
    "DefinitionFile",
    "DualElem",
    "DualMap",
    "DualSpace",
    "GroupSpec",
    "HElem",
    "HLinearOp",
    "HopfAlgebra",
    "LieAlgebraSpec",
    "ModuleElem",
    "NSPseudoalgebra",
    "OperatorKind",
    "PreconditionError",
    "PseudoElem",
    "Pseudoalgebra",
    "Report",
    "SolutionReport",
    "TensorElem",
    "ValidityError",
    "annihilation_basis",
    "annihilation_product",
    "check_conformal_axioms",
    "check_conformal_operator",
    "check_lift",
    "check_operator",
    "check_plain_identity",
    "check_structure",
    "classify",
    "derive",
    "emit",
    "fourier",
    "fourier_inv",
    "integral_map",
    "lift_operator",
    "normalize",
    "parse",
    "parse_kind",
    "parse_text",
    "rank_one",
    "x_bracket",
]
