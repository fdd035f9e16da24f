"""Exact arithmetic for alternating q-Narayana and q-binomial sums.

The package builds q-analogue combinatorial polynomials (q-integers,
Gaussian binomials, q-Narayana and q-Catalan polynomials), forms the
alternating sums over symmetric windows that they enter, and decides
divisibility and coefficient-nonnegativity claims about those sums by exact
integer polynomial division; a replayable Bezout-cofactor proof trace and a
sweep-and-report command line sit on top.
"""

__version__ = "0.1.0"

from .errors import (
    BothZero,
    InvalidModulus,
    InvalidParameter,
    NotDivisible,
    ParseError,
    ProofError,
)
from .polyarith import (
    NEG_INF,
    ONE,
    Q,
    RAT_ONE,
    RAT_ZERO,
    ZERO,
    IntPoly,
    RatPoly,
    arith,
    eval_int,
    exact_div,
    format_poly,
    gcd_bezout,
    is_nonneg,
    parse_poly,
)
from .qobjects import (
    catalan_int,
    narayana_int,
    q_binomial,
    q_catalan,
    q_integer,
    q_narayana,
    q_shifted_factorial,
)
from .sums import (
    FPoly,
    NormalizedSum,
    binom2,
    cyclic_modulus,
    cyclic_sum,
    gjz_sum,
    thm12_sum,
)
from .verify import (
    STATEMENT_CLAIM,
    STATEMENT_CLASS,
    STATEMENTS,
    CaseSpec,
    DivisionCheck,
    ProofTrace,
    Verdict,
    check_divisibility,
    claim_holds,
    replay_proof,
    verify_case,
)

__all__ = [
    "__version__",
    "BothZero",
    "InvalidModulus",
    "InvalidParameter",
    "NotDivisible",
    "ParseError",
    "ProofError",
    "NEG_INF",
    "ZERO",
    "ONE",
    "Q",
    "RAT_ZERO",
    "RAT_ONE",
    "IntPoly",
    "RatPoly",
    "arith",
    "exact_div",
    "gcd_bezout",
    "eval_int",
    "is_nonneg",
    "format_poly",
    "parse_poly",
    "q_integer",
    "q_shifted_factorial",
    "q_binomial",
    "q_narayana",
    "q_catalan",
    "narayana_int",
    "catalan_int",
    "FPoly",
    "NormalizedSum",
    "binom2",
    "thm12_sum",
    "cyclic_sum",
    "cyclic_modulus",
    "gjz_sum",
    "STATEMENTS",
    "STATEMENT_CLASS",
    "STATEMENT_CLAIM",
    "CaseSpec",
    "DivisionCheck",
    "Verdict",
    "ProofTrace",
    "check_divisibility",
    "verify_case",
    "claim_holds",
    "replay_proof",
]
