"""Divisibility and nonnegativity verdicts for the statement catalog, plus
an executable replay of the Bezout-cofactor argument behind the main
congruence.

Statements are identified by short ids and classified two ways, as data
rather than code paths so sweep drivers can reclassify without touching the
verdict logic:

* class: "theorem" (a failed claim is an implementation bug) versus
  "conjecture" (a failed claim is a mathematically interesting finding);
* claim: what the statement asserts, one of exact divisibility, a nonnegative
  quotient, or nonnegativity of the built polynomial itself.

The integer statements (thm11, conj31) are decided by plain integer
arithmetic and additionally cross-checked against the q = 1 specialization
of the polynomial pipeline; the redundancy is an oracle, not waste.  For
thm11 the polynomial cross-check is capped at small n to keep large sweeps
fast; the integer route is authoritative at every size.
"""

from dataclasses import dataclass
from math import comb

from .errors import InvalidModulus, InvalidParameter, NotDivisible, ProofError
from .polyarith import (
    RAT_ONE,
    IntPoly,
    RatPoly,
    eval_int,
    exact_div,
    gcd_bezout,
    is_nonneg,
)
from .qobjects import catalan_int, narayana_int, q_binomial, q_catalan, q_integer
from .sums import FPoly, NormalizedSum, cyclic_modulus, cyclic_sum, gjz_sum, thm12_sum

STATEMENT_CLASS = {
    "thm11": "theorem",
    "thm12": "theorem",
    "gjz": "theorem",
    "conj31": "conjecture",
    "conj32": "conjecture",
    "conj33": "conjecture",
    "conj34": "conjecture",
}

STATEMENT_CLAIM = {
    "thm11": "divisible",
    "thm12": "divisible",
    "conj31": "divisible",
    "conj32": "nonneg_quotient",
    "conj33": "nonneg_quotient",
    "conj34": "divisible",
    "gjz": "nonneg_poly",
}

STATEMENTS = tuple(STATEMENT_CLASS)

_REQUIRED_FIELDS = {
    "thm11": ("n", "r"),
    "thm12": ("n", "r", "j"),
    "conj31": ("ns",),
    "conj32": ("n", "r", "j"),
    "conj33": ("ns", "j"),
    "conj34": ("ns", "f"),
    "gjz": ("ns", "j"),
}

# Above this n the thm11 polynomial cross-check is skipped; the plain
# integer route stays authoritative and fast at every size.
_POLY_CROSS_CHECK_LIMIT = 14


@dataclass(frozen=True)
class CaseSpec:
    """One fully-instantiated statement instance to verify.

    Only the fields the statement uses may be set: n, r, j for the
    Narayana-power family; ns (and j or f) for the chain families.
    """

    statement: str
    n: int = None
    r: int = None
    j: int = None
    ns: tuple = None
    f: FPoly = None

    def __post_init__(self):
        if self.ns is not None:
            object.__setattr__(self, "ns", tuple(self.ns))

    def validate(self):
        if self.statement not in STATEMENT_CLASS:
            raise InvalidParameter(f"unknown statement {self.statement!r}")
        required = _REQUIRED_FIELDS[self.statement]
        for field in ("n", "r", "j", "ns", "f"):
            value = getattr(self, field)
            if field in required and value is None:
                raise InvalidParameter(f"{self.statement} requires {field}")
            if field not in required and value is not None:
                raise InvalidParameter(f"{self.statement} does not take {field}")
        if self.n is not None and self.n < 1:
            raise InvalidParameter(f"n must be >= 1, got {self.n}")
        if self.r is not None and self.r < 1:
            raise InvalidParameter(f"r must be >= 1, got {self.r}")
        if self.j is not None and self.j < 0:
            raise InvalidParameter(f"j must be >= 0, got {self.j}")
        if self.ns is not None:
            if not self.ns:
                raise InvalidParameter("ns must be nonempty")
            for v in self.ns:
                if not isinstance(v, int) or v < 1:
                    raise InvalidParameter(f"ns entries must be integers >= 1, got {v!r}")
        if self.f is not None and not isinstance(self.f, FPoly):
            raise InvalidParameter(f"f must be an FPoly, got {self.f!r}")

    def in_theorem_range(self):
        """True when the parameters fall inside the range the statement
        actually claims; outside it a verdict is exploratory."""
        if self.statement in ("thm11", "conj31", "conj34"):
            return True
        if self.statement in ("thm12", "conj32"):
            return 0 <= self.j <= 2 * self.r - 1
        if self.statement == "conj33":
            return 0 <= self.j <= 2 * len(self.ns) - 1
        if self.statement == "gjz":
            return 0 <= self.j <= len(self.ns) - 1
        raise InvalidParameter(f"unknown statement {self.statement!r}")

    def label(self):
        parts = [self.statement]
        for field in ("n", "r", "j"):
            value = getattr(self, field)
            if value is not None:
                parts.append(f"{field}={value}")
        if self.ns is not None:
            parts.append("ns=" + ",".join(str(v) for v in self.ns))
        if self.f is not None:
            parts.append(f"f={self.f}")
        return " ".join(parts)


@dataclass(frozen=True)
class Verdict:
    """Outcome of one case: divisibility, the exact quotient when it
    exists, and the nonnegativity of that quotient.

    sum_degree is the degree of the polynomial the claim was tested on, with
    -1 standing in for the zero polynomial (integer statements count as
    constants).  shift is the normalization power of q factored out of the
    sum; quotient and quotient_nonneg are None unless divisible.
    """

    case: CaseSpec
    sum_degree: int
    shift: int
    divisible: bool
    quotient: IntPoly
    quotient_nonneg: bool
    in_theorem_range: bool


@dataclass(frozen=True)
class DivisionCheck:
    divisible: bool
    quotient: IntPoly
    quotient_nonneg: bool


@dataclass(frozen=True)
class ProofTrace:
    """Everything the replayed proof computed, already re-checked: the sum,
    the modulus, the Bezout cofactors certifying coprimality of the two
    q-integer powers, and the exact quotient."""

    n: int
    r: int
    j: int
    sum_poly: IntPoly
    modulus: IntPoly
    bezout_u: RatPoly
    bezout_v: RatPoly
    quotient: IntPoly


def check_divisibility(s, modulus):
    """Try the exact division of a sum by a modulus with constant term 1.

    Accepts a NormalizedSum or a bare IntPoly.  On success the quotient is
    re-multiplied against the modulus and compared before being reported,
    together with its nonnegativity.
    """
    if not modulus or modulus.constant != 1:
        raise InvalidModulus(
            f"modulus must have constant term 1, got {modulus}"
        )
    poly = s.poly if isinstance(s, NormalizedSum) else s
    try:
        quotient = exact_div(poly, modulus)
    except NotDivisible:
        return DivisionCheck(False, None, None)
    if quotient * modulus != poly:
        raise ArithmeticError("division re-multiplication mismatch")
    return DivisionCheck(True, quotient, is_nonneg(quotient))


def _poly_verdict(case, summed, frag):
    if isinstance(summed, NormalizedSum):
        poly, shift = summed.poly, summed.shift
    else:
        poly, shift = summed, 0
    degree = poly.degree if poly else -1
    return Verdict(
        case=case,
        sum_degree=degree,
        shift=shift,
        divisible=frag.divisible,
        quotient=frag.quotient,
        quotient_nonneg=frag.quotient_nonneg,
        in_theorem_range=case.in_theorem_range(),
    )


def _int_verdict(case, total, modulus):
    quot, rem = divmod(total, modulus)
    degree = 0 if total else -1
    if rem:
        return Verdict(case, degree, 0, False, None, None, case.in_theorem_range())
    return Verdict(
        case, degree, 0, True, IntPoly((quot,)), quot >= 0, case.in_theorem_range()
    )


def _comb0(n, k):
    return comb(n, k) if 0 <= k <= n else 0


def _verify_thm11(case):
    n, r = case.n, case.r
    total = 0
    for k in range(-n, n + 1):
        term = narayana_int(2 * n + 1, n + k + 1) ** r
        total += -term if k % 2 else term
    modulus = catalan_int(n)
    if n <= _POLY_CROSS_CHECK_LIMIT:
        if eval_int(thm12_sum(n, r, 0), 1) != total:
            raise ArithmeticError(
                f"integer and polynomial routes disagree on the sum at n={n}, r={r}"
            )
        if eval_int(q_catalan(n), 1) != modulus:
            raise ArithmeticError(f"integer and polynomial routes disagree at n={n}")
    return _int_verdict(case, total, modulus)


def _verify_narayana_power(case):
    summed = thm12_sum(case.n, case.r, case.j)
    frag = check_divisibility(summed, q_catalan(case.n))
    return _poly_verdict(case, summed, frag)


def _verify_conj31(case):
    ns = case.ns
    chain = ns + (ns[0],)
    n1 = ns[0]
    total = 0
    for k in range(-n1, n1 + 1):
        prod = 1
        for i, ni in enumerate(ns):
            upper = ni + chain[i + 1] + 1
            prod *= _comb0(upper, ni + k) * _comb0(upper, ni + k + 1)
            if not prod:
                break
        total += -prod if k % 2 else prod
    modulus = comb(n1 + ns[-1] + 1, n1)
    for i in range(len(ns) - 1):
        modulus *= ns[i] + ns[i + 1] + 1
    if eval_int(cyclic_sum(ns, FPoly(())).poly, 1) != total:
        raise ArithmeticError(
            f"integer and polynomial routes disagree on the sum at ns={ns}"
        )
    if eval_int(cyclic_modulus(ns), 1) != modulus:
        raise ArithmeticError(f"integer and polynomial routes disagree at ns={ns}")
    return _int_verdict(case, total, modulus)


def _verify_conj33(case):
    summed = cyclic_sum(case.ns, FPoly.quadratic(case.j))
    frag = check_divisibility(summed, cyclic_modulus(case.ns))
    return _poly_verdict(case, summed, frag)


def _verify_conj34(case):
    summed = cyclic_sum(case.ns, case.f)
    frag = check_divisibility(summed, cyclic_modulus(case.ns))
    return _poly_verdict(case, summed, frag)


def _verify_gjz(case):
    try:
        poly = gjz_sum(case.ns, case.j)
    except NotDivisible:
        return Verdict(case, -1, 0, False, None, None, case.in_theorem_range())
    frag = DivisionCheck(True, poly, is_nonneg(poly))
    return _poly_verdict(case, poly, frag)


_BUILDERS = {
    "thm11": _verify_thm11,
    "thm12": _verify_narayana_power,
    "conj31": _verify_conj31,
    "conj32": _verify_narayana_power,
    "conj33": _verify_conj33,
    "conj34": _verify_conj34,
    "gjz": _verify_gjz,
}


def verify_case(case):
    """Build the case's sum and modulus and return a full Verdict."""
    case.validate()
    return _BUILDERS[case.statement](case)


def claim_holds(verdict):
    """Whether the statement's own claim holds for this verdict, regardless
    of whether the parameters were inside the claimed range."""
    claim = STATEMENT_CLAIM[verdict.case.statement]
    if claim == "divisible":
        return verdict.divisible
    return bool(verdict.divisible and verdict.quotient_nonneg)


def replay_proof(n, r, j):
    """Re-run the proof mechanics for one (n, r, j): build the cyclic-form
    sum, certify via Bezout cofactors that the two neighboring q-integer
    powers are coprime, divide by the composite modulus, and re-check every
    identity on the way.  Any failure raises ProofError: a falsification
    event, never swallowed."""
    if n < 1 or r < 1:
        raise InvalidParameter(f"n and r must be >= 1, got n={n}, r={r}")
    if not 0 <= j <= 2 * r - 1:
        raise InvalidParameter(f"j must satisfy 0 <= j <= 2r-1, got {j}")
    summed = cyclic_sum((n,) * r, FPoly.quadratic(j))
    if summed.shift:
        raise ProofError(f"unexpected normalization shift {summed.shift}")
    power_a = RatPoly.from_int_poly(q_integer(2 * n + 1) ** (r - 1))
    power_b = RatPoly.from_int_poly(q_integer(2 * n + 2) ** (r - 1))
    g, u, v = gcd_bezout(power_a, power_b)
    if g != RAT_ONE:
        raise ProofError(
            f"powers of [2n+1] and [2n+2] are not coprime at n={n}, r={r}: gcd {g}"
        )
    if u * power_a + v * power_b != RAT_ONE:
        raise ProofError(f"Bezout identity failed to re-expand at n={n}, r={r}")
    modulus = q_binomial(2 * n + 1, n) * q_integer(2 * n + 1) ** (r - 1)
    try:
        quotient = exact_div(summed.poly, modulus)
    except NotDivisible as exc:
        raise ProofError(
            f"sum is not divisible by the modulus at n={n}, r={r}, j={j}"
        ) from exc
    if quotient * modulus != summed.poly:
        raise ProofError(f"quotient re-multiplication mismatch at n={n}, r={r}, j={j}")
    return ProofTrace(n, r, j, summed.poly, modulus, u, v, quotient)
