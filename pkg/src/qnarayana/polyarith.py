"""Exact dense polynomial arithmetic in one variable q.

Two coefficient domains are provided: ``IntPoly`` over arbitrary-precision
integers and ``RatPoly`` over exact rationals.  Every operation is exact;
nothing here rounds, truncates, or approximates.  A division that cannot be
performed exactly raises instead of returning a best effort, because a
nonzero remainder is a meaningful mathematical event for the congruence
checks built on top of this module.

Values are immutable and normalized: trailing zero coefficients are stripped
on construction, the zero polynomial is the empty coefficient tuple, and the
degree of zero is the sentinel ``NEG_INF`` rather than a fake integer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import BothZero, InvalidParameter, NotDivisible, ParseError

NEG_INF = float("-inf")


def _trimmed(coeffs):
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with integer coefficients, stored dense and ascending.

    ``coeffs[i]`` is the coefficient of q**i.  The representation is
    canonical (no trailing zeros), so dataclass equality and hashing agree
    with mathematical equality.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        cs = self.coeffs
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        object.__setattr__(self, "coeffs", _trimmed(int(c) for c in cs))

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        """The polynomial coefficient * q**exponent."""
        if exponent < 0:
            raise InvalidParameter(f"exponent must be >= 0, got {exponent}")
        return cls((0,) * exponent + (coefficient,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self):
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant(self):
        """Constant term; 0 for the zero polynomial."""
        return self.coeffs[0] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPoly(out)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise InvalidParameter(f"exponent must be a nonnegative integer, got {exponent!r}")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, n):
        """Multiply by q**n (n >= 0)."""
        if n < 0:
            raise InvalidParameter(f"shift must be >= 0, got {n}")
        if not self.coeffs:
            return ZERO
        return IntPoly((0,) * n + self.coeffs)

    def __str__(self):
        return _render_text(self.coeffs)

    def __repr__(self):
        return f"IntPoly({self.coeffs!r})"


@dataclass(frozen=True)
class RatPoly:
    """Polynomial with exact rational coefficients, dense and ascending.

    Same normalization discipline as IntPoly; every coefficient is stored as
    a reduced Fraction.  Supports true polynomial division, which is what the
    extended Euclidean algorithm needs.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", _trimmed(cs))

    @classmethod
    def from_int_poly(cls, p):
        return cls(p.coeffs)

    def to_int_poly(self):
        """Convert back to IntPoly; fails if any coefficient is fractional."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise NotDivisible(f"coefficient {c} is not an integer")
            out.append(c.numerator)
        return IntPoly(tuple(out))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RatPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RAT_ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return RatPoly(out)

    def scale(self, factor):
        factor = Fraction(factor)
        return RatPoly(tuple(c * factor for c in self.coeffs))

    def monic(self):
        """Rescale so the leading coefficient is 1."""
        if not self:
            raise InvalidParameter("the zero polynomial has no monic form")
        return self.scale(1 / self.lead)

    def __divmod__(self, other):
        """True polynomial division: self = quotient * other + remainder,
        with deg(remainder) < deg(other)."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        db = other.degree
        lead = other.lead
        rem = list(self.coeffs)
        if self.degree < db:
            return RAT_ZERO, self
        quot = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            step = c / lead
            quot[i - db] = step
            for k, bc in enumerate(other.coeffs):
                rem[i - db + k] -= step * bc
        return RatPoly(quot), RatPoly(rem)

    def __str__(self):
        return _render_text(self.coeffs)

    def __repr__(self):
        return f"RatPoly({tuple(str(c) for c in self.coeffs)!r})"


ZERO = IntPoly(())
ONE = IntPoly((1,))
Q = IntPoly((0, 1))
RAT_ZERO = RatPoly(())
RAT_ONE = RatPoly((1,))

_ARITH_OPS = {
    "add": IntPoly.__add__,
    "sub": IntPoly.__sub__,
    "mul": IntPoly.__mul__,
}


def arith(a, b, op):
    """Ring operation dispatch by name: op is one of add, sub, mul."""
    try:
        fn = _ARITH_OPS[op]
    except KeyError:
        raise InvalidParameter(f"unknown operation {op!r}; expected one of add, sub, mul") from None
    return fn(a, b)


def exact_div(a, b):
    """Exact quotient a / b in integer polynomials.

    Long division from the top, checking at every step that the leading
    coefficient divides exactly; raises NotDivisible on a fractional step or
    a nonzero final remainder.  Never truncates.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ZERO
    da, db = a.degree, b.degree
    if da < db:
        raise NotDivisible(
            f"degree {db} divisor exceeds degree {da} dividend", remainder=a
        )
    rem = list(a.coeffs)
    lead = b.coeffs[-1]
    quot = [0] * (da - db + 1)
    for i in range(da, db - 1, -1):
        c = rem[i]
        if not c:
            continue
        step, leftover = divmod(c, lead)
        if leftover:
            raise NotDivisible(
                f"leading coefficient {c} not divisible by {lead} at q^{i}",
                remainder=IntPoly(rem),
            )
        quot[i - db] = step
        for k, bc in enumerate(b.coeffs):
            rem[i - db + k] -= step * bc
    if any(rem):
        raise NotDivisible("nonzero remainder", remainder=IntPoly(rem))
    return IntPoly(quot)


def gcd_bezout(a, b):
    """Monic gcd g of two rational polynomials with Bezout cofactors.

    Returns (g, u, v) with u*a + v*b = g exactly.  The cofactors are the
    canonical minimal-degree pair: u is reduced modulo b/g, and v is then
    forced by the identity, which makes the output deterministic.
    """
    if not a and not b:
        raise BothZero("gcd of two zero polynomials is undefined")
    r0, r1 = a, b
    u0, u1 = RAT_ONE, RAT_ZERO
    v0, v1 = RAT_ZERO, RAT_ONE
    while r1:
        qt, rm = divmod(r0, r1)
        r0, r1 = r1, rm
        u0, u1 = u1, u0 - qt * u1
        v0, v1 = v1, v0 - qt * v1
    inv = 1 / r0.lead
    g, u, v = r0.scale(inv), u0.scale(inv), v0.scale(inv)
    if b:
        bg, leftover = divmod(b, g)
        if leftover:
            raise ArithmeticError("gcd does not divide its argument")
        _, u = divmod(u, bg)
        v, leftover = divmod(g - u * a, b)
        if leftover:
            raise ArithmeticError("Bezout reduction left a remainder")
    return g, u, v


def eval_int(a, x):
    """Evaluate at an integer point by Horner's rule; exact."""
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def is_nonneg(a):
    """True iff every coefficient is >= 0 (vacuously true for zero)."""
    return all(c >= 0 for c in a.coeffs)


def _render_text(coeffs):
    if not coeffs:
        return "0"
    parts = []
    for exp in range(len(coeffs) - 1, -1, -1):
        c = coeffs[exp]
        if not c:
            continue
        mag = -c if c < 0 else c
        if exp == 0:
            body = str(mag)
        else:
            var = "q" if exp == 1 else f"q^{exp}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)


def format_poly(a, style="text"):
    """Render a polynomial as text (descending powers) or JSON.

    Text follows the grammar accepted by parse_poly; JSON is an object
    {"coeffs": ["c0", "c1", ...]} with decimal-string coefficients so
    consumers need no 64-bit assumption.
    """
    if style == "text":
        return _render_text(a.coeffs)
    if style == "json":
        return json.dumps(
            {"coeffs": [str(c) for c in a.coeffs]}, separators=(",", ":")
        )
    raise InvalidParameter(f"unknown style {style!r}; expected text or json")


def parse_poly(s):
    """Parse either serialization of format_poly back to an IntPoly.

    A leading "{" selects the JSON form; anything else is read against the
    text grammar: terms are [sign] [coeff "*"] "q" ["^" exp] or a bare
    integer, joined by " + " or " - ".  Errors carry a character position
    (text) or an array index (JSON).
    """
    stripped = s.strip()
    if not stripped:
        raise ParseError("empty polynomial string", position=0)
    if stripped[0] == "{":
        return _parse_json(stripped)
    return _parse_text(s)


def _parse_json(s):
    try:
        obj = json.loads(s)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", position=exc.pos) from None
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise ParseError("expected an object with a 'coeffs' array", position=0)
    arr = obj["coeffs"]
    if not isinstance(arr, list):
        raise ParseError("'coeffs' must be an array", position=0)
    out = []
    for idx, c in enumerate(arr):
        if isinstance(c, bool) or not isinstance(c, (str, int)):
            raise ParseError(f"coefficient {idx} must be a decimal string", position=idx)
        try:
            out.append(int(c))
        except ValueError:
            raise ParseError(f"bad coefficient {c!r}", position=idx) from None
    return IntPoly(tuple(out))


def _parse_text(s):
    n = len(s)

    def skip_ws(i):
        while i < n and s[i] == " ":
            i += 1
        return i

    def read_digits(i, what):
        j = i
        while j < n and s[j].isdigit():
            j += 1
        if j == i:
            raise ParseError(f"expected {what} at position {i}", position=i)
        return int(s[i:j]), j

    acc = {}
    i = skip_ws(0)
    first = True
    while True:
        sign = 1
        if i >= n:
            raise ParseError(f"expected a term at position {i}", position=i)
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i = skip_ws(i + 1)
        elif not first:
            raise ParseError(f"expected '+' or '-' at position {i}", position=i)
        coeff = None
        if i < n and s[i].isdigit():
            coeff, i = read_digits(i, "a coefficient")
            j = skip_ws(i)
            if j < n and s[j] == "q":
                raise ParseError(
                    f"expected '*' between coefficient and 'q' at position {j}", position=j
                )
            if j < n and s[j] == "*":
                i = skip_ws(j + 1)
                if i >= n or s[i] != "q":
                    raise ParseError(f"expected 'q' after '*' at position {i}", position=i)
        if i < n and s[i] == "q":
            if coeff is None:
                coeff = 1
            i += 1
            exp = 1
            if i < n and s[i] == "^":
                exp, i = read_digits(i + 1, "an exponent")
        elif coeff is not None:
            exp = 0
        else:
            raise ParseError(f"expected a term at position {i}", position=i)
        acc[exp] = acc.get(exp, 0) + sign * coeff
        i = skip_ws(i)
        if i >= n:
            break
        first = False
    out = [0] * (max(acc) + 1)
    for exp, c in acc.items():
        out[exp] = c
    return IntPoly(tuple(out))
