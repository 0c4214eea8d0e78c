"""
linkage-lab - Multivariate polynomials
PolyRing is the ambient k[x_1..x_n] with a monomial order; Polynomial is an
immutable, normalized term list sorted strictly descending in that order.
"""
import re
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Sequence, Tuple

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import BasePolynomialError

from core.errors import DomainError, StructuralError
from core.fields import QQ, Field
from core.monomials import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    mono_degree,
    mono_div,
    mono_divides,
    mono_mul,
    mono_one,
)

_TRANSFORMS = standard_transformations + (convert_xor,)


class PolyRing:
    """Ambient polynomial ring: variable names, coefficient field, monomial order."""

    __slots__ = ("variables", "field", "order", "_hash")

    def __init__(self, variables: Sequence[str], field: Field = QQ, order: MonomialOrder = GREVLEX):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise StructuralError(f"duplicate variable names in {variables}")
        self.variables = variables
        self.field = field
        self.order = order
        self._hash = hash((variables, field, order))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.variables == other.variables
                and self.field == other.field and self.order == other.order)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{self.field}[{','.join(self.variables)}] ({self.order.describe()})"

    # ── construction ─────────────────────────────────────
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return self.term(mono_one(self.nvars), c)

    def term(self, monomial: Monomial, c=1) -> "Polynomial":
        if len(monomial) != self.nvars:
            raise StructuralError(f"monomial {monomial} has wrong length for {self}")
        c = self.field.convert(c)
        return Polynomial(self, ((tuple(monomial), c),) if c else ())

    def gen(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return self.term(tuple(e))

    def gens(self) -> List["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def var(self, name: str) -> "Polynomial":
        try:
            return self.gen(self.variables.index(name))
        except ValueError:
            raise StructuralError(f"{name} is not a variable of {self}") from None

    def from_dict(self, d: Dict[Monomial, object]) -> "Polynomial":
        return normalize(self, d.items())

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.variables, self.field, order)

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)


def normalize(ring: PolyRing, terms: Iterable[Tuple[Monomial, object]]) -> "Polynomial":
    """Sort, merge and drop zero coefficients. Idempotent."""
    acc: Dict[Monomial, object] = {}
    field = ring.field
    for m, c in terms:
        m = tuple(m)
        if len(m) != ring.nvars:
            raise StructuralError(f"monomial {m} has wrong length for {ring}")
        c = field.convert(c)
        if m in acc:
            acc[m] = acc[m] + c
        else:
            acc[m] = c
    key = ring.order.key
    items = sorted(((m, c) for m, c in acc.items() if c), key=lambda t: key(t[0]), reverse=True)
    return Polynomial(ring, tuple(items))


class Polynomial:
    """Immutable polynomial; `terms` is a tuple of (monomial, coefficient)."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Tuple[Tuple[Monomial, object], ...]):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # ── inspection ───────────────────────────────────────
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lm(self) -> Monomial:
        return self.terms[0][0]

    @property
    def lc(self):
        return self.terms[0][1]

    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.terms]

    def total_degree(self) -> int:
        return max((mono_degree(m) for m, _ in self.terms), default=-1)

    def min_degree(self) -> int:
        return min((mono_degree(m) for m, _ in self.terms), default=-1)

    def is_constant(self) -> bool:
        return len(self.terms) == 1 and not any(self.terms[0][0])

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_homogeneous(self) -> bool:
        return len({mono_degree(m) for m, _ in self.terms}) <= 1

    def constant_term(self):
        one = mono_one(self.ring.nvars)
        for m, c in self.terms:
            if m == one:
                return c
        return self.ring.field.zero

    def support(self):
        s = set()
        for m, _ in self.terms:
            s.update(i for i, e in enumerate(m) if e)
        return s

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise StructuralError(f"ring mismatch: {self.ring} vs {other.ring}")

    # ── arithmetic ───────────────────────────────────────
    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        self._check(other)
        return normalize(self.ring, self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        if not self.terms or not other.terms:
            return self.ring.zero()
        acc: Dict[Monomial, object] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                c = c1 * c2
                if m in acc:
                    acc[m] = acc[m] + c
                else:
                    acc[m] = c
        return normalize(self.ring, acc.items())

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = self.ring.field.convert(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((m, c * a) for m, a in self.terms))

    def mul_term(self, monomial: Monomial, c) -> "Polynomial":
        """Multiply by c * monomial; order is preserved by multiplicativity."""
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((mono_mul(m, monomial), a * c) for m, a in self.terms))

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        f = self.primitive()
        inv = self.ring.field.one / f.lc
        return Polynomial(self.ring, tuple((m, c * inv) for m, c in f.terms))

    def primitive(self) -> "Polynomial":
        """Over QQ: clear denominators and content, keep the sign of the leading term."""
        if not self.terms or self.ring.field.characteristic != 0:
            return self
        den = 1
        for _, c in self.terms:
            den = lcm(den, c.denominator)
        nums = [int(c * den) for _, c in self.terms]
        content = 0
        for n in nums:
            content = gcd(content, n)
        if nums[0] < 0:
            content = -content
        return Polynomial(self.ring, tuple((m, self.ring.field.convert(n) / content)
                                           for (m, _), n in zip(self.terms, nums)))

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises when divisor does not divide self."""
        self._check(divisor)
        if not divisor:
            raise DomainError("division by zero polynomial")
        key = self.ring.order.key
        rest = dict(self.terms)
        quotient: Dict[Monomial, object] = {}
        lm, lc = divisor.lm, divisor.lc
        while rest:
            m = max(rest, key=key)
            if not mono_divides(lm, m):
                raise DomainError("inexact polynomial division")
            q = mono_div(m, lm)
            factor = rest[m] / lc
            quotient[q] = factor
            for dm, dc in divisor.terms:
                mm = mono_mul(dm, q)
                v = rest.get(mm, self.ring.field.zero) - factor * dc
                if v:
                    rest[mm] = v
                else:
                    rest.pop(mm, None)
        return normalize(self.ring, quotient.items())

    def derivative(self, i: int) -> "Polynomial":
        terms = []
        for m, c in self.terms:
            if m[i]:
                e = list(m)
                e[i] -= 1
                terms.append((tuple(e), c * m[i]))
        return normalize(self.ring, terms)

    def homogenize(self, target: PolyRing) -> "Polynomial":
        """Homogenize into `target`, whose last variable is the homogenizer."""
        d = self.total_degree()
        return normalize(target, ((m + (d - mono_degree(m),), c) for m, c in self.terms))

    # ── ring maps ────────────────────────────────────────
    def embed(self, target: PolyRing, positions: Sequence[int]) -> "Polynomial":
        """Rename variable i to target variable positions[i]."""
        n = target.nvars
        terms = []
        for m, c in self.terms:
            e = [0] * n
            for i, x in enumerate(m):
                e[positions[i]] += x
            terms.append((tuple(e), c))
        return normalize(target, terms)

    def substitute(self, target: PolyRing, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring map sending variable i to images[i] in `target`."""
        result = target.zero()
        cache: Dict[Tuple[int, int], Polynomial] = {}
        for m, c in self.terms:
            t = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    if (i, e) not in cache:
                        cache[(i, e)] = images[i] ** e
                    t = t * cache[(i, e)]
            result = result + t
        return result

    # ── comparison / text ────────────────────────────────
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        field = self.ring.field
        names = self.ring.variables
        parts = []
        for idx, (m, c) in enumerate(self.terms):
            negative = field.is_negative(c)
            mag = -c if negative else c
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            coeff = field.to_text(mag)
            if factors and coeff == "1":
                body = "*".join(factors)
            else:
                body = "*".join([coeff] + factors)
            if idx == 0:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f" - {body}" if negative else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return self.to_text()

    __str__ = to_text


POLY_TEXT = re.compile(r"[0-9A-Za-z_\s*/^+\-()]*")
IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def check_polynomial_text(text: str, variables: Sequence[str]):
    """Raise DomainError unless `text` uses only the canonical grammar and the given variables."""
    if not POLY_TEXT.fullmatch(text):
        bad = next(ch for ch in text if not POLY_TEXT.fullmatch(ch))
        raise DomainError(f"unexpected character {bad!r} in polynomial {text!r}")
    if "**" in text:
        raise DomainError(f"use '^' for powers in {text!r}")
    unknown = sorted({m.group(0) for m in IDENTIFIER.finditer(text)} - set(variables))
    if unknown:
        raise DomainError(f"unknown variable(s) {', '.join(unknown)} in {text!r}")


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse the canonical text form (`3*x^2*y - 1/2*z`) into `ring`."""
    # text reaches eval inside parse_expr only after the grammar check
    check_polynomial_text(text, ring.variables)
    symbols = {name: sympy.Symbol(name) for name in ring.variables}
    try:
        expr = parse_expr(text, local_dict=dict(symbols), global_dict={"Integer": sympy.Integer,
                                                                        "Symbol": sympy.Symbol},
                          transformations=_TRANSFORMS, evaluate=True)
    except (SyntaxError, NameError, TypeError, ValueError, ZeroDivisionError, sympy.SympifyError) as e:
        raise DomainError(f"cannot parse polynomial {text!r}: {e}") from None
    if not isinstance(expr, sympy.Expr):
        raise DomainError(f"not a polynomial: {text!r}")
    gens = [symbols[name] for name in ring.variables]
    try:
        if not gens:
            return ring.constant(_to_fraction(expr, ring))
        poly = sympy.Poly(expr, *gens, domain=sympy.QQ)
        return normalize(ring, ((m, _to_fraction(c, ring)) for m, c in poly.terms()))
    except (BasePolynomialError, TypeError, ValueError, ZeroDivisionError) as e:
        raise DomainError(f"not a polynomial: {text!r} ({e})") from None


def _to_fraction(c, ring: PolyRing):
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))
