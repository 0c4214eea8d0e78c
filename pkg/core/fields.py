"""
linkage-lab - Coefficient fields
Exact scalars: rationals (fractions.Fraction) and prime-field residues.
No rounding anywhere; every value is normalized on construction.
"""
import re
from fractions import Fraction

import sympy

import config
from core.errors import DomainError, StructuralError

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class PrimeFieldElement:
    """A residue in [0, p) with field arithmetic mod p."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise StructuralError(f"characteristic mismatch: {self.p} vs {other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        if v == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return PrimeFieldElement(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(v, self.p) / self

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"{self.value} mod {self.p}"


class Field:
    """Coefficient field: converts, parses and prints scalars."""

    characteristic = 0
    name = "QQ"

    def convert(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def parse(self, text):
        m = _RATIONAL_RE.match(text)
        if not m:
            raise DomainError(f"not a scalar: {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise DomainError(f"zero denominator in {text!r}")
        return self.convert(Fraction(num, den))

    def to_text(self, value):
        raise NotImplementedError

    def is_negative(self, value):
        return False

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class RationalField(Field):
    characteristic = 0
    name = "QQ"

    def convert(self, value):
        if isinstance(value, PrimeFieldElement):
            raise StructuralError("cannot lift a prime-field residue to QQ")
        return Fraction(value)

    def to_text(self, value):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def is_negative(self, value):
        return value < 0


class PrimeField(Field):
    def __init__(self, p):
        if not 2 <= p < config.MAX_PRIME or not sympy.isprime(p):
            raise DomainError(f"FF({p}): characteristic must be a prime below 2^31")
        self.characteristic = p
        self.name = f"FF({p})"

    def convert(self, value):
        if isinstance(value, PrimeFieldElement):
            if value.p != self.characteristic:
                raise StructuralError(f"characteristic mismatch: {value.p} vs {self.characteristic}")
            return value
        if isinstance(value, Fraction):
            p = self.characteristic
            if value.denominator % p == 0:
                raise DomainError(f"{value} has no image in {self.name}")
            return PrimeFieldElement(value.numerator * pow(value.denominator, -1, p), p)
        return PrimeFieldElement(int(value), self.characteristic)

    def to_text(self, value):
        return str(value.value)


QQ = RationalField()


def FF(p):
    return PrimeField(p)


def field_from_name(name):
    """Resolve 'QQ' or 'FF(p)'."""
    name = name.replace(" ", "")
    if name == "QQ":
        return QQ
    m = re.fullmatch(r"FF\((\d+)\)", name)
    if m:
        return PrimeField(int(m.group(1)))
    raise DomainError(f"unknown coefficient field: {name}")
