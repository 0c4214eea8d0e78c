"""
linkage-lab - Monomials and monomial orders
Monomials are dense exponent tuples. Orders compare through sort keys:
a larger key is a larger monomial.
"""
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional, Tuple

from core.errors import StructuralError

Monomial = Tuple[int, ...]


class Comparison(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def mono_one(n: int) -> Monomial:
    return (0,) * n


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(b: Monomial, a: Monomial) -> bool:
    """True when b divides a."""
    return all(y <= x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def mono_support(m: Monomial):
    return frozenset(i for i, e in enumerate(m) if e)


@dataclass(frozen=True)
class MonomialOrder:
    """lex, grevlex, block(split, outer, inner) or weighted(weights, tie_break).

    Block orders compare the first `split` exponents under `outer` and break
    ties on the rest under `inner`; the outer block is eliminated first.
    """
    kind: str = "grevlex"
    split: int = 0
    outer: Optional["MonomialOrder"] = None
    inner: Optional["MonomialOrder"] = None
    weights: Tuple[int, ...] = ()
    tie_break: Optional["MonomialOrder"] = None

    def key(self, m: Monomial):
        return _order_key(self, m)

    def describe(self) -> str:
        if self.kind == "block":
            return f"block({self.split}, {self.outer.describe()}, {self.inner.describe()})"
        if self.kind == "weighted":
            return f"weighted({list(self.weights)}, {self.tie_break.describe()})"
        return self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def block_order(split: int, outer: MonomialOrder = GREVLEX, inner: MonomialOrder = GREVLEX) -> MonomialOrder:
    return MonomialOrder("block", split=split, outer=outer, inner=inner)


def weighted_order(weights, tie_break: MonomialOrder = GREVLEX) -> MonomialOrder:
    if any(w < 0 for w in weights):
        raise StructuralError("weights must be non-negative")
    return MonomialOrder("weighted", weights=tuple(weights), tie_break=tie_break)


def order_from_name(name: str) -> MonomialOrder:
    if name == "lex":
        return LEX
    if name == "grevlex":
        return GREVLEX
    raise StructuralError(f"unknown monomial order: {name}")


@lru_cache(maxsize=1 << 18)
def _order_key(order: MonomialOrder, m: Monomial):
    kind = order.kind
    if kind == "lex":
        return m
    if kind == "grevlex":
        return (sum(m), tuple(-e for e in reversed(m)))
    if kind == "block":
        return (_order_key(order.outer, m[:order.split]), _order_key(order.inner, m[order.split:]))
    if kind == "weighted":
        if len(order.weights) != len(m):
            raise StructuralError("weight vector length does not match variable count")
        return (sum(w * e for w, e in zip(order.weights, m)), _order_key(order.tie_break, m))
    raise StructuralError(f"unknown monomial order kind: {kind}")


def mono_compare(order: MonomialOrder, a: Monomial, b: Monomial) -> Comparison:
    if len(a) != len(b):
        raise StructuralError(f"monomial length mismatch: {len(a)} vs {len(b)}")
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return Comparison.LESS
    if ka > kb:
        return Comparison.GREATER
    return Comparison.EQUAL


def minimal_monomials(monomials):
    """Minimal generators of the monomial ideal spanned by `monomials`, in input order."""
    kept = []
    for m in monomials:
        if any(mono_divides(g, m) for g in kept):
            continue
        kept = [g for g in kept if not mono_divides(m, g)]
        kept.append(m)
    return kept


def in_monomial_ideal(m: Monomial, generators) -> bool:
    return any(mono_divides(g, m) for g in generators)
