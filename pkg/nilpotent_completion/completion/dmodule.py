"""The free R-module D spanned by canonical c-commutator keys.

A :class:`DVector` is a finite sum ``coefficient * key``; zero coefficients are
never stored.  Keys come in three kinds:

* :class:`CKeyPoly`  c(x^{t^k alpha0}, y^{t^k beta0})_t over Q[t];
* :class:`CKeyField` c(x^s, y^{beta_hat s})_t over Q(t);
* :class:`FormalCKey` an uninterpreted c(u^g, u^h)_subscript for any schema.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Tuple

from .exceptions import MixedRings, MixedVariants, ZeroInput
from .scalars import (
    ONE, Monomial, Poly, RatFun, Ring, SBasisElem, Scalar, SimpleFraction, T, format_scalar, poly_gcd)


def scalar_sort_key(a: Scalar) -> tuple:
    """Total order on the elements of one ring."""
    if isinstance(a, Poly):
        return a.sort_key()
    if isinstance(a, RatFun):
        return (a.num.sort_key(), a.den.sort_key())
    return (Fraction(a),)


@dataclass(frozen=True)
class CKeyPoly:
    alpha0: Poly
    beta0: Poly
    k: int

    def sort_key(self) -> tuple:
        return (self.k, self.alpha0.sort_key(), self.beta0.sort_key())

    def arguments(self) -> Tuple[Poly, Poly]:
        """Exponents of x and y."""
        return self.alpha0.shift(self.k), self.beta0.shift(self.k)


@dataclass(frozen=True)
class CKeyField:
    s: SBasisElem
    beta_hat: RatFun

    def sort_key(self) -> tuple:
        return (self.s.sort_key(), scalar_sort_key(self.beta_hat))

    def arguments(self) -> Tuple[RatFun, RatFun]:
        s = RatFun.coerce(self.s.value())
        return s, self.beta_hat * s


@dataclass(frozen=True)
class FormalCKey:
    g: Tuple[Scalar, ...]
    h: Tuple[Scalar, ...]
    subscript: Scalar

    def sort_key(self) -> tuple:
        return (tuple(scalar_sort_key(a) for a in self.g), tuple(scalar_sort_key(a) for a in self.h),
                scalar_sort_key(self.subscript))

    def arguments(self) -> Tuple[Tuple[Scalar, ...], Tuple[Scalar, ...]]:
        return self.g, self.h


CKEY_KINDS = (CKeyPoly, CKeyField, FormalCKey)


def key_order(k1, k2) -> int:
    """-1, 0 or 1 as ``k1`` sorts before, equal to or after ``k2``."""
    if type(k1) is not type(k2):
        raise MixedVariants("cannot order %s against %s" % (type(k1).__name__, type(k2).__name__))
    a, b = k1.sort_key(), k2.sort_key()
    return (a > b) - (a < b)


def canonical_pair_poly(alpha: Poly, beta: Poly) -> Tuple[Poly, Poly, Poly]:
    """Special representative of the class of (alpha, beta) over Q[t].

    Returns (alpha0, beta0, gamma) with alpha = gamma * alpha0, beta = gamma * beta0,
    alpha0 monic and gcd(alpha0, beta0) = 1.
    """
    alpha, beta = Poly.coerce(alpha), Poly.coerce(beta)
    if not alpha or not beta:
        raise ZeroInput("special representative of a pair with a zero entry")
    g = poly_gcd(alpha, beta)
    alpha1 = alpha // g
    lc = alpha1.lc
    alpha0 = alpha1.scale(1 / lc)
    beta0 = (beta // g).scale(1 / lc)
    return alpha0, beta0, g.scale(lc)


def canonical_pair_field(alpha: RatFun, beta: RatFun) -> Tuple[RatFun, RatFun]:
    """(beta / alpha, alpha): over a field every class is spanned by (1, beta / alpha)."""
    alpha, beta = RatFun.coerce(alpha), RatFun.coerce(beta)
    if not alpha or not beta:
        raise ZeroInput("class representative of a pair with a zero entry")
    return beta / alpha, alpha


class DVector(object):
    """Immutable sparse vector of D over ``ring``."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: Ring, terms=()):
        self.ring = ring
        if isinstance(terms, dict):
            terms = terms.items()
        collected = {}
        kind = None
        for key, c in terms:
            if kind is None:
                kind = type(key)
            elif type(key) is not kind:
                raise MixedVariants("a vector of D holds one kind of key")
            c = ring.coerce(c)
            total = collected.get(key, ring.zero()) + c
            if total:
                collected[key] = total
            else:
                collected.pop(key, None)
        self._terms = collected

    @classmethod
    def zero(cls, ring: Ring) -> "DVector":
        return cls(ring)

    @classmethod
    def basis(cls, ring: Ring, key, coeff=1) -> "DVector":
        return cls(ring, [(key, coeff)])

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, key) -> Scalar:
        return self._terms.get(key, self.ring.zero())

    def __contains__(self, key):
        return key in self._terms

    def keys(self):
        return [key for key, _c in self.items()]

    def items(self) -> list:
        """Terms in key order."""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def __iter__(self) -> Iterator:
        return iter(self.keys())

    def key_kind(self):
        for key in self._terms:
            return type(key)
        return None

    def _check(self, other: "DVector"):
        if self.ring != other.ring:
            raise MixedRings("vectors of D over %s and %s" % (self.ring, other.ring))

    def __eq__(self, other):
        if not isinstance(other, DVector):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def __add__(self, other: "DVector") -> "DVector":
        if not isinstance(other, DVector):
            return NotImplemented
        self._check(other)
        return DVector(self.ring, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "DVector":
        return DVector(self.ring, [(key, -c) for key, c in self._terms.items()])

    def __sub__(self, other: "DVector") -> "DVector":
        if not isinstance(other, DVector):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> "DVector":
        c = self.ring.coerce(c)
        if not c:
            return DVector(self.ring)
        return DVector(self.ring, [(key, c * value) for key, value in self._terms.items()])

    __mul__ = scale
    __rmul__ = scale

    def __repr__(self):
        return "DVector(%s)" % ", ".join("%r: %s" % (key, format_scalar(c)) for key, c in self.items())


def dvec_sum(vectors: Iterable[DVector], ring: Ring) -> DVector:
    terms = []
    for vector in vectors:
        terms.extend(vector._terms.items())
    return DVector(ring, terms)


def format_power(base: str, exponent: Scalar) -> str:
    """``base`` for exponent 1, otherwise ``base^{exponent}``."""
    if exponent == 1:
        return base
    return "%s^{%s}" % (base, format_scalar(exponent))


def format_coordinates(coordinates: Sequence[Scalar], names: Sequence[str]) -> str:
    parts = [format_power(name, a) for name, a in zip(names, coordinates) if a]
    return " ".join(parts) or "1"


def format_subscript(subscript: Scalar) -> str:
    if subscript == T:
        return "t"
    return "{%s}" % format_scalar(subscript)


def format_key(key, names: Sequence[str]) -> str:
    """Print a key as a c-commutator word over the generator ``names``."""
    if isinstance(key, FormalCKey):
        return "c(%s, %s)_%s" % (format_coordinates(key.g, names), format_coordinates(key.h, names),
                                 format_subscript(key.subscript))
    alpha, beta = key.arguments()
    return "c(%s, %s)_t" % (format_power(names[0], alpha), format_power(names[1], beta))


def is_special_key(key: CKeyPoly) -> bool:
    """alpha0 monic, beta0 nonzero and coprime to alpha0, k >= 0."""
    return (bool(key.alpha0) and key.alpha0.lc == 1 and bool(key.beta0) and key.k >= 0
            and poly_gcd(key.alpha0, key.beta0) == 1)


def is_field_key(key: CKeyField, s_basis: str = "std") -> bool:
    """s is a standard partial-fraction basis element and beta_hat is nonzero."""
    s = key.s
    if isinstance(s, Monomial):
        valid = s.k >= 0 and (s_basis != "paper" or s != ONE)
    elif isinstance(s, SimpleFraction):
        valid = s.m >= 1 and 0 <= s.j < s.p.degree and s.p.lc == 1
    else:
        valid = False
    return valid and bool(key.beta_hat)
