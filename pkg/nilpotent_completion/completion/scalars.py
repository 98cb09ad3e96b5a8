"""Exact scalars of the binomial domains Z, Q, Q[t] and Q(t).

Elements are plain Python values: ``int`` for Z, ``Fraction`` for Q, :class:`Poly`
for Q[t] and :class:`RatFun` for Q(t).  Polynomial arithmetic, gcds and
factorization run on sympy's sparse ``PolyElement`` over ``QQ``; coefficients are
handed out as ``Fraction``.  A :class:`Ring` descriptor checks that operands
belong to it, performs the ring-dependent operations (exact division, inverses,
binomial coefficients) and parses and prints scalar literals.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache, reduce
from math import factorial, gcd
from typing import Dict, List, Optional, Tuple, Union

from sympy import QQ
from sympy.polys.rings import PolyElement, ring

from .exceptions import (
    BasisNotSpanning, BothZero, DivisionByZero, FactorDegreeExceeded, MixedRings, NotInvertible, ScalarNotInRing,
    StrategyMismatch, WordSyntaxError, ZeroInput)

logger = logging.getLogger(__name__)

DEFAULT_FACTOR_DEGREE_BOUND = 6

QT_RING, _T_GENERATOR = ring("t", QQ)


def _fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise MixedRings("expected a rational constant, got %r" % (value,))


def _to_qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def _from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


class Poly(object):
    """Polynomial in t over Q; ``coeffs[i]`` is the coefficient of t^i."""

    __slots__ = ("rep", "_coeffs")

    def __init__(self, coeffs=()):
        if isinstance(coeffs, PolyElement):
            rep = coeffs
        else:
            if isinstance(coeffs, (int, Fraction)):
                coeffs = (coeffs,)
            rep = QT_RING.zero
            for k, c in enumerate(coeffs):
                c = _fraction(c)
                if c:
                    rep[(k,)] = _to_qq(c)
        self.rep = rep
        self._coeffs = None

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "Poly":
        return cls(QT_RING.term_new((k,), _to_qq(_fraction(coeff))))

    @staticmethod
    def coerce(value) -> Optional["Poly"]:
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Poly((value,))
        return None

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        if self._coeffs is None:
            dense = [Fraction(0)] * (self.degree + 1)
            for (k,), c in self.rep.items():
                dense[k] = _from_qq(c)
            self._coeffs = tuple(dense)
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree in t; the zero polynomial has degree -1."""
        return self.rep.degree() if self.rep else -1

    @property
    def lc(self) -> Fraction:
        return _from_qq(self.rep.LC) if self.rep else Fraction(0)

    @property
    def is_constant(self) -> bool:
        return self.degree <= 0

    @property
    def constant_term(self) -> Fraction:
        return _from_qq(self.rep.get((0,), QQ.zero))

    def __bool__(self):
        return bool(self.rep)

    def __eq__(self, other):
        other = Poly.coerce(other)
        if other is None:
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self):
        if self.is_constant:
            return hash(self.constant_term)
        return hash(self.coeffs)

    def __add__(self, other):
        other = Poly.coerce(other)
        if other is None:
            return NotImplemented
        return Poly(self.rep + other.rep)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-self.rep)

    def __sub__(self, other):
        other = Poly.coerce(other)
        if other is None:
            return NotImplemented
        return Poly(self.rep - other.rep)

    def __rsub__(self, other):
        other = Poly.coerce(other)
        if other is None:
            return NotImplemented
        return Poly(other.rep - self.rep)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly(self.rep * other.rep)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise NotInvertible("negative power of a polynomial")
        return Poly(self.rep ** n)

    def __divmod__(self, other):
        other = Poly.coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise DivisionByZero("polynomial division by zero")
        quotient, remainder = divmod(self.rep, other.rep)
        return Poly(quotient), Poly(remainder)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def scale(self, c) -> "Poly":
        c = _fraction(c)
        if not c:
            return Poly()
        return Poly(self.rep.mul_ground(_to_qq(c)))

    def shift(self, k: int) -> "Poly":
        """Multiply by t^k."""
        if not self.rep or not k:
            return self
        return Poly(self.rep.mul_monom((k,)))

    def monic(self) -> "Poly":
        if not self.rep or self.rep.LC == 1:
            return self
        return Poly(self.rep.monic())

    def exact_div(self, other) -> "Poly":
        quotient, remainder = divmod(self, other)
        if remainder:
            raise NotInvertible("%s is not divisible by %s" % (self, other))
        return quotient

    def evaluate(self, x):
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def sort_key(self) -> tuple:
        return (self.degree, self.coeffs)

    def __repr__(self):
        return "Poly(%s)" % format_scalar(self)

    def __str__(self):
        return format_scalar(self)


T = Poly(_T_GENERATOR)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    a, b = Poly.coerce(a), Poly.coerce(b)
    if not a and not b:
        raise BothZero("gcd of two zero polynomials")
    return Poly(a.rep.gcd(b.rep).monic())


def poly_gcdex(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """Return (s, u, g) with s*a + u*b = g = poly_gcd(a, b)."""
    a, b = Poly.coerce(a), Poly.coerce(b)
    if not a and not b:
        raise BothZero("gcd of two zero polynomials")
    if not b:
        return Poly(1 / a.lc), Poly(), a.monic()
    if not a:
        return Poly(), Poly(1 / b.lc), b.monic()
    s, u, g = a.rep.gcdex(b.rep)
    return Poly(s), Poly(u), Poly(g)


def _as_poly(value) -> Poly:
    poly = Poly.coerce(value)
    if poly is None:
        raise MixedRings("expected a polynomial, got %r" % (value,))
    return poly


class RatFun(object):
    """Reduced quotient of polynomials with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num, den = _as_poly(num), _as_poly(den)
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            self.num, self.den = Poly(), Poly(1)
            return
        p, q = num.rep, den.rep
        if den.degree > 0:
            p, q = p.cancel(q)
        lc = q.LC
        if lc != 1:
            p, q = p.quo_ground(lc), q.monic()
        self.num, self.den = Poly(p), Poly(q)

    @classmethod
    def _reduced(cls, num: Poly, den: Poly) -> "RatFun":
        result = cls.__new__(cls)
        result.num, result.den = num, den
        return result

    @staticmethod
    def coerce(value) -> Optional["RatFun"]:
        if isinstance(value, RatFun):
            return value
        poly = Poly.coerce(value)
        if poly is None:
            return None
        return RatFun._reduced(poly, Poly(1))

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = RatFun.coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.is_polynomial:
            return hash(self.num)
        return hash((self.num.coeffs, self.den.coeffs))

    def __add__(self, other):
        other = RatFun.coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._reduced(-self.num, self.den)

    def __sub__(self, other):
        other = RatFun.coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = RatFun.coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = RatFun.coerce(other)
        if other is None:
            return NotImplemented
        if other.is_polynomial and self.is_polynomial:
            return RatFun._reduced(self.num * other.num, Poly(1))
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if not self.num:
            raise DivisionByZero("inverse of zero")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        other = RatFun.coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = RatFun.coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return RatFun(self.den ** -n, self.num ** -n)
        return RatFun._reduced(self.num ** n, self.den ** n)

    def __repr__(self):
        return "RatFun(%s)" % format_scalar(self)

    def __str__(self):
        return format_scalar(self)


Scalar = Union[int, Fraction, Poly, RatFun]


def _one_like(a: Scalar) -> Scalar:
    if isinstance(a, Poly):
        return Poly(1)
    if isinstance(a, RatFun):
        return RatFun(1)
    if isinstance(a, Fraction):
        return Fraction(1)
    return 1


def binomial(a: Scalar, k: int) -> Scalar:
    """a(a-1)...(a-k+1)/k!, exact and in the ring of ``a``."""
    if k < 0:
        raise ValueError("binomial coefficient with negative k")
    result = _one_like(a)
    for i in range(k):
        result = result * (a - i)
    denominator = factorial(k)
    if isinstance(result, int):
        return result // denominator
    if isinstance(result, Fraction):
        return result / denominator
    return result * Fraction(1, denominator)


def as_rational(a: Scalar) -> Optional[Fraction]:
    """The value of ``a`` as a rational number when ``a`` is a constant."""
    if isinstance(a, bool):
        return None
    if isinstance(a, (int, Fraction)):
        return Fraction(a)
    if isinstance(a, RatFun):
        if not a.is_polynomial:
            return None
        a = a.num
    if isinstance(a, Poly) and a.is_constant:
        return a.constant_term
    return None


# Additive Q-basis of Q[t] and Q(t)


@dataclass(frozen=True)
class Monomial:
    """t^k; t^0 is the basis element 1."""
    k: int

    def value(self) -> Poly:
        return Poly.monomial(self.k)

    def sort_key(self) -> tuple:
        return (0, self.k)


@dataclass(frozen=True)
class SimpleFraction:
    """t^j / p^m with p irreducible and monic, m >= 1 and j < deg p."""
    p: Poly
    m: int
    j: int

    def value(self) -> RatFun:
        return RatFun(Poly.monomial(self.j), self.p ** self.m)

    def sort_key(self) -> tuple:
        return (1, self.p.sort_key(), self.m, self.j)


SBasisElem = Union[Monomial, SimpleFraction]

ONE = Monomial(0)


@lru_cache(maxsize=4096)
def _irreducible_factors(a: Poly) -> Tuple[Tuple[Poly, int], ...]:
    logger.debug("factoring polynomial of degree %d", a.degree)
    _, factors = a.rep.factor_list()
    result = [(Poly(p).monic(), multiplicity) for p, multiplicity in factors]
    result.sort(key=lambda item: item[0].sort_key())
    return tuple(result)


def poly_factor_bounded(a: Poly, max_deg: int = DEFAULT_FACTOR_DEGREE_BOUND) -> Tuple[Fraction, List[Tuple[Poly, int]]]:
    """Factor ``a`` into its leading coefficient and monic irreducible factors with multiplicities."""
    a = _as_poly(a)
    if not a:
        raise ZeroInput("factorization of the zero polynomial")
    if a.is_constant:
        return a.lc, []
    factors = list(_irreducible_factors(a))
    for p, _ in factors:
        if p.degree > max_deg:
            logger.warning("factor degree bound %d exceeded by factor %s", max_deg, p)
            raise FactorDegreeExceeded(p.degree, max_deg)
    return a.lc, factors


def partial_fractions(f: RatFun, max_deg: int = DEFAULT_FACTOR_DEGREE_BOUND) -> Tuple[Poly, Dict[SimpleFraction, Fraction]]:
    """Split ``f`` into a polynomial part and rational multiples of simple fractions."""
    f = RatFun.coerce(f)
    polynomial_part, remainder = divmod(f.num, f.den)
    terms = {}
    if not remainder:
        return polynomial_part, terms
    _, factors = poly_factor_bounded(f.den, max_deg)
    for p, e in factors:
        prime_power = p ** e
        cofactor = f.den // prime_power
        inverse, _, _ = poly_gcdex(cofactor, prime_power)
        numerator = (remainder * inverse) % prime_power
        # p-adic digits of the numerator: numerator = sum digit_l * p^l
        for level in range(e):
            numerator, digit = divmod(numerator, p)
            for j, c in enumerate(digit.coeffs):
                if c:
                    terms[SimpleFraction(p, e - level, j)] = c
    return polynomial_part, terms


def recombine(polynomial_part: Poly, terms: Dict[SimpleFraction, Fraction]) -> RatFun:
    result = RatFun(polynomial_part)
    for s, c in terms.items():
        result = result + s.value() * c
    return result


def shift_decomposition(decomposition: Dict[SBasisElem, Fraction]) -> Dict[SBasisElem, Fraction]:
    """Coordinates of t*f given the coordinates of f.

    Only t^(deg p) / p^m leaves the basis; it is rewritten with
    t^(deg p) = p - (p - t^(deg p)) as 1/p^(m-1) - sum_i p_i t^i / p^m.
    """
    result = {}

    def add(s, c):
        result[s] = result.get(s, 0) + c

    for s, c in decomposition.items():
        if isinstance(s, Monomial):
            add(Monomial(s.k + 1), c)
        elif s.j + 1 < s.p.degree:
            add(SimpleFraction(s.p, s.m, s.j + 1), c)
        else:
            add(ONE if s.m == 1 else SimpleFraction(s.p, s.m - 1, 0), c)
            for i, p_i in enumerate(s.p.coeffs[:-1]):
                if p_i:
                    add(SimpleFraction(s.p, s.m, i), -c * p_i)
    return {s: c for s, c in result.items() if c}


class RingKind(Enum):
    Z = "Z"
    Q = "Q"
    QT_POLY = "Q[t]"
    QT_FIELD = "Q(t)"


_RING_ALIASES = {
    "z": RingKind.Z,
    "q": RingKind.Q,
    "q[t]": RingKind.QT_POLY,
    "qt_poly": RingKind.QT_POLY,
    "q(t)": RingKind.QT_FIELD,
    "qt_field": RingKind.QT_FIELD,
}

RING_CHOICES = [kind.value for kind in RingKind]


@dataclass(frozen=True)
class Ring:
    """Descriptor of the active binomial domain."""
    kind: RingKind

    @classmethod
    def named(cls, name: str) -> "Ring":
        try:
            return cls(_RING_ALIASES[name.strip().lower()])
        except KeyError:
            raise ScalarNotInRing("unknown ring %r (expected one of %s)" % (name, ", ".join(RING_CHOICES)))

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def is_field(self) -> bool:
        return self.kind in (RingKind.Q, RingKind.QT_FIELD)

    @property
    def has_gcd(self) -> bool:
        """Whether gcds are non-trivial (the ring is not a field)."""
        return not self.is_field

    @property
    def has_t(self) -> bool:
        return self.kind in (RingKind.QT_POLY, RingKind.QT_FIELD)

    @property
    def additive_basis_kind(self) -> Optional[str]:
        return {RingKind.QT_POLY: "monomial", RingKind.QT_FIELD: "partial-fraction"}.get(self.kind)

    def __str__(self):
        return self.name

    def zero(self) -> Scalar:
        return self.coerce(0)

    def one(self) -> Scalar:
        return self.coerce(1)

    def t(self) -> Scalar:
        if not self.has_t:
            raise ScalarNotInRing("t is not an element of %s" % self.name)
        return self.coerce(T)

    def coerce(self, value) -> Scalar:
        """Convert ``value`` into this ring when it represents one of its elements."""
        kind = self.kind
        if kind is RingKind.QT_FIELD:
            result = RatFun.coerce(value)
        elif kind is RingKind.QT_POLY:
            if isinstance(value, RatFun) and value.is_polynomial:
                value = value.num
            result = Poly.coerce(value)
        else:
            result = as_rational(value) if not isinstance(value, bool) else None
            if result is not None and kind is RingKind.Z:
                result = result.numerator if result.denominator == 1 else None
        if result is None:
            raise ScalarNotInRing("%s is not an element of %s" % (format_scalar(value), self.name))
        return result

    def contains(self, value) -> bool:
        if self.kind is RingKind.Z:
            return isinstance(value, int) and not isinstance(value, bool)
        return isinstance(value, {RingKind.Q: Fraction, RingKind.QT_POLY: Poly, RingKind.QT_FIELD: RatFun}[self.kind])

    def check(self, *values) -> None:
        for value in values:
            if not self.contains(value):
                raise MixedRings("%r is not an element of %s" % (value, self.name))

    def add(self, a, b):
        self.check(a, b)
        return a + b

    def sub(self, a, b):
        self.check(a, b)
        return a - b

    def mul(self, a, b):
        self.check(a, b)
        return a * b

    def neg(self, a):
        self.check(a)
        return -a

    def eq(self, a, b) -> bool:
        self.check(a, b)
        return a == b

    def div(self, a, b):
        """Exact quotient a/b; NotInvertible when it does not lie in the ring."""
        self.check(a, b)
        if not b:
            raise DivisionByZero("division by zero in %s" % self.name)
        if self.kind is RingKind.Z:
            quotient, remainder = divmod(a, b)
            if remainder:
                raise NotInvertible("%d is not divisible by %d in Z" % (a, b))
            return quotient
        if self.kind is RingKind.QT_POLY:
            if b.is_constant:
                return a.scale(1 / b.lc)
            return a.exact_div(b)
        return a / b

    def inv(self, a):
        try:
            return self.div(self.one(), a)
        except NotInvertible:
            raise NotInvertible("%s is not invertible in %s" % (format_scalar(a), self.name))

    def binomial(self, a, k: int):
        self.check(a)
        return binomial(a, k)

    def as_rational(self, a) -> Optional[Fraction]:
        return as_rational(a)

    def additive_decompose(self, a, max_deg: int = DEFAULT_FACTOR_DEGREE_BOUND,
                           s_basis: str = "std") -> Dict[SBasisElem, Fraction]:
        """Coordinates of ``a`` in the additive Q-basis of Q[t] or Q(t)."""
        self.check(a)
        if self.kind is RingKind.QT_POLY:
            polynomial_part, terms = a, {}
        elif self.kind is RingKind.QT_FIELD:
            polynomial_part, terms = partial_fractions(a, max_deg)
        else:
            raise StrategyMismatch("additive decomposition needs Q[t] or Q(t), not %s" % self.name)
        result = {Monomial(k): c for k, c in enumerate(polynomial_part.coeffs) if c}
        result.update(terms)
        if s_basis == "paper" and self.kind is RingKind.QT_FIELD and ONE in result:
            raise BasisNotSpanning("%s needs the basis element 1, which the reduced basis excludes"
                                   % format_scalar(a))
        return result

    def format(self, a) -> str:
        return format_scalar(a)

    def parse(self, text: str):
        return ScalarParser(text, self).parse()


# Literals


def _integer_terms(coeffs) -> List[Tuple[int, int]]:
    """Nonzero (degree, coefficient) pairs in descending degree."""
    return [(k, int(c)) for k, c in reversed(list(enumerate(coeffs))) if c]


def _integer_poly_text(terms: List[Tuple[int, int]]) -> str:
    parts = []
    for k, c in terms:
        sign = "-" if c < 0 else ("+" if parts else "")
        magnitude = abs(c)
        if k == 0:
            body = str(magnitude)
        else:
            power = "t" if k == 1 else "t^%d" % k
            body = power if magnitude == 1 else "%d*%s" % (magnitude, power)
        parts.append(sign + body)
    return "".join(parts) or "0"


def _common_denominator(coeffs) -> int:
    return reduce(lambda acc, c: acc * c.denominator // gcd(acc, c.denominator), coeffs, 1)


def _is_atom(terms: List[Tuple[int, int]]) -> bool:
    if len(terms) != 1:
        return False
    k, c = terms[0]
    return c == 1 or (k == 0 and c > 0)


def format_scalar(a) -> str:
    """Canonical literal in the scalar grammar."""
    if isinstance(a, bool):
        raise MixedRings("booleans are not scalars")
    if isinstance(a, int):
        return str(a)
    if isinstance(a, Fraction):
        return str(a)
    if isinstance(a, Poly):
        denominator = _common_denominator(a.coeffs)
        terms = _integer_terms([c * denominator for c in a.coeffs])
        text = _integer_poly_text(terms)
        if denominator == 1:
            return text
        if len(terms) == 1:
            return "%s/%d" % (text, denominator)
        return "(%s)/%d" % (text, denominator)
    if isinstance(a, RatFun):
        if a.is_polynomial:
            return format_scalar(a.num)
        scale = _common_denominator(a.num.coeffs + a.den.coeffs)
        num_terms = _integer_terms([c * scale for c in a.num.coeffs])
        den_terms = _integer_terms([c * scale for c in a.den.coeffs])
        content = reduce(gcd, [c for _, c in num_terms + den_terms])
        num_terms = [(k, c // content) for k, c in num_terms]
        den_terms = [(k, c // content) for k, c in den_terms]
        num_text = _integer_poly_text(num_terms)
        den_text = _integer_poly_text(den_terms)
        if len(num_terms) > 1:
            num_text = "(%s)" % num_text
        if not _is_atom(den_terms):
            den_text = "(%s)" % den_text
        return "%s/%s" % (num_text, den_text)
    raise MixedRings("%r is not a scalar" % (a,))


class ScalarParser(object):
    """Recursive-descent parser for scalar literals of one ring.

    Grammar::

        sum  := ["-"] prod { ("+" | "-") prod }
        prod := pow { ("*" | "/") pow }
        pow  := atom [ "^" ["-"] integer ]
        atom := integer | "t" | "(" sum ")" | "{" sum "}"
    """

    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.pos = 0

    def parse(self):
        value = self.parse_sum()
        self.expect_end()
        return value

    def expect_end(self):
        if self.peek():
            self.error("unexpected %r" % self.peek())

    def error(self, message: str, position: int = None):
        raise WordSyntaxError(message, (self.pos if position is None else position) + 1)

    def not_in_ring(self, message: str, position: int):
        raise ScalarNotInRing(message, position + 1)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        if self.peek() == token:
            self.pos += 1
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            found = self.peek()
            self.error("expected %r but found %s" % (token, repr(found) if found else "end of input"))

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.peek()
            self.error("expected an integer but found %s" % (repr(found) if found else "end of input"))
        return int(self.text[start:self.pos])

    def parse_sum(self):
        negate = self.accept("-")
        value = self.parse_prod()
        if negate:
            value = -value
        while True:
            if self.accept("+"):
                value = value + self.parse_prod()
            elif self.accept("-"):
                value = value - self.parse_prod()
            else:
                return value

    def parse_prod(self):
        value = self.parse_pow()
        while True:
            if self.accept("*"):
                value = value * self.parse_pow()
            elif self.peek() == "/":
                position = self.pos
                self.pos += 1
                value = self.divide(value, self.parse_pow(), position)
            else:
                return value

    def parse_pow(self):
        base = self.parse_atom()
        if self.peek() == "^":
            position = self.pos
            self.pos += 1
            negative = self.accept("-")
            exponent = self.integer()
            return self.power(base, -exponent if negative else exponent, position)
        return base

    def parse_atom(self):
        token = self.peek()
        position = self.pos
        if token in ("(", "{"):
            self.pos += 1
            value = self.parse_sum()
            self.expect(")" if token == "(" else "}")
            return value
        if token == "t":
            self.pos += 1
            if not self.ring.has_t:
                self.not_in_ring("t is not an element of %s" % self.ring.name, position)
            return self.ring.t()
        if token.isdigit():
            return self.ring.coerce(self.integer())
        self.error("expected a scalar but found %s" % (repr(token) if token else "end of input"))

    def parse_scalar_atom(self):
        """Exponent position: "(" sum ")" | "{" sum "}" | "t" | ["-"] integer ["/" integer]."""
        token = self.peek()
        if token in ("(", "{", "t"):
            return self.parse_atom()
        negate = self.accept("-")
        value = self.ring.coerce(self.integer())
        if self.peek() == "/":
            position = self.pos
            self.pos += 1
            value = self.divide(value, self.ring.coerce(self.integer()), position)
        return -value if negate else value

    def divide(self, a, b, position: int):
        if not b:
            self.not_in_ring("division by zero", position)
        if self.ring.kind is RingKind.QT_POLY and not b.is_constant:
            self.not_in_ring("division by a non-constant polynomial needs Q(t)", position)
        try:
            return self.ring.div(a, b)
        except NotInvertible:
            self.not_in_ring("quotient is not an element of %s" % self.ring.name, position)

    def power(self, base, exponent: int, position: int):
        if exponent >= 0:
            return base ** exponent
        try:
            return self.ring.inv(base) ** -exponent
        except (NotInvertible, DivisionByZero):
            self.not_in_ring("negative power of a non-invertible element of %s" % self.ring.name, position)
