"""Brute-force ground truth for the Hall group formulas.

Integer powers are computed by repeated multiplication, and the free
2-nilpotent group of rank 2 is modelled by upper unitriangular 3x3 integer
matrices.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import List, Tuple

from django.conf import settings

from .exceptions import NonIntegerInput, SchemaMismatch
from .hall import HallElement, free2nilpotent
from .scalars import Ring, RingKind, as_rational, format_scalar

logger = logging.getLogger(__name__)

DEFAULT_EXPONENT_BOUND = 8


@dataclass(frozen=True)
class UniMat3:
    """[[1, a12, a13], [0, 1, a23], [0, 0, 1]]."""
    a12: int
    a13: int
    a23: int

    @classmethod
    def identity(cls) -> "UniMat3":
        return cls(0, 0, 0)

    def __mul__(self, other: "UniMat3") -> "UniMat3":
        return UniMat3(self.a12 + other.a12, self.a13 + other.a13 + self.a12 * other.a23, self.a23 + other.a23)

    def inverse(self) -> "UniMat3":
        return UniMat3(-self.a12, -self.a13 + self.a12 * self.a23, -self.a23)

    def commutator(self, other: "UniMat3") -> "UniMat3":
        return self.inverse() * other.inverse() * self * other


X_MATRIX = UniMat3(1, 0, 0)
Y_MATRIX = UniMat3(0, 0, 1)


def _corner_sign() -> int:
    """Corner entry of the matrix of [y, x]."""
    image = Y_MATRIX.commutator(X_MATRIX)
    if image.a12 or image.a23 or abs(image.a13) != 1:
        raise ArithmeticError("unexpected commutator image %r" % (image,))
    return image.a13


CORNER_SIGN = _corner_sign()


def integer_coordinates(g: HallElement) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    def to_int(value):
        rational = as_rational(value)
        if rational is None or rational.denominator != 1:
            raise NonIntegerInput("%s is not an integer coordinate" % format_scalar(value))
        return rational.numerator

    return tuple(to_int(x) for x in g.a), tuple(to_int(x) for x in g.b)


def configured_exponent_bound() -> int:
    return getattr(settings, "NILPOTENT_COMPLETION", {}).get("ORACLE_EXPONENT_BOUND", DEFAULT_EXPONENT_BOUND)


def int_exp_oracle(g: HallElement, k: int, bound: int = None) -> HallElement:
    """g^k by |k|-fold multiplication."""
    integer_coordinates(g)
    if bound is None:
        bound = configured_exponent_bound()
    if abs(k) > bound:
        raise ValueError("oracle exponent %d exceeds the bound %d" % (k, bound))
    factor = g if k >= 0 else g.inverse()
    result = HallElement.identity(g.schema, g.ring)
    for _ in range(abs(k)):
        result = result * factor
    return result


def matrix_model(g: HallElement) -> UniMat3:
    """x^a1 y^a2 [y,x]^b as a unitriangular matrix."""
    if not g.schema.is_free_rank2:
        raise SchemaMismatch("the matrix model covers the free 2-nilpotent group of rank 2 only")
    (a1, a2), (b,) = integer_coordinates(g)
    return UniMat3(a1, a1 * a2 + CORNER_SIGN * b, a2)


def matrix_unmodel(m: UniMat3, ring: Ring = None) -> HallElement:
    ring = ring or Ring(RingKind.Z)
    b = (m.a13 - m.a12 * m.a23) * CORNER_SIGN
    return HallElement(free2nilpotent(2), ring, (ring.coerce(m.a12), ring.coerce(m.a23)), (ring.coerce(b),))


def exhaustive_hall_oracle(bound: int = 2, exponent_bound: int = 6) -> List[Tuple[str, tuple, object]]:
    """Compare Hall powers and products with the oracles on every coordinate triple in [-bound, bound]."""
    ring = Ring(RingKind.Z)
    schema = free2nilpotent(2)
    values = range(-bound, bound + 1)
    elements = [HallElement(schema, ring, (a1, a2), (b,)) for a1, a2, b in itertools.product(values, repeat=3)]
    failures = []
    for g in elements:
        for k in range(-exponent_bound, exponent_bound + 1):
            if g.power(k) != int_exp_oracle(g, k, exponent_bound):
                failures.append(("power", g.a + g.b, k))
        if matrix_unmodel(matrix_model(g)) != g:
            failures.append(("unmodel", g.a + g.b, None))
    for g, h in itertools.product(elements, repeat=2):
        if matrix_model(g * h) != matrix_model(g) * matrix_model(h):
            failures.append(("product", g.a + g.b, h.a + h.b))
    logger.debug("exhaustive oracle comparison: %d elements, %d failures", len(elements), len(failures))
    return failures
