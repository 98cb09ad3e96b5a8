"""Tensor completion N (x) R as pairs (Hall element, vector of D).

The Hall part carries the Mal'tsev coordinates over R and D is central, so
multiplication is componentwise.  Exponentiation adds to the D-part the
c-commutator that measures how far R-powers deviate from Hall powers.
"""
import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Tuple, Union

from .ccalc import CReductionStrategy, select_strategy
from .dmodule import DVector
from .exceptions import MixedRings, SchemaMismatch
from .hall import GroupSchema, HallElement, hall_commutator
from .scalars import DEFAULT_FACTOR_DEGREE_BOUND, Ring, Scalar

logger = logging.getLogger(__name__)

Letter = Union[str, Tuple[str, int]]


@dataclass(frozen=True)
class Completion:
    """The completion of one group over one ring, with its reduction strategy."""
    ring: Ring
    schema: GroupSchema
    mode: str = "auto"
    s_basis: str = "std"
    factor_degree_bound: int = DEFAULT_FACTOR_DEGREE_BOUND
    strategy: CReductionStrategy = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "strategy", select_strategy(self.ring, self.schema, self.mode, self.s_basis,
                                                             self.factor_degree_bound))

    @property
    def canonical(self) -> bool:
        return self.strategy.canonical

    def zero_d(self) -> DVector:
        return DVector.zero(self.ring)

    def identity(self) -> "TensorElement":
        return TensorElement(self, HallElement.identity(self.schema, self.ring), self.zero_d())

    def element(self, a: Sequence, b: Sequence = None, d: DVector = None) -> "TensorElement":
        """Element with Mal'tsev coordinates (a, b) and D-part d; coordinates are coerced into the ring."""
        if b is None:
            b = [0] * self.schema.n
        hall = HallElement(self.schema, self.ring, tuple(self.ring.coerce(x) for x in a),
                           tuple(self.ring.coerce(x) for x in b))
        return TensorElement(self, hall, self.zero_d() if d is None else d)

    def lift(self, hall: HallElement) -> "TensorElement":
        return TensorElement(self, hall, self.zero_d())

    def central(self, d: DVector) -> "TensorElement":
        return TensorElement(self, HallElement.identity(self.schema, self.ring), d)

    def generator(self, name: str) -> "TensorElement":
        return self.lift(HallElement.generator(self.schema, self.ring, name))

    def embed(self, letters: Iterable[Letter]) -> "TensorElement":
        """Image of a discrete word, given as generator names or (name, integer exponent) pairs."""
        result = self.identity()
        for letter in letters:
            name, exponent = (letter, 1) if isinstance(letter, str) else letter
            result = result * self.generator(name).power(self.ring.coerce(int(exponent)))
        return result


@dataclass(frozen=True)
class TensorElement:
    completion: Completion
    hall: HallElement
    d: DVector

    def __post_init__(self):
        ring = self.completion.ring
        if self.hall.ring != ring or self.d.ring != ring:
            raise MixedRings("Hall part and D-part must lie over %s" % ring)
        if self.hall.schema != self.completion.schema:
            raise SchemaMismatch("Hall part belongs to another group")
        if self.d and not ring.has_t:
            raise MixedRings("D is trivial over %s" % ring)

    @property
    def ring(self) -> Ring:
        return self.completion.ring

    @property
    def is_identity(self) -> bool:
        return self.hall.is_identity and not self.d

    def check_compatible(self, other: "TensorElement"):
        if self.completion != other.completion:
            raise SchemaMismatch("elements of different completions")

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        self.check_compatible(other)
        return TensorElement(self.completion, self.hall * other.hall, self.d + other.d)

    def inverse(self) -> "TensorElement":
        return TensorElement(self.completion, self.hall.inverse(), -self.d)

    def power(self, mu: Scalar) -> "TensorElement":
        """R-exponentiation: Hall power plus the c-commutator of the coordinates."""
        increment = self.completion.strategy.exp_increment(self.hall.a, mu)
        return TensorElement(self.completion, self.hall.power(mu), self.d.scale(mu) + increment)

    def mu_retract(self) -> HallElement:
        return self.hall

    def commutator(self, other: "TensorElement") -> "TensorElement":
        self.check_compatible(other)
        return TensorElement(self.completion, hall_commutator(self.hall, other.hall), self.completion.zero_d())


def t_mul(g: TensorElement, h: TensorElement) -> TensorElement:
    return g * h


def t_inv(g: TensorElement) -> TensorElement:
    return g.inverse()


def t_exp(g: TensorElement, mu: Scalar) -> TensorElement:
    return g.power(mu)


def mu_retract(g: TensorElement) -> HallElement:
    return g.mu_retract()


def embed(completion: Completion, letters: Iterable[Letter]) -> TensorElement:
    return completion.embed(letters)


def t_commutator(g: TensorElement, h: TensorElement) -> TensorElement:
    """[g, h] = g^-1 h^-1 g h; D is central, so the D-part is zero."""
    return g.commutator(h)


def commutes(g: TensorElement, h: TensorElement) -> bool:
    return t_commutator(g, h).is_identity


def alpha_commutator(g: TensorElement, h: TensorElement, lam: Scalar) -> TensorElement:
    """(g, h)_lambda = h^-lambda g^-lambda (gh)^lambda."""
    return h.power(-lam) * g.power(-lam) * (g * h).power(lam)


def t_tau2(xs: Sequence[TensorElement]) -> TensorElement:
    """prod_i [x_1 ... x_i, x_{i+1}]."""
    result, prefix = xs[0].completion.identity(), xs[0]
    for x in xs[1:]:
        result = result * t_commutator(prefix, x)
        prefix = prefix * x
    return result
