"""Reduction of c-commutators to their coordinates in D.

A strategy turns c(u^g, u^h)_lambda into a :class:`~completion.dmodule.DVector` in
three steps:

1. the value is zero when an argument is trivial or lambda is rational;
2. lambda is reduced to the ring generator t, using additivity in the subscript,
   c(g, h)_{r t^i} = c(g^r, h^r)_{t^i},
   c(g, h)_{t^i} = c(g^t, h^t)_{t^(i-1)} * c(g, h)_t^(t^(i-1)) and, over Q(t),
   c(g, h)_{p/q} = c(g^(1/q), h^(1/q))_p * c(g, h)_{1/q}^p with
   c(g, h)_{1/q} = c(g^(1/q), h^(1/q))_q^(-1/q);
3. at subscript t the arguments are split by :meth:`CReductionStrategy.at_t`.

The rank-2 strategies split along special representatives (Q[t]) or along the
partial-fraction basis of Q(t) and give canonical normal forms.  They decompose
each pair once; the pairs t^j * (g, h) of step 2 reuse that decomposition through
:func:`~completion.scalars.shift_decomposition`.  The formal
strategy stops after step 2 and only promises syntactic equality.
"""
import logging
from typing import List, Sequence

from .dmodule import CKeyField, CKeyPoly, DVector, FormalCKey, canonical_pair_field, canonical_pair_poly, dvec_sum
from .exceptions import BasisNotSpanning, StrategyMismatch
from .hall import GroupSchema
from .scalars import (
    DEFAULT_FACTOR_DEGREE_BOUND, ONE, Poly, RatFun, Ring, RingKind, Scalar, as_rational, format_scalar, shift_decomposition)

logger = logging.getLogger(__name__)

STRATEGY_CHOICES = ("auto", "formal")
S_BASIS_CHOICES = ("std", "paper")


class CReductionStrategy(object):
    """Base class; subclasses define the argument splitting at subscript t."""

    name = None
    canonical = True

    def __init__(self, ring: Ring, schema: GroupSchema, factor_degree_bound: int = DEFAULT_FACTOR_DEGREE_BOUND,
                 s_basis: str = "std"):
        self.ring = ring
        self.schema = schema
        self.factor_degree_bound = factor_degree_bound
        self.s_basis = s_basis
        self.check_configuration()

    def __repr__(self):
        return "%s(%s)" % (self.__class__.__name__, self.ring)

    def check_configuration(self):
        pass

    def zero(self) -> DVector:
        return DVector.zero(self.ring)

    # argument handling

    def is_trivial(self, args) -> bool:
        raise NotImplementedError("%s does not define is_trivial()" % self.__class__.__name__)

    def scale_args(self, args, c: Scalar):
        raise NotImplementedError("%s does not define scale_args()" % self.__class__.__name__)

    def at_t(self, args) -> DVector:
        raise NotImplementedError("%s does not define at_t()" % self.__class__.__name__)

    # subscript reduction

    def reduce(self, args, lam: Scalar) -> DVector:
        self.ring.check(lam)
        if self.is_trivial(args) or as_rational(lam) is not None:
            return self.zero()
        if isinstance(lam, RatFun) and not lam.is_polynomial:
            q = RatFun(lam.den)
            p = RatFun(lam.num)
            scaled = self.scale_args(args, q.inverse())
            return self.reduce(scaled, p) + self.reduce_inverse(args, q).scale(p)
        return self.reduce_polynomial(args, lam.num if isinstance(lam, RatFun) else lam)

    def reduce_polynomial(self, args, poly: Poly) -> DVector:
        """Coordinates of c(g, h)_poly for a polynomial subscript."""
        return dvec_sum((self.reduce_power(self.scale_args(args, self.ring.coerce(r)), i)
                         for i, r in enumerate(poly.coeffs) if r and i > 0), self.ring)

    def reduce_inverse(self, args, q: Scalar) -> DVector:
        """Coordinates of c(g, h)_{1/q}."""
        q_inverse = self.ring.inv(q)
        return self.reduce(self.scale_args(args, q_inverse), q).scale(-q_inverse)

    def reduce_power(self, args, i: int) -> DVector:
        """Coordinates of c(g, h)_{t^i}, i >= 1."""
        vectors = []
        for j in range(i):
            t_j = self.ring.coerce(Poly.monomial(j))
            vectors.append(self.at_t(self.scale_args(args, t_j)).scale(self.ring.coerce(Poly.monomial(i - 1 - j))))
        return dvec_sum(vectors, self.ring)

    # public operations

    def ccoord(self, alpha: Scalar, beta: Scalar, lam: Scalar) -> DVector:
        """Coordinates of c(x^alpha, y^beta)_lambda."""
        raise StrategyMismatch("%s does not compute rank-2 coordinates" % self.__class__.__name__)

    def pair(self, g: Sequence[Scalar], h: Sequence[Scalar], lam: Scalar) -> DVector:
        """Coordinates of c(u^g, u^h)_lambda for generator exponent vectors g and h."""
        raise NotImplementedError("%s does not define pair()" % self.__class__.__name__)

    def exp_increment(self, a: Sequence[Scalar], lam: Scalar) -> DVector:
        """D-part of (u^a)^lambda beyond its Hall part."""
        raise NotImplementedError("%s does not define exp_increment()" % self.__class__.__name__)


class Rank2Strategy(CReductionStrategy):
    ring_kind = None

    def check_configuration(self):
        if self.ring.kind is not self.ring_kind:
            raise StrategyMismatch("%s needs ring %s, not %s" % (self.name, self.ring_kind.value, self.ring))
        if not self.schema.is_free_rank2:
            raise StrategyMismatch("%s needs the free 2-nilpotent group of rank 2" % self.name)

    def is_trivial(self, args) -> bool:
        alpha, beta = args
        return not alpha or not beta

    def scale_args(self, args, c: Scalar):
        alpha, beta = args
        return c * alpha, c * beta

    def ccoord(self, alpha: Scalar, beta: Scalar, lam: Scalar) -> DVector:
        self.ring.check(alpha, beta)
        return self.reduce((alpha, beta), lam)

    def pair(self, g, h, lam):
        total = self.ccoord(g[0] + h[0], g[1] + h[1], lam)
        return total - self.ccoord(g[0], g[1], lam) - self.ccoord(h[0], h[1], lam)

    def exp_increment(self, a, lam):
        return self.ccoord(a[0], a[1], lam)

    # c(x^(gamma a0), y^(gamma b0))_t is linear in gamma over Q: a pair splits into its
    # class and the additive coordinates of gamma

    def split(self, args):
        raise NotImplementedError("%s does not define split()" % self.__class__.__name__)

    def vector(self, representative, decomposition) -> DVector:
        raise NotImplementedError("%s does not define vector()" % self.__class__.__name__)

    def at_t(self, args) -> DVector:
        return self.vector(*self.split(args))

    def reduce_polynomial(self, args, poly: Poly) -> DVector:
        """sum_j c(x^(t^j alpha), y^(t^j beta))_t * (poly // t^(j+1)), one decomposition per pair."""
        representative, decomposition = self.split(args)
        vectors = []
        for j in range(poly.degree):
            if j:
                decomposition = shift_decomposition(decomposition)
            multiplier = poly // Poly.monomial(j + 1)
            vectors.append(self.vector(representative, decomposition).scale(self.ring.coerce(multiplier)))
        return dvec_sum(vectors, self.ring)


class PolyRank2(Rank2Strategy):
    """Special representatives (alpha0 monic, gcd 1) over Q[t]."""

    name = "PolyRank2"
    ring_kind = RingKind.QT_POLY

    def split(self, args):
        alpha0, beta0, gamma = canonical_pair_poly(*args)
        return (alpha0, beta0), self.ring.additive_decompose(gamma)

    def vector(self, representative, decomposition) -> DVector:
        alpha0, beta0 = representative
        return DVector(self.ring, [(CKeyPoly(alpha0, beta0, s.k), c) for s, c in decomposition.items()])


class FieldRank2(Rank2Strategy):
    """Class representative (1, beta_hat) times an additive basis element of Q(t)."""

    name = "FieldRank2"
    ring_kind = RingKind.QT_FIELD

    def split(self, args):
        beta_hat, gamma = canonical_pair_field(*args)
        return beta_hat, self.ring.additive_decompose(gamma, self.factor_degree_bound)

    def vector(self, representative, decomposition) -> DVector:
        if self.s_basis == "paper" and ONE in decomposition:
            raise BasisNotSpanning("c(x^{a}, y^{a*%s})_t needs the basis element 1, which the reduced basis "
                                   "excludes" % format_scalar(representative))
        return DVector(self.ring, [(CKeyField(s, representative), c) for s, c in decomposition.items()])


class FormalGeneric(CReductionStrategy):
    """Uninterpreted keys c(u^g, u^h)_t for any schema and ring."""

    name = "FormalGeneric"

    @property
    def canonical(self) -> bool:
        # subscripts over Z and Q are rational, so D is trivial
        return not self.ring.has_t

    def check_configuration(self):
        if not self.canonical:
            logger.warning("formal c-commutator reduction over %s: normal forms are not canonical", self.ring)

    def is_trivial(self, args) -> bool:
        g, h = args
        return not any(g) or not any(h)

    def scale_args(self, args, c: Scalar):
        g, h = args
        return tuple(c * a for a in g), tuple(c * a for a in h)

    def at_t(self, args) -> DVector:
        g, h = args
        return DVector.basis(self.ring, FormalCKey(g, h, self.ring.t()))

    def pair(self, g, h, lam):
        self.ring.check(*g)
        self.ring.check(*h)
        return self.reduce((tuple(g), tuple(h)), lam)

    def exp_increment(self, a, lam):
        zero = self.ring.zero()
        vectors = []
        for i in range(1, len(a)):
            prefix = tuple(a[:i]) + (zero,) * (len(a) - i)
            single = tuple(a[i] if j == i else zero for j in range(len(a)))
            vectors.append(self.pair(prefix, single, lam))
        return dvec_sum(vectors, self.ring)

    def ccoord(self, alpha, beta, lam):
        if self.schema.m != 2:
            raise StrategyMismatch("rank-2 coordinates need a schema of rank 2")
        zero = self.ring.zero()
        return self.pair((alpha, zero), (zero, beta), lam)


def select_strategy(ring: Ring, schema: GroupSchema, mode: str = "auto", s_basis: str = "std",
                    factor_degree_bound: int = DEFAULT_FACTOR_DEGREE_BOUND) -> CReductionStrategy:
    if mode not in STRATEGY_CHOICES:
        raise StrategyMismatch("unknown strategy %r" % mode)
    strategy_class = FormalGeneric
    if mode == "auto" and schema.is_free_rank2:
        strategy_class = {RingKind.QT_POLY: PolyRank2, RingKind.QT_FIELD: FieldRank2}.get(ring.kind, FormalGeneric)
    logger.debug("selected %s for ring %s and rank %d", strategy_class.__name__, ring, schema.m)
    return strategy_class(ring, schema, factor_degree_bound, s_basis)


def ccoord(strategy: CReductionStrategy, alpha: Scalar, beta: Scalar, lam: Scalar) -> DVector:
    return strategy.ccoord(alpha, beta, lam)


def ccoord_formal(strategy: CReductionStrategy, g: Sequence[Scalar], h: Sequence[Scalar], lam: Scalar) -> DVector:
    if not isinstance(strategy, FormalGeneric):
        raise StrategyMismatch("formal coordinates need the formal strategy")
    return strategy.pair(g, h, lam)


def c_binary(g, h, lam: Scalar) -> DVector:
    """c(g, h)_lambda for two elements of one completion; central parts do not contribute."""
    g.check_compatible(h)
    return g.completion.strategy.pair(g.hall.a, h.hall.a, lam)


def c_multi(xs: List, lam: Scalar) -> DVector:
    """c(x_1, ..., x_n)_lambda = sum_i c(x_1 ... x_i, x_{i+1})_lambda."""
    if not xs:
        raise ValueError("c_multi needs at least one element")
    strategy = xs[0].completion.strategy
    vectors = []
    prefix = xs[0]
    for x in xs[1:]:
        vectors.append(c_binary(prefix, x, lam))
        prefix = prefix * x
    return dvec_sum(vectors, strategy.ring)

