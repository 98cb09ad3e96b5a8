from fractions import Fraction

from django.test import SimpleTestCase

from completion.ccalc import (
    CReductionStrategy, FieldRank2, FormalGeneric, PolyRank2, c_binary, c_multi, ccoord, ccoord_formal, select_strategy)
from completion.dmodule import CKeyField, CKeyPoly, DVector, FormalCKey
from completion.exceptions import BasisNotSpanning, FactorDegreeExceeded, StrategyMismatch
from completion.hall import free2nilpotent
from completion.scalars import Poly, RatFun, Ring, RingKind, SimpleFraction, T
from completion.tensor import Completion

QT = Ring(RingKind.QT_POLY)
QT_FIELD = Ring(RingKind.QT_FIELD)
Q = Ring(RingKind.Q)
FREE2 = free2nilpotent(2)


def key(alpha0, beta0, k):
    return CKeyPoly(Poly.coerce(alpha0), Poly.coerce(beta0), k)


class SelectStrategyTestCase(SimpleTestCase):
    def test_auto(self):
        """Test that the rank-2 group over Q[t] and Q(t) gets a canonical strategy."""
        self.assertIsInstance(select_strategy(QT, FREE2), PolyRank2)
        self.assertIsInstance(select_strategy(QT_FIELD, FREE2), FieldRank2)
        self.assertIsInstance(select_strategy(Q, FREE2), FormalGeneric)
        self.assertTrue(select_strategy(Q, free2nilpotent(3)).canonical)

    def test_formal_fallback_warns(self):
        """Test that a non-canonical formal strategy is logged."""
        with self.assertLogs("completion.ccalc", level="WARNING") as logs:
            strategy = select_strategy(QT, free2nilpotent(3))
        self.assertIsInstance(strategy, FormalGeneric)
        self.assertFalse(strategy.canonical)
        self.assertIn("not canonical", logs.output[0])
        with self.assertLogs("completion.ccalc", level="WARNING"):
            self.assertIsInstance(select_strategy(QT, FREE2, mode="formal"), FormalGeneric)

    def test_mismatch(self):
        """Test that strategies refuse rings and groups they do not cover."""
        with self.assertRaises(StrategyMismatch):
            PolyRank2(QT_FIELD, FREE2)
        with self.assertRaises(StrategyMismatch):
            FieldRank2(QT, FREE2)
        with self.assertRaises(StrategyMismatch):
            select_strategy(QT, FREE2, mode="fast")


class PolyCcoordTestCase(SimpleTestCase):
    def setUp(self):
        self.strategy = select_strategy(QT, FREE2)

    def test_subscript_t(self):
        """Test c(x, y)_t and c(x^2t, y^3t)_t."""
        self.assertEqual(ccoord(self.strategy, Poly(1), Poly(1), T), DVector(QT, {key(1, 1, 0): 1}))
        self.assertEqual(ccoord(self.strategy, T * 2, T * 3, T), DVector(QT, {key(1, Fraction(3, 2), 1): 2}))

    def test_subscript_t_squared(self):
        """Test c(x, y)_{t^2} = c(x^t, y^t)_t + t c(x, y)_t."""
        expected = DVector(QT, {key(1, 1, 1): 1, key(1, 1, 0): T})
        self.assertEqual(ccoord(self.strategy, Poly(1), Poly(1), T ** 2), expected)
        self.assertEqual(ccoord(self.strategy, Poly(1), Poly(1), T ** 2 + 1), expected)

    def test_trivial(self):
        """Test that rational subscripts and trivial arguments give zero."""
        self.assertFalse(ccoord(self.strategy, T, T + 1, Poly(Fraction(3, 4))))
        self.assertFalse(ccoord(self.strategy, Poly(), T, T))
        self.assertFalse(ccoord(self.strategy, T, Poly(), T ** 3))

    def test_additive_in_subscript(self):
        """Test c(g, h)_{lambda + mu} = c(g, h)_lambda + c(g, h)_mu."""
        alpha, beta = T + 1, T ** 2
        lam, mu = T ** 2 - T, T * 3 + Fraction(1, 2)
        total = ccoord(self.strategy, alpha, beta, lam + mu)
        self.assertEqual(total, ccoord(self.strategy, alpha, beta, lam) + ccoord(self.strategy, alpha, beta, mu))

    def test_multiplicative_in_subscript(self):
        """Test c(x^a, y^b)_{lambda mu} = c(x^{lambda a}, y^{lambda b})_mu + mu c(x^a, y^b)_lambda."""
        alpha, beta = T - 2, Poly(3)
        lam, mu = T + 1, T ** 2
        left = ccoord(self.strategy, alpha, beta, lam * mu)
        right = ccoord(self.strategy, lam * alpha, lam * beta, mu) + ccoord(self.strategy, alpha, beta, lam).scale(mu)
        self.assertEqual(left, right)

    def test_negated_arguments(self):
        """Test c(x^-a, y^-b)_lambda = -c(x^a, y^b)_lambda."""
        self.assertEqual(ccoord(self.strategy, -T, T - 1, T ** 2),
                         -ccoord(self.strategy, T, 1 - T, T ** 2))

    def test_shifted_decomposition_matches_term_by_term(self):
        """Test that reusing one decomposition per pair agrees with reducing every t^i separately."""
        args = (T ** 2 - 3, T * 2 + 1)
        poly = Poly([Fraction(1, 2), -1, 0, 4, 1])
        self.assertEqual(self.strategy.reduce_polynomial(args, poly),
                         CReductionStrategy.reduce_polynomial(self.strategy, args, poly))


class FieldCcoordTestCase(SimpleTestCase):
    def setUp(self):
        self.strategy = select_strategy(QT_FIELD, FREE2)

    def test_partial_fraction_key(self):
        """Test c(x^{1/(t-1)}, y)_t."""
        result = ccoord(self.strategy, RatFun(1, T - 1), RatFun(1), RatFun(T))
        expected = DVector(QT_FIELD, {CKeyField(SimpleFraction(T - 1, 1, 0), RatFun(T - 1)): 1})
        self.assertEqual(result, expected)

    def test_inverse_subscript(self):
        """Test c(g, h)_{1/t} = -t^-1 c(g^{1/t}, h^{1/t})_t."""
        one, t = RatFun(1), RatFun(T)
        left = ccoord(self.strategy, one, one, t.inverse())
        right = ccoord(self.strategy, t.inverse(), t.inverse(), t).scale(-t.inverse())
        self.assertEqual(left, right)
        self.assertTrue(left)

    def test_rational_subscript_decomposition(self):
        """Test that c(g, h)_{p/q} = c(g^{1/q}, h^{1/q})_p + p c(g, h)_{1/q}."""
        alpha, beta = RatFun(T + 1), RatFun(Poly(2), T)
        p, q = RatFun(T ** 2), RatFun(T - 1)
        left = ccoord(self.strategy, alpha, beta, p / q)
        right = (ccoord(self.strategy, alpha / q, beta / q, p)
                 + ccoord(self.strategy, alpha, beta, q.inverse()).scale(p))
        self.assertEqual(left, right)

    def test_reduced_basis(self):
        """Test that the basis without 1 fails on c(x, y)_t."""
        strategy = select_strategy(QT_FIELD, FREE2, s_basis="paper")
        with self.assertRaises(BasisNotSpanning):
            ccoord(strategy, RatFun(1), RatFun(1), RatFun(T))
        self.assertTrue(ccoord(strategy, RatFun(1, T - 1), RatFun(1), RatFun(T)))

    def test_shifted_decomposition_matches_term_by_term(self):
        """Test the per-pair decomposition reuse across quadratic and repeated factors."""
        args = (RatFun(T, (T ** 2 + 1) ** 2 * (T - 2)), RatFun(T - 1, T + 3))
        poly = T ** 3 - T.scale(2) + 5
        self.assertEqual(self.strategy.reduce_polynomial(args, poly),
                         CReductionStrategy.reduce_polynomial(self.strategy, args, poly))

    def test_factor_degree_bound(self):
        """Test that a denominator with a large irreducible factor is rejected."""
        f = RatFun(1, Poly([-2, 0, 0, 0, 0, 0, 0, 1]))
        with self.assertRaises(FactorDegreeExceeded):
            ccoord(self.strategy, f, RatFun(1), RatFun(T))
        strategy = select_strategy(QT_FIELD, FREE2, factor_degree_bound=7)
        self.assertTrue(ccoord(strategy, f, RatFun(1), RatFun(T)))


class FormalTestCase(SimpleTestCase):
    def setUp(self):
        with self.assertLogs("completion.ccalc", level="WARNING"):
            self.strategy = select_strategy(QT, free2nilpotent(3))
        self.g = (Poly(1), Poly(), Poly())
        self.h = (Poly(), Poly(1), Poly(1))

    def test_subscript_t(self):
        """Test that c(g, h)_t is a single formal key."""
        expected = DVector.basis(QT, FormalCKey(self.g, self.h, T))
        self.assertEqual(ccoord_formal(self.strategy, self.g, self.h, T), expected)
        self.assertEqual(ccoord_formal(self.strategy, self.g, self.h, T + 1), expected)

    def test_subscript_t_squared(self):
        """Test that c(g, h)_{t^2} reduces to subscript t."""
        g_t = tuple(T * a for a in self.g)
        h_t = tuple(T * a for a in self.h)
        expected = DVector(QT, [(FormalCKey(self.g, self.h, T), T), (FormalCKey(g_t, h_t, T), 1)])
        self.assertEqual(ccoord_formal(self.strategy, self.g, self.h, T ** 2), expected)

    def test_rank_mismatch(self):
        """Test that rank-2 coordinates need a group of rank 2."""
        with self.assertRaises(StrategyMismatch):
            ccoord(self.strategy, Poly(1), Poly(1), T)
        with self.assertRaises(StrategyMismatch):
            ccoord_formal(select_strategy(QT, FREE2), (Poly(1), Poly()), (Poly(), Poly(1)), T)


class CBinaryTestCase(SimpleTestCase):
    def setUp(self):
        self.completion = Completion(QT, FREE2)
        self.x = self.completion.generator("x")
        self.y = self.completion.generator("y")

    def test_generators(self):
        """Test c(x, y)_t and c(g, 1)_t."""
        self.assertEqual(c_binary(self.x, self.y, T), DVector(QT, {key(1, 1, 0): 1}))
        self.assertFalse(c_binary(self.x, self.completion.identity(), T))
        self.assertFalse(c_binary(self.x, self.y, Poly(5)))

    def test_proportional_arguments(self):
        """Test that c(g, h)_t vanishes when g and h lie in one class."""
        g = self.x.power(T) * self.y.power(T)
        h = self.x.power(T ** 2) * self.y.power(T ** 2)
        self.assertFalse(c_binary(g, h, T))

    def test_central_parts_do_not_contribute(self):
        """Test that c(g z, h)_lambda = c(g, h)_lambda for central z."""
        z = self.completion.element((0, 0), (T,))
        self.assertEqual(c_binary(self.x * z, self.y, T ** 3), c_binary(self.x, self.y, T ** 3))

    def test_c_multi(self):
        """Test that c(x_1, ..., x_n) sums the binary c-commutators of the prefixes."""
        self.assertFalse(c_multi([self.x], T))
        self.assertEqual(c_multi([self.x, self.y], T), c_binary(self.x, self.y, T))
        xs = [self.x, self.y, self.x.power(T)]
        self.assertEqual(c_multi(xs, T ** 2),
                         c_binary(self.x, self.y, T ** 2) + c_binary(self.x * self.y, xs[2], T ** 2))
