from fractions import Fraction

from django.test import SimpleTestCase

from completion.ccalc import c_binary, c_multi
from completion.dmodule import CKeyPoly, DVector
from completion.exceptions import MixedRings, SchemaMismatch
from completion.hall import free2nilpotent
from completion.scalars import Poly, Ring, RingKind, T, binomial
from completion.tensor import (
    Completion, TensorElement, alpha_commutator, commutes, embed, mu_retract, t_commutator, t_exp, t_inv, t_mul,
    t_tau2)

Z = Ring(RingKind.Z)
Q = Ring(RingKind.Q)
QT = Ring(RingKind.QT_POLY)
QT_FIELD = Ring(RingKind.QT_FIELD)
FREE2 = free2nilpotent(2)


def key(alpha0, beta0, k):
    return CKeyPoly(Poly.coerce(alpha0), Poly.coerce(beta0), k)


class CompletionTestCase(SimpleTestCase):
    def test_equality(self):
        """Test that completions compare by ring, group and configuration."""
        self.assertEqual(Completion(QT, FREE2), Completion(QT, FREE2))
        self.assertNotEqual(Completion(QT, FREE2), Completion(QT_FIELD, FREE2))
        self.assertTrue(Completion(QT, FREE2).canonical)

    def test_embed(self):
        """Test the image of discrete words."""
        completion = Completion(QT, FREE2)
        self.assertEqual(embed(completion, ["y", "x"]), completion.element((1, 1), (1,)))
        self.assertEqual(embed(completion, [("x", 2), ("y", -1)]), completion.element((2, -1), (0,)))
        self.assertEqual(embed(completion, ["[y,x]"]), completion.element((0, 0), (1,)))
        self.assertTrue(embed(completion, []).is_identity)

    def test_d_needs_t(self):
        """Test that D-parts over Z and Q are rejected."""
        completion = Completion(Q, FREE2)
        d = DVector(Q, {key(1, 1, 0): 1})
        with self.assertRaises(MixedRings):
            TensorElement(completion, completion.identity().hall, d)


class ExponentiationTestCase(SimpleTestCase):
    def setUp(self):
        self.completion = Completion(QT, FREE2)
        self.x = self.completion.generator("x")
        self.y = self.completion.generator("y")

    def test_xy_to_the_t(self):
        """Test (xy)^t = x^t y^t [y,x]^{(t^2-t)/2} * c(x, y)_t."""
        g = t_exp(self.x * self.y, T)
        self.assertEqual(g.hall, self.completion.element((T, T), (binomial(T, 2),)).hall)
        self.assertEqual(g.d, DVector(QT, {key(1, 1, 0): 1}))

    def test_xy_to_the_t_squared_plus_one(self):
        """Test the hall part and D-part of (xy)^{t^2+1}."""
        mu = T ** 2 + 1
        g = (self.x * self.y).power(mu)
        self.assertEqual(g.hall, self.completion.element((mu, mu), (Poly([0, 0, Fraction(1, 2), 0, Fraction(1, 2)]),)).hall)
        self.assertEqual(g.d, DVector(QT, {key(1, 1, 1): 1, key(1, 1, 0): T}))

    def test_trivial_exponents(self):
        """Test g^0 = 1 and g^1 = g."""
        g = self.x.power(T) * self.y.power(T - 1) * self.completion.central(DVector(QT, {key(1, 2, 0): T}))
        self.assertTrue(g.power(QT.zero()).is_identity)
        self.assertEqual(g.power(QT.one()), g)

    def test_generators_have_no_increment(self):
        """Test that powers of one generator stay in the Hall part."""
        self.assertFalse(self.x.power(T ** 3).d)
        self.assertEqual(mu_retract(self.y.power(T)), self.completion.element((0, T), (0,)).hall)

    def test_rational_exponents_over_q(self):
        """Test that D is trivial over Q."""
        completion = Completion(Q, FREE2)
        xy = completion.generator("x") * completion.generator("y")
        g = xy.power(Fraction(1, 2))
        self.assertFalse(g.d)
        self.assertEqual(g, completion.element((Fraction(1, 2), Fraction(1, 2)), (Fraction(-1, 8),)))
        integral = Completion(Z, FREE2)
        self.assertEqual((integral.generator("x") * integral.generator("y")).power(2),
                         integral.element((2, 2), (1,)))

    def test_multi_argument_power(self):
        """Test (x_1 x_2 x_3)^lambda = x_1^lambda x_2^lambda x_3^lambda tau2^-binom(lambda, 2) c(x_1, x_2, x_3)_lambda."""
        xs = [self.x, self.y.power(T), self.x.power(T + 2)]
        lam = T ** 2
        left = (xs[0] * xs[1] * xs[2]).power(lam)
        right = (xs[0].power(lam) * xs[1].power(lam) * xs[2].power(lam)
                 * t_tau2(xs).power(-binomial(lam, 2)) * self.completion.central(c_multi(xs, lam)))
        self.assertEqual(left, right)


class GroupLawTestCase(SimpleTestCase):
    def setUp(self):
        self.completion = Completion(QT, FREE2)
        self.x = self.completion.generator("x")
        self.y = self.completion.generator("y")
        self.g = self.x.power(T + 1) * self.y.power(T ** 2)
        self.h = self.y.power(Poly(-3)) * self.x.power(T)

    def test_inverse(self):
        """Test g g^-1 = g^-1 g = 1."""
        self.assertTrue(t_mul(self.g, t_inv(self.g)).is_identity)
        self.assertTrue((t_inv(self.g) * self.g).is_identity)
        self.assertEqual(self.g.power(QT.coerce(-1)), self.g.inverse())

    def test_retraction_is_a_homomorphism(self):
        """Test mu(gh) = mu(g) mu(h)."""
        self.assertEqual(mu_retract(self.g * self.h), mu_retract(self.g) * mu_retract(self.h))

    def test_commutator(self):
        """Test [y, x] and that D is central."""
        self.assertEqual(t_commutator(self.y, self.x), self.completion.element((0, 0), (1,)))
        central = self.completion.central(DVector(QT, {key(1, 1, 0): T}))
        self.assertTrue(commutes(self.g, central))
        self.assertFalse(commutes(self.x, self.y))
        self.assertFalse(t_commutator(self.g, self.h).d)

    def test_alpha_commutator(self):
        """Test [g, h]^binom(lambda, 2) (g, h)_lambda = c(g, h)_lambda."""
        for g, h, lam in ((self.x, self.y, T), (self.g, self.h, T ** 2 - 1)):
            left = t_commutator(g, h).power(binomial(lam, 2)) * alpha_commutator(g, h, lam)
            self.assertEqual(left, self.completion.central(c_binary(g, h, lam)))

    def test_mismatch(self):
        """Test that elements of different completions do not multiply."""
        other = Completion(QT_FIELD, FREE2).generator("x")
        with self.assertRaises(SchemaMismatch):
            self.x * other
