from django.test import SimpleTestCase

from completion.exceptions import ScalarNotInRing, UnknownGenerator, WordSyntaxError
from completion.hall import free2nilpotent
from completion.rword import (
    IDENTITY, CComm, Comm, Exp, Gen, Inv, Mul, evaluate, evaluate_text, format_word, parse, print_normal_form)
from completion.scalars import Poly, Ring, RingKind, T
from completion.tensor import Completion

QT = Completion(Ring(RingKind.QT_POLY), free2nilpotent(2))
QT_FIELD = Completion(Ring(RingKind.QT_FIELD), free2nilpotent(2))
Z = Completion(Ring(RingKind.Z), free2nilpotent(2))


class ParseTestCase(SimpleTestCase):
    def test_words(self):
        """Test the syntax tree of a few words."""
        x, y = Gen("x"), Gen("y")
        self.assertEqual(parse("(x*y)^(t^2+1)", QT), Exp(Mul((x, y)), T ** 2 + 1))
        self.assertEqual(parse("[y,x]^t", QT), Exp(Comm(y, x), T))
        self.assertEqual(parse("x^-1", QT), Inv(x))
        self.assertEqual(parse("(x*y)^{-1}", QT), Inv(Mul((x, y))))
        self.assertEqual(parse("x^-2", QT), Exp(x, Poly(-2)))
        self.assertEqual(parse("x y", QT), parse("x*y", QT))
        self.assertEqual(parse("c(x, y)_{t^2}", QT), CComm(x, y, T ** 2))
        self.assertEqual(parse(" 1 ", QT), IDENTITY)

    def test_errors(self):
        """Test syntax, ring and generator errors."""
        with self.assertRaises(ScalarNotInRing):
            parse("x^(1/(t-1))", QT)
        with self.assertRaises(ScalarNotInRing):
            parse("x^t", Z)
        with self.assertRaises(WordSyntaxError) as cm:
            parse("x*", QT)
        self.assertEqual(cm.exception.position, 3)
        with self.assertRaises(WordSyntaxError):
            parse("x^t^2", QT)
        with self.assertRaises(WordSyntaxError):
            parse("2", QT)
        with self.assertRaises(WordSyntaxError):
            parse("[x,y", QT)
        with self.assertRaises(UnknownGenerator):
            parse("x*z", QT)

    def test_format_word(self):
        """Test that printed words parse back to the same tree."""
        words = [Exp(Mul((Gen("x"), Gen("y"))), T ** 2 + 1), Comm(Gen("y"), Exp(Gen("x"), T)),
                 CComm(Gen("x"), Gen("y"), T), Inv(Comm(Gen("x"), Gen("y"))), IDENTITY]
        for word in words:
            self.assertEqual(parse(format_word(word), QT), word)
        self.assertEqual(format_word(Exp(Mul((Gen("x"), Gen("y"))), Poly(2))), "(x*y)^{2}")
        self.assertEqual(format_word(Inv(Gen("x"))), "x^-1")


class NormalFormTestCase(SimpleTestCase):
    def test_normal_forms(self):
        """Test the printed normal form of a few words."""
        cases = [
            ("(x*y)^t", "x^{t} y^{t} [y,x]^{(t^2-t)/2} * c(x, y)_t^{1}"),
            ("(x*y)^(t^2+1)", "x^{t^2+1} y^{t^2+1} [y,x]^{(t^4+t^2)/2} * c(x, y)_t^{t} * c(x^{t}, y^{t})_t^{1}"),
            ("((x^t)*(y^t))^t", "x^{t^2} y^{t^2} [y,x]^{(t^4-t^3)/2} * c(x^{t}, y^{t})_t^{1}"),
            ("x^0", "1"),
            ("x*x^-1", "1"),
            ("y*x", "x y [y,x]"),
            ("[y,x]^t", "[y,x]^{t}"),
            ("c(x,y)_t", "c(x, y)_t^{1}"),
        ]
        for text, expected in cases:
            self.assertEqual(print_normal_form(evaluate_text(text, QT)), expected, text)

    def test_field(self):
        """Test a partial-fraction key over Q(t)."""
        g = evaluate_text("c(x^(1/(t-1)),y)_t", QT_FIELD)
        self.assertEqual(print_normal_form(g), "c(x^{1/(t-1)}, y)_t^{1}")

    def test_integers(self):
        """Test normal forms over Z."""
        self.assertEqual(print_normal_form(evaluate_text("(x*y)^2", Z)), "x^{2} y^{2} [y,x]")
        self.assertEqual(print_normal_form(evaluate_text("x^-1 y^-1 x y", Z)), "[y,x]^{-1}")

    def test_inverse(self):
        """Test that g^-1 is the group inverse."""
        g = evaluate_text("(x^(t+1)*y)^t", QT)
        self.assertEqual(evaluate(parse("((x^(t+1)*y)^t)^-1", QT), QT), g.inverse())
        self.assertTrue((g * evaluate(Inv(parse("(x^(t+1)*y)^t", QT)), QT)).is_identity)

    def test_general_group(self):
        """Test generator names of a group of rank 3."""
        completion = Completion(Ring(RingKind.Q), free2nilpotent(3))
        self.assertEqual(print_normal_form(evaluate_text("u1 u2", completion)), "u1 u2")
        self.assertEqual(print_normal_form(evaluate_text("[u2,u1]", completion)), "v1")

    def test_round_trip(self):
        """Test that printed normal forms evaluate to the same element."""
        for completion, text in ((QT, "(x*y)^(t^2+1)"), (QT, "(x^(t+1)*y^-2)^(t^3-t)*[x,y]^t"),
                                 (QT_FIELD, "(x^(1/t)*y)^(1/(t+1))"), (Z, "(y*x^3)^-4")):
            g = evaluate_text(text, completion)
            self.assertEqual(evaluate(parse(print_normal_form(g), completion), completion), g, text)
