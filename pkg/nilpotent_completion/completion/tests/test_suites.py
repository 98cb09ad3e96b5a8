from django.test import SimpleTestCase

from completion.exceptions import StrategyMismatch
from completion.hall import free2nilpotent
from completion.rword import evaluate
from completion.scalars import Ring, RingKind
from completion.suites import (
    Invariant, Sampler, SuiteReport, case_rng, run_invariant, run_suite, suite_invariants)
from completion.tensor import Completion

FREE2 = free2nilpotent(2)


def completion(kind, schema=FREE2):
    return Completion(Ring(kind), schema)


class SuiteSelectionTestCase(SimpleTestCase):
    def test_applicable_invariants(self):
        """Test that invariants are filtered by ring and group."""
        integral = [invariant.name for invariant in suite_invariants("all", completion(RingKind.Z))]
        self.assertIn("trivial-d", integral)
        self.assertIn("power-oracle", integral)
        self.assertNotIn("basis-keys", integral)
        self.assertNotIn("integer-specialization", integral)
        polynomial = [invariant.name for invariant in suite_invariants("facts", completion(RingKind.QT_POLY))]
        self.assertIn("basis-keys", polynomial)
        self.assertNotIn("partial-fractions", polynomial)
        rank3 = [invariant.name for invariant in suite_invariants("hall-oracle", completion(RingKind.Q,
                                                                                              free2nilpotent(3)))]
        self.assertEqual(rank3, ["power-oracle"])
        with self.assertRaises(KeyError):
            suite_invariants("everything", completion(RingKind.Z))

    def test_needs_canonical_strategy(self):
        """Test that formal normal forms over Q[t] are not checked."""
        with self.assertLogs("completion.ccalc", level="WARNING"):
            formal = completion(RingKind.QT_POLY, free2nilpotent(3))
        with self.assertRaises(StrategyMismatch):
            run_suite("axioms", formal, 1, 0)


class SamplerTestCase(SimpleTestCase):
    def test_values_lie_in_the_ring(self):
        """Test that sampled scalars and elements belong to the completion."""
        for kind in (RingKind.Z, RingKind.Q, RingKind.QT_POLY, RingKind.QT_FIELD):
            target = completion(kind)
            sampler = Sampler(target, case_rng(1, "sampler", 0), max_degree=2)
            self.assertTrue(target.ring.contains(sampler.scalar()))
            self.assertTrue(sampler.nonzero())
            self.assertEqual(sampler.element().completion, target)
            self.assertTrue(sampler.central().hall.is_central)
            evaluate(sampler.word(), target)

    def test_case_rng(self):
        """Test that every case has its own reproducible stream."""
        self.assertEqual(case_rng(7, "F7", 3).random(), case_rng(7, "F7", 3).random())
        self.assertNotEqual(case_rng(7, "F7", 3).random(), case_rng(7, "F7", 4).random())
        self.assertNotEqual(case_rng(7, "F7", 3).random(), case_rng(7, "F12", 3).random())


class RunSuiteTestCase(SimpleTestCase):
    def test_hall_oracle(self):
        """Test the oracle suite over Z and Q[t]."""
        for kind in (RingKind.Z, RingKind.QT_POLY):
            report = run_suite("hall-oracle", completion(kind), 15, 7)
            self.assertTrue(report.ok, "\n".join(report.lines()))
            self.assertEqual(report.passed, 15 * len(report.results))

    def test_axioms(self):
        """Test the completion axioms over Q and Q[t]."""
        report = run_suite("axioms", completion(RingKind.Q), 10, 1)
        self.assertTrue(report.ok, "\n".join(report.lines()))
        report = run_suite("axioms", completion(RingKind.QT_POLY), 4, 2, max_degree=2)
        self.assertTrue(report.ok, "\n".join(report.lines()))

    def test_facts_and_confluence(self):
        """Test the c-commutator identities and confluence over Q[t]."""
        for name in ("facts", "confluence"):
            report = run_suite(name, completion(RingKind.QT_POLY), 3, 5, max_degree=2)
            self.assertTrue(report.ok, "\n".join(report.lines()))

    def test_rational_functions(self):
        """Test a few cases over Q(t)."""
        for name in ("axioms", "facts"):
            report = run_suite(name, completion(RingKind.QT_FIELD), 1, 3, max_degree=1)
            self.assertTrue(report.ok, "\n".join(report.lines()))

    def test_deterministic(self):
        """Test that a report depends only on seed, cases and completion."""
        first = run_suite("all", completion(RingKind.Z), 5, 42)
        second = run_suite("all", completion(RingKind.Z), 5, 42)
        self.assertEqual(first.lines(), second.lines())
        self.assertEqual(first.as_dict(), second.as_dict())


class ReportTestCase(SimpleTestCase):
    def test_failures_are_reported(self):
        """Test that a failing invariant is counted and its counterexample printed."""
        failing = Invariant("always-fails", lambda sampler: "x = 1")
        result = run_invariant(failing, completion(RingKind.Z), 3, 0)
        self.assertEqual((result.passed, result.failed), (0, 3))
        self.assertEqual((result.counterexample, result.counterexample_case), ("x = 1", 0))
        report = SuiteReport("custom", 3, 0, [result])
        self.assertFalse(report.ok)
        lines = report.lines()
        self.assertEqual(lines[0].split(), ["invariant", "passed", "failed"])
        self.assertIn("counterexamples:", lines)
        self.assertIn("  always-fails case 0: x = 1", lines)
        self.assertEqual(lines[-1].split(), ["TOTAL", "0", "3"])
        self.assertEqual(report.as_dict()["failed"], 3)

    def test_smallest_counterexample_is_kept(self):
        """Test that the shortest counterexample wins and ties keep the earliest case."""
        texts = iter(["g = x^{t^2+1}*y", "g = y^{t}", "g = x*y^{3}", "g = x", "g = y"])
        failing = Invariant("shrinking", lambda sampler: next(texts))
        result = run_invariant(failing, completion(RingKind.QT_POLY), 5, 0)
        self.assertEqual(result.failed, 5)
        self.assertEqual((result.counterexample, result.counterexample_case), ("g = x", 3))
