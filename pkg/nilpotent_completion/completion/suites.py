"""Randomized invariant suites run by the ``checksuite`` command.

Every case draws from its own ``random.Random`` seeded with
``"<seed>:<invariant>:<case>"``, so a report depends only on the seed, the
case count and the completion, and any single case can be replayed.
"""
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from .ccalc import c_binary, c_multi
from .dmodule import CKeyField, CKeyPoly, is_field_key, is_special_key
from .exceptions import StrategyMismatch
from .hall import HallElement, hall_axiom5
from .oracle import CORNER_SIGN, int_exp_oracle, matrix_model
from .rword import Comm, Exp, Gen, Inv, Mul, evaluate, format_word, parse, print_normal_form
from .scalars import Poly, RatFun, RingKind, format_scalar, partial_fractions, recombine
from .tensor import Completion, TensorElement, alpha_commutator, commutes, t_tau2

logger = logging.getLogger(__name__)

SUITE_CHOICES = ("axioms", "facts", "hall-oracle", "confluence", "all")


class Sampler(object):
    """Random scalars, elements and R-words of one completion.

    Polynomials have degree <= ``max_degree`` and coefficients p/q with |p| <= 10
    and 1 <= q <= 10; Q(t) denominators are products of monic factors of degree <= 2.
    """

    def __init__(self, completion: Completion, rng: random.Random, max_degree: int = 4):
        self.completion = completion
        self.ring = completion.ring
        self.schema = completion.schema
        self.rng = rng
        self.max_degree = max_degree

    def integer(self, bound: int = 10) -> int:
        return self.rng.randint(-bound, bound)

    def rational(self) -> Fraction:
        return Fraction(self.rng.randint(-10, 10), self.rng.randint(1, 10))

    def poly(self, max_degree: int = None) -> Poly:
        degree = self.rng.randint(0, self.max_degree if max_degree is None else max_degree)
        return Poly([self.rational() for _ in range(degree + 1)])

    def monic_factor(self) -> Poly:
        degree = self.rng.randint(1, 2)
        return Poly([self.rng.randint(-5, 5) for _ in range(degree)] + [1])

    def denominator(self) -> Poly:
        result = Poly(1)
        for _ in range(self.rng.randint(0, 2)):
            result = result * self.monic_factor()
        return result

    def scalar(self, max_degree: int = None):
        kind = self.ring.kind
        if kind is RingKind.Z:
            return self.integer()
        if kind is RingKind.Q:
            return self.rational()
        if kind is RingKind.QT_POLY:
            return self.poly(max_degree)
        return RatFun(self.poly(max_degree), self.denominator())

    def nonzero(self, max_degree: int = None):
        while True:
            value = self.scalar(max_degree)
            if value:
                return value

    def invertible(self):
        kind = self.ring.kind
        if kind is RingKind.Z:
            return self.rng.choice((1, -1))
        if kind is RingKind.QT_POLY:
            return self.ring.coerce(self.nonzero_rational())
        return self.nonzero()

    def nonzero_rational(self) -> Fraction:
        while True:
            value = self.rational()
            if value:
                return value

    def coordinates(self, size: int) -> tuple:
        return tuple(self.scalar() for _ in range(size))

    def hall(self) -> HallElement:
        return HallElement(self.schema, self.ring, self.coordinates(self.schema.m), self.coordinates(self.schema.n))

    def integer_hall(self, bound: int = 10) -> HallElement:
        return HallElement(self.schema, self.ring,
                           tuple(self.ring.coerce(self.integer(bound)) for _ in range(self.schema.m)),
                           tuple(self.ring.coerce(self.integer(bound)) for _ in range(self.schema.n)))

    def d_part(self):
        if not self.ring.has_t:
            return self.completion.zero_d()
        strategy = self.completion.strategy
        vector = strategy.pair(self.coordinates(self.schema.m), self.coordinates(self.schema.m), self.ring.t())
        return vector.scale(self.scalar())

    def element(self) -> TensorElement:
        return TensorElement(self.completion, self.hall(), self.d_part())

    def central(self) -> TensorElement:
        zero = (self.ring.zero(),) * self.schema.m
        hall = HallElement(self.schema, self.ring, zero, self.coordinates(self.schema.n))
        return TensorElement(self.completion, hall, self.d_part())

    def word(self, depth: int = 3):
        choice = self.rng.randrange(5) if depth > 0 else 0
        if choice == 0:
            return Gen(self.rng.choice(self.schema.u_names))
        if choice == 1:
            return Mul((self.word(depth - 1), self.word(depth - 1)))
        if choice == 2:
            return Exp(self.word(depth - 1), self.scalar(max_degree=2))
        if choice == 3:
            return Comm(self.word(depth - 1), self.word(depth - 1))
        return Inv(self.word(depth - 1))


def _describe(**values) -> str:
    parts = []
    for name, value in values.items():
        if isinstance(value, TensorElement):
            text = print_normal_form(value)
        elif isinstance(value, (Gen, Mul, Inv, Exp, Comm)):
            text = format_word(value)
        elif isinstance(value, HallElement):
            text = ", ".join(format_scalar(x) for x in value.a + value.b)
            text = "(%s)" % text
        else:
            text = format_scalar(value)
        parts.append("%s = %s" % (name, text))
    return "; ".join(parts)


def _result(ok: bool, **values) -> Optional[str]:
    return None if ok else _describe(**values)


# axioms


def check_axiom1(s: Sampler) -> Optional[str]:
    g, alpha = s.element(), s.scalar()
    identity = s.completion.identity()
    ok = g.power(s.ring.one()) == g and g.power(s.ring.zero()).is_identity and identity.power(alpha).is_identity
    return _result(ok, g=g, alpha=alpha)


def check_axiom21(s: Sampler) -> Optional[str]:
    g, alpha, beta = s.element(), s.scalar(), s.scalar()
    return _result(g.power(alpha + beta) == g.power(alpha) * g.power(beta), g=g, alpha=alpha, beta=beta)


def check_axiom22(s: Sampler) -> Optional[str]:
    g, alpha, beta = s.element(), s.scalar(), s.scalar()
    return _result(g.power(alpha).power(beta) == g.power(alpha * beta), g=g, alpha=alpha, beta=beta)


def check_axiom3(s: Sampler) -> Optional[str]:
    g, h, alpha = s.element(), s.element(), s.scalar()
    conjugate = h.inverse() * g * h
    return _result(conjugate.power(alpha) == h.inverse() * g.power(alpha) * h, g=g, h=h, alpha=alpha)


def check_axiom4(s: Sampler) -> Optional[str]:
    base, sigma1, sigma2, alpha = s.element(), s.scalar(), s.scalar(), s.scalar()
    g = base.power(sigma1) * s.central()
    h = base.power(sigma2) * s.central()
    ok = commutes(g, h) and (g * h).power(alpha) == g.power(alpha) * h.power(alpha)
    return _result(ok, g=g, h=h, alpha=alpha)


def check_hall_comparison(s: Sampler) -> Optional[str]:
    g, alpha = s.element(), s.scalar()
    increment = g.power(alpha).d - g.d.scale(alpha)
    return _result(increment == s.completion.strategy.exp_increment(g.hall.a, alpha), g=g, alpha=alpha)


def check_retraction(s: Sampler) -> Optional[str]:
    g, h, alpha = s.element(), s.element(), s.scalar()
    lifted = s.completion.lift(g.hall) * s.completion.lift(h.hall)
    ok = ((g * h).mu_retract() == g.mu_retract() * h.mu_retract()
          and g.power(alpha).mu_retract() == g.mu_retract().power(alpha)
          and lifted.hall == g.hall * h.hall and not lifted.d
          and s.completion.central(g.d).mu_retract().is_identity)
    return _result(ok, g=g, h=h, alpha=alpha)


def check_hall_axiom5(s: Sampler) -> Optional[str]:
    g, h, alpha = s.hall(), s.hall(), s.scalar()
    return _result(hall_axiom5(g, h, alpha), g=g, h=h, alpha=alpha)


def check_trivial_d(s: Sampler) -> Optional[str]:
    word = s.word()
    return _result(not evaluate(word, s.completion).d, w=word)


# facts


def check_c_definition(s: Sampler) -> Optional[str]:
    g, h, alpha = s.element(), s.element(), s.scalar()
    left = g.commutator(h).power(s.ring.binomial(alpha, 2)) * alpha_commutator(g, h, alpha)
    return _result(left == s.completion.central(c_binary(g, h, alpha)), g=g, h=h, alpha=alpha)


def check_f7(s: Sampler) -> Optional[str]:
    f, h, alpha, beta = s.element(), s.element(), s.scalar(), s.scalar()
    left = c_binary(f, h, alpha).scale(beta) + c_binary(f.power(alpha), h.power(alpha), beta)
    right = c_binary(f, h, beta).scale(alpha) + c_binary(f.power(beta), h.power(beta), alpha)
    return _result(left == right, f=f, h=h, alpha=alpha, beta=beta)


def check_f12(s: Sampler) -> Optional[str]:
    g, h, alpha = s.element(), s.element(), s.invertible()
    inverse = s.ring.inv(alpha)
    right = c_binary(g.power(inverse), h.power(inverse), alpha).scale(-inverse)
    return _result(c_binary(g, h, inverse) == right, g=g, h=h, alpha=alpha)


def check_f13(s: Sampler) -> Optional[str]:
    g, h, alpha = s.element(), s.element(), s.scalar()
    return _result(c_binary(g, h, alpha) == c_binary(h, g, alpha), g=g, h=h, alpha=alpha)


def check_f14(s: Sampler) -> Optional[str]:
    g, h, f, alpha = s.element(), s.element(), s.element(), s.scalar()
    left = c_binary(g * h, f, alpha) + c_binary(g, h, alpha)
    right = c_binary(g, h * f, alpha) + c_binary(h, f, alpha)
    return _result(left == right, g=g, h=h, f=f, alpha=alpha)


def check_f15(s: Sampler) -> Optional[str]:
    g, h, alpha = s.element(), s.element(), s.scalar()
    left = c_binary(h.inverse() * g, h, alpha)
    return _result(left == -c_binary(h.inverse(), g, alpha), g=g, h=h, alpha=alpha)


def _ccoord(s: Sampler, alpha, beta, lam):
    return s.completion.strategy.ccoord(alpha, beta, lam)


def check_e8(s: Sampler) -> Optional[str]:
    alpha, beta, lam, mu = s.scalar(), s.scalar(), s.scalar(), s.scalar()
    ok = _ccoord(s, alpha, beta, lam + mu) == _ccoord(s, alpha, beta, lam) + _ccoord(s, alpha, beta, mu)
    return _result(ok, alpha=alpha, beta=beta, lam=lam, mu=mu)


def check_e9(s: Sampler) -> Optional[str]:
    alpha, beta, lam, mu = s.scalar(), s.scalar(), s.scalar(), s.scalar()
    right = _ccoord(s, lam * alpha, lam * beta, mu) + _ccoord(s, alpha, beta, lam).scale(mu)
    return _result(_ccoord(s, alpha, beta, lam * mu) == right, alpha=alpha, beta=beta, lam=lam, mu=mu)


def check_e10(s: Sampler) -> Optional[str]:
    alpha, beta, q, lam = s.scalar(), s.scalar(), s.scalar(), s.scalar()
    left = _ccoord(s, alpha + q * alpha, beta + q * beta, lam)
    right = _ccoord(s, alpha, beta, lam) + _ccoord(s, q * alpha, q * beta, lam)
    return _result(left == right, alpha=alpha, beta=beta, q=q, lam=lam)


def check_rational_linearity(s: Sampler) -> Optional[str]:
    alpha, beta, q = s.scalar(), s.scalar(), s.ring.coerce(s.rational())
    t = s.ring.t()
    left = _ccoord(s, q * alpha, q * beta, t)
    return _result(left == _ccoord(s, alpha, beta, t).scale(q), alpha=alpha, beta=beta, q=q)


def check_multi_argument(s: Sampler) -> Optional[str]:
    xs = [s.element() for _ in range(s.rng.randint(2, 4))]
    alpha = s.scalar()
    left = s.completion.identity()
    for x in xs:
        left = left * x
    left = left.power(alpha)
    right = s.completion.identity()
    for x in xs:
        right = right * x.power(alpha)
    right = right * t_tau2(xs).power(-s.ring.binomial(alpha, 2)) * s.completion.central(c_multi(xs, alpha))
    return _result(left == right, alpha=alpha, **{"x%d" % i: x for i, x in enumerate(xs, 1)})


def check_basis_keys(s: Sampler) -> Optional[str]:
    alpha, beta, lam = s.scalar(), s.scalar(), s.scalar()
    vector = _ccoord(s, alpha, beta, lam)
    ok = True
    for key in vector:
        if isinstance(key, CKeyPoly):
            ok = ok and is_special_key(key)
        elif isinstance(key, CKeyField):
            ok = ok and is_field_key(key, s.completion.s_basis)
        else:
            ok = False
    return _result(ok, alpha=alpha, beta=beta, lam=lam)


def check_partial_fractions(s: Sampler) -> Optional[str]:
    f = RatFun(s.poly(), s.denominator())
    polynomial_part, terms = partial_fractions(f, s.completion.factor_degree_bound)
    return _result(recombine(polynomial_part, terms) == f, f=f)


# confluence


def check_subscript_split(s: Sampler) -> Optional[str]:
    alpha, beta = s.scalar(), s.scalar()
    i = s.rng.randint(2, 5)
    t = s.ring.t()
    shift = t ** (i - 1)
    left = _ccoord(s, alpha, beta, t ** i)
    right = _ccoord(s, shift * alpha, shift * beta, t) + _ccoord(s, alpha, beta, t ** (i - 1)).scale(t)
    return _result(left == right, alpha=alpha, beta=beta, i=i)


def check_bracketing(s: Sampler) -> Optional[str]:
    a, b, c = s.word(2), s.word(2), s.word(2)
    exponent = s.scalar(max_degree=2)
    left = Exp(Mul((Mul((a, b)), c)), exponent)
    right = Exp(Mul((a, Mul((b, c)))), exponent)
    return _result(evaluate(left, s.completion) == evaluate(right, s.completion), left=left, right=right)


def check_c_multi_bracketing(s: Sampler) -> Optional[str]:
    x, y, z, alpha = s.element(), s.element(), s.element(), s.scalar()
    right = c_binary(x, y * z, alpha) + c_binary(y, z, alpha)
    return _result(c_multi([x, y, z], alpha) == right, x=x, y=y, z=z, alpha=alpha)


def check_round_trip(s: Sampler) -> Optional[str]:
    word = s.word()
    g = evaluate(word, s.completion)
    again = evaluate(parse(print_normal_form(g), s.completion), s.completion)
    return _result(again == g, w=word)


# hall-oracle


def check_power_oracle(s: Sampler) -> Optional[str]:
    g, k = s.integer_hall(), s.rng.randint(-8, 8)
    return _result(g.power(s.ring.coerce(k)) == int_exp_oracle(g, k), g=g, k=k)


def check_matrix_homomorphism(s: Sampler) -> Optional[str]:
    g, h = s.integer_hall(), s.integer_hall()
    return _result(matrix_model(g * h) == matrix_model(g) * matrix_model(h), g=g, h=h)


def check_square_sign(s: Sampler) -> Optional[str]:
    x = HallElement.generator(s.schema, s.ring, "x")
    y = HallElement.generator(s.schema, s.ring, "y")
    xy = x * y
    expected = HallElement(s.schema, s.ring, (s.ring.coerce(2), s.ring.coerce(2)), (s.ring.coerce(1),))
    matrix = matrix_model(xy) * matrix_model(xy)
    ok = (xy * xy == expected and xy.power(s.ring.coerce(2)) == expected and matrix == matrix_model(expected)
          and CORNER_SIGN == -1)
    return _result(ok, g=xy)


def check_integer_specialization(s: Sampler) -> Optional[str]:
    g, n = s.integer_hall(), s.rng.randint(0, 6)
    power = g.power(s.ring.t())
    values = [c.evaluate(n) for c in power.a + power.b]
    oracle = int_exp_oracle(g, n)
    return _result(values == [c.evaluate(0) for c in oracle.a + oracle.b], g=g, n=n)


@dataclass(frozen=True)
class Invariant:
    name: str
    check: Callable[[Sampler], Optional[str]]
    applies: Callable[[Completion], bool] = lambda completion: True


def _has_t(completion: Completion) -> bool:
    return completion.ring.has_t


def _rank2(completion: Completion) -> bool:
    return completion.schema.is_free_rank2


def _rank2_with_t(completion: Completion) -> bool:
    return _rank2(completion) and _has_t(completion)


SUITES: Dict[str, List[Invariant]] = {
    "axioms": [
        Invariant("axiom-1", check_axiom1),
        Invariant("axiom-2.1", check_axiom21),
        Invariant("axiom-2.2", check_axiom22),
        Invariant("axiom-3", check_axiom3),
        Invariant("axiom-4", check_axiom4),
        Invariant("hall-comparison", check_hall_comparison),
        Invariant("retraction", check_retraction),
        Invariant("hall-axiom-5", check_hall_axiom5),
        Invariant("trivial-d", check_trivial_d, lambda completion: not completion.ring.has_t),
    ],
    "facts": [
        Invariant("c-definition", check_c_definition),
        Invariant("F7", check_f7),
        Invariant("F12", check_f12),
        Invariant("F13", check_f13),
        Invariant("F14", check_f14),
        Invariant("F15", check_f15),
        Invariant("E8", check_e8, _rank2),
        Invariant("E9", check_e9, _rank2),
        Invariant("E10'", check_e10, _rank2),
        Invariant("rational-linearity", check_rational_linearity, _rank2_with_t),
        Invariant("multi-argument", check_multi_argument),
        Invariant("basis-keys", check_basis_keys, _rank2_with_t),
        Invariant("partial-fractions", check_partial_fractions,
                  lambda completion: completion.ring.kind is RingKind.QT_FIELD),
    ],
    "hall-oracle": [
        Invariant("power-oracle", check_power_oracle),
        Invariant("matrix-homomorphism", check_matrix_homomorphism, _rank2),
        Invariant("square-sign", check_square_sign, _rank2),
        Invariant("integer-specialization", check_integer_specialization,
                  lambda completion: completion.ring.kind is RingKind.QT_POLY),
    ],
    "confluence": [
        Invariant("subscript-split", check_subscript_split, _rank2_with_t),
        Invariant("bracketing", check_bracketing),
        Invariant("c-multi-bracketing", check_c_multi_bracketing),
        Invariant("round-trip", check_round_trip),
    ],
}


def suite_invariants(name: str, completion: Completion) -> List[Invariant]:
    if name == "all":
        invariants = [invariant for suite in ("axioms", "facts", "hall-oracle", "confluence")
                      for invariant in SUITES[suite]]
    elif name in SUITES:
        invariants = SUITES[name]
    else:
        raise KeyError("unknown suite %r (expected one of %s)" % (name, ", ".join(SUITE_CHOICES)))
    return [invariant for invariant in invariants if invariant.applies(completion)]


@dataclass
class InvariantResult:
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: Optional[str] = None
    counterexample_case: Optional[int] = None


@dataclass
class SuiteReport:
    suite: str
    cases: int
    seed: int
    results: List[InvariantResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(result.passed for result in self.results)

    @property
    def failed(self) -> int:
        return sum(result.failed for result in self.results)

    @property
    def ok(self) -> bool:
        return not self.failed

    def lines(self) -> List[str]:
        width = max([len(result.name) for result in self.results] + [len("invariant")])
        row = "%%-%ds %%8s %%8s" % width
        lines = [row % ("invariant", "passed", "failed")]
        lines.extend(row % (result.name, result.passed, result.failed) for result in self.results)
        failures = [result for result in self.results if result.failed]
        if failures:
            lines.append("counterexamples:")
            lines.extend("  %s case %d: %s" % (result.name, result.counterexample_case, result.counterexample)
                         for result in failures)
        lines.append(row % ("TOTAL", self.passed, self.failed))
        return lines

    def as_dict(self) -> dict:
        return {
            "suite": self.suite, "cases": self.cases, "seed": self.seed,
            "invariants": [{"name": r.name, "passed": r.passed, "failed": r.failed,
                            "counterexample": r.counterexample} for r in self.results],
            "passed": self.passed, "failed": self.failed,
        }


def case_rng(seed: int, name: str, case: int) -> random.Random:
    return random.Random("%d:%s:%d" % (seed, name, case))


def run_invariant(invariant: Invariant, completion: Completion, cases: int, seed: int,
                  max_degree: int = 4) -> InvariantResult:
    """Run seeded cases of one invariant, keeping the smallest counterexample."""
    result = InvariantResult(invariant.name)
    for case in range(cases):
        sampler = Sampler(completion, case_rng(seed, invariant.name, case), max_degree)
        counterexample = invariant.check(sampler)
        if counterexample is None:
            result.passed += 1
            continue
        result.failed += 1
        # shortest printed inputs; the earliest case wins ties
        if result.counterexample is None or len(counterexample) < len(result.counterexample):
            result.counterexample, result.counterexample_case = counterexample, case
    logger.debug("%s: %d passed, %d failed", invariant.name, result.passed, result.failed)
    return result


def run_suite(name: str, completion: Completion, cases: int, seed: int, max_degree: int = 4) -> SuiteReport:
    """Run every invariant of suite ``name`` that applies to ``completion``."""
    if not completion.canonical:
        raise StrategyMismatch("invariant suites compare normal forms and need a canonical strategy")
    report = SuiteReport(name, cases, seed)
    for invariant in suite_invariants(name, completion):
        report.results.append(run_invariant(invariant, completion, cases, seed, max_degree))
    logger.info("suite %s over %s: %d passed, %d failed", name, completion.ring, report.passed, report.failed)
    return report
