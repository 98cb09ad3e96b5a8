"""Group R-words: parsing, evaluation to normal form and printing.

Grammar::

    word   := factor { ["*"] factor }
    factor := atom [ "^" scalar-atom ]
    atom   := name | "1" | "(" word ")" | "[" word "," word "]"
            | "c(" word "," word ")_" scalar-atom
    scalar-atom := "(" scalar ")" | "{" scalar "}" | ["-"] integer ["/" integer] | "t"

Juxtaposition multiplies, so normal forms printed by :func:`print_normal_form`
parse back.  An exponent of -1 parses to :class:`Inv`.
"""
import logging
from dataclasses import dataclass
from functools import reduce
from typing import Tuple, Union

from .ccalc import c_binary
from .dmodule import format_coordinates, format_key, format_subscript
from .exceptions import UnknownGenerator
from .scalars import Scalar, ScalarParser, as_rational, format_scalar
from .tensor import Completion, TensorElement

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Mul:
    factors: Tuple["RWord", ...]


@dataclass(frozen=True)
class Inv:
    word: "RWord"


@dataclass(frozen=True)
class Exp:
    word: "RWord"
    exponent: Scalar


@dataclass(frozen=True)
class Comm:
    left: "RWord"
    right: "RWord"


@dataclass(frozen=True)
class CComm:
    left: "RWord"
    right: "RWord"
    subscript: Scalar


RWord = Union[Gen, Mul, Inv, Exp, Comm, CComm]

IDENTITY = Mul(())


class WordParser(ScalarParser):
    """Parser of R-words over the generators of one completion."""

    def __init__(self, text: str, completion: Completion):
        super(WordParser, self).__init__(text, completion.ring)
        self.schema = completion.schema

    def parse(self) -> RWord:
        word = self.parse_word()
        self.expect_end()
        return word

    def starts_factor(self) -> bool:
        token = self.peek()
        return bool(token) and (token in "([1" or token.isalpha())

    def parse_word(self) -> RWord:
        factors = [self.parse_factor()]
        while True:
            if self.accept("*"):
                factors.append(self.parse_factor())
            elif self.starts_factor():
                factors.append(self.parse_factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def parse_factor(self) -> RWord:
        atom = self.parse_word_atom()
        if not self.accept("^"):
            return atom
        exponent = self.parse_scalar_atom()
        if self.peek() == "^":
            self.error("repeated '^' needs parentheses")
        if as_rational(exponent) == -1:
            return Inv(atom)
        return Exp(atom, exponent)

    def parse_word_atom(self) -> RWord:
        token = self.peek()
        if token == "(":
            self.pos += 1
            word = self.parse_word()
            self.expect(")")
            return word
        if token == "[":
            self.pos += 1
            left = self.parse_word()
            self.expect(",")
            right = self.parse_word()
            self.expect("]")
            return Comm(left, right)
        if token.isdigit():
            position = self.pos
            if self.integer() != 1:
                self.error("only the integer 1 is a word", position)
            return IDENTITY
        if token.isalpha():
            return self.parse_name()
        self.error("expected a word but found %s" % (repr(token) if token else "end of input"))

    def parse_name(self) -> RWord:
        start = self.pos
        self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        name = self.text[start:self.pos]
        if name == "c" and self.peek() == "(":
            self.pos += 1
            left = self.parse_word()
            self.expect(",")
            right = self.parse_word()
            self.expect(")")
            self.expect("_")
            return CComm(left, right, self.parse_scalar_atom())
        try:
            self.schema.generator(name)
        except UnknownGenerator as exc:
            raise UnknownGenerator("%s at position %d" % (exc, start + 1))
        return Gen(name)


def parse(text: str, completion: Completion) -> RWord:
    return WordParser(text, completion).parse()


def evaluate(word: RWord, completion: Completion) -> TensorElement:
    """Normal form of an R-word in the completion."""
    if isinstance(word, Gen):
        return completion.generator(word.name)
    if isinstance(word, Mul):
        return reduce(lambda acc, factor: acc * evaluate(factor, completion), word.factors, completion.identity())
    if isinstance(word, Inv):
        return evaluate(word.word, completion).inverse()
    if isinstance(word, Exp):
        return evaluate(word.word, completion).power(word.exponent)
    if isinstance(word, Comm):
        return evaluate(word.left, completion).commutator(evaluate(word.right, completion))
    if isinstance(word, CComm):
        d = c_binary(evaluate(word.left, completion), evaluate(word.right, completion), word.subscript)
        return completion.central(d)
    raise TypeError("not an R-word: %r" % (word,))


def evaluate_text(text: str, completion: Completion) -> TensorElement:
    return evaluate(parse(text, completion), completion)


def print_normal_form(g: TensorElement) -> str:
    """``x^{A} y^{B} [y,x]^{C} * c(x^{P}, y^{Q})_t^{K} * ...``, or ``1`` for the identity."""
    schema = g.completion.schema
    parts = []
    hall = format_coordinates(g.hall.a + g.hall.b, schema.u_names + schema.v_names)
    if not g.hall.is_identity:
        parts.append(hall)
    for key, c in g.d.items():
        parts.append("%s^{%s}" % (format_key(key, schema.u_names), format_scalar(c)))
    return " * ".join(parts) or "1"


def format_word(word: RWord) -> str:
    """Print an R-word in the input grammar."""
    if isinstance(word, Gen):
        return word.name
    if isinstance(word, Mul):
        if not word.factors:
            return "1"
        return "*".join(_grouped(factor) for factor in word.factors)
    if isinstance(word, Inv):
        return "%s^-1" % _grouped(word.word, power=True)
    if isinstance(word, Exp):
        return "%s^{%s}" % (_grouped(word.word, power=True), format_scalar(word.exponent))
    if isinstance(word, Comm):
        return "[%s,%s]" % (format_word(word.left), format_word(word.right))
    if isinstance(word, CComm):
        return "c(%s, %s)_%s" % (format_word(word.left), format_word(word.right), format_subscript(word.subscript))
    raise TypeError("not an R-word: %r" % (word,))


def _grouped(word: RWord, power: bool = False) -> str:
    text = format_word(word)
    if isinstance(word, Mul) and len(word.factors) > 1:
        return "(%s)" % text
    if power and isinstance(word, (Exp, Inv)):
        return "(%s)" % text
    return text
