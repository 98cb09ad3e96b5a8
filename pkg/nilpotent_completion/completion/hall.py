"""Hall R-completions of finitely generated torsion-free 2-nilpotent groups.

An element is u_1^a_1 ... u_m^a_m v_1^b_1 ... v_n^b_n, stored as the coordinate
tuples ``a`` and ``b``.  The group is fixed by central structure constants
``[u_i, u_j] = v^k(i, j)`` for i > j.
"""
import json
import logging
import os
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional, Sequence, Tuple

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from .exceptions import LengthMismatch, SchemaMismatch, UnknownGenerator, UnknownPreset
from .scalars import Ring, Scalar

logger = logging.getLogger(__name__)

FREE2NILPOTENT = "free2nilpotent"
PRESETS = (FREE2NILPOTENT,)

Vector = Tuple[Scalar, ...]


@dataclass(frozen=True)
class GroupSchema:
    """Central structure constants of a 2-nilpotent group.

    ``comm`` holds ((i, j), k(i, j)) for every m >= i > j >= 1, sorted by (i, j).
    """
    m: int
    n: int
    comm: Tuple[Tuple[Tuple[int, int], Tuple[int, ...]], ...]

    def clean(self):
        """Validate the structure constants."""
        if self.m < 1 or self.n < 0:
            raise ValidationError(_("A schema needs m >= 1 and n >= 0."))
        expected = [(i, j) for i in range(2, self.m + 1) for j in range(1, i)]
        present = [pair for pair, _vector in self.comm]
        if len(set(present)) != len(present):
            raise ValidationError(_("Duplicate commutator entries in schema."))
        for pair in expected:
            if pair not in present:
                raise ValidationError(_("Missing commutator entry (%(i)d, %(j)d)."),
                                      params={"i": pair[0], "j": pair[1]})
        for (i, j), vector in self.comm:
            if (i, j) not in expected:
                raise ValidationError(_("Commutator entry (%(i)d, %(j)d) is out of range."), params={"i": i, "j": j})
            if len(vector) != self.n:
                raise ValidationError(_("Commutator vector of (%(i)d, %(j)d) must have length %(n)d."),
                                      params={"i": i, "j": j, "n": self.n})

    def k(self, i: int, j: int) -> Tuple[int, ...]:
        for pair, vector in self.comm:
            if pair == (i, j):
                return vector
        raise KeyError((i, j))

    @property
    def is_free_rank2(self) -> bool:
        """Structure constants of the free 2-nilpotent group of rank 2 with v_1 = [y, x]."""
        return self.m == 2 and self.n == 1 and self.comm == (((2, 1), (1,)),)

    @property
    def u_names(self) -> Tuple[str, ...]:
        if self.is_free_rank2:
            return ("x", "y")
        return tuple("u%d" % i for i in range(1, self.m + 1))

    @property
    def v_names(self) -> Tuple[str, ...]:
        if self.is_free_rank2:
            return ("[y,x]",)
        return tuple("v%d" % j for j in range(1, self.n + 1))

    def generator(self, name: str) -> Tuple[str, int]:
        """Resolve a generator name to ("u", index) or ("v", index), 0-based."""
        if name in self.u_names:
            return "u", self.u_names.index(name)
        if name in self.v_names:
            return "v", self.v_names.index(name)
        if len(name) > 1 and name[0] in "uv" and name[1:].isdigit():
            index = int(name[1:]) - 1
            bound = self.m if name[0] == "u" else self.n
            if 0 <= index < bound:
                return name[0], index
        raise UnknownGenerator("unknown generator %r for this group" % name)

    @classmethod
    def from_dict(cls, data: dict) -> "GroupSchema":
        try:
            m, n = int(data["m"]), int(data["n"])
            entries = [((int(e["i"]), int(e["j"])), tuple(int(x) for x in e["v"])) for e in data["comm"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(_("Malformed schema: %(error)s"), params={"error": exc})
        schema = cls(m=m, n=n, comm=tuple(sorted(entries)))
        schema.clean()
        return schema

    def to_dict(self) -> dict:
        return {"m": self.m, "n": self.n,
                "comm": [{"i": i, "j": j, "v": list(vector)} for (i, j), vector in self.comm]}


def free2nilpotent(rank: int) -> GroupSchema:
    """Free 2-nilpotent group: one central generator per pair i > j, in (i, j) order."""
    pairs = [(i, j) for i in range(2, rank + 1) for j in range(1, i)]
    n = len(pairs)
    comm = tuple((pair, tuple(1 if index == position else 0 for index in range(n)))
                 for position, pair in enumerate(pairs))
    return GroupSchema(m=rank, n=n, comm=comm)


def schema_presets(name: str, rank: int) -> GroupSchema:
    if name != FREE2NILPOTENT:
        raise UnknownPreset("unknown group preset %r (known: %s)" % (name, ", ".join(PRESETS)))
    if rank < 2:
        raise UnknownPreset("preset %s needs rank >= 2, got %d" % (name, rank))
    return free2nilpotent(rank)


def resolve_group(value: str) -> GroupSchema:
    """``free2:<rank>`` (or ``free2nilpotent:<rank>``) names a preset; anything else is a schema JSON path."""
    name, sep, rank = value.partition(":")
    if sep and name in ("free2", FREE2NILPOTENT):
        if not rank.strip().isdigit():
            raise UnknownPreset("preset rank must be a positive integer, got %r" % rank)
        return schema_presets(FREE2NILPOTENT, int(rank))
    if not os.path.exists(value):
        raise UnknownPreset("%r is neither a group preset nor a schema file" % value)
    return load_schema(value)


def load_schema(source: str) -> GroupSchema:
    """Load a schema from a JSON file path or a JSON document."""
    if os.path.exists(source):
        with open(source) as handle:
            source = handle.read()
    try:
        data = json.loads(source)
    except ValueError as exc:
        raise ValidationError(_("Schema is not valid JSON: %(error)s"), params={"error": exc})
    if not isinstance(data, dict):
        raise ValidationError(_("Schema must be a JSON object."))
    return GroupSchema.from_dict(data)


def sigma(x: Sequence[Scalar], y: Sequence[Scalar], schema: GroupSchema, ring: Ring) -> Vector:
    """Central correction sum_{i > j} k(i, j) x_i y_j."""
    if len(x) != schema.m or len(y) != schema.m:
        raise LengthMismatch("sigma needs two vectors of length %d" % schema.m)
    result = [ring.zero()] * schema.n
    for (i, j), vector in schema.comm:
        product = x[i - 1] * y[j - 1]
        if not product:
            continue
        for position, k in enumerate(vector):
            if k:
                result[position] = result[position] + product * k
    return tuple(result)


def _add(x: Vector, y: Vector) -> Vector:
    return tuple(p + q for p, q in zip(x, y))


@dataclass(frozen=True)
class HallElement:
    schema: GroupSchema
    ring: Ring
    a: Vector
    b: Vector

    def __post_init__(self):
        if len(self.a) != self.schema.m or len(self.b) != self.schema.n:
            raise LengthMismatch("coordinates (%d, %d) do not match schema (%d, %d)"
                                 % (len(self.a), len(self.b), self.schema.m, self.schema.n))
        self.ring.check(*self.a)
        self.ring.check(*self.b)

    @classmethod
    def identity(cls, schema: GroupSchema, ring: Ring) -> "HallElement":
        return cls(schema, ring, (ring.zero(),) * schema.m, (ring.zero(),) * schema.n)

    @classmethod
    def generator(cls, schema: GroupSchema, ring: Ring, name: str) -> "HallElement":
        kind, index = schema.generator(name)
        size = schema.m if kind == "u" else schema.n
        unit = tuple(ring.one() if position == index else ring.zero() for position in range(size))
        if kind == "u":
            return cls(schema, ring, unit, (ring.zero(),) * schema.n)
        return cls(schema, ring, (ring.zero(),) * schema.m, unit)

    @property
    def is_identity(self) -> bool:
        return not any(self.a) and not any(self.b)

    @property
    def is_central(self) -> bool:
        return not any(self.a)

    def check_compatible(self, other: "HallElement"):
        if self.schema != other.schema or self.ring != other.ring:
            raise SchemaMismatch("elements of different Hall completions")

    def __mul__(self, other: "HallElement") -> "HallElement":
        if not isinstance(other, HallElement):
            return NotImplemented
        self.check_compatible(other)
        correction = sigma(self.a, other.a, self.schema, self.ring)
        return HallElement(self.schema, self.ring, _add(self.a, other.a), _add(_add(self.b, other.b), correction))

    def inverse(self) -> "HallElement":
        correction = sigma(self.a, self.a, self.schema, self.ring)
        return HallElement(self.schema, self.ring, tuple(-x for x in self.a),
                           tuple(c - x for x, c in zip(self.b, correction)))

    def power(self, mu: Scalar) -> "HallElement":
        """Hall exponentiation (class-2 closed form)."""
        self.ring.check(mu)
        correction = sigma(self.a, self.a, self.schema, self.ring)
        c = self.ring.binomial(mu, 2)
        return HallElement(self.schema, self.ring, tuple(mu * x for x in self.a),
                           tuple(mu * x + c * s for x, s in zip(self.b, correction)))


def hall_mul(g: HallElement, h: HallElement) -> HallElement:
    return g * h


def hall_inv(g: HallElement) -> HallElement:
    return g.inverse()


def hall_exp(g: HallElement, mu: Scalar) -> HallElement:
    return g.power(mu)


def hall_commutator(g: HallElement, h: HallElement) -> HallElement:
    """[g, h] = g^-1 h^-1 g h."""
    return g.inverse() * h.inverse() * g * h


def tau2(xs: Sequence[HallElement]) -> HallElement:
    """Second Petresco word: prod_{i} [x_1 ... x_i, x_{i+1}]."""
    if not xs:
        raise ValueError("tau2 needs at least one element")
    identity = HallElement.identity(xs[0].schema, xs[0].ring)
    result, prefix = identity, xs[0]
    for x in xs[1:]:
        result = result * hall_commutator(prefix, x)
        prefix = prefix * x
    return result


def hall_axiom5(g: HallElement, h: HallElement, mu: Scalar) -> bool:
    """g^mu h^mu == (gh)^mu tau2(g, h)^binom(mu, 2)."""
    left = g.power(mu) * h.power(mu)
    right = (g * h).power(mu) * tau2([g, h]).power(g.ring.binomial(mu, 2))
    return left == right


def product(elements: Iterable[HallElement], identity: Optional[HallElement] = None) -> HallElement:
    elements = list(elements)
    if identity is None:
        identity = HallElement.identity(elements[0].schema, elements[0].ring)
    return reduce(lambda acc, x: acc * x, elements, identity)
