"""Exact arithmetic over the rationals, odd prime fields and quadratic towers.

A field is described by an immutable descriptor (:class:`Rationals`,
:class:`PrimeField`, :class:`QuadExt`).  Calling a descriptor builds an
element::

    >>> Q = Rationals()
    >>> Q("1/2") + Q(1) / 3
    Rational(5/6)
    >>> F = PrimeField(7)
    >>> F(3).inverse()
    Residue(5 mod 7)

Elements of a base field are implicitly embedded into any quadratic
extension built on top of it, so ``K(2) * L.sqrt_d`` works when ``L`` is
``K(sqrt d)``.  Anything else across fields raises :class:`FieldMismatch`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from typing import ClassVar, Iterator

from .errors import AlreadySquare, CharacteristicTwo, DivisionByZero, FieldMismatch

__all__ = [
    "Field",
    "Rationals",
    "PrimeField",
    "QuadExt",
    "Scalar",
    "Rational",
    "Residue",
    "QuadElement",
    "common_field",
    "sqrt_in_field",
    "extend_with_sqrt",
    "is_prime",
]

# Exhaustive square-root tables are built up to this modulus; Tonelli-Shanks above.
_TABLE_LIMIT = 100_000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for k in range(3, math.isqrt(n) + 1, 2):
        if n % k == 0:
            return False
    return True


class Field:
    """Common interface of the field descriptors."""

    characteristic: int

    def __call__(self, value) -> Scalar:
        raise NotImplementedError

    @cached_property
    def zero(self) -> Scalar:
        return self(0)

    @cached_property
    def one(self) -> Scalar:
        return self(1)

    def tower(self) -> Iterator[Field]:
        """Yield this field, then each base field down to the prime field."""
        f = self
        while True:
            yield f
            if not isinstance(f, QuadExt):
                return
            f = f.base

    @property
    def prime_field(self) -> Field:
        *_, last = self.tower()
        return last

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    def embed(self, x: Scalar) -> Scalar:
        raise NotImplementedError

    def coerce(self, value) -> Scalar:
        """Embed a scalar of a subfield, or build an element from a literal."""
        return self.embed(value) if isinstance(value, Scalar) else self(value)

    def sqrt(self, x: Scalar) -> Scalar | None:
        raise NotImplementedError

    def random(self, rng) -> Scalar:
        raise NotImplementedError

    def elements(self) -> Iterator[Scalar]:
        raise TypeError(f"{self} is infinite")


@dataclass(frozen=True)
class Rationals(Field):
    characteristic = 0

    def __call__(self, value) -> Rational:
        if isinstance(value, Rational):
            return value
        if isinstance(value, float):
            raise TypeError("floats are not exact; pass an int, Fraction or string")
        return Rational(self, Fraction(value))

    def embed(self, x):
        if isinstance(x, (int, Fraction)):
            return self(x)
        if x.field == self:
            return x
        raise FieldMismatch(f"cannot embed {x.field} into {self}")

    def sqrt(self, x: Rational) -> Rational | None:
        q = x.value
        if q < 0:
            return None
        n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
        if n * n == q.numerator and d * d == q.denominator:
            return Rational(self, Fraction(n, d))
        return None

    def random(self, rng, bound: int = 9) -> Rational:
        return Rational(self, Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    _interned: ClassVar[dict] = {}

    def __new__(cls, p: int):
        # one instance per prime so same-field checks can use identity
        inst = cls._interned.get(p)
        if inst is None:
            inst = cls._interned[p] = super().__new__(cls)
        return inst

    def __reduce__(self):
        return PrimeField, (self.p,)

    def __post_init__(self):
        if self.p == 2:
            raise CharacteristicTwo("characteristic 2 excluded")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    def __call__(self, value) -> Residue:
        if isinstance(value, Residue) and value.field == self:
            return value
        if isinstance(value, int):
            return Residue(self, value % self.p)
        if isinstance(value, str):
            if "/" in value:
                return self(Fraction(value))
            return Residue(self, int(value) % self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"{value} has no image in GF({self.p})")
            return Residue(self, value.numerator * pow(value.denominator, -1, self.p) % self.p)
        raise TypeError(f"cannot build an element of GF({self.p}) from {value!r}")

    def embed(self, x):
        if isinstance(x, (int, Fraction)):
            return self(x)
        if x.field == self:
            return x
        raise FieldMismatch(f"cannot embed {x.field} into {self}")

    def sqrt(self, x: Residue) -> Residue | None:
        r = _prime_sqrt(x.value, self.p)
        return None if r is None else Residue(self, r)

    def random(self, rng) -> Residue:
        return Residue(self, rng.randrange(self.p))

    def elements(self) -> Iterator[Residue]:
        for k in range(self.p):
            yield Residue(self, k)

    def __str__(self):
        return f"GF({self.p})"


@lru_cache(maxsize=None)
def _square_root_table(p: int) -> dict[int, int]:
    table: dict[int, int] = {}
    for r in range(p):
        table.setdefault(r * r % p, r)
    return table


def _prime_sqrt(a: int, p: int) -> int | None:
    """Smallest r in 0..p-1 with r*r = a mod p, or None."""
    a %= p
    if p <= _TABLE_LIMIT:
        return _square_root_table(p).get(a)
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q, s = q // 2, s + 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2, i = t2 * t2 % p, i + 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return min(r, p - r)


@dataclass(frozen=True)
class QuadExt(Field):
    """The field ``base(sqrt d)``; elements are ``u + v*sqrt(d)`` with u, v in base."""

    base: Field
    d: Scalar

    def __post_init__(self):
        d = self.base.embed(self.d)
        object.__setattr__(self, "d", d)
        if d.is_zero() or self.base.sqrt(d) is not None:
            raise AlreadySquare(f"{d} already has a square root in {self.base}")

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @property
    def order(self) -> int:
        return self.base.order ** 2

    @cached_property
    def sqrt_d(self) -> QuadElement:
        return QuadElement(self, self.base.zero, self.base.one)

    def __call__(self, value) -> QuadElement:
        if isinstance(value, (tuple, list)):
            u, v = value
            return QuadElement(self, self.base(u), self.base(v))
        if isinstance(value, Scalar):
            return self.embed(value)
        return QuadElement(self, self.base(value), self.base.zero)

    def embed(self, x):
        if isinstance(x, (int, Fraction)):
            return self(x)
        if x.field == self:
            return x
        return QuadElement(self, self.base.embed(x), self.base.zero)

    def sqrt(self, x: QuadElement) -> QuadElement | None:
        base, d = self.base, self.d
        u, v = x.u, x.v
        if v.is_zero():
            s = base.sqrt(u)
            if s is not None:
                return QuadElement(self, s, base.zero)
            t = base.sqrt(u / d)
            if t is not None:
                return QuadElement(self, base.zero, t)
            return None
        # Write the root as s + t*sqrt(d); then s^2 = (u +- n)/2 where n^2 is the norm of x.
        n = base.sqrt(u * u - d * v * v)
        if n is None:
            return None
        for cand in ((u + n) / 2, (u - n) / 2):
            s = base.sqrt(cand)
            if s is not None and not s.is_zero():
                r = QuadElement(self, s, v / (2 * s))
                if r * r == x:
                    return r.canonical_sign()
        return None

    def random(self, rng) -> QuadElement:
        return QuadElement(self, self.base.random(rng), self.base.random(rng))

    def elements(self) -> Iterator[QuadElement]:
        for u, v in product(list(self.base.elements()), repeat=2):
            yield QuadElement(self, u, v)

    def __str__(self):
        return f"{self.base}(sqrt({self.d}))"


def common_field(f: Field, g: Field) -> Field:
    """Smallest field of the two towers containing both, or FieldMismatch."""
    if f is g or f == g:
        return f
    if any(g == t for t in f.tower()):
        return f
    if any(f == t for t in g.tower()):
        return g
    raise FieldMismatch(f"{f} and {g} share no tower")


def sqrt_in_field(x: Scalar) -> Scalar | None:
    """Canonical square root of ``x`` in its own field, or None."""
    r = x.field.sqrt(x)
    return None if r is None else r.canonical_sign()


def extend_with_sqrt(field: Field, d) -> QuadExt:
    d = field.coerce(d)
    if d.is_zero() or field.sqrt(d) is not None:
        raise AlreadySquare(f"{d} already has a square root in {field}")
    return _interned_ext(field, d)


@lru_cache(maxsize=4096)
def _interned_ext(field: Field, d: Scalar) -> QuadExt:
    # one object per extension so identity fast paths apply
    return QuadExt(field, d)


class Scalar:
    """Element of one of the supported fields.

    Subclasses implement the ``_op`` hooks for operands of the same field;
    the public operators handle ints, Fractions and tower embedding.
    """

    __slots__ = ("field",)

    def _lift(self, other):
        if isinstance(other, Scalar):
            f, g = self.field, other.field
            if f is g or f == g:
                return self, other
            c = common_field(f, g)
            return c.embed(self), c.embed(other)
        if isinstance(other, (int, Fraction)):
            return self, self.field(other)
        return None, None

    def __add__(self, other):
        a, b = self._lift(other)
        return NotImplemented if a is None else a._add(b)

    def __radd__(self, other):
        a, b = self._lift(other)
        return NotImplemented if a is None else b._add(a)

    def __sub__(self, other):
        a, b = self._lift(other)
        return NotImplemented if a is None else a._add(b._neg())

    def __rsub__(self, other):
        a, b = self._lift(other)
        return NotImplemented if a is None else b._add(a._neg())

    def __mul__(self, other):
        a, b = self._lift(other)
        return NotImplemented if a is None else a._mul(b)

    def __rmul__(self, other):
        a, b = self._lift(other)
        return NotImplemented if a is None else b._mul(a)

    def __truediv__(self, other):
        a, b = self._lift(other)
        return NotImplemented if a is None else a._mul(b.inverse())

    def __rtruediv__(self, other):
        a, b = self._lift(other)
        return NotImplemented if a is None else b._mul(a.inverse())

    def __neg__(self):
        return self._neg()

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        a, b = self._lift(other)
        return NotImplemented if a is None else a._eq(b)

    def __bool__(self):
        return not self.is_zero()

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise DivisionByZero(f"inverse of zero in {self.field}")
        return self._inv()

    def is_zero(self) -> bool:
        raise NotImplementedError

    def is_square(self) -> bool:
        return self.field.sqrt(self) is not None

    def is_canonical_positive(self) -> bool:
        raise NotImplementedError

    def canonical_sign(self) -> Scalar:
        """Return whichever of ``self`` and ``-self`` is canonical-positive."""
        return self if self.is_zero() or self.is_canonical_positive() else -self


class Rational(Scalar):
    __slots__ = ("value",)

    def __init__(self, field: Rationals, value: Fraction):
        self.field = field
        self.value = value

    def _add(self, o):
        return Rational(self.field, self.value + o.value)

    def _neg(self):
        return Rational(self.field, -self.value)

    def _mul(self, o):
        return Rational(self.field, self.value * o.value)

    def _inv(self):
        return Rational(self.field, 1 / self.value)

    def _eq(self, o):
        return self.value == o.value

    def is_zero(self):
        return self.value == 0

    def is_canonical_positive(self):
        return self.value > 0

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Rational({self.value})"


class Residue(Scalar):
    """Canonical residue ``0 <= value < p``."""

    __slots__ = ("value",)

    def __init__(self, field: PrimeField, value: int):
        self.field = field
        self.value = value

    # same-field fast paths; everything else goes through Scalar's coercion
    def __add__(self, o):
        if type(o) is Residue and o.field is self.field:
            return Residue(self.field, (self.value + o.value) % self.field.p)
        return Scalar.__add__(self, o)

    def __sub__(self, o):
        if type(o) is Residue and o.field is self.field:
            return Residue(self.field, (self.value - o.value) % self.field.p)
        return Scalar.__sub__(self, o)

    def __mul__(self, o):
        if type(o) is Residue and o.field is self.field:
            return Residue(self.field, self.value * o.value % self.field.p)
        return Scalar.__mul__(self, o)

    def __eq__(self, o):
        if type(o) is Residue and o.field is self.field:
            return self.value == o.value
        return Scalar.__eq__(self, o)

    def _add(self, o):
        return Residue(self.field, (self.value + o.value) % self.field.p)

    def _neg(self):
        return Residue(self.field, -self.value % self.field.p)

    def _mul(self, o):
        return Residue(self.field, self.value * o.value % self.field.p)

    def _inv(self):
        return Residue(self.field, pow(self.value, -1, self.field.p))

    def _eq(self, o):
        return self.value == o.value

    def is_zero(self):
        return self.value == 0

    def is_canonical_positive(self):
        return 2 * self.value < self.field.p

    def __hash__(self):
        return hash(self.value)

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Residue({self.value} mod {self.field.p})"


class QuadElement(Scalar):
    __slots__ = ("u", "v")

    def __init__(self, field: QuadExt, u: Scalar, v: Scalar):
        self.field = field
        self.u = u
        self.v = v

    # fast paths: same extension, or a scalar of the base field (no embedding)
    def __add__(self, o):
        if type(o) is QuadElement and o.field is self.field:
            return QuadElement(self.field, self.u + o.u, self.v + o.v)
        return Scalar.__add__(self, o)

    def __sub__(self, o):
        if type(o) is QuadElement and o.field is self.field:
            return QuadElement(self.field, self.u - o.u, self.v - o.v)
        return Scalar.__sub__(self, o)

    def __mul__(self, o):
        if type(o) is QuadElement and o.field is self.field:
            return self._mul(o)
        if isinstance(o, Scalar) and o.field is self.field.base:
            return QuadElement(self.field, self.u * o, self.v * o)
        return Scalar.__mul__(self, o)

    def __rmul__(self, o):
        if isinstance(o, Scalar) and o.field is self.field.base:
            return QuadElement(self.field, o * self.u, o * self.v)
        return Scalar.__rmul__(self, o)

    def __eq__(self, o):
        if type(o) is QuadElement and o.field is self.field:
            return self.u == o.u and self.v == o.v
        return Scalar.__eq__(self, o)

    def _add(self, o):
        return QuadElement(self.field, self.u + o.u, self.v + o.v)

    def _neg(self):
        return QuadElement(self.field, -self.u, -self.v)

    def _mul(self, o):
        d = self.field.d
        return QuadElement(
            self.field,
            self.u * o.u + d * self.v * o.v,
            self.u * o.v + self.v * o.u,
        )

    def _inv(self):
        inv = (self.u * self.u - self.field.d * self.v * self.v).inverse()
        return QuadElement(self.field, self.u * inv, -self.v * inv)

    def _eq(self, o):
        return self.u == o.u and self.v == o.v

    def is_zero(self):
        return self.u.is_zero() and self.v.is_zero()

    def is_canonical_positive(self):
        lead = self.v if self.u.is_zero() else self.u
        return lead.is_canonical_positive()

    def conjugate(self) -> QuadElement:
        return QuadElement(self.field, self.u, -self.v)

    def in_base(self) -> Scalar | None:
        """The element as a base-field scalar, when its sqrt(d) part vanishes."""
        return self.u if self.v.is_zero() else None

    def __hash__(self):
        return hash(self.u) if self.v.is_zero() else hash((self.u, self.v))

    def __str__(self):
        return f"{self.u} + {self.v}*sqrt({self.field.d})"

    def __repr__(self):
        return f"QuadElement({self})"
