"""Points of the projective line, cross-ratio and harmonic conjugates."""

from __future__ import annotations

from .errors import DegenerateConfiguration
from .fields import Field, Scalar, common_field

__all__ = [
    "ProjPoint",
    "INFINITE",
    "bracket",
    "point_eq",
    "cross_ratio",
    "harmonic_conjugate",
]


class ProjPoint:
    """A point ``(x : y)`` of P^1, stored normalized.

    Finite points are kept as ``(x, 1)`` and the point at infinity as
    ``(1, 0)``, so equality and hashing work on the stored coordinates.
    """

    __slots__ = ("x", "y")

    def __init__(self, x, y, field: Field | None = None):
        if field is not None:
            x, y = field.coerce(x), field.coerce(y)
        elif isinstance(x, Scalar):
            x, y = x._lift(y)
        elif isinstance(y, Scalar):
            y, x = y._lift(x)
        else:
            raise TypeError("pass a field or at least one Scalar coordinate")
        if y.is_zero():
            if x.is_zero():
                raise ValueError("(0, 0) is not a projective point")
            x, y = x.field.one, y
        elif not y == y.field.one:
            x, y = x / y, y.field.one
        self.x = x
        self.y = y

    @classmethod
    def affine(cls, t: Scalar) -> ProjPoint:
        return cls(t, t.field.one)

    @classmethod
    def infinity(cls, field: Field) -> ProjPoint:
        return cls(field.one, field.zero)

    @property
    def field(self) -> Field:
        return self.x.field

    @property
    def is_infinity(self) -> bool:
        return self.y.is_zero()

    @property
    def coordinate(self) -> Scalar | None:
        """Affine coordinate ``x/y``, or None at infinity."""
        return None if self.is_infinity else self.x

    def embed(self, field: Field) -> ProjPoint:
        if field == self.field:
            return self
        return ProjPoint(field.embed(self.x), field.embed(self.y))

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return point_eq(self, other)

    def __hash__(self):
        return hash((self.x, self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        if self.is_infinity:
            return "ProjPoint(inf)"
        return f"ProjPoint({self.x})"


class _Infinite:
    """Marker for a cross-ratio whose denominator vanishes."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


def bracket(p: ProjPoint, q: ProjPoint) -> Scalar:
    """The determinant ``x_p*y_q - x_q*y_p``."""
    return p.x * q.y - q.x * p.y


def point_eq(p: ProjPoint, q: ProjPoint) -> bool:
    common_field(p.field, q.field)
    return bracket(p, q).is_zero()


def cross_ratio(s: ProjPoint, t: ProjPoint, m: ProjPoint, n: ProjPoint):
    """``[S,M][T,N] / ([S,N][T,M])``, or :data:`INFINITE`.

    With ``m = alpha*s + beta*t`` and ``n = lam*s + mu*t`` this equals
    ``beta*lam / (alpha*mu)``, so the value is -1 exactly when
    ``alpha*mu + beta*lam = 0``.
    """
    num = bracket(s, m) * bracket(t, n)
    den = bracket(s, n) * bracket(t, m)
    if den.is_zero():
        if num.is_zero():
            raise DegenerateConfiguration(f"cross-ratio of {s}, {t}, {m}, {n} is 0/0")
        return INFINITE
    return num / den


def harmonic_conjugate(s: ProjPoint, t: ProjPoint, m: ProjPoint) -> ProjPoint:
    """The point ``n`` with ``cross_ratio(s, t, m, n) == -1``."""
    if s == t or s == m or t == m:
        raise DegenerateConfiguration("harmonic conjugate needs three distinct points")
    # m = alpha*s + beta*t with alpha = [m,t]/[s,t], beta = [s,m]/[s,t]; n = alpha*s - beta*t.
    alpha, beta = bracket(m, t), bracket(s, m)
    return ProjPoint(alpha * s.x - beta * t.x, alpha * s.y - beta * t.y)
