"""Involutions of the projective line and their Desargues forms.

An involution is an invertible trace-zero matrix ``(a b; c -a)`` taken up
to scalars.  It corresponds to the non-degenerate binary form
``(-c, a, b)``: the isotropic points of that form are the fixed points of
the involution, and every pair of conjugate points spans a form
orthogonal to it under the determinant pairing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DegenerateComplement, DegenerateForm, DependentPairs, SingularMatrix
from .fields import Field, Scalar, common_field
from .forms import (
    IsotropicPoints,
    SymForm2,
    det_pairing,
    form_from_points,
    isotropic_points,
    pairing_complement,
)
from .projective import ProjPoint

__all__ = [
    "Involution",
    "apply",
    "desargues_form",
    "involution_from_form",
    "fixed_points",
    "pair_form_orthogonality",
    "involution_from_two_pairs",
]


class Involution:
    """The projective map ``(x, y) -> (a x + b y, c x - a y)``."""

    __slots__ = ("a", "b", "c")

    def __init__(self, a, b, c, field: Field | None = None):
        if field is None:
            field = next((v.field for v in (a, b, c) if isinstance(v, Scalar)), None)
            if field is None:
                raise TypeError("pass a field or at least one Scalar entry")
            for v in (a, b, c):
                if isinstance(v, Scalar):
                    field = common_field(field, v.field)
        self.a = field.coerce(a)
        self.b = field.coerce(b)
        self.c = field.coerce(c)
        if self.det.is_zero():
            raise SingularMatrix(f"({a} {b}; {c} {-self.a}) is not invertible")

    @property
    def field(self) -> Field:
        return self.a.field

    @property
    def det(self) -> Scalar:
        return -self.a * self.a - self.b * self.c

    def matrix(self) -> list[list[Scalar]]:
        return [[self.a, self.b], [self.c, -self.a]]

    def embed(self, field: Field) -> Involution:
        if field == self.field:
            return self
        return Involution(self.a, self.b, self.c, field=field)

    def normalized(self) -> tuple[Scalar, Scalar, Scalar]:
        """Entries scaled so the first nonzero one is 1."""
        lead = next(x for x in (self.a, self.b, self.c) if not x.is_zero())
        inv = lead.inverse()
        return self.a * inv, self.b * inv, self.c * inv

    def __call__(self, p: ProjPoint) -> ProjPoint:
        return apply(self, p)

    def conjugate_by(self, s: Sequence[Sequence[Scalar]]) -> Involution:
        """The involution with matrix ``S^-1 T S``."""
        (p, q), (r, t) = ([x if isinstance(x, Scalar) else self.field(x) for x in row] for row in s)
        d = p * t - q * r
        if d.is_zero():
            raise SingularMatrix("conjugating matrix must be invertible")
        a, b, c = self.a, self.b, self.c
        # T S, then the adjugate of S on the left
        ts = [[a * p + b * r, a * q + b * t], [c * p - a * r, c * q - a * t]]
        m00 = (t * ts[0][0] - q * ts[1][0]) / d
        m01 = (t * ts[0][1] - q * ts[1][1]) / d
        m10 = (-r * ts[0][0] + p * ts[1][0]) / d
        return Involution(m00, m01, m10)

    def formula(self) -> str:
        """Human-readable affine form of the map, e.g. ``x -> -1/x``."""
        a, b, c = self.a, self.b, self.c
        if c.is_zero():
            return "x -> " + _affine_text(-b / a)
        if a.is_zero():
            return f"x -> {_text(b / c)}/x"
        a, b = a / c, b / c
        return f"x -> ({_affine_text(b, a)})/(x {_signed(-a)})"

    def __eq__(self, other):
        if not isinstance(other, Involution):
            return NotImplemented
        x, y = (self.a, self.b, self.c), (other.a, other.b, other.c)
        return all((x[i] * y[j] - x[j] * y[i]).is_zero() for i, j in ((0, 1), (0, 2), (1, 2)))

    def __hash__(self):
        return hash(self.normalized())

    def __repr__(self):
        return f"Involution({self.a}, {self.b}, {self.c})"


def _text(x: Scalar) -> str:
    return str(x)


def _is_negative(x: Scalar) -> bool:
    return isinstance(getattr(x, "value", None), Fraction) and x.value < 0


def _signed(x: Scalar) -> str:
    if _is_negative(x):
        return f"- {-x}"
    return f"+ {x}"


def _affine_text(const: Scalar, slope: Scalar | None = None) -> str:
    """Render ``slope*x + const`` with ``slope`` defaulting to -1."""
    if slope is None:
        head = "-x"
    elif slope == 1:
        head = "x"
    elif slope == -1:
        head = "-x"
    else:
        head = f"{slope}*x"
    if const.is_zero():
        return head
    return f"{head} {_signed(const)}"


def apply(inv: Involution, p: ProjPoint) -> ProjPoint:
    x, y = p
    return ProjPoint(inv.a * x + inv.b * y, inv.c * x - inv.a * y)


def desargues_form(inv: Involution) -> SymForm2:
    """The form ``(-c, a, b)``, whose determinant equals ``det(inv)``."""
    return SymForm2(-inv.c, inv.a, inv.b)


def involution_from_form(f: SymForm2) -> Involution:
    """Inverse of :func:`desargues_form`: ``(a, b, c) -> (b c; -a -b)``."""
    if f.det.is_zero():
        raise DegenerateForm(f"{f} is degenerate and has no involution")
    return Involution(f.b, f.c, -f.a)


def fixed_points(inv: Involution, allow_extension: bool = False) -> IsotropicPoints:
    """Fixed points: the isotropic points of the Desargues form (never exactly one)."""
    return isotropic_points(desargues_form(inv), allow_extension)


def pair_form_orthogonality(inv: Involution, p: ProjPoint) -> bool:
    """Whether the form through ``{p, inv(p)}`` is orthogonal to the Desargues form."""
    g = form_from_points(p, apply(inv, p))
    return det_pairing(g, desargues_form(inv)).is_zero()


def involution_from_two_pairs(p: ProjPoint, p2: ProjPoint, q: ProjPoint, q2: ProjPoint) -> Involution:
    """The involution swapping ``p <-> p2`` and ``q <-> q2``.

    A pair with ``p == p2`` asks for a fixed point.
    """
    g1, g2 = form_from_points(p, p2), form_from_points(q, q2)
    if g1.proportional(g2):
        raise DependentPairs("the two pairs determine the same form")
    (h,) = pairing_complement([g1, g2])
    if h.det.is_zero():
        raise DegenerateComplement(f"pairs {{{p}, {p2}}} and {{{q}, {q2}}} share a point")
    return involution_from_form(h)
