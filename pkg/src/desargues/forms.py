"""Symmetric bilinear forms on a 2-dimensional space.

A form is the symmetric matrix ``(a b; b c)``, i.e. the binary quadratic
``a*x^2 + 2*b*x*y + c*y^2``.  The 3-dimensional space of these carries the
determinant pairing ``<f, g> = (a*c' + c*a')/2 - b*b'`` whose norm is the
determinant.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import SingularMatrix, ZeroForm
from .fields import Field, Scalar, common_field, extend_with_sqrt, sqrt_in_field
from .linalg import det, nullspace
from .projective import ProjPoint

__all__ = [
    "SymForm2",
    "FormType",
    "IsotropicPoints",
    "det_pairing",
    "classify",
    "isotropic_points",
    "form_from_points",
    "resultant",
    "change_basis",
    "eval_bilinear",
    "orthogonal",
    "pairing_complement",
]


class SymForm2:
    __slots__ = ("a", "b", "c")

    def __init__(self, a, b, c, field: Field | None = None):
        if isinstance(a, Scalar) and (field is None or field is a.field) and (
            type(a) is type(b) is type(c) and a.field is b.field is c.field
        ):
            self.a, self.b, self.c = a, b, c
            return
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

    @property
    def field(self) -> Field:
        return self.a.field

    @property
    def det(self) -> Scalar:
        return self.a * self.c - self.b * self.b

    @property
    def discriminant(self) -> Scalar:
        """``b^2 - ac``; the form splits over K iff this is a square."""
        return self.b * self.b - self.a * self.c

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero() and self.c.is_zero()

    def embed(self, field: Field) -> SymForm2:
        if field == self.field:
            return self
        return SymForm2(self.a, self.b, self.c, field=field)

    def matrix(self) -> list[list[Scalar]]:
        return [[self.a, self.b], [self.b, self.c]]

    def value(self, v: Sequence[Scalar], w: Sequence[Scalar]) -> Scalar:
        """``v^T F w`` for coordinate pairs ``v`` and ``w``."""
        v0, v1 = v
        w0, w1 = w
        return self.a * v0 * w0 + self.b * (v0 * w1 + v1 * w0) + self.c * v1 * w1

    def proportional(self, other: SymForm2) -> bool:
        """True when the two entry vectors are linearly dependent."""
        x, y = (self.a, self.b, self.c), (other.a, other.b, other.c)
        return all((x[i] * y[j] - x[j] * y[i]).is_zero() for i, j in ((0, 1), (0, 2), (1, 2)))

    def __add__(self, other: SymForm2) -> SymForm2:
        return SymForm2(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: SymForm2) -> SymForm2:
        return SymForm2(self.a - other.a, self.b - other.b, self.c - other.c)

    def __neg__(self) -> SymForm2:
        return SymForm2(-self.a, -self.b, -self.c)

    def __mul__(self, k) -> SymForm2:
        return SymForm2(self.a * k, self.b * k, self.c * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymForm2):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.c == other.c

    def __hash__(self):
        return hash((self.a, self.b, self.c))

    def __iter__(self):
        yield self.a
        yield self.b
        yield self.c

    def __repr__(self):
        return f"SymForm2({self.a}, {self.b}, {self.c})"


class FormType(enum.Enum):
    ZERO = "Zero"
    ANISOTROPIC = "Anisotropic"
    HYPERBOLIC = "Hyperbolic"
    DEGENERATE = "Degenerate"


class IsotropicPoints(NamedTuple):
    points: list[ProjPoint]
    field: Field


def det_pairing(f: SymForm2, g: SymForm2) -> Scalar:
    return (f.a * g.c + f.c * g.a) / 2 - f.b * g.b


def classify(f: SymForm2, field: Field | None = None) -> FormType:
    """Type of ``f`` over ``field`` (default: the field of its entries).

    Invariant under scaling ``f`` and under change of basis.
    """
    if field is not None:
        f = f.embed(field)
    if f.is_zero():
        return FormType.ZERO
    if f.det.is_zero():
        return FormType.DEGENERATE
    if f.discriminant.is_square():
        return FormType.HYPERBOLIC
    return FormType.ANISOTROPIC


def isotropic_points(f: SymForm2, allow_extension: bool = False) -> IsotropicPoints:
    """Projective solutions of ``a x^2 + 2b xy + c y^2 = 0``.

    A degenerate form gives its radical direction; a hyperbolic form two
    points over its own field.  An anisotropic form gives nothing, or two
    points over ``K(sqrt(b^2 - ac))`` when ``allow_extension`` is set.
    """
    if f.is_zero():
        raise ZeroForm("the zero form is isotropic everywhere")
    pts, field = _isotropic(f, f.field, allow_extension)
    return IsotropicPoints(list(pts), field)


@lru_cache(maxsize=4096)
def _isotropic(f: SymForm2, field: Field, allow_extension: bool) -> tuple[tuple[ProjPoint, ...], Field]:
    # field is part of the key: a form and its embedding hash alike
    a, b, c = f
    disc = f.discriminant
    if disc.is_zero():
        if a.is_zero():
            return (ProjPoint.infinity(field),), field
        return (ProjPoint(-b, a),), field
    if a.is_zero():
        # y (2b x + c y) = 0 with b != 0
        return (ProjPoint.infinity(field), ProjPoint(-c, 2 * b)), field
    root = sqrt_in_field(disc)
    if root is None:
        if not allow_extension:
            return (), field
        field = extend_with_sqrt(field, disc)
        root = field.sqrt_d
        a, b = field.embed(a), field.embed(b)
    return (ProjPoint(-b + root, a), ProjPoint(-b - root, a)), field


def form_from_points(p: ProjPoint, q: ProjPoint) -> SymForm2:
    """The form ``(tX - sY)(vX - uY)`` whose isotropic points are ``p = (s, t)`` and ``q = (u, v)``."""
    s, t = p
    u, v = q
    return SymForm2(t * v, -(t * u + s * v) / 2, s * u)


def resultant(f: SymForm2, g: SymForm2) -> Scalar:
    """Sylvester resultant of the two binary quadratics (middle coefficients ``2b``)."""
    if f.is_zero() or g.is_zero():
        raise ZeroForm("resultant of the zero form")
    zero = common_field(f.field, g.field).zero
    return det([
        [f.a, 2 * f.b, f.c, zero],
        [zero, f.a, 2 * f.b, f.c],
        [g.a, 2 * g.b, g.c, zero],
        [zero, g.a, 2 * g.b, g.c],
    ])


def change_basis(f: SymForm2, s: Sequence[Sequence[Scalar]]) -> SymForm2:
    """``S^T F S`` for the row-major 2x2 matrix ``s``."""
    (s00, s01), (s10, s11) = ([x if isinstance(x, Scalar) else f.field(x) for x in row] for row in s)
    if (s00 * s11 - s01 * s10).is_zero():
        raise SingularMatrix("change of basis must be invertible")
    col0, col1 = (s00, s10), (s01, s11)
    return SymForm2(f.value(col0, col0), f.value(col0, col1), f.value(col1, col1))


def eval_bilinear(f: SymForm2, p: ProjPoint, q: ProjPoint) -> Scalar:
    """``v^T F w`` for the stored representatives of ``p`` and ``q``."""
    if f.is_zero():
        raise ZeroForm("orthogonality against the zero form is vacuous")
    field = common_field(common_field(f.field, p.field), q.field)
    return f.embed(field).value(p.embed(field), q.embed(field))


def orthogonal(f: SymForm2, p: ProjPoint, q: ProjPoint) -> bool:
    """Whether ``p`` and ``q`` are orthogonal for ``f`` (independent of representatives)."""
    return eval_bilinear(f, p, q).is_zero()


def pairing_complement(forms: Sequence[SymForm2]) -> list[SymForm2]:
    """Basis of the forms ``h`` with ``<h, g> = 0`` for every ``g`` in ``forms``."""
    field = forms[0].field
    for g in forms[1:]:
        field = common_field(field, g.field)
    rows = [[g.c / 2, -g.b, g.a / 2] for g in forms]
    return [SymForm2(*v, field=field) for v in nullspace(rows)]
