"""Pencils of quadrics in P(V) and the involution they induce on a line.

A pencil is stored as the ordered pair ``(R, S)`` of symmetric matrices;
its members are ``a*R + b*S``.  A line is ``P(E)`` for the span ``E`` of
two vectors ``e1, e2``; the point ``(x : y)`` of the line is the vector
``x*e1 + y*e2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import (
    ContractViolation,
    DegenerateConfiguration,
    DimensionMismatch,
    NotRegular,
    ZeroCoefficients,
)
from .fields import Field, Scalar, common_field
from .forms import (
    SymForm2,
    det_pairing,
    isotropic_points,
    pairing_complement,
    resultant,
)
from .involutions import Involution, apply, involution_from_form
from .linalg import nullspace, rank
from .projective import ProjPoint

__all__ = [
    "SymFormN",
    "Pencil",
    "LineInPV",
    "Gram",
    "Regular",
    "LineInQuadric",
    "CommonZero",
    "MemberVerdict",
    "restrict",
    "pencil_member",
    "restricted_gram",
    "diagnose",
    "induced_involution",
    "member_pair_check",
    "check_restricted_member",
    "degeneracy_form",
    "projective_parameters",
]


def _common(values) -> Field:
    field = None
    for v in values:
        if isinstance(v, Scalar):
            field = v.field if field is None else common_field(field, v.field)
    if field is None:
        raise TypeError("pass a field or at least one Scalar entry")
    return field


class SymFormN:
    """Symmetric bilinear form on an ``(n+1)``-dimensional space."""

    __slots__ = ("m", "_hash")

    def __init__(self, m: Sequence[Sequence], field: Field | None = None):
        n = len(m)
        if n == 0 or any(len(row) != n for row in m):
            raise DimensionMismatch("matrix must be square and nonempty")
        field = field or _common(x for row in m for x in row)
        rows = tuple(tuple(field.coerce(x) for x in row) for row in m)
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise DegenerateConfiguration(f"matrix not symmetric at [{i}][{j}] vs [{j}][{i}]")
        self.m = rows
        self._hash = None

    @classmethod
    def diag(cls, entries, field: Field | None = None) -> SymFormN:
        field = field or _common(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else field.zero for j in range(n)] for i in range(n)], field)

    @property
    def dim(self) -> int:
        return len(self.m)

    @property
    def field(self) -> Field:
        return self.m[0][0].field

    def value(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
        total = self.field.zero
        for ui, row in zip(u, self.m):
            if ui.is_zero():
                continue
            total = total + ui * sum((x * vj for x, vj in zip(row, v)), self.field.zero)
        return total

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.m for x in row)

    def proportional(self, other: SymFormN) -> bool:
        flat = [x for row in self.m for x in row]
        oflat = [x for row in other.m for x in row]
        return rank([flat, oflat]) < 2

    def __add__(self, other: SymFormN) -> SymFormN:
        return SymFormN([[x + y for x, y in zip(r, s)] for r, s in zip(self.m, other.m)])

    def __mul__(self, k) -> SymFormN:
        return SymFormN([[x * k for x in row] for row in self.m])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymFormN):
            return NotImplemented
        return self.m == other.m

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.m)
        return self._hash

    def __repr__(self):
        return f"SymFormN({[[str(x) for x in row] for row in self.m]})"


class Pencil:
    """The quadrics ``a*R + b*S``; ``R`` and ``S`` must not be proportional."""

    __slots__ = ("R", "S")

    def __init__(self, R: SymFormN, S: SymFormN):
        if R.dim != S.dim:
            raise DimensionMismatch(f"R has dimension {R.dim} but S has {S.dim}")
        if R.proportional(S):
            raise DegenerateConfiguration("R and S are proportional; they span no pencil")
        self.R = R
        self.S = S

    @property
    def dim(self) -> int:
        return self.R.dim

    @property
    def field(self) -> Field:
        return common_field(self.R.field, self.S.field)

    def respanned(self) -> Pencil:
        """The same pencil spanned by ``(R + S, R - S)``."""
        return Pencil(self.R + self.S, self.R + self.S * -1)

    def __repr__(self):
        return f"Pencil({self.R!r}, {self.S!r})"


class LineInPV:
    __slots__ = ("e1", "e2")

    def __init__(self, e1: Sequence, e2: Sequence, field: Field | None = None):
        if len(e1) != len(e2):
            raise DimensionMismatch("line vectors have different lengths")
        field = field or _common([*e1, *e2])
        self.e1 = tuple(field.coerce(x) for x in e1)
        self.e2 = tuple(field.coerce(x) for x in e2)
        if rank([self.e1, self.e2]) < 2:
            raise DegenerateConfiguration("line vectors dependent")

    @property
    def dim(self) -> int:
        return len(self.e1)

    @property
    def field(self) -> Field:
        return self.e1[0].field

    def vector(self, p: ProjPoint) -> tuple[Scalar, ...]:
        x, y = p
        return tuple(x * u + y * v for u, v in zip(self.e1, self.e2))

    def rebased(self, s: Sequence[Sequence]) -> LineInPV:
        """The same line with basis ``e'_j = sum_i s[i][j] e_i``.

        Restrictions transform as ``S^T F S`` under this change.
        """
        (s00, s01), (s10, s11) = s
        e1 = [s00 * u + s10 * v for u, v in zip(self.e1, self.e2)]
        e2 = [s01 * u + s11 * v for u, v in zip(self.e1, self.e2)]
        return LineInPV(e1, e2, field=self.field)

    def __repr__(self):
        return f"LineInPV({[str(x) for x in self.e1]}, {[str(x) for x in self.e2]})"


def restrict(q: SymFormN, line: LineInPV) -> SymForm2:
    """The form ``(q(e1,e1), q(e1,e2), q(e2,e2))``; zero iff the line lies on the quadric."""
    if q.dim != line.dim:
        raise DimensionMismatch(f"form has dimension {q.dim}, line lives in {line.dim}")
    return _restrict(q, line, common_field(q.field, line.field))


@lru_cache(maxsize=1024)
def _restrict(q: SymFormN, line: LineInPV, field: Field) -> SymForm2:
    # field is part of the key: equal matrices over a base field and its extension hash alike
    zero = field.zero
    e1, e2 = line.e1, line.e2
    m1 = [sum((x * y for x, y in zip(row, e1)), zero) for row in q.m]
    m2 = [sum((x * y for x, y in zip(row, e2)), zero) for row in q.m]
    dot = lambda u, v: sum((x * y for x, y in zip(u, v)), zero)  # noqa: E731
    return SymForm2(dot(e1, m1), dot(e1, m2), dot(e2, m2), field=field)


def pencil_member(p: Pencil, a, b) -> SymFormN:
    field = p.field
    a, b = field.coerce(a), field.coerce(b)
    if a.is_zero() and b.is_zero():
        raise ZeroCoefficients("(a, b) = (0, 0) names no quadric")
    return p.R * a + p.S * b


class Gram(NamedTuple):
    matrix: list[list[Scalar]]
    det: Scalar


def restricted_gram(p: Pencil, line: LineInPV) -> Gram:
    f, g = restrict(p.R, line), restrict(p.S, line)
    ff, fg, gg = det_pairing(f, f), det_pairing(f, g), det_pairing(g, g)
    return Gram([[ff, fg], [fg, gg]], ff * gg - fg * fg)


@dataclass(frozen=True)
class Regular:
    verdict = "Regular"


@dataclass(frozen=True)
class LineInQuadric:
    """``a*R + b*S`` vanishes identically on the line."""

    coeffs: tuple[Scalar, Scalar]
    verdict = "LineInQuadric"


@dataclass(frozen=True)
class CommonZero:
    """A point of the line (possibly over a quadratic extension) on every quadric."""

    point: ProjPoint
    field: Field
    verdict = "CommonZero"


Diagnosis = Regular | LineInQuadric | CommonZero


def _restrictions(p: Pencil, line: LineInPV) -> tuple[SymForm2, SymForm2]:
    return restrict(p.R, line), restrict(p.S, line)


@lru_cache(maxsize=256)
def diagnose(p: Pencil, line: LineInPV) -> Diagnosis:
    f, g = _restrictions(p, line)
    kernel = nullspace([[f.a, g.a], [f.b, g.b], [f.c, g.c]])
    if kernel:
        a, b = kernel[0]
        return LineInQuadric((a, b))
    if not resultant(f, g).is_zero():
        return Regular()
    roots = isotropic_points(f, allow_extension=True)
    g = g.embed(roots.field)
    for pt in roots.points:
        if g.value(pt, pt).is_zero():
            return CommonZero(pt, roots.field)
    raise ContractViolation(f"resultant of {f} and {g} vanishes but no shared root was found")


def induced_involution(p: Pencil, line: LineInPV) -> Involution:
    """The involution whose conjugate pairs are the pencil's intersections with the line."""
    verdict = diagnose(p, line)
    if not isinstance(verdict, Regular):
        raise NotRegular(verdict)
    (h,) = pairing_complement(list(_restrictions(p, line)))
    if h.det.is_zero():
        raise ContractViolation(f"regular pencil produced a degenerate complement {h}")
    return involution_from_form(h)


class MemberVerdict(enum.Enum):
    SWAPPED = "Swapped"
    FIXED_TANGENT = "FixedTangent"
    NO_INTERSECTION = "NoIntersection"


def member_pair_check(
    p: Pencil, a, b, line: LineInPV, inv: Involution, allow_extension: bool = False
) -> MemberVerdict:
    """Check that the member ``a*R + b*S`` meets the line in an ``inv``-conjugate pair.

    Members with no points over K are checked over the splitting
    quadratic extension when ``allow_extension`` is set.
    """
    f = restrict(pencil_member(p, a, b), line)
    return check_restricted_member(f, inv, allow_extension, label=(a, b))


def check_restricted_member(f: SymForm2, inv: Involution, allow_extension: bool = False,
                            label=None) -> MemberVerdict:
    """:func:`member_pair_check` for an already restricted member ``f``."""
    if f.is_zero():
        raise ContractViolation(f"member {label} contains the line of a regular pencil")
    pts, field = isotropic_points(f)
    if len(pts) == 2:
        if apply(inv, pts[0]) != pts[1]:
            raise ContractViolation(f"member {label}: {pts[0]} and {pts[1]} are not conjugate")
        return MemberVerdict.SWAPPED
    if len(pts) == 1:
        if apply(inv, pts[0]) != pts[0]:
            raise ContractViolation(f"member {label}: tangent point {pts[0]} is not fixed")
        return MemberVerdict.FIXED_TANGENT
    if allow_extension:
        pts, field = isotropic_points(f, allow_extension=True)
        if apply(inv.embed(field), pts[0]) != pts[1]:
            raise ContractViolation(
                f"member {label}: virtual points {pts[0]}, {pts[1]} are not conjugate"
            )
    return MemberVerdict.NO_INTERSECTION


def degeneracy_form(f: SymForm2, g: SymForm2) -> SymForm2:
    """Binary form in ``(a, b)`` equal to ``det(a*f + b*g)``.

    Its isotropic points are the pencil members tangent to the line.
    """
    return SymForm2(f.det, det_pairing(f, g), g.det)


def projective_parameters(field: Field, count: int | None = None) -> list[tuple[Scalar, Scalar]]:
    """Representatives ``(a, b)`` of distinct points of P^1(field).

    Over a finite prime field with ``count`` None, all ``p + 1`` classes;
    otherwise the first ``count`` of a fixed enumeration.
    """
    one, zero = field.one, field.zero
    if field.is_finite:
        rest = [(one, t) for t in field.elements() if not t.is_zero()]
        every = [(one, zero), (zero, one), *rest]
        return every if count is None else every[:count]
    if count is None:
        raise ValueError(f"{field} is infinite; pass a count")
    params: list[tuple[Scalar, Scalar]] = [(one, zero), (zero, one)]
    seen = {ProjPoint(one, zero), ProjPoint(zero, one)}
    k = 1
    while len(params) < count:
        for num in (k, -k):
            for den in range(1, k + 1):
                cand = (field(den), field(num))
                pt = ProjPoint(*cand)
                if pt not in seen:
                    seen.add(pt)
                    params.append(cand)
        k += 1
    return params[:count]
