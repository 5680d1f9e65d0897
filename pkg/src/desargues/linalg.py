"""Exact Gaussian elimination over any of the supported fields.

Matrices are lists of rows of :class:`~desargues.fields.Scalar`.  Pivots
are the first nonzero entry in each column, which keeps every result
deterministic.
"""

from __future__ import annotations

from typing import Sequence

from .fields import Scalar, common_field

Matrix = Sequence[Sequence[Scalar]]


def _field_of(rows: Matrix):
    field = None
    for row in rows:
        for x in row:
            field = x.field if field is None else common_field(field, x.field)
    return field


def _copy(rows: Matrix):
    field = _field_of(rows)
    return [[field.embed(x) for x in row] for row in rows], field


def det(rows: Matrix) -> Scalar:
    m, field = _copy(rows)
    n = len(m)
    result = field.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if not m[r][col].is_zero()), None)
        if pivot is None:
            return field.zero
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        p = m[col][col]
        result = result * p
        inv = p.inverse()
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor.is_zero():
                continue
            m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return result


def rref(rows: Matrix) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m, field = _copy(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if not m[i][col].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][col].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][col].is_zero():
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Matrix) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Matrix) -> list[list[Scalar]]:
    """Basis of the right kernel, one vector per free column."""
    m, pivots = rref(rows)
    field = _field_of(rows)
    ncols = len(rows[0])
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [field.zero] * ncols
        v[free] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][free]
        basis.append(v)
    return basis
