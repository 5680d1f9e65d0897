"""JSON encodings of fields, scalars, points, forms, lines and pencils.

Scalars are exact strings: rationals as ``"n"`` or ``"n/d"``, residues as
integer strings, quadratic-extension elements as ``[u, v]``.  Decoders
take the field to decode into and a JSON path used in error messages.
Floats are refused everywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any

from .errors import (
    CharacteristicTwo,
    DegenerateConfiguration,
    DimensionMismatch,
    InvariantError,
    SchemaError,
    SingularMatrix,
)
from .fields import Field, PrimeField, QuadElement, QuadExt, Rationals, Scalar, is_prime
from .forms import SymForm2
from .involutions import Involution
from .pencils import LineInPV, Pencil, SymFormN
from .projective import ProjPoint

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")
_INTEGER = re.compile(r"^[+-]?\d+$")


# -- fields -----------------------------------------------------------------

def encode_field(field: Field) -> dict:
    if isinstance(field, Rationals):
        return {"type": "Q"}
    if isinstance(field, PrimeField):
        return {"type": "GFp", "p": field.p}
    return {"type": "QuadExt", "base": encode_field(field.base), "d": encode_scalar(field.d)}


def decode_field(obj: Any, path: str = "field") -> Field:
    if not isinstance(obj, dict) or "type" not in obj:
        raise SchemaError(path, 'expected {"type": ...}')
    kind = obj["type"]
    if kind == "Q":
        return Rationals()
    if kind == "GFp":
        p = obj.get("p")
        if not isinstance(p, int) or isinstance(p, bool):
            raise SchemaError(f"{path}.p", "expected an integer")
        if p == 2:
            raise InvariantError(f"{path}.p", "characteristic 2 excluded")
        if not is_prime(p):
            raise InvariantError(f"{path}.p", f"{p} is not prime")
        return PrimeField(p)
    if kind == "QuadExt":
        base = decode_field(obj.get("base"), f"{path}.base")
        d = decode_scalar(obj.get("d"), base, f"{path}.d")
        try:
            return QuadExt(base, d)
        except ValueError as exc:
            raise InvariantError(f"{path}.d", str(exc)) from None
    raise SchemaError(f"{path}.type", f"unknown field type {kind!r}")


def parse_field_flag(text: str) -> Field:
    """``Q`` or ``gfp:P``, as accepted by the command line."""
    if text in ("Q", "q"):
        return Rationals()
    m = re.fullmatch(r"(?i)gfp:(\d+)", text)
    if not m:
        raise SchemaError("--field", f"expected Q or gfp:P, got {text!r}")
    try:
        return PrimeField(int(m.group(1)))
    except CharacteristicTwo:
        raise InvariantError("--field", "characteristic 2 excluded") from None
    except ValueError as exc:
        raise InvariantError("--field", str(exc)) from None


# -- scalars and points -----------------------------------------------------

def encode_scalar(x: Scalar):
    if isinstance(x, QuadElement):
        return [encode_scalar(x.u), encode_scalar(x.v)]
    return str(x)


def decode_scalar(obj: Any, field: Field, path: str) -> Scalar:
    if isinstance(obj, bool) or isinstance(obj, float):
        raise SchemaError(path, f"{obj!r} is not an exact scalar; use a string")
    if isinstance(field, QuadExt):
        if isinstance(obj, list):
            if len(obj) != 2:
                raise SchemaError(path, "extension scalars are [u, v]")
            return QuadElement(
                field,
                decode_scalar(obj[0], field.base, f"{path}[0]"),
                decode_scalar(obj[1], field.base, f"{path}[1]"),
            )
        return field.embed(decode_scalar(obj, field.base, path))
    if isinstance(obj, int):
        return field(obj)
    if not isinstance(obj, str):
        raise SchemaError(path, f"expected a scalar string, got {type(obj).__name__}")
    text = obj.strip()
    if isinstance(field, Rationals):
        if not _RATIONAL.match(text):
            raise SchemaError(path, f"{obj!r} is not of the form n or n/d")
        num, _, den = text.partition("/")
        if den and int(den) == 0:
            raise SchemaError(path, "zero denominator")
        return field(Fraction(int(num), int(den or 1)))
    if not _INTEGER.match(text):
        raise SchemaError(path, f"{obj!r} is not an integer string")
    return field(int(text))


def encode_point(p: ProjPoint) -> list:
    return [encode_scalar(p.x), encode_scalar(p.y)]


def decode_point(obj: Any, field: Field, path: str) -> ProjPoint:
    if obj == "inf":
        return ProjPoint.infinity(field)
    if not isinstance(obj, list) or len(obj) != 2:
        raise SchemaError(path, 'a point is [x, y] or "inf"')
    x = decode_scalar(obj[0], field, f"{path}[0]")
    y = decode_scalar(obj[1], field, f"{path}[1]")
    if x.is_zero() and y.is_zero():
        raise InvariantError(path, "(0, 0) is not a projective point")
    return ProjPoint(x, y)


def _vector(obj: Any, field: Field, path: str) -> list[Scalar]:
    if not isinstance(obj, list):
        raise SchemaError(path, "expected an array")
    return [decode_scalar(x, field, f"{path}[{i}]") for i, x in enumerate(obj)]


def _entries(obj: Any, keys, path: str) -> list:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise SchemaError(path, f"missing key(s) {', '.join(missing)}")
    return [obj[k] for k in keys]


# -- binary forms and involutions -------------------------------------------

def encode_form2(f: SymForm2) -> dict:
    return {"a": encode_scalar(f.a), "b": encode_scalar(f.b), "c": encode_scalar(f.c)}


def decode_form2(obj: Any, field: Field, path: str = "form") -> SymForm2:
    a, b, c = (decode_scalar(v, field, f"{path}.{k}") for k, v in zip("abc", _entries(obj, "abc", path)))
    return SymForm2(a, b, c, field=field)


def encode_involution(inv: Involution) -> dict:
    return {"a": encode_scalar(inv.a), "b": encode_scalar(inv.b), "c": encode_scalar(inv.c)}


def decode_involution(obj: Any, field: Field, path: str = "involution") -> Involution:
    a, b, c = (decode_scalar(v, field, f"{path}.{k}") for k, v in zip("abc", _entries(obj, "abc", path)))
    try:
        return Involution(a, b, c, field=field)
    except SingularMatrix:
        raise InvariantError(path, "matrix (a b; c -a) is not invertible") from None


def encode_matrix(m) -> list:
    return [[encode_scalar(x) for x in row] for row in m]


def decode_matrix2(obj: Any, field: Field, path: str) -> list[list[Scalar]]:
    if not isinstance(obj, list) or len(obj) != 2 or any(not isinstance(r, list) or len(r) != 2 for r in obj):
        raise SchemaError(path, "expected a row-major 2x2 array")
    return [_vector(row, field, f"{path}[{i}]") for i, row in enumerate(obj)]


# -- ambient objects --------------------------------------------------------

def encode_formN(q: SymFormN) -> dict:
    return {"dim": q.dim, "m": encode_matrix(q.m)}


def decode_formN(obj: Any, field: Field, path: str) -> SymFormN:
    dim, m = _entries(obj, ("dim", "m"), path)
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 2:
        raise SchemaError(f"{path}.dim", "expected an integer >= 2")
    if not isinstance(m, list) or len(m) != dim:
        raise SchemaError(f"{path}.m", f"expected {dim} rows")
    rows = []
    for i, row in enumerate(m):
        if not isinstance(row, list) or len(row) != dim:
            raise SchemaError(f"{path}.m[{i}]", f"expected {dim} entries")
        rows.append(_vector(row, field, f"{path}.m[{i}]"))
    for i in range(dim):
        for j in range(i + 1, dim):
            if rows[i][j] != rows[j][i]:
                raise InvariantError(f"{path}.m", f"not symmetric at [{i}][{j}] vs [{j}][{i}]")
    return SymFormN(rows, field)


def encode_line(line: LineInPV) -> dict:
    return {"e1": [encode_scalar(x) for x in line.e1], "e2": [encode_scalar(x) for x in line.e2]}


def decode_line(obj: Any, field: Field, path: str = "line") -> LineInPV:
    e1, e2 = _entries(obj, ("e1", "e2"), path)
    e1, e2 = _vector(e1, field, f"{path}.e1"), _vector(e2, field, f"{path}.e2")
    if len(e1) != len(e2) or len(e1) < 2:
        raise SchemaError(path, "e1 and e2 must have the same length >= 2")
    try:
        return LineInPV(e1, e2, field=field)
    except DegenerateConfiguration:
        raise InvariantError(path, "line vectors dependent") from None


def encode_pencil(p: Pencil) -> dict:
    return {"R": encode_formN(p.R), "S": encode_formN(p.S)}


def decode_pencil(obj: Any, field: Field, path: str = "pencil") -> Pencil:
    r, s = _entries(obj, ("R", "S"), path)
    R = decode_formN(r, field, f"{path}.R" if path else "R")
    S = decode_formN(s, field, f"{path}.S" if path else "S")
    try:
        return Pencil(R, S)
    except DimensionMismatch:
        raise InvariantError(path, "R and S have different dimensions") from None
    except DegenerateConfiguration:
        raise InvariantError(path, "R and S are proportional") from None


def encode_value(x) -> Any:
    """Best-effort JSON encoding of witness values in reports."""
    if isinstance(x, Scalar):
        return encode_scalar(x)
    if isinstance(x, ProjPoint):
        return encode_point(x)
    if isinstance(x, SymForm2):
        return encode_form2(x)
    if isinstance(x, Involution):
        return encode_involution(x)
    if isinstance(x, SymFormN):
        return encode_formN(x)
    if isinstance(x, LineInPV):
        return encode_line(x)
    if isinstance(x, Pencil):
        return encode_pencil(x)
    if isinstance(x, Field):
        return str(x)
    if isinstance(x, dict):
        return {str(k): encode_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [encode_value(v) for v in x]
    if isinstance(x, (str, int, bool)) or x is None:
        return x
    return str(x)
