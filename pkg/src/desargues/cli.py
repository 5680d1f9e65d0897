"""Command-line front end.

Every command reads JSON inputs, validates them and prints one JSON
document on stdout.  Exit status is 0 on success, 1 when a verification
fails (the report is still printed) and 2 on bad flags or bad input.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from datetime import datetime, timezone
from typing import Any

from .errors import DegeneratePosition, HypothesisViolation, InputError, NotRegular, ParseError, SchemaError
from .fields import Field, Rationals
from .forms import classify, isotropic_points, resultant
from .harness import (
    AffineConfig,
    ScenarioReport,
    fuzz_campaign,
    verify_butterfly,
    verify_classical_desargues,
    verify_main_theorem,
    verify_prop1,
    verify_prop3,
)
from .involutions import fixed_points
from .pencils import (
    CommonZero,
    LineInQuadric,
    Pencil,
    SymFormN,
    diagnose,
    induced_involution,
    restrict,
    restricted_gram,
)
from .serialize import (
    decode_field,
    decode_form2,
    decode_involution,
    decode_line,
    decode_pencil,
    decode_scalar,
    encode_field,
    encode_form2,
    encode_involution,
    encode_matrix,
    encode_point,
    encode_scalar,
    parse_field_flag,
)

SCENARIOS = ("prop1", "main", "prop3", "butterfly", "desargues-classic")


class Failed(Exception):
    """Carries a document to print with exit status 1."""

    def __init__(self, doc: dict):
        super().__init__("verification failed")
        self.doc = doc


# -- input loading ----------------------------------------------------------

def _read_json(path: str, flag: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(flag, f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(flag, f"{path} is not JSON: {exc.msg} at line {exc.lineno}") from None


def _require(args, name: str) -> str:
    value = getattr(args, name)
    if value is None:
        raise SchemaError(f"--{name}", "this command needs it")
    return value


def _field(args, doc: Any = None) -> Field:
    """``--field`` wins; otherwise a ``"field"`` key in the input; otherwise Q."""
    if args.field is not None:
        return parse_field_flag(args.field)
    if isinstance(doc, dict) and "field" in doc:
        return decode_field(doc["field"], "field")
    return Rationals()


def load_pencil_and_line(args) -> tuple[Field, Pencil, Any]:
    pdoc = _read_json(_require(args, "pencil"), "--pencil")
    field = _field(args, pdoc)
    pencil = decode_pencil(pdoc, field, path="")
    ldoc = _read_json(_require(args, "line"), "--line")
    line = decode_line(ldoc, field, path="line")
    if line.dim != pencil.dim:
        raise SchemaError("line", f"vectors have length {line.dim}, pencil forms have dim {pencil.dim}")
    return field, pencil, line


def _points(iso) -> dict:
    return {"field": encode_field(iso.field), "points": [encode_point(p) for p in iso.points]}


# -- commands ---------------------------------------------------------------

def cmd_classify(args) -> dict:
    doc = _read_json(_require(args, "form"), "--form")
    field = _field(args, doc)
    f = decode_form2(doc.get("form", doc) if isinstance(doc, dict) else doc, field, "form")
    out = {"form": encode_form2(f), "type": classify(f).value}
    if not f.is_zero():
        out["isotropic_points"] = _points(isotropic_points(f, allow_extension=args.allow_extension))
    return out


def cmd_restrict(args) -> dict:
    _, pencil, line = load_pencil_and_line(args)
    f, g = restrict(pencil.R, line), restrict(pencil.S, line)
    gram = restricted_gram(pencil, line)
    out = {
        "R": encode_form2(f),
        "S": encode_form2(g),
        "gram": {"matrix": encode_matrix(gram.matrix), "det": encode_scalar(gram.det)},
    }
    if not (f.is_zero() or g.is_zero()):
        out["resultant"] = encode_scalar(resultant(f, g))
    return out


def _verdict(v) -> dict:
    out = {"verdict": v.verdict}
    if isinstance(v, CommonZero):
        out["point"] = encode_point(v.point)
        out["field"] = encode_field(v.field)
    elif isinstance(v, LineInQuadric):
        out["coeffs"] = [encode_scalar(c) for c in v.coeffs]
    return out


def cmd_diagnose(args) -> dict:
    field, pencil, line = load_pencil_and_line(args)
    out = _verdict(diagnose(pencil, line))
    if "field" in out and out["field"] == encode_field(field):
        del out["field"]
    return out


def cmd_involution(args) -> dict:
    _, pencil, line = load_pencil_and_line(args)
    try:
        inv = induced_involution(pencil, line)
    except NotRegular as exc:
        raise Failed({"error": "restricted pencil is not regular", **_verdict(exc.verdict)}) from None
    return {
        "involution": encode_involution(inv),
        "map": inv.formula(),
        "fixed_points": _points(fixed_points(inv, allow_extension=args.allow_extension)),
    }


def cmd_fixed_points(args) -> dict:
    if args.involution is not None:
        doc = _read_json(args.involution, "--involution")
        field = _field(args, doc)
        inv = decode_involution(doc.get("involution", doc) if isinstance(doc, dict) else doc, field)
    else:
        out = cmd_involution(args)
        return {"involution": out["involution"], "fixed_points": out["fixed_points"]}
    return {
        "involution": encode_involution(inv),
        "fixed_points": _points(fixed_points(inv, allow_extension=args.allow_extension)),
    }


def _affine_config(doc: Any, field: Field) -> AffineConfig:
    if not isinstance(doc, dict):
        raise SchemaError("config", "expected an object")
    for key in ("point", "direction", "marked", "pencil"):
        if key not in doc:
            raise SchemaError("config", f"missing key {key}")
    vecs = {}
    for key in ("point", "direction", "marked"):
        if not isinstance(doc[key], list):
            raise SchemaError(f"config.{key}", "expected an array")
        vecs[key] = [decode_scalar(x, field, f"config.{key}[{i}]") for i, x in enumerate(doc[key])]
    pencil = decode_pencil(doc["pencil"], field, path="config.pencil")
    n = pencil.dim - 1
    for key, v in vecs.items():
        if len(v) != n:
            raise SchemaError(f"config.{key}", f"expected {n} affine coordinates")
    members = doc.get("hypothesis_members", [[1, 0], [0, 1]])
    if not (isinstance(members, list) and len(members) == 2
            and all(isinstance(m, list) and len(m) == 2 for m in members)):
        raise SchemaError("config.hypothesis_members", "expected two [a, b] pairs")
    hyp = tuple(
        tuple(decode_scalar(x, field, f"config.hypothesis_members[{i}][{j}]") for j, x in enumerate(m))
        for i, m in enumerate(members)
    )
    return AffineConfig(vecs["point"], vecs["direction"], vecs["marked"], pencil, hyp)


def _default_butterfly(field: Field) -> AffineConfig:
    """Unit circle and the ellipse x^2 + 4y^2 = 4 cut by the x-axis, M at the origin."""
    one, zero = field.one, field.zero

    def diag(*d):
        return SymFormN([[field(d[i]) if i == j else zero for j in range(3)] for i in range(3)], field)

    pencil = Pencil(diag(1, 1, -1), diag(1, 4, -4))
    return AffineConfig([zero, zero], [one, zero], [zero, zero], pencil)


def _report(report: ScenarioReport) -> dict:
    doc = report.to_dict()
    if not report.passed:
        raise Failed(doc)
    return doc


def cmd_verify(args) -> dict:
    scenario = args.scenario
    if scenario is None:
        raise SchemaError("--scenario", f"choose one of {', '.join(SCENARIOS)}")
    if scenario == "prop1":
        field = _field(args)
        return _report(verify_prop1(field, trials=args.trials, seed=args.seed))
    if scenario in ("main", "prop3"):
        _, pencil, line = load_pencil_and_line(args)
        if scenario == "main":
            return _report(verify_main_theorem(pencil, line, args.members))
        return _report(verify_prop3(pencil, line, args.members))
    if scenario == "butterfly":
        if args.config is not None:
            doc = _read_json(args.config, "--config")
            cfg = _affine_config(doc, _field(args, doc))
        else:
            cfg = _default_butterfly(_field(args))
        return _report(verify_butterfly(cfg, args.members))
    # desargues-classic
    field = _field(args)
    points, line = None, None
    if args.points is not None:
        doc = _read_json(args.points, "--points")
        if not isinstance(doc, list) or len(doc) != 4:
            raise SchemaError("points", "expected four affine points [x, y]")
        points = []
        for i, pt in enumerate(doc):
            if not isinstance(pt, list) or len(pt) != 2:
                raise SchemaError(f"points[{i}]", "expected an affine point [x, y]")
            points.append(tuple(decode_scalar(x, field, f"points[{i}][{j}]") for j, x in enumerate(pt)))
    if args.line is not None:
        line = decode_line(_read_json(args.line, "--line"), field, path="line")
        if line.dim != 3:
            raise SchemaError("line", "a line in the plane needs vectors of length 3")
    return _report(verify_classical_desargues(points, line, field, args.members))


def cmd_fuzz(args) -> dict:
    field = _field(args)
    if args.dim < 2:
        raise SchemaError("--dim", "ambient dimension must be at least 2")
    if args.trials < 0:
        raise SchemaError("--trials", "must be non-negative")
    report = fuzz_campaign(field, args.dim, args.trials, args.seed, members=args.members, workers=args.workers)
    return _report(report)


COMMANDS = {
    "classify": cmd_classify,
    "restrict": cmd_restrict,
    "involution": cmd_involution,
    "fixed-points": cmd_fixed_points,
    "diagnose": cmd_diagnose,
    "verify": cmd_verify,
    "fuzz": cmd_fuzz,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="desargues",
        description="Exact computations with the involution a pencil of quadrics induces on a line.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--field", help="Q or gfp:P (default: the input's field, else Q)")
    parser.add_argument("--pencil", help="JSON pencil {R, S}")
    parser.add_argument("--line", help="JSON line {e1, e2}")
    parser.add_argument("--form", help="JSON binary form {a, b, c} (classify)")
    parser.add_argument("--involution", help="JSON involution {a, b, c} (fixed-points)")
    parser.add_argument("--config", help="JSON affine configuration (verify --scenario butterfly)")
    parser.add_argument("--points", help="JSON list of four affine points (verify --scenario desargues-classic)")
    parser.add_argument("--scenario", choices=SCENARIOS)
    parser.add_argument("--members", type=int, default=None, help="pencil members to sample per check")
    parser.add_argument("--trials", type=int, default=10_000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--dim", type=int, default=2, help="ambient projective dimension for fuzz")
    parser.add_argument("--workers", type=int, default=None, help="worker processes for fuzz")
    parser.add_argument("--allow-extension", action="store_true",
                        help="report isotropic points over a quadratic extension when needed")
    parser.add_argument("--verbose", action="store_true", help="summary on stderr")
    parser.add_argument("--timestamp", action="store_true", help="add a UTC timestamp to the output")
    return parser


def _summary(doc: dict) -> str:
    if "checks" in doc:
        bad = [c["name"] for c in doc["checks"] if not c["pass"]]
        status = "PASS" if doc.get("pass") else f"FAIL ({', '.join(bad)})"
        return f"{doc.get('scenario')}: {len(doc['checks'])} checks, {status}"
    return ", ".join(f"{k}={v}" for k, v in doc.items() if isinstance(v, str))


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    status = 0
    try:
        doc = COMMANDS[args.command](args)
    except Failed as exc:
        doc, status = exc.doc, 1
    except InputError as exc:
        print(f"desargues: error: {exc}", file=stderr)
        return 2
    except HypothesisViolation as exc:
        print(f"desargues: error: config: {exc}", file=stderr)
        return 2
    except DegeneratePosition as exc:
        print(f"desargues: error: points: {exc}", file=stderr)
        return 2
    if args.timestamp:
        doc["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    print(json.dumps(doc, indent=2), file=stdout)
    if args.verbose:
        print(_summary(doc), file=stderr)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
