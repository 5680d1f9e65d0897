"""Reproducible verification scenarios and a seeded finite-field fuzzer.

Each scenario returns a :class:`ScenarioReport`.  Checks never raise: a
violated identity becomes a failing :class:`Check` whose witness holds the
inputs and both sides of the equation.  Randomized scenarios draw every
instance from ``random.Random(f"{seed}:{index}")``, so a report depends
only on its arguments and is the same whether trials run serially or in
worker processes.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Any, Sequence

from .errors import (
    ContractViolation,
    DegenerateComplement,
    DegeneratePosition,
    DependentPairs,
    HypothesisViolation,
    NotRegular,
)
from .fields import Field, PrimeField, Rationals, Scalar, common_field
from .forms import (
    SymForm2,
    FormType,
    classify,
    isotropic_points,
    orthogonal,
    resultant,
)
from .involutions import (
    Involution,
    apply,
    fixed_points,
    involution_from_two_pairs,
    pair_form_orthogonality,
)
from .linalg import det, nullspace, rank
from .pencils import (
    CommonZero,
    LineInPV,
    LineInQuadric,
    MemberVerdict,
    Pencil,
    Regular,
    SymFormN,
    degeneracy_form,
    diagnose,
    induced_involution,
    check_restricted_member,
    pencil_member,
    projective_parameters,
    restrict,
    restricted_gram,
)
from .projective import INFINITE, ProjPoint, cross_ratio
from .serialize import encode_field, encode_value

__all__ = [
    "Check",
    "ScenarioReport",
    "AffineConfig",
    "verify_prop1",
    "verify_main_theorem",
    "verify_prop3",
    "verify_butterfly",
    "classical_desargues_scenario",
    "verify_classical_desargues",
    "fuzz_campaign",
    "random_instance",
]

MAX_WITNESSES = 10
DEFAULT_MEMBERS = 20


@dataclass
class Check:
    name: str
    passed: bool
    witness: dict = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "witness": encode_value(self.witness)}


@dataclass
class ScenarioReport:
    scenario: str
    field: Field
    instance: str = ""
    seed: int | None = None
    checks: list[Check] = dc_field(default_factory=list)
    stats: dict = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def check(self, name: str, passed: bool, **witness) -> bool:
        self.checks.append(Check(name, bool(passed), witness))
        return bool(passed)

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "field": encode_field(self.field),
            "instance": self.instance,
            "seed": self.seed,
            "checks": [c.to_dict() for c in self.checks],
            "stats": encode_value(self.stats),
            "pass": self.passed,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


class _Tally:
    """Counts cases of one aggregated check and keeps the first failures."""

    def __init__(self):
        self.cases = 0
        self.failures: list[dict] = []
        self.failed = 0

    def record(self, ok: bool, **witness):
        self.cases += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_WITNESSES:
                self.failures.append(witness)

    def into(self, report: ScenarioReport, name: str):
        report.check(name, self.failed == 0, cases=self.cases, failed=self.failed,
                     failures=self.failures)


# -- helpers ----------------------------------------------------------------

def split(f: SymForm2, field: Field) -> tuple[list[ProjPoint], Field]:
    """Isotropic points of ``f`` over ``field``, extending it once if needed."""
    pts, fld = isotropic_points(f.embed(common_field(f.field, field)), allow_extension=True)
    return pts, fld


def _random_nonzero_point(field: Field, rng) -> ProjPoint:
    while True:
        x, y = field.random(rng), field.random(rng)
        if not (x.is_zero() and y.is_zero()):
            return ProjPoint(x, y)


def _random_involution(field: Field, rng) -> Involution:
    while True:
        a, b, c = field.random(rng), field.random(rng), field.random(rng)
        if not (-a * a - b * c).is_zero():
            return Involution(a, b, c)


def _all_involutions(field: Field):
    elems = list(field.elements())
    for a in elems:
        for b in elems:
            for c in elems:
                if not (-a * a - b * c).is_zero():
                    yield Involution(a, b, c)


def _all_points(field: Field) -> list[ProjPoint]:
    return [ProjPoint(t, field.one) for t in field.elements()] + [ProjPoint.infinity(field)]


def _rng(seed, index) -> random.Random:
    return random.Random(f"{seed}:{index}")


# -- Proposition 1 ----------------------------------------------------------

def verify_prop1(field: Field, trials: int = 10_000, seed: int = 0,
                 exhaustive: bool | None = None) -> ScenarioReport:
    """Conjugate pairs span forms orthogonal to the Desargues form.

    Small prime fields (p <= 5) are exhausted over every invertible
    trace-zero matrix and every point; other fields are sampled.
    """
    if exhaustive is None:
        exhaustive = isinstance(field, PrimeField) and field.p <= 5
    report = ScenarioReport("prop1", field, seed=None if exhaustive else seed)
    tally = _Tally()
    if exhaustive:
        report.instance = "every invertible trace-zero matrix x every point"
        points = _all_points(field)
        cases = ((inv, p) for inv in _all_involutions(field) for p in points)
    else:
        report.instance = f"{trials} random (involution, point) pairs"
        cases = ((_random_involution(field, r), _random_nonzero_point(field, r))
                 for r in (_rng(seed, i) for i in range(trials)))
    for inv, p in cases:
        q = apply(inv, p)
        tally.record(pair_form_orthogonality(inv, p), involution=inv, point=p, image=q)
    tally.into(report, "pair_form_orthogonal_to_desargues_form")
    report.stats["cases"] = tally.cases
    return report


# -- main theorem -----------------------------------------------------------

def _member_params(field: Field, members: int | None, f: SymForm2, g: SymForm2):
    """Projective parameters to test plus the tangent (degenerate) members over K."""
    if members is None and not field.is_finite:
        members = DEFAULT_MEMBERS
    params = projective_parameters(field, members)
    seen = {ProjPoint(a, b) for a, b in params}
    dform = degeneracy_form(f, g)
    if not dform.is_zero():
        for pt in isotropic_points(dform).points:
            if pt not in seen:
                seen.add(pt)
                params.append((pt.x, pt.y))
    return params


def _criteria(report: ScenarioReport, pencil: Pencil, line: LineInPV, verdict) -> bool:
    f, g = restrict(pencil.R, line), restrict(pencil.S, line)
    gram = restricted_gram(pencil, line)
    if f.is_zero() or g.is_zero():
        res = f.field.zero
    else:
        res = resultant(f, g)
    regular = isinstance(verdict, Regular)
    ok = regular == (not gram.det.is_zero()) == (not res.is_zero())
    # identity linking the two routes: gram det = -resultant/4
    ok = ok and (gram.det * -4) == res
    return report.check("regular_iff_gram_iff_resultant", ok, verdict=verdict.verdict,
                        gram_det=gram.det, resultant=res)


def verify_main_theorem(pencil: Pencil, line: LineInPV, members: int | None = None,
                        allow_extension: bool = True) -> ScenarioReport:
    """Both directions of the involution theorem on one pencil and line.

    Regular: every tested member meets the line in a conjugate pair or a
    fixed point.  Otherwise the failure witness is checked, and two
    member pairs are exhibited that no involution realizes.
    """
    field = common_field(pencil.field, line.field)
    report = ScenarioReport("main", field, instance=f"pencil in P^{pencil.dim - 1}")
    verdict = diagnose(pencil, line)
    report.stats["verdict"] = verdict.verdict
    _criteria(report, pencil, line, verdict)
    f, g = restrict(pencil.R, line), restrict(pencil.S, line)

    if isinstance(verdict, Regular):
        inv = induced_involution(pencil, line)
        report.stats["involution"] = inv
        report.stats["map"] = inv.formula()
        tally = _Tally()
        counts: Counter = Counter()
        params = _member_params(field, members, f, g)
        # members are restricted by linearity; one is also restricted directly
        a, b = params[-1]
        direct = restrict(pencil_member(pencil, a, b), line)
        report.check("restriction_is_linear", direct == f * a + g * b, member=(a, b),
                     direct=direct, combined=f * a + g * b)
        for a, b in params:
            try:
                outcome = check_restricted_member(f * a + g * b, inv, allow_extension, (a, b))
                counts[outcome.value] += 1
                tally.record(True)
            except ContractViolation as exc:
                tally.record(False, member=(a, b), error=str(exc))
        tally.into(report, "members_meet_line_in_conjugate_pairs")
        report.stats["members"] = dict(sorted(counts.items()))
        return report

    if isinstance(verdict, LineInQuadric):
        a, b = verdict.coeffs
        m = restrict(pencil_member(pencil, a, b), line)
        report.check("line_in_quadric_witness", m.is_zero(), coeffs=(a, b), restriction=m)
        # the line meets that quadric everywhere, not in a pair
        probes = [ProjPoint(field.zero, field.one), ProjPoint(field.one, field.one),
                  ProjPoint.infinity(field)]
        report.check("only_if_not_a_pair", all(m.value(p, p).is_zero() for p in probes),
                     points_on_quadric=probes)
        return report

    # CommonZero
    pt, fld = verdict.point, verdict.field
    members_ok = all(
        restrict(pencil_member(pencil, a, b), line).embed(fld).value(pt, pt).is_zero()
        for a, b in projective_parameters(field, 6 if not field.is_finite else None)
    )
    report.check("common_zero_witness",
                 f.embed(fld).value(pt, pt).is_zero() and g.embed(fld).value(pt, pt).is_zero()
                 and members_ok, point=pt, field=fld)
    _only_if_common_zero(report, pencil, line, f, g)
    return report


def _only_if_common_zero(report, pencil, line, f: SymForm2, g: SymForm2):
    pf, fld = split(f, f.field)
    pg, fld = split(g, fld)
    pf = [p.embed(fld) for p in pf]
    pair1 = (pf[0], pf[-1])
    pair2 = (pg[0], pg[-1])
    try:
        inv = involution_from_two_pairs(*pair1, *pair2)
    except DegenerateComplement:
        report.check("only_if_no_involution", True, pair1=pair1, pair2=pair2,
                     reason="pairs share a point")
        return
    except DependentPairs:
        report.check("only_if_no_involution", False, pair1=pair1, pair2=pair2,
                     reason="independent restrictions gave dependent pair forms")
        return
    # an involution exists for these two pairs; a third member must break it
    third = f + g
    pts, fld3 = split(third, inv.field)
    inv3 = inv.embed(fld3)
    broken = len(pts) == 2 and apply(inv3, pts[0]) != pts[1] or (
        len(pts) == 1 and apply(inv3, pts[0]) != pts[0])
    report.check("only_if_no_involution", broken, pair1=pair1, pair2=pair2, involution=inv,
                 third_member=third)


# -- Proposition 3 ----------------------------------------------------------

def verify_prop3(pencil: Pencil, line: LineInPV, members: int | None = None) -> ScenarioReport:
    """Fixed points of the induced involution are the pair orthogonal for the whole pencil."""
    field = common_field(pencil.field, line.field)
    report = ScenarioReport("prop3", field, instance=f"pencil in P^{pencil.dim - 1}")
    try:
        inv = induced_involution(pencil, line)
    except NotRegular as exc:
        report.check("regular", False, verdict=exc.verdict.verdict)
        return report
    (m, n), ext = fixed_points(inv, allow_extension=True)
    report.stats["fixed_points"] = [m, n]
    report.stats["fixed_point_field"] = ext
    report.check("two_distinct_fixed_points", m != n and apply(inv.embed(ext), m) == m
                 and apply(inv.embed(ext), n) == n, fixed=[m, n])

    f, g = restrict(pencil.R, line), restrict(pencil.S, line)
    report.check("fixed_points_orthogonal_R", orthogonal(f, m, n), form=f, m=m, n=n)
    report.check("fixed_points_orthogonal_S", orthogonal(g, m, n), form=g, m=m, n=n)

    ortho, harmonic = _Tally(), _Tally()
    for a, b in _member_params(field, members, f, g):
        h = f * a + g * b
        ortho.record(orthogonal(h, m, n), member=(a, b))
        pts, fld = split(h, ext)
        if len(pts) != 2:
            continue
        s, t = pts
        mm, nn = m.embed(fld), n.embed(fld)
        cr = cross_ratio(s, t, mm, nn)
        harmonic.record(cr is not INFINITE and cr == -1, member=(a, b), s=s, t=t,
                        cross_ratio=str(cr), expected="-1")
    ortho.into(report, "fixed_points_orthogonal_all_members")
    harmonic.into(report, "member_pairs_harmonic_with_fixed_points")

    # tangent members: their single contact point is a fixed point
    radicals = []
    dpts, dfld = split(degeneracy_form(f, g), ext)
    for pt in dpts:
        a, b = pt
        h = f.embed(dfld) * a + g.embed(dfld) * b
        (r,), _ = isotropic_points(h)
        radicals.append(r)
    fixed = {m.embed(dfld), n.embed(dfld)}
    report.check("tangent_members_touch_at_fixed_points",
                 len(radicals) == 2 and set(radicals) == fixed, radicals=radicals, fixed=[m, n])
    return report


# -- Proposition 4 ----------------------------------------------------------

@dataclass
class AffineConfig:
    """A line through ``point`` with direction ``direction`` in affine n-space.

    ``marked`` is the point M on the line.  The pencil lives in the
    projective closure: affine ``(x1..xn)`` is ``(x1..xn, 1)`` and N is the
    direction ``(D, 0)`` at infinity.  ``hypothesis_members`` names the two
    pencil members that carry the tangent / symmetric-pair premise.
    """

    point: Sequence[Scalar]
    direction: Sequence[Scalar]
    marked: Sequence[Scalar]
    pencil: Pencil
    hypothesis_members: tuple = ((1, 0), (0, 1))

    @property
    def dim(self) -> int:
        return len(self.point)

    @property
    def field(self) -> Field:
        return self.pencil.field

    def line(self) -> LineInPV:
        """Line coordinates with M at 0 and N at infinity: ``x -> M + x*D``."""
        zero, one = self.field.zero, self.field.one
        return LineInPV([*self.direction, zero], [*self.marked, one], field=self.field)

    def affine_point(self, p: ProjPoint) -> list[Scalar] | None:
        t = p.coordinate
        if t is None:
            return None
        return [mi + t * di for mi, di in zip(self.marked, self.direction)]


def _shape(cfg: AffineConfig, h: SymForm2, base: Field):
    """Classify a restricted member relative to M (0) and N (infinity).

    Returns ``(tangent_M, asymptote, symmetric, witness)``; the symmetric
    test is done twice (affine midpoint and cross-ratio) and both must agree.
    """
    zero_pt = ProjPoint(base.zero, base.one)
    inf_pt = ProjPoint.infinity(base)
    kind = classify(h)
    if kind is FormType.DEGENERATE:
        (r,), _ = isotropic_points(h)
        return r == zero_pt, r == inf_pt, False, {"contact": r}
    if kind is FormType.ZERO:
        return False, False, False, {"restriction": h}
    pts, fld = split(h, h.field)
    p, q = pts
    if p.is_infinity or q.is_infinity:
        return False, False, False, {"points": pts}
    ap, aq = cfg.affine_point(p), cfg.affine_point(q)
    midpoint = all(2 * mi == x + y for mi, x, y in zip(cfg.marked, ap, aq))
    cr = cross_ratio(p, q, zero_pt.embed(fld), inf_pt.embed(fld))
    harmonic = cr is not INFINITE and cr == -1
    if midpoint != harmonic:
        raise ContractViolation(f"midpoint test ({midpoint}) and cross-ratio test ({harmonic}) disagree")
    return False, False, midpoint, {"points": pts, "field": fld, "cross_ratio": str(cr)}


def verify_butterfly(cfg: AffineConfig, members: int | None = None) -> ScenarioReport:
    """Generalized butterfly: the induced involution is ``x -> -x`` about M."""
    field = cfg.field
    line = cfg.line()
    if rank([[m - p for m, p in zip(cfg.marked, cfg.point)], list(cfg.direction)]) > 1:
        raise HypothesisViolation("M is not on the line", {"marked": cfg.marked})

    premises = []
    for a, b in cfg.hypothesis_members:
        h = restrict(pencil_member(cfg.pencil, a, b), line)
        tangent, _, symmetric, witness = _shape(cfg, h, field)
        premises.append((tangent, symmetric, h, witness))
    tangents = sum(p[0] for p in premises)
    symmetric = sum(p[1] for p in premises)
    distinct = not premises[0][2].proportional(premises[1][2])
    if not (distinct and ((tangents == 1 and symmetric == 1) or symmetric == 2)):
        raise HypothesisViolation(
            "need a member tangent at M plus a member with a pair symmetric about M, "
            "or two members with distinct symmetric pairs",
            {"members": list(cfg.hypothesis_members),
             "restrictions": [p[2] for p in premises], "tangent": [p[0] for p in premises],
             "symmetric": [p[1] for p in premises]},
        )

    report = ScenarioReport("butterfly", field, instance=f"line in affine {cfg.dim}-space")
    try:
        inv = induced_involution(cfg.pencil, line)
    except NotRegular as exc:
        raise HypothesisViolation("pencil is not regular on the line",
                                  {"verdict": exc.verdict.verdict}) from None
    report.stats["involution"] = inv
    report.stats["map"] = inv.formula()
    report.check("involution_is_negation", inv == Involution(1, 0, 0, field=inv.field),
                 involution=inv, expected="x -> -x")

    f, g = restrict(cfg.pencil.R, line), restrict(cfg.pencil.S, line)
    branches = Counter()
    tally, harmonic = _Tally(), _Tally()
    classified = []
    inf_pt = ProjPoint.infinity(field)
    zero_pt = ProjPoint(field.zero, field.one)
    for a, b in _member_params(field, members, f, g):
        h = f * a + g * b
        tangent, asymptote, sym, witness = _shape(cfg, h, field)
        flags = [tangent, asymptote, sym]
        branch = ("tangent_at_M", "asymptote", "symmetric_pair")[flags.index(True)] if any(flags) else None
        tally.record(sum(flags) == 1, member=(a, b), restriction=h, flags=flags)
        if branch:
            branches[branch] += 1
            classified.append({"member": (a, b), "branch": branch, **witness})
        if sym:
            p, q = witness["points"]
            fld = witness["field"]
            cr = cross_ratio(p, q, zero_pt.embed(fld), inf_pt.embed(fld))
            harmonic.record(cr == -1, member=(a, b), cross_ratio=str(cr))
    tally.into(report, "trichotomy_exactly_one_branch")
    harmonic.into(report, "symmetric_pairs_harmonic")
    report.stats["branches"] = dict(sorted(branches.items()))
    report.stats["classified"] = classified
    return report


# -- classical configuration ------------------------------------------------

def _homogeneous(p, field: Field) -> list[Scalar]:
    coords = [field.coerce(x) for x in p]
    if len(coords) == 2:
        coords.append(field.one)
    if len(coords) != 3:
        raise DegeneratePosition("plane points have 2 affine or 3 homogeneous coordinates")
    return coords


def _join(p: Sequence[Scalar], q: Sequence[Scalar]) -> list[Scalar]:
    """Line covector through two points, scaled so its first nonzero entry is 1."""
    u = [p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]]
    lead = next(x for x in u if not x.is_zero())
    return [x / lead for x in u]


def _line_pair_conic(u: Sequence[Scalar], v: Sequence[Scalar], field: Field) -> SymFormN:
    """Symmetrized product ``(u v^T + v u^T)/2`` of two line covectors."""
    return SymFormN([[(u[i] * v[j] + v[i] * u[j]) / 2 for j in range(3)] for i in range(3)], field)


def classical_desargues_scenario(a, b, c, d, field: Field | None = None,
                                 lines: int = 3) -> tuple[Pencil, list[LineInPV]]:
    """Pencil of conics through four points in general position.

    Spanned by the line pairs ``AB.CD`` and ``AC.BD``.  Also returns a few
    lines (through two lattice points) that avoid all four points.
    """
    field = field or Rationals()
    pts = [_homogeneous(p, field) for p in (a, b, c, d)]
    for trio in combinations(range(4), 3):
        if det([pts[i] for i in trio]).is_zero():
            raise DegeneratePosition(f"points {[p for p in trio]} are collinear")
    A, B, C, D = pts
    pencil = Pencil(_line_pair_conic(_join(A, B), _join(C, D), field),
                    _line_pair_conic(_join(A, C), _join(B, D), field))

    suggested: list[LineInPV] = []
    for k in range(1, 6):
        for m in range(0, 6):
            cov = [field(k), field(-1), field(m)]  # y = kx + m
            if any((sum((x * y for x, y in zip(cov, p)), field.zero)).is_zero() for p in pts):
                continue
            e1, e2 = nullspace([cov])
            suggested.append(LineInPV(e1, e2, field=field))
            if len(suggested) == lines:
                return pencil, suggested
    return pencil, suggested


def verify_classical_desargues(points=None, line: LineInPV | None = None,
                               field: Field | None = None, members: int | None = None) -> ScenarioReport:
    """Four points, the conic pencil through them, and the induced involution on a line."""
    field = field or Rationals()
    points = points or [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    pencil, suggested = classical_desargues_scenario(*points, field=field)
    line = line or (suggested[0] if suggested else None)
    report = ScenarioReport("desargues-classic", field, instance=f"conics through {len(points)} points")
    hom = [_homogeneous(p, field) for p in points]
    tally = _Tally()
    for a, b in projective_parameters(field, members or DEFAULT_MEMBERS):
        q = pencil_member(pencil, a, b)
        for p in hom:
            tally.record(q.value(p, p).is_zero(), member=(a, b), point=p)
    tally.into(report, "members_pass_through_four_points")
    if line is not None:
        main = verify_main_theorem(pencil, line, members)
        report.checks.extend(main.checks)
        report.stats.update(main.stats)
    return report


# -- fuzzing ----------------------------------------------------------------

def _random_sym(field: Field, dim: int, rng) -> SymFormN:
    m = [[field.zero] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i, dim):
            m[i][j] = m[j][i] = field.random(rng)
    return SymFormN(m, field)


def random_instance(field: Field, ambient_dim: int, rng) -> tuple[Pencil, LineInPV]:
    """Uniformly random non-proportional ``(R, S)`` and independent ``(e1, e2)``."""
    dim = ambient_dim + 1
    while True:
        R, S = _random_sym(field, dim, rng), _random_sym(field, dim, rng)
        if not R.proportional(S):
            break
    while True:
        e1 = [field.random(rng) for _ in range(dim)]
        e2 = [field.random(rng) for _ in range(dim)]
        if rank([e1, e2]) == 2:
            break
    return Pencil(R, S), LineInPV(e1, e2, field=field)


def _run_trial(args) -> dict:
    field, ambient_dim, seed, index, members = args
    pencil, line = random_instance(field, ambient_dim, _rng(seed, index))
    main = verify_main_theorem(pencil, line, members)
    failed = [c.name for c in main.failures]
    agree = all(c.passed for c in main.checks if c.name == "regular_iff_gram_iff_resultant")
    if main.stats["verdict"] == "Regular":
        prop3 = verify_prop3(pencil, line, members)
        failed += [f"prop3:{c.name}" for c in prop3.failures]
    out = {"verdict": main.stats["verdict"], "failed": failed, "agree": agree}
    if failed:
        out["instance"] = {"pencil": encode_value(pencil), "line": encode_value(line)}
    return out


def fuzz_campaign(field: Field, ambient_dim: int, trials: int, seed: int,
                  members: int | None = None, workers: int | None = None) -> ScenarioReport:
    """Random pencils and lines; main theorem plus Proposition 3 on each.

    ``workers`` > 1 fans trials out to processes without changing the report.
    """
    if ambient_dim < 2:
        raise ValueError("ambient dimension must be at least 2")
    report = ScenarioReport("fuzz", field, instance=f"P^{ambient_dim}, {trials} trials", seed=seed)
    jobs = [(field, ambient_dim, seed, i, members) for i in range(trials)]
    if workers and workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_trial, jobs, chunksize=max(1, trials // (8 * workers))))
    else:
        results = [_run_trial(j) for j in jobs]

    verdicts: Counter = Counter()
    theorem, criteria = _Tally(), _Tally()
    for i, r in enumerate(results):
        verdicts[r["verdict"]] += 1
        theorem.record(not r["failed"], trial=i, failed=r["failed"], instance=r.get("instance"))
        criteria.record(r["agree"], trial=i)
    theorem.into(report, "main_theorem_and_prop3")
    criteria.into(report, "regular_iff_gram_iff_resultant")
    report.stats["verdicts"] = {v: verdicts.get(v, 0) for v in ("Regular", "CommonZero", "LineInQuadric")}
    return report
