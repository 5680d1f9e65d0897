"""Exact arithmetic for the involution a pencil of quadrics cuts on a line.

Works over the rationals, odd prime fields and quadratic extension towers
of either.  The usual entry points::

    from desargues import Rationals, SymFormN, Pencil, LineInPV, induced_involution
"""

from .errors import *  # noqa: F401,F403
from .fields import (
    Field,
    PrimeField,
    QuadElement,
    QuadExt,
    Rational,
    Rationals,
    Residue,
    Scalar,
    common_field,
    extend_with_sqrt,
    is_prime,
    sqrt_in_field,
)
from .forms import (
    FormType,
    IsotropicPoints,
    SymForm2,
    change_basis,
    classify,
    det_pairing,
    eval_bilinear,
    form_from_points,
    isotropic_points,
    orthogonal,
    pairing_complement,
    resultant,
)
from .harness import (
    AffineConfig,
    Check,
    ScenarioReport,
    classical_desargues_scenario,
    fuzz_campaign,
    random_instance,
    verify_butterfly,
    verify_classical_desargues,
    verify_main_theorem,
    verify_prop1,
    verify_prop3,
)
from .involutions import (
    Involution,
    apply,
    desargues_form,
    fixed_points,
    involution_from_form,
    involution_from_two_pairs,
    pair_form_orthogonality,
)
from .pencils import (
    CommonZero,
    Gram,
    LineInPV,
    LineInQuadric,
    MemberVerdict,
    Pencil,
    Regular,
    SymFormN,
    check_restricted_member,
    degeneracy_form,
    diagnose,
    induced_involution,
    member_pair_check,
    pencil_member,
    projective_parameters,
    restrict,
    restricted_gram,
)
from .projective import INFINITE, ProjPoint, bracket, cross_ratio, harmonic_conjugate, point_eq

__version__ = "0.1.0"
