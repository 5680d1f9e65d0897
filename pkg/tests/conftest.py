from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from desargues import PrimeField, Rationals

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

Q = Rationals()
GF3, GF5, GF7, GF13 = (PrimeField(p) for p in (3, 5, 7, 13))
SMALL_FIELDS = [Q, GF3, GF5, GF7, GF13]


def scalars(field, nonzero=False):
    """Strategy drawing elements of ``field`` (small rationals for Q)."""
    if field.characteristic:
        base = st.integers(min_value=0, max_value=field.characteristic - 1)
    else:
        base = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 12))
    out = base.map(field)
    return out.filter(lambda x: not x.is_zero()) if nonzero else out


def fields():
    return st.sampled_from(SMALL_FIELDS)


@pytest.fixture(params=SMALL_FIELDS, ids=str)
def field(request):
    return request.param


def points(field):
    from desargues import ProjPoint

    pairs = st.tuples(scalars(field), scalars(field)).filter(lambda p: not (p[0].is_zero() and p[1].is_zero()))
    return pairs.map(lambda p: ProjPoint(*p))


def invertible_matrices(field):
    def ok(m):
        (a, b), (c, d) = m
        return not (a * d - b * c).is_zero()

    row = st.tuples(scalars(field), scalars(field))
    return st.tuples(row, row).filter(ok)


def forms(field, nonzero=False):
    from desargues import SymForm2

    out = st.builds(lambda a, b, c: SymForm2(a, b, c), scalars(field), scalars(field), scalars(field))
    return out.filter(lambda f: not f.is_zero()) if nonzero else out
