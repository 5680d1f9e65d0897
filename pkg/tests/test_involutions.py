from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import GF5, GF7, GF13, Q, invertible_matrices, points, scalars
from desargues import (
    DegenerateComplement,
    DegenerateForm,
    DependentPairs,
    Involution,
    ProjPoint,
    SingularMatrix,
    SymForm2,
    apply,
    change_basis,
    desargues_form,
    fixed_points,
    involution_from_form,
    involution_from_two_pairs,
    pair_form_orthogonality,
)

INF = ProjPoint.infinity(Q)
NEG = Involution(1, 0, 0, field=Q)        # x -> -x
ROT = Involution(0, 1, -1, field=Q)       # x -> -1/x
RECIP = Involution(0, 1, 1, field=Q)      # x -> 1/x


def pt(x, field=Q):
    return ProjPoint(x, 1, field=field)


def involutions(field):
    triples = st.tuples(scalars(field), scalars(field), scalars(field))
    return triples.filter(lambda t: not (t[0] * t[0] + t[1] * t[2]).is_zero()).map(lambda t: Involution(*t))


def all_involutions(field):
    els = list(field.elements())
    for a, b, c in product(els, repeat=3):
        if not (a * a + b * c).is_zero():
            yield Involution(a, b, c)


class TestInvolution:
    def test_singular_rejected(self):
        with pytest.raises(SingularMatrix):
            Involution(1, 1, -1, field=Q)

    def test_apply(self):
        assert apply(NEG, pt(5)) == pt(-5)
        assert apply(ROT, pt(2)) == ProjPoint(1, -2, field=Q)
        assert apply(NEG, INF) == INF

    def test_projective_equality(self):
        assert Involution(0, 2, -2, field=Q) == ROT
        assert hash(Involution(0, 2, -2, field=Q)) == hash(ROT)
        assert NEG != ROT

    @pytest.mark.parametrize("inv,text", [(NEG, "x -> -x"), (ROT, "x -> -1/x"), (RECIP, "x -> 1/x")])
    def test_formula(self, inv, text):
        assert inv.formula() == text

    @given(st.data())
    def test_order_two(self, data):
        field = data.draw(st.sampled_from([Q, GF7, GF13]))
        inv = data.draw(involutions(field))
        p = data.draw(points(field))
        assert apply(inv, apply(inv, p)) == p


class TestDesarguesForm:
    def test_examples(self):
        assert desargues_form(NEG) == SymForm2(0, 1, 0, field=Q)
        assert desargues_form(ROT) == SymForm2(1, 0, 1, field=Q)
        assert desargues_form(RECIP) == SymForm2(-1, 0, 1, field=Q)

    def test_inverse_examples(self):
        assert involution_from_form(SymForm2(0, 1, 0, field=Q)) == NEG
        assert involution_from_form(SymForm2(1, 0, 1, field=Q)) == ROT
        v = Involution(2, 3, 5, field=Q)
        assert involution_from_form(desargues_form(v)) == v

    def test_degenerate_form(self):
        with pytest.raises(DegenerateForm):
            involution_from_form(SymForm2(1, 1, 1, field=Q))

    def test_determinants_agree(self):
        for inv in all_involutions(GF5):
            assert desargues_form(inv).det == inv.det

    def test_bijection_exhaustive_gf5(self):
        invs = list(all_involutions(GF5))
        assert len(invs) == 100
        assert len(set(invs)) == 25
        for inv in invs:
            assert involution_from_form(desargues_form(inv)) == inv
        els = list(GF5.elements())
        for a, b, c in product(els, repeat=3):
            f = SymForm2(a, b, c)
            if not f.det.is_zero():
                assert desargues_form(involution_from_form(f)).proportional(f)

    @given(st.data())
    def test_conjugation_equivariance(self, data):
        field = data.draw(st.sampled_from([Q, GF7, GF13]))
        inv = data.draw(involutions(field))
        s = data.draw(invertible_matrices(field))
        conj = inv.conjugate_by(s)
        assert desargues_form(conj).proportional(change_basis(desargues_form(inv), s))


class TestFixedPoints:
    def test_negation(self):
        assert set(fixed_points(NEG).points) == {pt(0), INF}

    def test_rotation(self):
        assert fixed_points(ROT).points == []
        res = fixed_points(ROT, allow_extension=True)
        i = res.field.sqrt_d
        assert set(res.points) == {ProjPoint(i, 1), ProjPoint(-i, 1)}

    def test_reciprocal(self):
        assert set(fixed_points(RECIP).points) == {pt(1), pt(-1)}

    @pytest.mark.parametrize("field", [GF5, GF7], ids=str)
    def test_match_brute_force(self, field):
        line = [ProjPoint.infinity(field)] + [pt(x, field) for x in field.elements()]
        for inv in all_involutions(field):
            fixed = {p for p in line if apply(inv, p) == p}
            assert len(fixed) in (0, 2)
            assert set(fixed_points(inv).points) == fixed


class TestProp1:
    @pytest.mark.parametrize("inv,p", [(NEG, pt(3)), (ROT, INF), (NEG, pt(0)), (NEG, INF)])
    def test_examples(self, inv, p):
        assert pair_form_orthogonality(inv, p)

    def test_exhaustive_gf5(self):
        line = [ProjPoint.infinity(GF5)] + [pt(x, GF5) for x in GF5.elements()]
        for inv in all_involutions(GF5):
            for p in line:
                assert pair_form_orthogonality(inv, p)


class TestTwoPairs:
    def test_rotation(self):
        assert involution_from_two_pairs(pt(1), pt(-1), pt(0), INF) == ROT

    def test_fixed_point_constraints(self):
        inv = involution_from_two_pairs(pt(0), pt(0), INF, INF)
        assert inv == NEG

    def test_shared_point(self):
        with pytest.raises(DegenerateComplement):
            involution_from_two_pairs(pt(0), pt(1), pt(0), pt(2))

    def test_dependent(self):
        with pytest.raises(DependentPairs):
            involution_from_two_pairs(pt(1), pt(2), pt(2), pt(1))

    @given(st.data())
    def test_swaps_both_pairs(self, data):
        field = data.draw(st.sampled_from([Q, GF13]))
        inv = data.draw(involutions(field))
        p, q = data.draw(st.lists(points(field), min_size=2, max_size=2))
        p2, q2 = apply(inv, p), apply(inv, q)
        if p in (q, q2):
            return
        assert involution_from_two_pairs(p, p2, q, q2) == inv
