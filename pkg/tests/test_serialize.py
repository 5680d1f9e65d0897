import pytest
from hypothesis import given, strategies as st

from conftest import GF7, GF13, Q, forms, points, scalars
from desargues import Involution, LineInPV, Pencil, SymFormN, extend_with_sqrt
from desargues.errors import InvariantError, SchemaError
from desargues.serialize import (
    decode_field,
    decode_form2,
    decode_involution,
    decode_line,
    decode_pencil,
    decode_point,
    decode_scalar,
    encode_field,
    encode_form2,
    encode_involution,
    encode_line,
    encode_pencil,
    encode_point,
    encode_scalar,
    parse_field_flag,
)

K = extend_with_sqrt(Q, -1)
L = extend_with_sqrt(GF7, 3)


class TestFields:
    @pytest.mark.parametrize("field", [Q, GF7, K, L, extend_with_sqrt(K, 3)], ids=str)
    def test_round_trip(self, field):
        assert decode_field(encode_field(field)) == field

    def test_characteristic_two(self):
        with pytest.raises(InvariantError, match="characteristic 2 excluded"):
            decode_field({"type": "GFp", "p": 2})

    def test_square_d_rejected(self):
        with pytest.raises(InvariantError):
            decode_field({"type": "QuadExt", "base": {"type": "Q"}, "d": "4"})

    def test_unknown(self):
        with pytest.raises(SchemaError, match="field.type"):
            decode_field({"type": "R"})

    def test_flag(self):
        assert parse_field_flag("Q") == Q
        assert parse_field_flag("gfp:13") == GF13
        with pytest.raises(InvariantError):
            parse_field_flag("gfp:2")
        with pytest.raises(SchemaError):
            parse_field_flag("reals")


class TestScalars:
    @given(st.data())
    def test_round_trip(self, data):
        field = data.draw(st.sampled_from([Q, GF13]))
        x = data.draw(scalars(field))
        assert decode_scalar(encode_scalar(x), field, "x") == x

    def test_extension(self):
        x = K((3, -2))
        assert encode_scalar(x) == ["3", "-2"]
        assert decode_scalar(["3", "-2"], K, "x") == x

    @pytest.mark.parametrize("bad", [0.5, True, "1.5", "1/0", None, "x"])
    def test_rejects(self, bad):
        with pytest.raises(SchemaError):
            decode_scalar(bad, Q, "x")

    def test_path_in_message(self):
        with pytest.raises(SchemaError, match=r"^R\.m\[0\]\[1\]: "):
            decode_scalar(1.0, Q, "R.m[0][1]")


class TestObjects:
    @given(points(GF13))
    def test_point_round_trip(self, p):
        assert decode_point(encode_point(p), GF13, "p") == p

    def test_inf_shorthand(self):
        assert decode_point("inf", Q, "p").is_infinity

    @given(forms(Q))
    def test_form_round_trip(self, f):
        assert decode_form2(encode_form2(f), Q) == f

    def test_involution(self):
        inv = Involution(0, 1, -1, field=Q)
        assert decode_involution(encode_involution(inv), Q) == inv
        with pytest.raises(InvariantError):
            decode_involution({"a": "1", "b": "1", "c": "-1"}, Q)

    def test_pencil_round_trip(self):
        p = Pencil(SymFormN.diag([1, 1, -1], field=Q), SymFormN.diag([1, 4, -4], field=Q))
        back = decode_pencil(encode_pencil(p), Q)
        assert back.R == p.R and back.S == p.S

    def test_asymmetric(self):
        doc = {"R": {"dim": 2, "m": [["1", "2"], ["3", "1"]]}, "S": {"dim": 2, "m": [["1", "0"], ["0", "1"]]}}
        with pytest.raises(InvariantError, match=r"R\.m: not symmetric at \[0\]\[1\] vs \[1\]\[0\]"):
            decode_pencil(doc, Q, path="")

    def test_proportional_pencil(self):
        doc = {"R": {"dim": 2, "m": [["1", "0"], ["0", "1"]]}, "S": {"dim": 2, "m": [["2", "0"], ["0", "2"]]}}
        with pytest.raises(InvariantError, match="proportional"):
            decode_pencil(doc, Q)

    def test_line(self):
        line = LineInPV([1, 0, 0], [0, 0, 1], field=Q)
        back = decode_line(encode_line(line), Q)
        assert back.e1 == line.e1 and back.e2 == line.e2
        with pytest.raises(InvariantError, match="line vectors dependent"):
            decode_line({"e1": ["1", "2"], "e2": ["1", "2"]}, Q)

    def test_missing_key(self):
        with pytest.raises(SchemaError, match="missing key"):
            decode_line({"e1": ["1", "2"]}, Q)
