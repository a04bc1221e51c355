from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from qlattice import linalg
from qlattice.errors import DimensionError, SpecParseError
from qlattice.rational import format_decimal, format_rational, parse_rational


@pytest.mark.parametrize("text,value", [
    ("1/2", F(1, 2)), ("-2", F(-2)), ("4/8", F(1, 2)), ("+3/9", F(1, 3)), ("0", F(0)), (" 7 ", F(7)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.5", "1e3", "1/0", "a", "", "1/-2", "--1"])
def test_parse_rational_rejects(text):
    with pytest.raises(SpecParseError):
        parse_rational(text)


def test_format_rational():
    assert format_rational(F(-3, 6)) == "-1/2"
    assert format_rational(F(4, 2)) == "2"


@pytest.mark.parametrize("value,text", [
    (F(0), "0"), (F(1, 2), "0.5"), (F(-1, 2), "-0.5"), (F(3), "3"), (F(1, 3), "0.333333"),
    (F(2, 3), "0.666667"), (F(1, 8), "0.125"), (F(-7, 4), "-1.75"),
    (F(1, 4_000_000), "0.000000"),  # 0.25e-6 rounds to even
    (F(3, 2_000_000), "0.000002"),  # 1.5e-6 rounds to even
    (F(-1, 3_000_000), "0.000000"),
    (F(1, 10**6), "0.000001"),
])
def test_format_decimal(value, text):
    assert format_decimal(value) == text


def _rand_matrix(draw_ints, n):
    return [[F(v) for v in draw_ints[i * n:(i + 1) * n]] for i in range(n)]


@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(-4, 4), min_size=n * n, max_size=n * n),
                        st.lists(st.integers(-9, 9), min_size=n, max_size=n))))
def test_solve_and_det_match_sympy(args):
    n, flat, rhs = args
    a = _rand_matrix(flat, n)
    ref = sympy.Matrix(n, n, flat)
    det = ref.det()
    assert linalg.determinant(a) == F(int(det))
    if det == 0:
        with pytest.raises(linalg.SingularMatrixError):
            linalg.solve(a, rhs)
    else:
        x = linalg.solve(a, rhs)
        assert linalg.matvec(a, x) == [F(v) for v in rhs]
        inv = linalg.inverse(a)
        assert [[F(int(e.p), int(e.q)) for e in row] for row in ref.inv().tolist()] == inv


def test_dimension_checks():
    with pytest.raises(DimensionError):
        linalg.solve([[1, 0], [0, 1]], [1])
    with pytest.raises(DimensionError):
        linalg.determinant([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(DimensionError):
        linalg.inverse([[1, 2], [3]])
