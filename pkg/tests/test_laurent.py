import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.services.gassner import matrix_product
from app.services.laurent import (
    LaurentPoly,
    NotDivisible,
    bar_involution,
    cofactor_determinant,
    determinant,
    exact_div,
    specialize_one,
    square_variables,
)
from tests.strategies import laurent_polys, square_matrices


def t(index: int, nvars: int = 2, power: int = 1) -> LaurentPoly:
    return LaurentPoly.variable(nvars, index, power)


def test_terms_are_merged_and_zeros_dropped():
    p = LaurentPoly(2, (((1, 0), 2), ((0, 1), 3), ((1, 0), -2)))
    assert p.as_dict() == {(0, 1): 3}
    assert LaurentPoly(2, (((0, 0), 0),)).is_zero()


def test_terms_are_sorted_lexicographically():
    p = t(2) + t(1, power=-1) + 5
    assert [exps for exps, _ in p.terms] == [(-1, 0), (0, 0), (0, 1)]
    assert p.leading_term() == ((0, 1), 1)


def test_arithmetic_with_integers():
    p = t(1) - 1
    assert p * p == t(1, power=2) - 2 * t(1) + 1
    assert 1 - p == 2 - t(1)
    assert (p + 1) ** 3 == t(1, power=3)


def test_negative_power_of_unit_monomial():
    m = -(t(1) * t(2, power=2))
    assert m ** -1 * m == LaurentPoly.one(2)


def test_negative_power_rejects_non_units():
    with pytest.raises(ValueError, match="unit monomials"):
        (t(1) + 1) ** -1


def test_variable_count_mismatch_is_rejected():
    with pytest.raises(ValueError, match="variable count mismatch"):
        t(1, nvars=1) + t(1, nvars=2)


def test_text_form():
    p = t(2, nvars=3) - t(2, nvars=3, power=-1)
    assert p.to_text() == "-1*t2^-1 + 1*t2"
    assert LaurentPoly.zero(3).to_text() == "0"
    assert LaurentPoly.one(1).to_text() == "1"
    trefoil = t(1, 1, 2) - 1 + t(1, 1, -2)
    assert trefoil.to_text() == "1*t1^-2 - 1 + 1*t1^2"


def test_text_form_with_custom_names():
    x = LaurentPoly.variable(2, 2)
    assert (x - x ** -1).to_text(["t1", "x"]) == "-1*x^-1 + 1*x"


def test_latex_form():
    p = t(2, nvars=3) - t(2, nvars=3, power=-1)
    assert p.to_latex() == "-t_{2}^{-1} + t_{2}"
    assert (3 * t(1) * t(2) - 2).to_latex() == "-2 + 3 t_{1} t_{2}"


def test_json_form():
    p = 2 * t(1) - t(2, power=-1)
    assert p.to_json() == {
        "nvars": 2,
        "terms": [{"coeff": "-1", "exp": [0, -1]}, {"coeff": "2", "exp": [1, 0]}],
    }


def test_parse_rejects_unknown_factor():
    with pytest.raises(ValueError, match="invalid factor"):
        LaurentPoly.parse("1*y", 2)


@given(laurent_polys(nvars=3))
def test_text_and_json_denote_the_same_polynomial(p):
    """Every serialization reads back to the internal value."""
    assert LaurentPoly.parse(p.to_text(), 3) == p
    assert LaurentPoly.from_json(p.to_json()) == p
    assert LaurentPoly.parse_latex(p.to_latex(), 3) == p


@given(laurent_polys(nvars=3))
def test_text_and_latex_read_back_with_custom_names(p):
    names = ["t1", "t2", "x"]
    assert LaurentPoly.parse(p.to_text(names), 3, names) == p
    assert LaurentPoly.parse_latex(p.to_latex(names), 3, names) == p


def test_parse_latex_examples():
    assert LaurentPoly.parse_latex("-2 + 3 t_{1} t_{2}", 2) == 3 * t(1) * t(2) - 2
    assert LaurentPoly.parse_latex("-1 - t_{1}^{-2}", 2) == -1 - t(1, power=-2)
    with pytest.raises(ValueError, match="invalid factor"):
        LaurentPoly.parse_latex("t_{3}", 2)


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_laws(p, q, r):
    assert p * q == q * p
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p - q) + q == p


@given(laurent_polys(), laurent_polys())
def test_square_variables_and_bar_are_ring_maps(p, q):
    assert square_variables(p * q) == square_variables(p) * square_variables(q)
    assert bar_involution(p * q) == bar_involution(p) * bar_involution(q)
    assert bar_involution(bar_involution(p)) == p


@given(laurent_polys(nvars=3), laurent_polys(nvars=3, allow_zero=False))
def test_exact_div_recovers_factor(p, q):
    assert exact_div(p * q, q) == p


def test_exact_div_examples():
    assert exact_div(t(1, power=2) - 1, t(1) - 1) == t(1) + 1
    d = t(1) * t(2) - (t(1) * t(2)) ** -1
    assert exact_div(d, d) == LaurentPoly.one(2)
    assert exact_div(LaurentPoly.zero(2), d).is_zero()


def test_exact_div_shifts_laurent_divisors():
    d = t(1, power=-3) + t(2, power=-1)
    q = t(1) - 2 * t(2, power=4)
    assert exact_div(q * d, d) == q


def test_exact_div_raises_on_remainder():
    with pytest.raises(NotDivisible):
        exact_div(t(1) + 1, t(1) - 1)
    with pytest.raises(NotDivisible):
        exact_div(t(1) + t(2), 2 * t(1) + 2 * t(2))


def test_exact_div_terminates_on_indivisible_laurent_input():
    # long division alone would walk down forever; the exponent box stops it
    with pytest.raises(NotDivisible):
        exact_div(LaurentPoly.one(2), t(1) - t(1, power=-1))


def test_exact_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        exact_div(t(1), LaurentPoly.zero(2))


def test_specialize_one_and_restrict():
    p = t(1, 2) * t(2, 2, 3) - t(2, 2, -1)
    specialized = specialize_one(p, 2)
    assert specialized == t(1, 2) - 1
    assert specialized.restrict(1) == t(1, 1) - 1
    with pytest.raises(ValueError, match="still occur"):
        p.restrict(1)
    assert p.extend(3).restrict(2) == p


def test_determinant_of_empty_matrix_is_one():
    assert determinant([], nvars=2) == LaurentPoly.one(2)
    assert cofactor_determinant([], nvars=2) == LaurentPoly.one(2)


def test_determinant_needs_square_matrix():
    with pytest.raises(ValueError, match="square"):
        determinant([[t(1), t(2)]])


def test_determinant_small_example():
    one = LaurentPoly.one(2)
    matrix = [[t(1, power=-1), one], [t(2), t(1) * t(2)]]
    assert determinant(matrix) == t(2) - t(2)
    matrix = [[t(1), one], [one, t(2, power=-1)]]
    assert determinant(matrix) == t(1) * t(2, power=-1) - 1


def test_determinant_with_zero_pivot_swaps_rows():
    zero, one = LaurentPoly.zero(1), LaurentPoly.one(1)
    x = LaurentPoly.variable(1, 1)
    matrix = [[zero, one, zero], [x, zero, zero], [zero, zero, x ** -1]]
    assert determinant(matrix) == -one


@given(square_matrices())
def test_bareiss_matches_cofactor_expansion(matrix):
    assert determinant(matrix, nvars=3) == cofactor_determinant(matrix, nvars=3)


@given(st.data())
def test_bareiss_matches_cofactor_expansion_on_five_by_five(data):
    entries = laurent_polys(nvars=3, max_terms=2, max_exp=1)
    matrix = [[data.draw(entries) for _ in range(5)] for _ in range(5)]
    assert determinant(matrix, nvars=3) == cofactor_determinant(matrix, nvars=3)


@given(square_matrices(min_size=3, max_size=3), square_matrices(min_size=3, max_size=3))
def test_determinant_is_multiplicative(a, b):
    assert determinant(matrix_product(a, b, 3), nvars=3) == determinant(a, nvars=3) * determinant(b, nvars=3)
