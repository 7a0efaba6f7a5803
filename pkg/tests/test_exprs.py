"""Identity expression grammar: parsing, errors, canonical printing."""

import pytest
from hypothesis import given, strategies as st

from variety_forge.exprs import ExprSyntaxError, format_element, parse_expr
from variety_forge.terms import TermError

from conftest import ONE_OP, TWO_OPS, random_element, seeded


def test_parse_delta_poisson_law():
    e = parse_expr("bracket(dot(x1,x2),x3) - d*dot(x1,bracket(x2,x3))"
                   " - d*dot(bracket(x1,x3),x2)", TWO_OPS)
    assert e.arity == 3 and len(e.terms) == 3
    printed = format_element(e)
    assert parse_expr(printed, TWO_OPS) == e


def test_parse_cancellation_to_zero():
    assert parse_expr("dot(x1,x2) - dot(x2,x1)", TWO_OPS).is_zero()
    assert parse_expr("bracket(x1,x2) + bracket(x2,x1)", TWO_OPS).is_zero()


def test_parse_non_multilinear():
    with pytest.raises(TermError):
        parse_expr("bracket(x1,x1)", TWO_OPS)
    assert parse_expr("bracket(x1,x1)", TWO_OPS, allow_multilinearize=True).is_zero()
    e = parse_expr("m(x1,x1)", ONE_OP, allow_multilinearize=True)
    assert e == parse_expr("m(x1,x2) + m(x2,x1)", ONE_OP)


def test_parse_errors_report_position():
    with pytest.raises(ExprSyntaxError) as err:
        parse_expr("dot(x1,", TWO_OPS)
    assert err.value.position is not None
    with pytest.raises(ExprSyntaxError) as err:
        parse_expr("wedge(x1,x2)", TWO_OPS)
    assert "unknown operation" in str(err.value)
    with pytest.raises(ExprSyntaxError):
        parse_expr("dot(x1,x2) dot(x3,x4)", TWO_OPS)
    with pytest.raises(ExprSyntaxError):
        parse_expr("2*3", TWO_OPS)


def test_coefficient_grammar():
    e = parse_expr("(3*d^2-1)/(d-1)*dot(x1,x2) + 1/2*bracket(x1,x2)", TWO_OPS)
    assert len(e.terms) == 2
    rt = format_element(e)
    assert parse_expr(rt, TWO_OPS) == e
    # bilinear expansion of compound arguments
    e2 = parse_expr("dot(x1 + bracket(x1,x3) - x1, x2)", TWO_OPS)
    assert e2 == parse_expr("dot(bracket(x1,x3),x2)", TWO_OPS)


def test_zero_literal_and_arity_check():
    assert parse_expr("0", TWO_OPS).is_zero()
    with pytest.raises(TermError):
        parse_expr("dot(x1,x2)", TWO_OPS, arity=3)


@given(st.integers(0, 10 ** 6), st.integers(2, 4), st.booleans())
def test_print_parse_fixpoint(seed, n, use_delta):
    rng = seeded(seed)
    ops = TWO_OPS if rng.random() < 0.7 else ONE_OP
    e = random_element(rng, ops, n, delta_coeffs=use_delta)
    text = format_element(e)
    back = parse_expr(text, ops)
    assert back == e
    assert format_element(back) == text
