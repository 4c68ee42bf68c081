"""Field and order axioms under hypothesis-generated series."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from lcgraph import INF, LCNumber, comparable, format_series, parse_series

exponents = st.fractions(min_value=-4, max_value=10, max_denominator=4)
coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=9)
truncs = st.one_of(st.just(INF),
                   st.fractions(min_value=5, max_value=14, max_denominator=2))


@st.composite
def series(draw, allow_trunc=True):
    terms = draw(st.lists(st.tuples(exponents, coeffs), max_size=4))
    t = draw(truncs) if allow_trunc else INF
    return LCNumber(terms, trunc=t)


nonzero = series().filter(lambda a: not a.is_zero)
exact = series(allow_trunc=False)


@given(series(), series())
def test_add_commutes(a, b):
    assert (a + b).identical(b + a)


@given(series(), series())
def test_mul_commutes(a, b):
    assert (a * b).identical(b * a)


@given(series(), series(), series())
def test_add_associates(a, b, c):
    assert ((a + b) + c).identical(a + (b + c))


@given(series(), series(), series())
def test_mul_distributes(a, b, c):
    lhs = a * (b + c)
    rhs = a * b + a * c
    # both sides agree wherever both are defined
    order = min(lhs.trunc, rhs.trunc)
    assert (lhs - rhs).truncate(order).is_zero


@given(series())
def test_additive_inverse(a):
    d = a + (-a)
    assert d.is_zero
    assert d.trunc == a.trunc


@given(exact, exact)
def test_order_trichotomy(a, b):
    signs = [(a - b).sign(), (b - a).sign()]
    assert signs in ([0, 0], [1, -1], [-1, 1])


@given(exact, exact, exact)
def test_order_respects_addition(a, b, c):
    if (a - b).sign() < 0:
        assert ((a + c) - (b + c)).sign() < 0


@given(exact.filter(lambda x: x.sign() > 0), exact.filter(lambda x: x.sign() > 0))
def test_order_respects_multiplication(a, b):
    assert (a * b).sign() > 0


@settings(deadline=None)
@given(nonzero)
def test_inverse_residual(a):
    r = a * a.inverse() - 1
    assert r.is_zero


@settings(deadline=None)
@given(series())
def test_sqrt_of_square_is_abs(a):
    sq = a * a
    if sq.is_zero:
        return
    r = sq.sqrt()
    assert (r - abs(a)).truncate(r.trunc).is_zero


@given(series())
def test_parse_format_round_trip(a):
    assert parse_series(format_series(a)).identical(a)


@given(series())
def test_truncate_is_idempotent(a):
    b = a.truncate(3)
    assert b.truncate(3).identical(b)
    assert b.trunc <= Fraction(3)


@given(exact.filter(lambda x: not x.is_zero), st.integers(min_value=1, max_value=4))
def test_comparability_powers(a, m):
    # a ~ d implies a^m ~ d^m
    d = a + a * LCNumber(((Fraction(5), Fraction(1, 3)),))
    assert comparable(a, d)
    assert comparable(a ** m, d ** m)


@given(exact, exact)
def test_comparable_is_leading_term_equality(a, b):
    if comparable(a, b):
        assert a.lead_exp == b.lead_exp
        assert a.lead_coeff == b.lead_coeff
    elif not a.is_zero and not b.is_zero:
        assert a.terms[0] != b.terms[0]
